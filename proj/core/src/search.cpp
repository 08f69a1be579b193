#include "latknot/search.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace latknot {

namespace {

struct Parent {
  Word from;
  std::size_t rotation = 0;
  SwitchMove move;
  std::size_t offset = 0;
  std::size_t depth = 0;
};

std::string step_text(const CertificateStep& step) {
  std::ostringstream os;
  if (const auto* r = std::get_if<Rebase>(&step)) {
    os << "rebase " << r->shift;
  } else {
    const auto& m = std::get<SwitchMove>(step);
    os << "switch (" << m.start << ',' << m.end << ',' << m.conjugator.to_char() << ')';
  }
  return os.str();
}

void check_budget(const KnotWord& a, const KnotWord& b, const SearchBudget& budget) {
  if (budget.max_word_len == 0 || budget.max_states == 0 || budget.max_depth == 0) {
    throw std::invalid_argument("search budget values must be positive");
  }
  if (budget.max_word_len < std::max(a.size(), b.size())) {
    throw std::invalid_argument("max_word_len is shorter than an endpoint word");
  }
}

std::size_t word_bytes(const Word& w) { return sizeof(Word) + w.size() * sizeof(Letter); }

// Shift s with rotate(from, s) == to, given rotate(from, off_from) == rotate(to, off_to).
std::size_t bridge(std::size_t off_from, std::size_t off_to, std::size_t n) {
  return (off_from + n - off_to) % n;
}

}  // namespace

std::vector<SearchEdge> neighbor_edges(const KnotWord& k, const SearchBudget& budget) {
  std::vector<SearchEdge> edges;
  for (std::size_t r = 0; r < k.size(); ++r) {
    const KnotWord base = rotate(k, static_cast<std::int64_t>(r));
    for (auto& o : enumerate_switch_outcomes(base, budget.max_word_len)) {
      const std::size_t off = canonical_offset(o.result.word());
      edges.push_back(SearchEdge{canonical_rotation(o.result.word()), r, o.move, off});
    }
  }
  // Edges come out in (rotation, i, j, c) order, so a stable sort keeps the first per target.
  std::stable_sort(edges.begin(), edges.end(),
                   [](const SearchEdge& x, const SearchEdge& y) { return x.target < y.target; });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const SearchEdge& x, const SearchEdge& y) { return x.target == y.target; }),
              edges.end());
  return edges;
}

std::vector<Word> neighbors(const KnotWord& k, const SearchBudget& budget) {
  std::vector<Word> out;
  for (auto& e : neighbor_edges(k, budget)) out.push_back(std::move(e.target));
  return out;
}

SearchOutcome bfs_connect(const KnotWord& a, const KnotWord& b, const SearchBudget& budget,
                          unsigned threads) {
  check_budget(a, b, budget);
  threads = std::max(1u, threads);

  const Word start = canonical_rotation(a.word());
  const Word goal = canonical_rotation(b.word());
  const std::size_t start_offset = canonical_offset(a.word());
  const std::size_t goal_offset = canonical_offset(b.word());

  SearchOutcome outcome;
  std::unordered_map<Word, Parent> visited;
  visited.emplace(start, Parent{start, 0, {}, 0, 0});
  outcome.stats.states_explored = 1;
  outcome.stats.frontier_sizes.push_back(1);

  auto finish = [&](std::size_t depth) {
    // Walk parents back from the goal, then emit forward.
    std::vector<const Parent*> chain;
    for (Word cur = goal; !(cur == start);) {
      const Parent& p = visited.at(cur);
      chain.push_back(&p);
      cur = p.from;
    }
    std::reverse(chain.begin(), chain.end());

    Certificate cert;
    cert.start_word = a.word();
    cert.end_word = b.word();
    if (start_offset != 0) cert.steps.emplace_back(Rebase{static_cast<std::int64_t>(start_offset)});
    for (const Parent* p : chain) {
      if (p->rotation != 0) cert.steps.emplace_back(Rebase{static_cast<std::int64_t>(p->rotation)});
      cert.steps.emplace_back(p->move);
      if (p->offset != 0) cert.steps.emplace_back(Rebase{static_cast<std::int64_t>(p->offset)});
    }
    // Now at `goal`; rotate back to b's basepoint.
    if (goal_offset != 0) {
      cert.steps.emplace_back(Rebase{static_cast<std::int64_t>(bridge(0, goal_offset, goal.size()))});
    }
    // Collapse a lone pair of rebases (same class, no switches) into one shift.
    if (chain.empty()) {
      cert.steps.clear();
      const std::size_t shift = bridge(start_offset, goal_offset, a.size());
      if (shift != 0) cert.steps.emplace_back(Rebase{static_cast<std::int64_t>(shift)});
    }
    apply_certificate(a, cert);  // throws if reconstruction is wrong
    outcome.status = SearchOutcome::Status::Connected;
    outcome.certificate = std::move(cert);
    outcome.depth = depth;
    outcome.frontier_depth = depth;
  };

  std::size_t bytes = word_bytes(start) + sizeof(Parent);
  outcome.stats.peak_memory_bytes = bytes;
  if (start == goal) {
    finish(0);
    return outcome;
  }

  std::vector<Word> frontier{start};
  for (std::size_t depth = 0; depth < budget.max_depth && !frontier.empty(); ++depth) {
    // Expansion is pure per state; results are merged in frontier order.
    std::vector<std::vector<SearchEdge>> expanded(frontier.size());
    auto expand = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t s = lo; s < hi; ++s) {
        expanded[s] = neighbor_edges(KnotWord(frontier[s]), budget);
      }
    };
    if (threads == 1 || frontier.size() < 2) {
      expand(0, frontier.size());
    } else {
      const std::size_t workers = std::min<std::size_t>(threads, frontier.size());
      const std::size_t chunk = (frontier.size() + workers - 1) / workers;
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < workers; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(frontier.size(), lo + chunk);
        if (lo < hi) pool.emplace_back(expand, lo, hi);
      }
      for (auto& th : pool) th.join();
    }

    std::vector<Word> next;
    std::size_t next_bytes = 0;
    for (std::size_t s = 0; s < frontier.size(); ++s) {
      for (auto& e : expanded[s]) {
        if (visited.count(e.target)) continue;
        if (outcome.stats.states_explored >= budget.max_states) {
          outcome.frontier_depth = depth;
          return outcome;
        }
        visited.emplace(e.target, Parent{frontier[s], e.rotation, e.move, e.offset, depth + 1});
        ++outcome.stats.states_explored;
        bytes += word_bytes(e.target) + sizeof(Parent) + word_bytes(frontier[s]);
        next_bytes += word_bytes(e.target);
        if (outcome.stats.frontier_sizes.size() <= depth + 1) outcome.stats.frontier_sizes.push_back(0);
        ++outcome.stats.frontier_sizes[depth + 1];
        outcome.stats.peak_memory_bytes = std::max(outcome.stats.peak_memory_bytes, bytes + next_bytes);
        if (e.target == goal) {
          finish(depth + 1);
          return outcome;
        }
        next.push_back(e.target);
      }
    }
    frontier = std::move(next);
    outcome.frontier_depth = depth + 1;
  }
  return outcome;
}

VerificationReport verify_certificate(const KnotWord& a, const Certificate& cert, const KnotWord& b) {
  VerificationReport report;
  try {
    apply_certificate(a, cert, [&](std::size_t s, const KnotWord& w) {
      report.steps.push_back(StepReport{s, step_text(cert.steps[s]), w.size(), true});
    });
  } catch (const CertificateError& e) {
    report.failure = e.kind();
    report.move_failure = e.move_failure();
    report.failed_step = e.step();
    report.message = e.what();
    if (e.kind() == CertificateError::Kind::StepFailed) {
      report.steps.push_back(StepReport{e.step(), step_text(cert.steps[e.step()]), 0, false});
    }
    return report;
  }
  if (!(cert.end_word == b.word())) {
    report.failure = CertificateError::Kind::EndMismatch;
    report.failed_step = cert.steps.size();
    report.message = "EndMismatch: certificate ends at " + format_word(cert.end_word) +
                     ", expected " + format_word(b.word());
    return report;
  }
  report.accepted = true;
  report.message = "accepted";
  return report;
}

void write_stats(std::ostream& out, const SearchStats& stats) {
  out << "states_explored: " << stats.states_explored << '\n';
  out << "frontier_sizes:";
  for (const auto f : stats.frontier_sizes) out << ' ' << f;
  out << '\n';
  out << "peak_memory_bytes: " << stats.peak_memory_bytes << '\n';
}

}  // namespace latknot
