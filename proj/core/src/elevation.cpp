#include "latknot/elevation.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace latknot {

namespace {

const std::vector<LayerRun> kNoRuns;

std::string layer_text(std::int64_t n) { return "layer " + std::to_string(n); }

}  // namespace

const std::vector<LayerRun>& LayerMap::runs(std::int64_t n) const& {
  const auto it = runs_.find(n);
  return it == runs_.end() ? kNoRuns : it->second;
}

LayerMap extract_layers(const Word& w, Axis axis) {
  std::map<std::int64_t, std::vector<LayerRun>> runs;
  std::int64_t height = 0;
  std::optional<LayerRun> open;
  for (std::size_t m = 1; m <= w.size(); ++m) {
    const Letter l = w.letter(m);
    if (l.axis() == axis) {
      if (open) {
        runs[open->layer].push_back(*open);
        open.reset();
      }
      height += l.sign();
      continue;
    }
    if (open) {
      open->last = m;
    } else {
      open = LayerRun{height, m, m};
    }
  }
  if (open) runs[open->layer].push_back(*open);
  return LayerMap(axis, std::move(runs));
}

std::map<std::int64_t, std::vector<Word>> layer_profile(const Word& w, Axis axis) {
  std::map<std::int64_t, std::vector<Word>> out;
  for (const auto& [n, runs] : extract_layers(w, axis).all()) {
    for (const auto& r : runs) out[n].push_back(w.subword(r.first, r.last));
  }
  return out;
}

std::optional<std::int64_t> vacancy_above(const Word& w, Axis axis, std::int64_t n) {
  const LayerMap map = extract_layers(w, axis);
  const auto it = map.all().upper_bound(n);
  if (it == map.all().end()) return std::nullopt;
  return it->first - n - 1;
}

std::optional<std::int64_t> vacancy_below(const Word& w, Axis axis, std::int64_t n) {
  const LayerMap map = extract_layers(w, axis);
  const auto it = map.all().lower_bound(n);
  if (it == map.all().begin()) return std::nullopt;
  return n - std::prev(it)->first - 1;
}

ElevationError::ElevationError(Kind kind, std::size_t step, const std::string& detail)
    : std::runtime_error((kind == Kind::VacancyViolation ? "VacancyViolation: "
                                                         : "IntermediateInvalid at switch " +
                                                               std::to_string(step) + ": ") +
                         detail),
      kind_(kind),
      step_(step),
      detail_(detail) {}

std::vector<Letter> elevation_unreduced(const Word& w, Axis axis, std::int64_t layer,
                                        std::int64_t delta) {
  const Letter up{axis, delta >= 0};
  const auto k = static_cast<std::size_t>(std::llabs(delta));
  const auto& runs = extract_layers(w, axis).runs(layer);
  std::vector<Letter> out;
  out.reserve(w.size() + 2 * k * runs.size());
  std::size_t next = 0;
  for (std::size_t m = 1; m <= w.size(); ++m) {
    const bool opens = next < runs.size() && runs[next].first == m;
    if (opens) out.insert(out.end(), k, up);
    out.push_back(w.letter(m));
    if (next < runs.size() && runs[next].last == m) {
      out.insert(out.end(), k, up.inverse());
      ++next;
    }
  }
  return out;
}

RoundResult conjugate_runs(const Word& w, std::span<const LayerRun> runs, Letter c,
                           std::span<const std::size_t> order, RoundCheck check) {
  std::vector<std::pair<std::size_t, std::size_t>> pos;
  pos.reserve(runs.size());
  for (const auto& r : runs) pos.emplace_back(r.first, r.last);

  RoundResult result{w, {}};
  std::vector<Letter> pre;
  for (const std::size_t idx : order) {
    const auto [a, b] = pos.at(idx);
    const SwitchMove m{a, b, c};
    const std::size_t step = result.moves.size();
    const std::size_t n = result.word.size();
    if (b - a + 1 >= n) {
      throw ElevationError(ElevationError::Kind::IntermediateInvalid, step,
                           "run [" + std::to_string(a) + ".." + std::to_string(b) +
                               "] is the whole word, not a proper subword");
    }

    const auto letters = result.word.letters();
    pre.assign(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(a - 1));
    pre.push_back(c);
    pre.insert(pre.end(), letters.begin() + static_cast<std::ptrdiff_t>(a - 1),
               letters.begin() + static_cast<std::ptrdiff_t>(b));
    pre.push_back(c.inverse());
    pre.insert(pre.end(), letters.begin() + static_cast<std::ptrdiff_t>(b), letters.end());
    TrackedReduction tracked = reduce_tracked(pre);

    // Old 1-based position -> new 1-based position.
    auto remap = [&](std::size_t p) -> std::size_t {
      const std::size_t in_pre = p < a ? p - 1 : (p <= b ? p : p + 1);
      const auto out = tracked.position[in_pre];
      if (!out) {
        throw ElevationError(ElevationError::Kind::IntermediateInvalid, step,
                             "reduction cancelled letters of a run");
      }
      return *out + 1;
    };
    for (auto& [first, last] : pos) {
      first = remap(first);
      last = remap(last);
    }

    if (check == RoundCheck::KnotAtEveryStep) {
      if (auto rejection = check_knot(tracked.word.letters())) {
        throw ElevationError(ElevationError::Kind::IntermediateInvalid, step,
                             rejection->describe());
      }
    }
    result.word = std::move(tracked.word);
    result.moves.push_back(m);
  }
  return result;
}

Elevation elevate_layer(const KnotWord& k, Axis axis, std::int64_t layer, std::int64_t delta) {
  Elevation out{k, {}};
  if (delta == 0) return out;
  const bool up = delta > 0;
  const std::int64_t rounds = std::llabs(delta);
  const auto vacancy = up ? vacancy_above(k.word(), axis, layer)
                          : vacancy_below(k.word(), axis, layer);
  if (vacancy && *vacancy < rounds) {
    std::ostringstream os;
    os << layer_text(layer) << " has " << *vacancy << " vacant layer(s) " << (up ? "above" : "below")
       << ", moving it by " << delta << " needs " << rounds;
    throw ElevationError(ElevationError::Kind::VacancyViolation, 0, os.str());
  }

  const Letter c{axis, up};
  Word cur = k.word();
  for (std::int64_t r = 0; r < rounds; ++r) {
    const std::int64_t from = layer + (up ? r : -r);
    const LayerMap map = extract_layers(cur, axis);
    const auto& runs = map.runs(from);
    if (runs.empty()) break;
    std::vector<std::size_t> order(runs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    RoundResult round;
    try {
      round = conjugate_runs(cur, runs, c, order, RoundCheck::KnotAtEveryStep);
    } catch (const ElevationError& e) {
      if (e.kind() != ElevationError::Kind::IntermediateInvalid) throw;
      throw ElevationError(e.kind(), out.moves.size() + e.step(), e.detail());
    }
    cur = std::move(round.word);
    out.moves.insert(out.moves.end(), round.moves.begin(), round.moves.end());
  }
  out.knot = KnotWord(std::move(cur));
  return out;
}

Word double_direct(const Word& w, Axis axis) {
  std::vector<Letter> out;
  out.reserve(2 * w.size());
  for (const Letter l : w.letters()) {
    out.push_back(l);
    if (l.axis() == axis) out.push_back(l);
  }
  // Squaring letters never creates an adjacent inverse pair.
  return Word::from_reduced(std::move(out));
}

KnotWord double_direct(const KnotWord& k, Axis axis) { return KnotWord(double_direct(k.word(), axis)); }

Certificate compile_doubling(const KnotWord& k, Axis axis) {
  Certificate cert;
  cert.start_word = k.word();
  const LayerMap original = extract_layers(k.word(), axis);

  KnotWord cur = k;
  auto move_layer = [&](std::int64_t n) {
    // Layers already moved sit at 2m; layer n itself is still at height n.
    Elevation e = elevate_layer(cur, axis, n, n);
    for (const auto& m : e.moves) cert.steps.emplace_back(m);
    cur = std::move(e.knot);
  };
  for (std::int64_t n = original.max_layer(); n >= 1; --n) {
    if (original.occupied(n)) move_layer(n);
  }
  for (std::int64_t n = original.min_layer(); n <= -1; ++n) {
    if (original.occupied(n)) move_layer(n);
  }
  cert.end_word = cur.word();
  if (!(cert.end_word == double_direct(k.word(), axis))) {
    throw std::logic_error("compiled doubling of " + format_word(k.word()) +
                           " does not end at the directly doubled word");
  }
  return cert;
}

}  // namespace latknot
