#include "latknot/moves.hpp"

#include <algorithm>
#include <sstream>

namespace latknot {

namespace {

std::string move_text(const SwitchMove& m) {
  std::ostringstream os;
  os << '(' << m.start << ',' << m.end << ',' << m.conjugator.to_char() << ')';
  return os.str();
}

// Structural check shared by every entry point.
std::optional<MoveFailure> structural_failure(std::size_t n, const SwitchMove& m) {
  if (m.start < 1 || m.end < m.start || m.end > n) return MoveFailure::OutOfRange;
  if (m.end - m.start + 1 >= n) return MoveFailure::NotProper;
  return std::nullopt;
}

// Reduces w[1..i-1] c w[i..j] c̄ w[j+1..] into `out`.
void build_result(std::span<const Letter> w, const SwitchMove& m, std::vector<Letter>& out) {
  out.clear();
  auto push = [&out](Letter l) {
    if (!out.empty() && cancels(out.back(), l)) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  };
  const std::size_t i = m.start - 1;
  const std::size_t j = m.end;  // one past the last letter of v
  for (std::size_t p = 0; p < i; ++p) out.push_back(w[p]);
  push(m.conjugator);
  for (std::size_t p = i; p < j; ++p) push(w[p]);
  push(m.conjugator.inverse());
  for (std::size_t p = j; p < w.size(); ++p) push(w[p]);
}

SwitchCheck evaluate(std::span<const Letter> result) {
  SwitchCheck check;
  if (auto rejection = check_knot(result)) {
    check.rejection = rejection;
    check.failure = rejection->kind == KnotRejection::Kind::TooShort ? MoveFailure::Collapsed
                                                                     : MoveFailure::SelfIntersects;
  }
  return check;
}

// Inverse of a switch whose subword survives intact: v sits one place left
// when the inserted c cancelled the letter before it, one place right otherwise.
SwitchMove simple_inverse(const Word& before, const SwitchMove& m) {
  const Letter back = m.conjugator.inverse();
  const bool left_cancels = m.start > 1 && before.letter(m.start - 1) == back;
  const std::size_t start = left_cancels ? m.start - 1 : m.start + 1;
  return SwitchMove{start, start + (m.end - m.start), back};
}

}  // namespace

std::size_t Certificate::switch_count() const {
  return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const auto& s) {
    return std::holds_alternative<SwitchMove>(s);
  }));
}

const char* failure_name(MoveFailure failure) {
  switch (failure) {
    case MoveFailure::OutOfRange: return "OutOfRange";
    case MoveFailure::NotProper: return "NotProper";
    case MoveFailure::Collapsed: return "Collapsed";
    case MoveFailure::SelfIntersects: return "SelfIntersects";
  }
  return "?";
}

std::string SwitchCheck::describe() const {
  if (!failure) return "applicable";
  std::string out = failure_name(*failure);
  if (rejection && *failure == MoveFailure::SelfIntersects) out += ": " + rejection->describe();
  return out;
}

InvalidMove::InvalidMove(MoveFailure failure, const std::string& detail)
    : std::runtime_error(std::string("invalid move: ") + failure_name(failure) +
                         (detail.empty() ? "" : " (" + detail + ")")),
      failure_(failure) {}

Word switch_result(const Word& w, const SwitchMove& m) {
  if (auto f = structural_failure(w.size(), m)) throw InvalidMove(*f, move_text(m));
  std::vector<Letter> out;
  out.reserve(w.size() + 2);
  build_result(w.letters(), m, out);
  return Word::from_reduced(std::move(out));
}

SwitchCheck check_switch(const KnotWord& k, const SwitchMove& m) {
  if (auto f = structural_failure(k.size(), m)) return SwitchCheck{f, std::nullopt};
  std::vector<Letter> out;
  out.reserve(k.size() + 2);
  build_result(k.letters(), m, out);
  return evaluate(out);
}

KnotWord apply_switch(const KnotWord& k, const SwitchMove& m) {
  if (auto f = structural_failure(k.size(), m)) throw InvalidMove(*f, move_text(m));
  std::vector<Letter> out;
  out.reserve(k.size() + 2);
  build_result(k.letters(), m, out);
  const SwitchCheck check = evaluate(out);
  if (!check) throw InvalidMove(*check.failure, move_text(m) + ": " + check.describe());
  return KnotWord(Word::from_reduced(std::move(out)));
}

std::vector<SwitchMove> decompose_move(const KnotWord& before, const SwitchMove& m) {
  const Word& w = before.word();
  const KnotWord target = apply_switch(before, m);
  if (target == before) return {m};

  const std::size_t n = w.size();
  const std::size_t i = m.start;
  const std::size_t j = m.end;
  const Letter c = m.conjugator;
  const Letter cb = c.inverse();
  auto at = [&w](std::size_t p) { return w.letter(p); };

  // Left finger: a centre letter c̄ at p (just before v, or v's first letter)
  // with mirrored arms g..  c̄ ..ḡ whose right arm lies inside v.
  std::optional<std::size_t> p;
  if (i > 1 && at(i - 1) == cb) {
    p = i - 1;
  } else if (at(i) == cb) {
    p = i;
  }
  std::size_t left_arm = 0, eaten_left = 0;
  if (p) {
    while (*p >= left_arm + 2 && *p + 1 + left_arm <= j &&
           at(*p - 1 - left_arm) == at(*p + 1 + left_arm).inverse()) {
      ++left_arm;
    }
    eaten_left = *p + left_arm + 1 - i;
  }

  // Right finger: centre c at q (v's last letter, or just after v).
  std::optional<std::size_t> q;
  if (j < n && at(j + 1) == c) {
    q = j + 1;
  } else if (at(j) == c) {
    q = j;
  }
  std::size_t right_arm = 0, eaten_right = 0;
  if (q) {
    while (*q + 1 + right_arm <= n && *q >= i + 1 + right_arm &&
           at(*q + 1 + right_arm) == at(*q - 1 - right_arm).inverse()) {
      ++right_arm;
    }
    eaten_right = j + 1 - (*q - right_arm);
  }

  std::vector<SwitchMove> steps;
  KnotWord cur = before;
  // Flatten each finger from its tip: g c̄ ḡ -> c̄ is the switch conjugating the
  // centre letter by ḡ, and only removes two vertices from the polygon.
  for (std::size_t t = 0; t < left_arm; ++t) {
    const std::size_t centre = *p - t;
    const SwitchMove flatten{centre, centre, cur.word().letter(centre - 1).inverse()};
    cur = apply_switch(cur, flatten);
    steps.push_back(flatten);
  }
  const std::size_t shift = 2 * left_arm;
  for (std::size_t t = 0; t < right_arm; ++t) {
    const std::size_t centre = *q - shift - t;
    const SwitchMove flatten{centre, centre, cur.word().letter(centre - 1).inverse()};
    cur = apply_switch(cur, flatten);
    steps.push_back(flatten);
  }
  const std::size_t s = i + eaten_left;
  const std::size_t e = j >= eaten_right ? j - eaten_right : 0;
  if (s <= e) {
    const SwitchMove core{s - shift, e - shift, c};
    cur = apply_switch(cur, core);
    steps.push_back(core);
  }
  if (!(cur == target)) {
    throw std::logic_error("switch decomposition did not reproduce " + move_text(m) + " on " +
                           format_word(w));
  }
  return steps;
}

std::vector<SwitchMove> invert_move(const KnotWord& before, const SwitchMove& m) {
  const KnotWord after = apply_switch(before, m);
  if (after == before) return {m};

  const std::vector<SwitchMove> forward = decompose_move(before, m);
  std::vector<KnotWord> trail{before};
  for (const auto& step : forward) trail.push_back(apply_switch(trail.back(), step));

  std::vector<SwitchMove> inverse;
  inverse.reserve(forward.size());
  for (std::size_t k = forward.size(); k-- > 0;) {
    inverse.push_back(simple_inverse(trail[k].word(), forward[k]));
  }

  KnotWord cur = after;
  for (const auto& step : inverse) cur = apply_switch(cur, step);
  if (!(cur == before)) {
    throw std::logic_error("inverse of " + move_text(m) + " on " + format_word(before.word()) +
                           " failed to replay");
  }
  return inverse;
}

std::vector<SwitchOutcome> enumerate_switch_outcomes(const KnotWord& k, std::size_t max_len) {
  if (max_len < k.size()) throw std::invalid_argument("max_len must be at least the word length");
  const auto w = k.letters();
  const std::size_t n = w.size();
  std::vector<SwitchOutcome> out;
  std::vector<Letter> buf;
  buf.reserve(n + 2);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i; j <= n && j - i + 1 < n; ++j) {
      for (const Letter c : kAllLetters) {
        const SwitchMove m{i, j, c};
        build_result(w, m, buf);
        if (buf.size() > max_len) continue;
        if (check_knot(buf)) continue;
        out.push_back(SwitchOutcome{m, KnotWord(Word::from_reduced(buf))});
      }
    }
  }
  return out;
}

std::vector<SwitchMove> enumerate_switches(const KnotWord& k, std::size_t max_len) {
  std::vector<SwitchMove> moves;
  for (auto& o : enumerate_switch_outcomes(k, max_len)) moves.push_back(o.move);
  return moves;
}

namespace {
std::string certificate_message(CertificateError::Kind kind, std::size_t step,
                                const std::string& detail) {
  std::ostringstream os;
  switch (kind) {
    case CertificateError::Kind::StartMismatch: os << "StartMismatch"; break;
    case CertificateError::Kind::StepFailed: os << "StepFailed at step " << step; break;
    case CertificateError::Kind::EndMismatch: os << "EndMismatch"; break;
  }
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}
}  // namespace

CertificateError::CertificateError(Kind kind, std::size_t step, const std::string& detail,
                                   std::optional<MoveFailure> failure)
    : std::runtime_error(certificate_message(kind, step, detail)),
      kind_(kind),
      step_(step),
      failure_(failure) {}

KnotWord apply_certificate(const KnotWord& start, const Certificate& cert) {
  return apply_certificate(start, cert, ReplayObserver{});
}

KnotWord apply_certificate(const KnotWord& start, const Certificate& cert,
                           const ReplayObserver& observer) {
  if (!(cert.start_word == start.word())) {
    throw CertificateError(CertificateError::Kind::StartMismatch, 0,
                           "certificate starts at " + format_word(cert.start_word) +
                               ", replay starts at " + format_word(start.word()));
  }
  KnotWord cur = start;
  for (std::size_t s = 0; s < cert.steps.size(); ++s) {
    if (const auto* rebase = std::get_if<Rebase>(&cert.steps[s])) {
      cur = rotate(cur, rebase->shift);
    } else {
      const auto& m = std::get<SwitchMove>(cert.steps[s]);
      try {
        cur = apply_switch(cur, m);
      } catch (const InvalidMove& e) {
        throw CertificateError(CertificateError::Kind::StepFailed, s, e.what(), e.failure());
      }
    }
    if (observer) observer(s, cur);
  }
  if (!(cur.word() == cert.end_word)) {
    throw CertificateError(CertificateError::Kind::EndMismatch, cert.steps.size(),
                           "replay ends at " + format_word(cur.word()) + ", certificate claims " +
                               format_word(cert.end_word));
  }
  return cur;
}

}  // namespace latknot
