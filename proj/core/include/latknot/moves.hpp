#pragma once

// Elementary switches: replace a proper subword v = w[i..j] by c v c̄ for one
// of the six letters c, reduce, and keep the result only if it is again a
// lattice knot. Growing and shrinking switches are the same move; shrinking is
// the case where the inserted letters cancel against their neighbours.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "latknot/word.hpp"

namespace latknot {

struct SwitchMove {
  std::size_t start = 1;  // i, 1-based
  std::size_t end = 1;    // j, inclusive
  Letter conjugator{};    // c; the subword becomes c v c̄

  friend bool operator==(const SwitchMove&, const SwitchMove&) = default;
  friend auto operator<=>(const SwitchMove& a, const SwitchMove& b) {
    if (auto cmp = a.start <=> b.start; cmp != 0) return cmp;
    if (auto cmp = a.end <=> b.end; cmp != 0) return cmp;
    return a.conjugator <=> b.conjugator;
  }
};

/// Cyclic basepoint change inside a certificate; carries no geometry.
struct Rebase {
  std::int64_t shift = 0;
  friend bool operator==(const Rebase&, const Rebase&) = default;
};

using CertificateStep = std::variant<SwitchMove, Rebase>;

struct Certificate {
  Word start_word;
  std::vector<CertificateStep> steps;
  Word end_word;

  std::size_t switch_count() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class MoveFailure {
  OutOfRange,      // i < 1, j < i or j > |w|
  NotProper,       // v is the whole word
  Collapsed,       // result shorter than four letters
  SelfIntersects,  // result revisits a lattice point
};

const char* failure_name(MoveFailure failure);

struct SwitchCheck {
  std::optional<MoveFailure> failure;  // empty when the switch applies
  std::optional<KnotRejection> rejection;
  explicit operator bool() const { return !failure.has_value(); }
  std::string describe() const;
};

class InvalidMove : public std::runtime_error {
 public:
  InvalidMove(MoveFailure failure, const std::string& detail);
  MoveFailure failure() const { return failure_; }

 private:
  MoveFailure failure_;
};

/// The reduced word w[1..i-1] c w[i..j] c̄ w[j+1..], without validity check.
/// Throws InvalidMove for structural failures (range, properness).
Word switch_result(const Word& w, const SwitchMove& m);

SwitchCheck check_switch(const KnotWord& k, const SwitchMove& m);
/// Throws InvalidMove when the result is not a knot.
KnotWord apply_switch(const KnotWord& k, const SwitchMove& m);

/// A move sequence that, applied in order to apply_switch(before, m), gives
/// back `before`. When no letter of v cancels this is the single move
/// (i±1, j±1, c̄). When the seam reduction eats into v the forward move is
/// first split into finger-flattening switches plus one core switch, and the
/// inverse is their inverses in reverse order.
std::vector<SwitchMove> invert_move(const KnotWord& before, const SwitchMove& m);

/// The forward decomposition used by invert_move: switches that are each
/// free of cascading cancellation and together equal m.
std::vector<SwitchMove> decompose_move(const KnotWord& before, const SwitchMove& m);

struct SwitchOutcome {
  SwitchMove move;
  KnotWord result;
};

/// All applicable switches with result length <= max_len, in (i, j, c) order.
/// Requires max_len >= |k|.
std::vector<SwitchOutcome> enumerate_switch_outcomes(const KnotWord& k, std::size_t max_len);
std::vector<SwitchMove> enumerate_switches(const KnotWord& k, std::size_t max_len);

class CertificateError : public std::runtime_error {
 public:
  enum class Kind { StartMismatch, StepFailed, EndMismatch };
  CertificateError(Kind kind, std::size_t step, const std::string& detail,
                   std::optional<MoveFailure> failure = std::nullopt);
  Kind kind() const { return kind_; }
  std::size_t step() const { return step_; }  // 0-based step index for StepFailed
  std::optional<MoveFailure> move_failure() const { return failure_; }

 private:
  Kind kind_;
  std::size_t step_;
  std::optional<MoveFailure> failure_;
};

/// Called after every replayed step with the step index and the word reached.
using ReplayObserver = std::function<void(std::size_t, const KnotWord&)>;

/// Replays every step, validating every intermediate, and checks the final
/// word equals cert.end_word.
KnotWord apply_certificate(const KnotWord& start, const Certificate& cert);
KnotWord apply_certificate(const KnotWord& start, const Certificate& cert,
                           const ReplayObserver& observer);

}  // namespace latknot
