#pragma once

// Layers of a word along an axis, layer elevation as a sequence of
// elementary switches, and the compiler that realizes doubling along an axis
// as an explicit switch certificate.
//
// The height of a letter is the signed count of axis letters before it
// (positive minus negative). The n-th layer is the set of non-axis letters at
// height n; it is generally several maximal runs.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "latknot/moves.hpp"
#include "latknot/word.hpp"

namespace latknot {

struct LayerRun {
  std::int64_t layer = 0;
  std::size_t first = 1;  // 1-based, inclusive
  std::size_t last = 1;

  std::size_t size() const { return last - first + 1; }
  friend bool operator==(const LayerRun&, const LayerRun&) = default;
};

class LayerMap {
 public:
  LayerMap(Axis axis, std::map<std::int64_t, std::vector<LayerRun>> runs)
      : axis_(axis), runs_(std::move(runs)) {}

  Axis axis() const { return axis_; }
  /// Runs of layer n in ascending index order; empty for a vacant layer.
  /// Called on a temporary, runs() and all() return copies.
  const std::vector<LayerRun>& runs(std::int64_t n) const&;
  std::vector<LayerRun> runs(std::int64_t n) const&& { return static_cast<const LayerMap&>(*this).runs(n); }
  bool occupied(std::int64_t n) const { return runs_.count(n) != 0; }
  /// Occupied layers only.
  const std::map<std::int64_t, std::vector<LayerRun>>& all() const& { return runs_; }
  std::map<std::int64_t, std::vector<LayerRun>> all() const&& { return runs_; }
  /// 0 for a word with no non-axis letter.
  std::int64_t min_layer() const { return runs_.empty() ? 0 : runs_.begin()->first; }
  std::int64_t max_layer() const { return runs_.empty() ? 0 : runs_.rbegin()->first; }

 private:
  Axis axis_;
  std::map<std::int64_t, std::vector<LayerRun>> runs_;
};

LayerMap extract_layers(const Word& w, Axis axis);

/// Layer contents as words, for comparing layer maps of different words.
std::map<std::int64_t, std::vector<Word>> layer_profile(const Word& w, Axis axis);

/// Number of empty layers directly above (below) layer n; nullopt when no
/// occupied layer lies above (below) n at all.
std::optional<std::int64_t> vacancy_above(const Word& w, Axis axis, std::int64_t n);
std::optional<std::int64_t> vacancy_below(const Word& w, Axis axis, std::int64_t n);

class ElevationError : public std::runtime_error {
 public:
  enum class Kind { VacancyViolation, IntermediateInvalid };
  ElevationError(Kind kind, std::size_t step, const std::string& detail);
  Kind kind() const { return kind_; }
  std::size_t step() const { return step_; }  // switch index for IntermediateInvalid
  const std::string& detail() const { return detail_; }

 private:
  Kind kind_;
  std::size_t step_;
  std::string detail_;
};

/// The letters of w with every run v of layer n replaced by a^|delta| v ā^|delta|
/// (a the positive axis letter for delta > 0, the negative one otherwise),
/// before any reduction.
std::vector<Letter> elevation_unreduced(const Word& w, Axis axis, std::int64_t layer,
                                        std::int64_t delta);

struct RoundResult {
  Word word;
  std::vector<SwitchMove> moves;  // indices valid at the time each was applied
};

enum class RoundCheck { KnotAtEveryStep, WordOnly };

/// Conjugates each run by c, one switch per run, in the given order (indices
/// into `runs`), tracking positions through reduction after every switch.
/// KnotAtEveryStep validates every intermediate and throws IntermediateInvalid.
RoundResult conjugate_runs(const Word& w, std::span<const LayerRun> runs, Letter c,
                           std::span<const std::size_t> order, RoundCheck check);

struct Elevation {
  KnotWord knot;
  std::vector<SwitchMove> moves;
};

/// Moves layer n by delta (up for delta > 0, down for delta < 0) in |delta|
/// rounds of one switch per run. Requires |delta| vacant layers in the moving
/// direction; throws ElevationError::VacancyViolation otherwise.
Elevation elevate_layer(const KnotWord& k, Axis axis, std::int64_t layer, std::int64_t delta);

/// Replaces every letter on `axis` (both signs) by its square.
Word double_direct(const Word& w, Axis axis);
KnotWord double_direct(const KnotWord& k, Axis axis);

/// Switch certificate from k to double_direct(k, axis): each layer n > 0 is
/// elevated by n from the top down, then each layer n < 0 is lowered by |n|
/// from the bottom up. Layer 0 never moves, so the basepoint stays put and
/// the final word equals double_direct exactly.
Certificate compile_doubling(const KnotWord& k, Axis axis);

}  // namespace latknot
