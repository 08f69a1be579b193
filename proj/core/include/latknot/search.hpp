#pragma once

// Bounded breadth-first search for a switch sequence between two lattice
// knots. States are rotation classes, represented by their canonical rotation;
// the emitted certificate bridges basepoints with Rebase steps.
//
// Running out of budget means "unknown within budget", never "not equivalent".

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latknot/moves.hpp"
#include "latknot/word.hpp"

namespace latknot {

struct SearchBudget {
  std::size_t max_word_len = 0;
  std::size_t max_states = 0;
  std::size_t max_depth = 0;
};

struct SearchStats {
  std::size_t states_explored = 0;         // distinct rotation classes discovered
  std::vector<std::size_t> frontier_sizes;  // frontier_sizes[d] = states first seen at depth d
  std::size_t peak_memory_bytes = 0;       // estimate of the visited table + frontier
};

struct SearchOutcome {
  enum class Status { Connected, ExhaustedBudget };
  Status status = Status::ExhaustedBudget;
  std::optional<Certificate> certificate;  // set when Connected
  std::size_t depth = 0;                   // switch count when Connected
  std::size_t frontier_depth = 0;          // deepest level reached
  SearchStats stats;

  bool connected() const { return status == Status::Connected; }
};

/// One edge of the rotation-class graph: rotating the source by `rotation`,
/// applying `move` and rotating the result by `offset` gives `target`.
struct SearchEdge {
  Word target;
  std::size_t rotation = 0;
  SwitchMove move;
  std::size_t offset = 0;
};

/// Distinct canonical neighbours of k's rotation class: switches are tried at
/// every basepoint. Sorted by target; for each target the first (rotation,
/// move) reaching it is kept.
std::vector<SearchEdge> neighbor_edges(const KnotWord& k, const SearchBudget& budget);
std::vector<Word> neighbors(const KnotWord& k, const SearchBudget& budget);

/// Throws std::invalid_argument when the budget is not positive or too small
/// for the endpoints. `threads` > 1 expands each frontier in parallel; the
/// outcome is identical to the sequential search.
SearchOutcome bfs_connect(const KnotWord& a, const KnotWord& b, const SearchBudget& budget,
                          unsigned threads = 1);

struct StepReport {
  std::size_t index = 0;
  std::string step;         // "switch (i,j,c)" or "rebase k"
  std::size_t length = 0;   // word length after the step
  bool valid = false;
};

struct VerificationReport {
  bool accepted = false;
  std::vector<StepReport> steps;
  std::optional<CertificateError::Kind> failure;
  std::optional<MoveFailure> move_failure;
  std::size_t failed_step = 0;
  std::string message;
};

VerificationReport verify_certificate(const KnotWord& a, const Certificate& cert, const KnotWord& b);

/// Plain "key: value" lines: states_explored, frontier_sizes, peak_memory_bytes.
void write_stats(std::ostream& out, const SearchStats& stats);

}  // namespace latknot
