#pragma once

// Geometric reading of words: the prefix-sum embedding of a word as a path of
// unit axis-parallel segments starting at the origin.
//
// Nothing here calls into the algebraic knot check in word.hpp; the two are
// meant to be tested against each other.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "latknot/word.hpp"

namespace latknot {

/// vertices[m] = Ab(w[1..m]); vertices.size() == |w| + 1.
class LatticePath {
 public:
  LatticePath() : vertices_{IntVec3{}} {}
  /// Throws std::invalid_argument unless consecutive vertices are unit steps apart.
  explicit LatticePath(std::vector<IntVec3> vertices);

  const std::vector<IntVec3>& vertices() const { return vertices_; }
  std::size_t edge_count() const { return vertices_.size() - 1; }

 private:
  std::vector<IntVec3> vertices_;
};

struct BoundingBox {
  IntVec3 min;
  IntVec3 max;

  std::int64_t extent(Axis axis) const { return max[axis] - min[axis]; }
};

LatticePath embed(const Word& w);

/// Closed (first vertex equals last) and vertices[0..last-1] pairwise distinct.
/// Plain pairwise comparison, quadratic in the path length.
bool is_closed_self_avoiding(const LatticePath& path);

/// Coordinate along `axis` of the starting vertex of letter m (1-based).
std::int64_t start_height(const Word& w, std::size_t m, Axis axis);

BoundingBox bounding_box(const LatticePath& path);

/// Polyline text: one "x y z" triple per line, vertices in path order.
void write_polyline(std::ostream& out, const LatticePath& path);
LatticePath read_polyline(std::istream& in);

}  // namespace latknot
