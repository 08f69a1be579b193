#include "latknot/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace latknot {

namespace {
bool unit_apart(const IntVec3& a, const IntVec3& b) {
  const IntVec3 d = b - a;
  const auto mag = std::abs(d.x) + std::abs(d.y) + std::abs(d.z);
  return mag == 1;
}
}  // namespace

LatticePath::LatticePath(std::vector<IntVec3> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("lattice path needs at least one vertex");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (!unit_apart(vertices_[i - 1], vertices_[i])) {
      throw std::invalid_argument("lattice path vertices " + std::to_string(i - 1) + " and " +
                                  std::to_string(i) + " are not one unit step apart");
    }
  }
}

LatticePath embed(const Word& w) {
  std::vector<IntVec3> vertices;
  vertices.reserve(w.size() + 1);
  IntVec3 p{};
  vertices.push_back(p);
  for (std::size_t m = 1; m <= w.size(); ++m) {
    const Letter l = w.letter(m);
    switch (l.axis()) {
      case Axis::X: p.x += l.sign(); break;
      case Axis::Y: p.y += l.sign(); break;
      case Axis::Z: p.z += l.sign(); break;
    }
    vertices.push_back(p);
  }
  return LatticePath(std::move(vertices));
}

bool is_closed_self_avoiding(const LatticePath& path) {
  const auto& v = path.vertices();
  // A lone vertex bounds no polygon.
  if (v.size() < 2 || v.front() != v.back()) return false;
  const std::size_t last = v.size() - 1;
  for (std::size_t a = 0; a < last; ++a) {
    for (std::size_t b = a + 1; b < last; ++b) {
      if (v[a] == v[b]) return false;
    }
  }
  return true;
}

std::int64_t start_height(const Word& w, std::size_t m, Axis axis) {
  if (m < 1 || m > w.size()) throw std::out_of_range("letter index out of range");
  std::int64_t h = 0;
  for (std::size_t i = 1; i < m; ++i) {
    const Letter l = w.letter(i);
    if (l.axis() == axis) h += l.sign();
  }
  return h;
}

BoundingBox bounding_box(const LatticePath& path) {
  BoundingBox box{path.vertices().front(), path.vertices().front()};
  for (const auto& p : path.vertices()) {
    box.min = {std::min(box.min.x, p.x), std::min(box.min.y, p.y), std::min(box.min.z, p.z)};
    box.max = {std::max(box.max.x, p.x), std::max(box.max.y, p.y), std::max(box.max.z, p.z)};
  }
  return box;
}

void write_polyline(std::ostream& out, const LatticePath& path) {
  for (const auto& p : path.vertices()) out << p.x << ' ' << p.y << ' ' << p.z << '\n';
}

LatticePath read_polyline(std::istream& in) {
  std::vector<IntVec3> vertices;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    IntVec3 p;
    std::string rest;
    if (!(ls >> p.x >> p.y >> p.z) || (ls >> rest)) {
      throw std::invalid_argument("polyline line " + std::to_string(line_no) +
                                  ": expected three integers");
    }
    vertices.push_back(p);
  }
  return LatticePath(std::move(vertices));
}

}  // namespace latknot
