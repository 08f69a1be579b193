#pragma once

// Reference implementations that share no code with the library: plain
// strings, repeated-scan reduction and explicit point sets.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "latknot/word.hpp"

namespace latknot::testing {

using Point = std::array<std::int64_t, 3>;

char inverse_char(char c);

// Deletes one adjacent inverse pair per scan until none is left.
std::string naive_reduce(std::string w);

std::vector<Point> naive_vertices(const std::string& w);

// Closed, non-empty, and the n vertices before the return are distinct.
bool naive_is_knot(const std::string& w);

// Sorts every rotation and takes the first.
std::string naive_canonical(const std::string& w);

struct NaiveMove {
  std::size_t i;
  std::size_t j;
  char c;
  std::string result;
};

// Tries every (i, j, c) with a proper v.
std::vector<NaiveMove> naive_switches(const std::string& w, std::size_t max_len);

std::string random_reduced(std::mt19937_64& rng, std::size_t length);

// Grows the unit square by random lengthening switches up to `length` letters.
KnotWord random_knot(std::mt19937_64& rng, std::size_t length);

}  // namespace latknot::testing
