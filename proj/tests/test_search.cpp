#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "latknot/elevation.hpp"
#include "latknot/search.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace latknot;
using namespace latknot::testing;

namespace {

KnotWord knot(std::string_view s) { return KnotWord(parse_word(s)); }

}  // namespace

TEST_SUITE("search") {

TEST_CASE("neighbours") {
  const SearchBudget b{6, 1000, 4};
  const auto n = neighbors(knot(kSquare), b);
  CHECK(std::is_sorted(n.begin(), n.end()));
  CHECK(std::adjacent_find(n.begin(), n.end()) == n.end());
  CHECK(std::find(n.begin(), n.end(), canonical_rotation(parse_word(kRectangle))) != n.end());
  for (const auto& w : n) {
    CHECK(naive_is_knot(format_word(w)));
    CHECK(w.size() <= 6);
    CHECK(canonical_rotation(w) == w);
  }
  for (const auto& e : neighbor_edges(knot(kSquare), b)) {
    const KnotWord base = rotate(knot(kSquare), static_cast<std::int64_t>(e.rotation));
    CHECK(rotate(apply_switch(base, e.move).word(), static_cast<std::int64_t>(e.offset)) == e.target);
  }
}

TEST_CASE("every neighbour edge can be walked back") {
  std::mt19937_64 rng(41);
  const SearchBudget b{14, 1, 1};
  std::size_t single = 0;
  std::size_t one_way = 0;
  for (int r = 0; r < 15; ++r) {
    const KnotWord a = canonical_rotation(random_knot(rng, 8 + 2 * static_cast<std::size_t>(r % 3)));
    for (const auto& e : neighbor_edges(a, b)) {
      const KnotWord base = rotate(a, static_cast<std::int64_t>(e.rotation));
      KnotWord back = apply_switch(base, e.move);
      const auto inv = invert_move(base, e.move);
      for (const auto& m : inv) back = apply_switch(back, m);
      CHECK(back == base);
      if (inv.size() != 1) continue;
      // A lone inverse switch is an edge of the class graph in the other direction.
      ++single;
      const auto rev = neighbors(KnotWord(e.target), b);
      one_way += !std::binary_search(rev.begin(), rev.end(), a.word());
    }
  }
  CHECK(single > 0);
  CHECK(one_way == 0);
}

TEST_CASE("a switch can shrink a word by more than one inverse switch can grow it") {
  const KnotWord a(parse_word("xxyXXZYz"));
  const SearchBudget b{14, 1, 1};
  const auto out = neighbors(a, b);
  CHECK(std::binary_search(out.begin(), out.end(), parse_word("xyXY")));
  const auto back = neighbors(KnotWord(parse_word("xyXY")), b);
  CHECK_FALSE(std::binary_search(back.begin(), back.end(), canonical_rotation(a.word())));
}

TEST_CASE("trivial connections") {
  const SearchBudget b{8, 10000, 4};
  const auto same = bfs_connect(knot(kSquare), knot(kSquare), b);
  REQUIRE(same.connected());
  CHECK(same.depth == 0);
  CHECK(same.certificate->steps.empty());

  const KnotWord rot = rotate(knot(kSquare), 2);
  const auto r = bfs_connect(knot(kSquare), rot, b);
  REQUIRE(r.connected());
  CHECK(r.depth == 0);
  CHECK(r.certificate->switch_count() == 0);
  CHECK(verify_certificate(knot(kSquare), *r.certificate, rot).accepted);
}

TEST_CASE("one switch apart") {
  const SearchBudget b{8, 10000, 4};
  const auto r = bfs_connect(knot(kSquare), knot(kRectangle), b);
  REQUIRE(r.connected());
  CHECK(r.depth == 1);
  CHECK(r.certificate->switch_count() == 1);
  CHECK(verify_certificate(knot(kSquare), *r.certificate, knot(kRectangle)).accepted);
  CHECK(r.stats.states_explored >= 2);
  CHECK(r.stats.frontier_sizes.front() == 1);
}

TEST_CASE("budget exhaustion is not a verdict") {
  const auto r = bfs_connect(knot(kSquare), knot(kComb), SearchBudget{12, 50, 10});
  CHECK_FALSE(r.connected());
  CHECK(r.stats.states_explored <= 50);
  const auto shallow = bfs_connect(knot(kSquare), knot(kComb), SearchBudget{12, 100000, 1});
  CHECK_FALSE(shallow.connected());
  CHECK(shallow.frontier_depth == 1);
  std::ostringstream os;
  write_stats(os, r.stats);
  CHECK(os.str().find("states_explored: ") == 0);
  CHECK(os.str().find("frontier_sizes:") != std::string::npos);
  CHECK(os.str().find("peak_memory_bytes: ") != std::string::npos);
}

TEST_CASE("bad budgets") {
  CHECK_THROWS_AS(bfs_connect(knot(kSquare), knot(kSquare), SearchBudget{0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(bfs_connect(knot(kSquare), knot(kRectangle), SearchBudget{4, 10, 1}), std::invalid_argument);
}

TEST_CASE("determinism") {
  std::mt19937_64 rng(43);
  const SearchBudget b{10, 20000, 3};
  int connected = 0;
  for (int r = 0; r < 4; ++r) {
    const KnotWord a = random_knot(rng, 8);
    const KnotWord c = random_knot(rng, 8);
    const auto ab = bfs_connect(a, c, b);
    const auto again = bfs_connect(a, c, b);
    const auto parallel = bfs_connect(a, c, b, 4);
    CHECK(ab.connected() == again.connected());
    CHECK(ab.stats.states_explored == again.stats.states_explored);
    CHECK(ab.stats.frontier_sizes == parallel.stats.frontier_sizes);
    CHECK(ab.certificate == again.certificate);
    CHECK(ab.certificate == parallel.certificate);
    if (ab.connected()) {
      ++connected;
      CHECK(verify_certificate(a, *ab.certificate, c).accepted);
      CHECK(ab.depth == ab.certificate->switch_count());
    }
  }
  CHECK(connected > 0);
}

TEST_CASE("verification reports") {
  const KnotWord t = knot(kTrefoil);
  const KnotWord d = double_direct(t, Axis::Z);
  Certificate c = compile_doubling(t, Axis::Z);
  const auto ok = verify_certificate(t, c, d);
  CHECK(ok.accepted);
  CHECK(ok.steps.size() == c.steps.size());
  CHECK(ok.steps.back().length == 42);

  Certificate corrupt = c;
  std::get<SwitchMove>(corrupt.steps[1]).end = 60;
  const auto bad = verify_certificate(t, corrupt, d);
  CHECK_FALSE(bad.accepted);
  CHECK(bad.failed_step == 1);
  CHECK(*bad.failure == CertificateError::Kind::StepFailed);
  CHECK(*bad.move_failure == MoveFailure::OutOfRange);
  CHECK_FALSE(bad.steps.back().valid);

  const Certificate id{t.word(), {}, t.word()};
  const auto mismatch = verify_certificate(t, id, d);
  CHECK_FALSE(mismatch.accepted);
  CHECK(*mismatch.failure == CertificateError::Kind::EndMismatch);
}

}
