#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "latknot/certificate_io.hpp"
#include "latknot/moves.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace latknot;
using namespace latknot::testing;

namespace {

KnotWord knot(std::string_view s) { return KnotWord(parse_word(s)); }
Letter L(char c) { return *Letter::from_char(c); }

KnotWord replay(KnotWord k, const std::vector<SwitchMove>& moves) {
  for (const auto& m : moves) k = apply_switch(k, m);
  return k;
}

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("single switches") {
  const KnotWord sq = knot(kSquare);
  CHECK(format_word(apply_switch(sq, {2, 2, L('x')}).word()) == "xxyXXY");
  CHECK(check_switch(sq, {2, 2, L('x')}));

  // v = the opening "xx" lifted by z.
  CHECK(format_word(apply_switch(knot(kRectangle), {1, 2, L('z')}).word()) == "zxxZyXXY");

  const auto whole = check_switch(sq, {1, 4, L('z')});
  CHECK_FALSE(whole);
  CHECK(*whole.failure == MoveFailure::NotProper);
  CHECK_THROWS_AS(apply_switch(sq, {1, 4, L('z')}), InvalidMove);
  CHECK(*check_switch(sq, {0, 2, L('z')}).failure == MoveFailure::OutOfRange);
  CHECK(*check_switch(sq, {3, 2, L('z')}).failure == MoveFailure::OutOfRange);
  CHECK(*check_switch(sq, {2, 5, L('z')}).failure == MoveFailure::OutOfRange);
  CHECK(check_switch(knot(kRectangle), {2, 3, L('X')}));
}

TEST_CASE("shrinking switch and its inverse") {
  const KnotWord rect = knot(kRectangle);
  const KnotWord small = apply_switch(rect, {2, 3, L('X')});
  CHECK(format_word(small.word()) == "xyXY");
  CHECK(replay(small, invert_move(rect, {2, 3, L('X')})) == rect);
  CHECK(replay(apply_switch(knot(kSquare), {2, 2, L('x')}), invert_move(knot(kSquare), {2, 2, L('x')})) ==
        knot(kSquare));
}

TEST_CASE("a single inverse when nothing in v cancels") {
  const KnotWord sq = knot(kSquare);
  const auto inv = invert_move(sq, {2, 2, L('x')});
  REQUIRE(inv.size() == 1);
  CHECK(inv[0].conjugator == L('X'));
}

TEST_CASE("decomposition replays to the same word") {
  const KnotWord t = knot(kTrefoil);
  for (const auto& o : enumerate_switch_outcomes(t, 36)) {
    const auto parts = decompose_move(t, o.move);
    REQUIRE_FALSE(parts.empty());
    CHECK(replay(t, parts) == o.result);
  }
}

TEST_CASE("enumeration matches the brute-force oracle") {
  const KnotWord sq = knot(kSquare);
  const auto moves = enumerate_switches(sq, 6);
  CHECK(moves.size() == 40);
  CHECK(std::find(moves.begin(), moves.end(), SwitchMove{2, 2, L('x')}) != moves.end());
  CHECK(std::is_sorted(moves.begin(), moves.end()));

  std::mt19937_64 rng(23);
  std::vector<KnotWord> corpus{sq, knot(kRectangle), knot(kTrefoil), knot(kComb), random_knot(rng, 16)};
  for (const auto& k : corpus) {
    for (const std::size_t slack : {0, 2}) {
      const auto outcomes = enumerate_switch_outcomes(k, k.size() + slack);
      const auto ref = naive_switches(format_word(k.word()), k.size() + slack);
      REQUIRE(outcomes.size() == ref.size());
      for (std::size_t n = 0; n < ref.size(); ++n) {
        CHECK(outcomes[n].move.start == ref[n].i);
        CHECK(outcomes[n].move.end == ref[n].j);
        CHECK(format_word(outcomes[n].result.word()) == ref[n].result);
        CHECK(check_switch(k, outcomes[n].move));
      }
    }
  }
  CHECK_THROWS_AS(enumerate_switches(sq, 3), std::invalid_argument);
}

TEST_CASE("inverse round trips on random moves") {
  std::mt19937_64 rng(29);
  const KnotWord t = knot(kTrefoil);
  const auto outcomes = enumerate_switch_outcomes(t, 36);
  std::uniform_int_distribution<std::size_t> pick(0, outcomes.size() - 1);
  for (int r = 0; r < 100; ++r) {
    const auto& o = outcomes[pick(rng)];
    CHECK(replay(o.result, invert_move(t, o.move)) == t);
  }
}

TEST_CASE("certificate replay") {
  const KnotWord sq = knot(kSquare);
  Certificate id{sq.word(), {}, sq.word()};
  CHECK(apply_certificate(sq, id) == sq);

  Certificate one{sq.word(), {SwitchMove{2, 2, L('x')}}, parse_word(kRectangle)};
  CHECK(format_word(apply_certificate(sq, one).word()) == "xxyXXY");
  CHECK(one.switch_count() == 1);

  const auto first = enumerate_switch_outcomes(rotate(sq, 1), 6).front();
  Certificate rotated{sq.word(), {Rebase{1}, first.move, Rebase{-1}}, rotate(first.result.word(), -1)};
  std::vector<std::size_t> seen;
  CHECK(apply_certificate(sq, rotated, [&](std::size_t s, const KnotWord&) { seen.push_back(s); }).word() ==
        rotated.end_word);
  CHECK(seen == std::vector<std::size_t>{0, 1, 2});
  CHECK(rotated.switch_count() == 1);

  Certificate wrong_start{parse_word(kRectangle), {}, parse_word(kRectangle)};
  try {
    apply_certificate(sq, wrong_start);
    FAIL("expected CertificateError");
  } catch (const CertificateError& e) {
    CHECK(e.kind() == CertificateError::Kind::StartMismatch);
  }

  Certificate bad_step{sq.word(), {SwitchMove{2, 2, L('x')}, SwitchMove{1, 6, L('z')}}, Word{}};
  try {
    apply_certificate(sq, bad_step);
    FAIL("expected CertificateError");
  } catch (const CertificateError& e) {
    CHECK(e.kind() == CertificateError::Kind::StepFailed);
    CHECK(e.step() == 1);
    CHECK(*e.move_failure() == MoveFailure::NotProper);
  }

  Certificate wrong_end{sq.word(), {}, parse_word(kRectangle)};
  try {
    apply_certificate(sq, wrong_end);
    FAIL("expected CertificateError");
  } catch (const CertificateError& e) {
    CHECK(e.kind() == CertificateError::Kind::EndMismatch);
  }
}

TEST_CASE("certificate files") {
  const Certificate c{parse_word(kSquare), {SwitchMove{2, 2, L('x')}, Rebase{3}}, parse_word("XXYxxy")};
  const std::string text = certificate_to_string(c);
  CHECK(text.find("\"start\": \"xyXY\"") != std::string::npos);
  CHECK(certificate_from_string(text) == c);

  std::stringstream io;
  write_certificate(io, c);
  CHECK(read_certificate(io) == c);

  CHECK_THROWS_AS(certificate_from_string("{"), CertificateFormatError);
  CHECK_THROWS_AS(certificate_from_string(R"({"start":"xyXY","steps":[{"i":1}],"end":"xyXY"})"),
                  CertificateFormatError);
  CHECK_THROWS_AS(certificate_from_string(R"({"start":"xyXY","steps":[{"i":1,"j":1,"c":"q"}],"end":"xyXY"})"),
                  CertificateFormatError);
  CHECK_THROWS_AS(certificate_from_string(R"({"start":"xyXY","steps":[]})"), CertificateFormatError);
}

}
