#include <doctest.h>

#include <random>
#include <sstream>

#include "latknot/word.hpp"
#include "support/corpus.hpp"
#include "support/oracle.hpp"

using namespace latknot;
using namespace latknot::testing;

TEST_SUITE("word_core") {

TEST_CASE("letters") {
  for (std::uint8_t c = 0; c < 6; ++c) {
    const Letter l = Letter::from_code(c);
    CHECK(l.inverse().inverse() == l);
    CHECK(cancels(l, l.inverse()));
    CHECK(l.inverse().axis() == l.axis());
    CHECK(l.inverse().sign() == -l.sign());
    CHECK(Letter::from_char(l.to_char()) == l);
  }
  CHECK(Letter::from_char('x')->code() == 0);
  CHECK(Letter::from_char('Z')->code() == 5);
  CHECK_FALSE(Letter::from_char('q'));
  CHECK(step(*Letter::from_char('Y')) == IntVec3{0, -1, 0});
}

TEST_CASE("parse and format") {
  CHECK(format_word(parse_word("xyXY")) == "xyXY");
  CHECK(parse_word("xyXY").size() == 4);
  CHECK(parse_word("xX").empty());
  CHECK(format_word(parse_word("")) == "");
  CHECK(format_word(parse_word(kTrefoilPrinted)) == kTrefoilPrinted);
  CHECK(parse_word(kTrefoilPrinted).size() == 33);

  try {
    parse_word("xyqX");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
    CHECK(e.character() == 'q');
  }
  CHECK_THROWS_AS(parse_word("xy X"), ParseError);
}

TEST_CASE("reduction") {
  auto r = [](std::string_view s) {
    std::vector<Letter> letters;
    for (const char c : s) letters.push_back(*Letter::from_char(c));
    return format_word(reduce(letters));
  };
  CHECK(r("xzZX") == "");
  CHECK(r("xXx") == "x");
  CHECK(r("xzZXy") == "y");
  CHECK(r("xyXY") == "xyXY");

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 30);
  std::uniform_int_distribution<int> code(0, 5);
  for (int t = 0; t < 2000; ++t) {
    std::string s;
    std::vector<Letter> letters;
    for (int k = len(rng); k > 0; --k) {
      letters.push_back(Letter::from_code(static_cast<std::uint8_t>(code(rng))));
      s.push_back(letters.back().to_char());
    }
    const Word w = reduce(letters);
    CHECK(format_word(w) == naive_reduce(s));
    CHECK(is_reduced(w.letters()));
    CHECK(is_reduced(letters) == (w.size() == letters.size()));
  }
}

TEST_CASE("tracked reduction maps survivors") {
  std::vector<Letter> letters;
  for (const char c : std::string_view("xzyYZyX")) letters.push_back(*Letter::from_char(c));
  const auto t = reduce_tracked(letters);
  CHECK(format_word(t.word) == "xyX");
  REQUIRE(t.position.size() == letters.size());
  CHECK(t.position[0] == 0u);
  CHECK_FALSE(t.position[1]);
  CHECK_FALSE(t.position[4]);
  CHECK(t.position[5] == 1u);
  CHECK(t.position[6] == 2u);
}

TEST_CASE("abelianization") {
  CHECK(abelianization(Word{}).is_zero());
  CHECK(abelianization(parse_word("xxzY")) == IntVec3{2, -1, 1});
  CHECK(abelianization(parse_word(kTrefoil)).is_zero());
  CHECK(abelianization(parse_word(kTrefoilPrinted)) == IntVec3{0, -1, 0});
}

TEST_CASE("subword and letter are 1-based") {
  const Word t = parse_word(kTrefoilPrinted);
  CHECK(t.letter(1).to_char() == 'x');
  CHECK(t.letter(3).to_char() == 'z');
  CHECK(format_word(t.subword(18, 20)) == "XXy");
  CHECK_THROWS(t.letter(0));
  CHECK_THROWS(t.letter(34));
}

TEST_CASE("rotation") {
  const Word sq = parse_word(kSquare);
  CHECK(format_word(rotate(sq, 1)) == "yXYx");
  CHECK(rotate(sq, 0) == sq);
  CHECK(rotate(sq, -1) == rotate(sq, 3));
  CHECK(rotate(sq, 9) == rotate(sq, 1));
  const Word t = parse_word(kTrefoilPrinted);
  for (std::int64_t k = 0; k <= 33; ++k) {
    CHECK(rotate(rotate(t, k), 33 - k) == t);
  }
  const Word seam = parse_word("xyzX");
  CHECK(has_cancellable_seam(seam));
  CHECK(format_word(rotate(seam, 1)) == "yz");
  CHECK_FALSE(has_cancellable_seam(sq));
}

TEST_CASE("canonical rotation") {
  CHECK(format_word(canonical_rotation(parse_word("yXYx"))) == "xyXY");
  CHECK(format_word(canonical_rotation(parse_word("XYxy"))) == "xyXY");
  CHECK(canonical_offset(parse_word("yXYx")) == 3);

  const Word t = parse_word(kTrefoil);
  CHECK(canonical_rotation(canonical_rotation(t)) == canonical_rotation(t));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> shift(0, 33);
  for (int r = 0; r < 50; ++r) {
    CHECK(canonical_rotation(rotate(t, shift(rng))) == canonical_rotation(rotate(t, shift(rng))));
  }
  for (int r = 0; r < 500; ++r) {
    const std::string s = random_reduced(rng, 1 + r % 20);
    const Word w = parse_word(s);
    if (has_cancellable_seam(w)) continue;
    CHECK(format_word(canonical_rotation(w)) == naive_canonical(s));
    CHECK(rotate(w, static_cast<std::int64_t>(canonical_offset(w))) == canonical_rotation(w));
  }
}

TEST_CASE("reverse is the formal inverse") {
  CHECK(format_word(reverse(parse_word("xyXY"))) == "yxYX");
  CHECK(format_word(reverse(parse_word("xxzY"))) == "yZXX");
}

TEST_CASE("validate_knot") {
  CHECK(std::holds_alternative<KnotWord>(validate_knot(parse_word(kSquare))));
  CHECK(std::holds_alternative<KnotWord>(validate_knot(parse_word(kTrefoil))));

  auto reject = [](std::string_view s) { return std::get<KnotRejection>(validate_knot(parse_word(s))); };
  const auto doubled = reject("xyXYxyXY");
  CHECK(doubled.kind == KnotRejection::Kind::SelfIntersects);
  CHECK(abelianization(parse_word("xyXYxyXY").subword(doubled.first, doubled.last)).is_zero());
  CHECK(doubled.last - doubled.first + 1 < 8);

  CHECK(reject("xyX").kind == KnotRejection::Kind::TooShort);
  CHECK(reject("").kind == KnotRejection::Kind::TooShort);
  const auto open = reject(kTrefoilPrinted);
  CHECK(open.kind == KnotRejection::Kind::NotClosed);
  CHECK(open.displacement == IntVec3{0, -1, 0});
  CHECK(reject("zxyXYZ").kind == KnotRejection::Kind::SelfIntersects);
  CHECK_THROWS_AS(KnotWord(parse_word("xyXYxyXY")), KnotError);
}

TEST_CASE("check_knot sees through unreduced input") {
  std::vector<Letter> letters;
  for (const char c : std::string_view("xyYyXY")) letters.push_back(*Letter::from_char(c));
  CHECK(check_knot(letters));
}

TEST_CASE("validate_knot against the geometric oracle") {
  std::mt19937_64 rng(17);
  for (int r = 0; r < 3000; ++r) {
    const std::string s = random_reduced(rng, static_cast<std::size_t>(r % 24));
    CHECK(std::holds_alternative<KnotWord>(validate_knot(parse_word(s))) == naive_is_knot(s));
  }
  for (int r = 0; r < 30; ++r) {
    const KnotWord k = random_knot(rng, 8 + 2 * static_cast<std::size_t>(r % 10));
    CHECK(naive_is_knot(format_word(k.word())));
  }
}

TEST_CASE("corpus parsing") {
  std::istringstream in("# comment\nxyXY\n\n  xxyXXY  \n");
  const auto words = parse_corpus(in);
  REQUIRE(words.size() == 2);
  CHECK(format_word(words[1]) == "xxyXXY");
}

TEST_CASE("hash distinguishes words") {
  const std::hash<Word> h;
  CHECK(h(parse_word("xyXY")) == h(parse_word("xyXY")));
  CHECK(h(parse_word("xyXY")) != h(parse_word("yXYx")));
}

}
