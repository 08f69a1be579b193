#pragma once

// Words in the free group on {x, y, z}: the combinatorial encoding of lattice
// paths. A letter is one oriented unit step; a word is a freely reduced
// sequence of letters.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace latknot {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

char axis_name(Axis axis);
std::optional<Axis> parse_axis(std::string_view text);

/// One of the six oriented unit steps. The text form is the axis name in
/// lowercase for the positive step and uppercase for the negative (barred) one.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr Letter(Axis axis, bool positive)
      : code_(static_cast<std::uint8_t>(static_cast<std::uint8_t>(axis) + (positive ? 0 : 3))) {}

  static constexpr Letter from_code(std::uint8_t code) {
    Letter l;
    l.code_ = code;
    return l;
  }
  static std::optional<Letter> from_char(char c);

  constexpr Axis axis() const { return static_cast<Axis>(code_ % 3); }
  constexpr bool positive() const { return code_ < 3; }
  constexpr int sign() const { return positive() ? 1 : -1; }
  constexpr Letter inverse() const { return from_code(static_cast<std::uint8_t>((code_ + 3) % 6)); }

  // Position in the canonical order x < y < z < X < Y < Z.
  constexpr std::uint8_t code() const { return code_; }
  char to_char() const;

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter a, Letter b) { return a.code_ <=> b.code_; }

 private:
  std::uint8_t code_ = 0;
};

inline constexpr std::array<Letter, 6> kAllLetters{
    Letter::from_code(0), Letter::from_code(1), Letter::from_code(2),
    Letter::from_code(3), Letter::from_code(4), Letter::from_code(5)};

constexpr bool cancels(Letter a, Letter b) { return a.inverse() == b; }

struct IntVec3 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t z = 0;

  constexpr std::int64_t operator[](Axis axis) const {
    switch (axis) {
      case Axis::X: return x;
      case Axis::Y: return y;
      case Axis::Z: return z;
    }
    return 0;
  }
  constexpr IntVec3& operator+=(const IntVec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr IntVec3& operator-=(const IntVec3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  friend constexpr IntVec3 operator+(IntVec3 a, const IntVec3& b) { return a += b; }
  friend constexpr IntVec3 operator-(IntVec3 a, const IntVec3& b) { return a -= b; }
  friend constexpr bool operator==(const IntVec3&, const IntVec3&) = default;
  constexpr bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

std::ostream& operator<<(std::ostream& os, const IntVec3& v);

/// Unit displacement of a letter.
constexpr IntVec3 step(Letter l) {
  IntVec3 v;
  const std::int64_t s = l.sign();
  switch (l.axis()) {
    case Axis::X: v.x = s; break;
    case Axis::Y: v.y = s; break;
    case Axis::Z: v.z = s; break;
  }
  return v;
}

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, char character);
  std::size_t position() const { return position_; }  // 1-based
  char character() const { return character_; }

 private:
  std::size_t position_;
  char character_;
};

/// A freely reduced word. Every constructor path goes through free reduction,
/// so a Word value is reduced by construction.
///
/// Indexing through letter()/subword() is 1-based, w[n..m] empty when m < n.
class Word {
 public:
  Word() = default;

  /// Stack reduction; cascading cancellations are resolved.
  static Word reduce(std::span<const Letter> letters);
  /// Wraps letters that the caller guarantees are already reduced.
  static Word from_reduced(std::vector<Letter> letters);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }

  Letter letter(std::size_t m) const;                    // 1-based
  Word subword(std::size_t n, std::size_t m) const;      // w[n..m], 1-based

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) { return a.letters_ <=> b.letters_; }

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  std::vector<Letter> letters_;
};

Word parse_word(std::string_view text);
std::string format_word(const Word& w);
std::string format_letters(std::span<const Letter> letters);
std::ostream& operator<<(std::ostream& os, const Word& w);

/// Free reduction of an arbitrary letter sequence.
Word reduce(std::span<const Letter> letters);
bool is_reduced(std::span<const Letter> letters);

/// Reduction that also reports, for every input position, where that letter
/// ended up in the output (or nullopt when it cancelled).
struct TrackedReduction {
  Word word;
  std::vector<std::optional<std::size_t>> position;  // 0-based in, 0-based out
};
TrackedReduction reduce_tracked(std::span<const Letter> letters);

IntVec3 abelianization(std::span<const Letter> letters);
inline IntVec3 abelianization(const Word& w) { return abelianization(w.letters()); }

/// Cyclic rotation moving the first k letters to the end (k taken modulo |w|,
/// negative k rotates the other way). The result is reduced; a rotation of a
/// knot never needs reduction, other words may lose letters at the seam.
Word rotate(const Word& w, std::int64_t k);
/// True when rotating w creates a cancellable seam (first letter inverse of the last).
bool has_cancellable_seam(const Word& w);

/// Lexicographically least rotation under x < y < z < X < Y < Z.
Word canonical_rotation(const Word& w);
/// Smallest k with rotate(w, k) == canonical_rotation(w).
std::size_t canonical_offset(const Word& w);

/// Traversal reversal: the same polygon walked backwards (the formal inverse).
Word reverse(const Word& w);

struct KnotRejection {
  enum class Kind { TooShort, NotClosed, SelfIntersects };
  Kind kind = Kind::TooShort;
  IntVec3 displacement{};   // Ab(w) for NotClosed
  std::size_t first = 0;    // SelfIntersects: w[first..last] has Ab = 0
  std::size_t last = 0;

  std::string describe() const;
};

const char* kind_name(KnotRejection::Kind kind);

class KnotError : public std::runtime_error {
 public:
  explicit KnotError(KnotRejection rejection);
  const KnotRejection& rejection() const { return rejection_; }

 private:
  KnotRejection rejection_;
};

/// A word satisfying both knot conditions: zero abelianization and no proper
/// nonempty subword with zero abelianization (equivalently, a closed
/// self-avoiding polygon of at least four edges).
class KnotWord {
 public:
  /// Throws KnotError when w is not a knot.
  explicit KnotWord(Word w);

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  std::span<const Letter> letters() const { return word_.letters(); }

  friend bool operator==(const KnotWord&, const KnotWord&) = default;

 private:
  struct Trusted {};
  KnotWord(Word w, Trusted) : word_(std::move(w)) {}
  friend std::variant<KnotWord, KnotRejection> validate_knot(const Word& w);
  Word word_;
};

std::optional<KnotRejection> check_knot(std::span<const Letter> letters);
std::variant<KnotWord, KnotRejection> validate_knot(const Word& w);

KnotWord rotate(const KnotWord& k, std::int64_t k_shift);
KnotWord canonical_rotation(const KnotWord& k);

/// Reads one word per line; blank lines and lines starting with '#' are skipped.
std::vector<Word> parse_corpus(std::istream& in);

}  // namespace latknot

template <>
struct std::hash<latknot::Word> {
  std::size_t operator()(const latknot::Word& w) const noexcept;
};
