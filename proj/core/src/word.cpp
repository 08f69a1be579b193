#include "latknot/word.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace latknot {

namespace {

constexpr std::string_view kLetterChars = "xyzXYZ";

// Open-addressing set of lattice points, sized for one word.
class PointSet {
 public:
  explicit PointSet(std::size_t expected) {
    std::size_t cap = 16;
    while (cap < 2 * expected + 1) cap <<= 1;
    slots_.assign(cap, Slot{});
    mask_ = cap - 1;
  }

  // Returns the stored tag if p was already present, otherwise inserts it.
  std::optional<std::size_t> insert(const IntVec3& p, std::size_t tag) {
    std::size_t h = hash(p) & mask_;
    while (slots_[h].used) {
      if (slots_[h].point == p) return slots_[h].tag;
      h = (h + 1) & mask_;
    }
    slots_[h] = Slot{p, tag, true};
    return std::nullopt;
  }

 private:
  struct Slot {
    IntVec3 point{};
    std::size_t tag = 0;
    bool used = false;
  };

  static std::size_t hash(const IntVec3& p) {
    std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.y) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(p.z) * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }

  std::vector<Slot> slots_;
  std::size_t mask_ = 0;
};

}  // namespace

char axis_name(Axis axis) { return "xyz"[static_cast<int>(axis)]; }

std::optional<Axis> parse_axis(std::string_view text) {
  if (text.size() != 1) return std::nullopt;
  switch (text[0]) {
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
    default: return std::nullopt;
  }
}

std::optional<Letter> Letter::from_char(char c) {
  const auto pos = kLetterChars.find(c);
  if (pos == std::string_view::npos) return std::nullopt;
  return from_code(static_cast<std::uint8_t>(pos));
}

char Letter::to_char() const { return kLetterChars[code_]; }

std::ostream& operator<<(std::ostream& os, const IntVec3& v) {
  return os << '(' << v.x << ',' << v.y << ',' << v.z << ')';
}

namespace {
std::string parse_error_message(std::size_t position, char character) {
  std::ostringstream os;
  os << "invalid character '" << character << "' at position " << position
     << " (expected one of " << kLetterChars << ")";
  return os.str();
}
}  // namespace

ParseError::ParseError(std::size_t position, char character)
    : std::runtime_error(parse_error_message(position, character)),
      position_(position),
      character_(character) {}

Word Word::reduce(std::span<const Letter> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (const Letter l : letters) {
    if (!stack.empty() && cancels(stack.back(), l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(std::move(stack));
}

Word Word::from_reduced(std::vector<Letter> letters) { return Word(std::move(letters)); }

Letter Word::letter(std::size_t m) const {
  if (m < 1 || m > letters_.size()) throw std::out_of_range("word index out of range");
  return letters_[m - 1];
}

Word Word::subword(std::size_t n, std::size_t m) const {
  if (m < n) return Word{};
  if (n < 1 || m > letters_.size()) throw std::out_of_range("subword range out of range");
  return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(n - 1),
                                  letters_.begin() + static_cast<std::ptrdiff_t>(m)));
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto l = Letter::from_char(text[i]);
    if (!l) throw ParseError(i + 1, text[i]);
    letters.push_back(*l);
  }
  return Word::reduce(letters);
}

std::string format_letters(std::span<const Letter> letters) {
  std::string out;
  out.reserve(letters.size());
  for (const Letter l : letters) out.push_back(l.to_char());
  return out;
}

std::string format_word(const Word& w) { return format_letters(w.letters()); }

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << format_word(w); }

Word reduce(std::span<const Letter> letters) { return Word::reduce(letters); }

bool is_reduced(std::span<const Letter> letters) {
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (cancels(letters[i - 1], letters[i])) return false;
  }
  return true;
}

TrackedReduction reduce_tracked(std::span<const Letter> letters) {
  std::vector<std::size_t> stack;  // input indices of surviving letters
  stack.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!stack.empty() && cancels(letters[stack.back()], letters[i])) {
      stack.pop_back();
    } else {
      stack.push_back(i);
    }
  }
  TrackedReduction out;
  out.position.assign(letters.size(), std::nullopt);
  std::vector<Letter> reduced;
  reduced.reserve(stack.size());
  for (std::size_t k = 0; k < stack.size(); ++k) {
    out.position[stack[k]] = k;
    reduced.push_back(letters[stack[k]]);
  }
  out.word = Word::from_reduced(std::move(reduced));
  return out;
}

IntVec3 abelianization(std::span<const Letter> letters) {
  IntVec3 v;
  for (const Letter l : letters) v += step(l);
  return v;
}

Word rotate(const Word& w, std::int64_t k) {
  const auto n = static_cast<std::int64_t>(w.size());
  if (n == 0) return w;
  const auto shift = static_cast<std::size_t>(((k % n) + n) % n);
  if (shift == 0) return w;
  std::vector<Letter> out;
  out.reserve(w.size());
  const auto letters = w.letters();
  out.insert(out.end(), letters.begin() + static_cast<std::ptrdiff_t>(shift), letters.end());
  out.insert(out.end(), letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(shift));
  return Word::reduce(out);
}

bool has_cancellable_seam(const Word& w) {
  return w.size() >= 2 && cancels(w.letters().back(), w.letters().front());
}

std::size_t canonical_offset(const Word& w) {
  // Two-candidate scan for the least rotation, O(n).
  const auto s = w.letters();
  const std::size_t n = s.size();
  if (n < 2) return 0;
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = s[(i + k) % n];
    const Letter b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

Word canonical_rotation(const Word& w) {
  if (w.empty()) return w;
  const std::size_t off = canonical_offset(w);
  const auto s = w.letters();
  std::vector<Letter> out;
  out.reserve(s.size());
  out.insert(out.end(), s.begin() + static_cast<std::ptrdiff_t>(off), s.end());
  out.insert(out.end(), s.begin(), s.begin() + static_cast<std::ptrdiff_t>(off));
  // Rotation of a cyclically reduced word; non-cyclically-reduced input is
  // reduced here so the result is always a valid Word.
  return is_reduced(out) ? Word::from_reduced(std::move(out)) : Word::reduce(out);
}

Word reverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) out.push_back(it->inverse());
  return Word::from_reduced(std::move(out));
}

const char* kind_name(KnotRejection::Kind kind) {
  switch (kind) {
    case KnotRejection::Kind::TooShort: return "TooShort";
    case KnotRejection::Kind::NotClosed: return "NotClosed";
    case KnotRejection::Kind::SelfIntersects: return "SelfIntersects";
  }
  return "?";
}

std::string KnotRejection::describe() const {
  std::ostringstream os;
  os << kind_name(kind);
  switch (kind) {
    case Kind::TooShort: os << " (a lattice knot has at least 4 letters)"; break;
    case Kind::NotClosed: os << " (Ab = " << displacement << ")"; break;
    case Kind::SelfIntersects:
      os << " (subword [" << first << ".." << last << "] has Ab = 0)";
      break;
  }
  return os.str();
}

KnotError::KnotError(KnotRejection rejection)
    : std::runtime_error("not a lattice knot: " + rejection.describe()), rejection_(rejection) {}

std::optional<KnotRejection> check_knot(std::span<const Letter> letters) {
  const std::size_t n = letters.size();
  if (n < 4) return KnotRejection{KnotRejection::Kind::TooShort};
  const IntVec3 ab = abelianization(letters);
  if (!ab.is_zero()) {
    KnotRejection r{KnotRejection::Kind::NotClosed};
    r.displacement = ab;
    return r;
  }
  // A repeated prefix sum P_a = P_b (0 <= a < b < n) is exactly a proper
  // subword w[a+1..b] with zero abelianization. Adjacent cancelling letters
  // show up as P_a = P_{a+2}, so reduction is covered by the same scan.
  PointSet seen(n);
  IntVec3 p;
  for (std::size_t m = 0; m < n; ++m) {
    if (const auto prev = seen.insert(p, m)) {
      KnotRejection r{KnotRejection::Kind::SelfIntersects};
      r.first = *prev + 1;
      r.last = m;
      return r;
    }
    p += step(letters[m]);
  }
  return std::nullopt;
}

std::variant<KnotWord, KnotRejection> validate_knot(const Word& w) {
  if (auto rejection = check_knot(w.letters())) return *rejection;
  return KnotWord(w, KnotWord::Trusted{});
}

KnotWord::KnotWord(Word w) : word_(std::move(w)) {
  if (auto rejection = check_knot(word_.letters())) throw KnotError(*rejection);
}

KnotWord rotate(const KnotWord& k, std::int64_t k_shift) {
  // Knots are cyclically reduced, so no seam reduction happens.
  return KnotWord(rotate(k.word(), k_shift));
}

KnotWord canonical_rotation(const KnotWord& k) { return KnotWord(canonical_rotation(k.word())); }

std::vector<Word> parse_corpus(std::istream& in) {
  std::vector<Word> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos || line[begin] == '#') continue;
    const auto end = line.find_last_not_of(" \t\r");
    out.push_back(parse_word(std::string_view(line).substr(begin, end - begin + 1)));
  }
  return out;
}

}  // namespace latknot

std::size_t std::hash<latknot::Word>::operator()(const latknot::Word& w) const noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (const auto l : w.letters()) {
    h ^= l.code();
    h *= 0x100000001B3ULL;
  }
  return static_cast<std::size_t>(h);
}
