#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nv {

/// A finite word over {0,1}. The word b1...bk names the half-open interval
/// [0.b1...bk, 0.b1...bk + 2^-k) inside [0,1); the empty word names [0,1).
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::string_view bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  char operator[](std::size_t i) const { return bits_[i]; }
  std::string const& str() const noexcept { return bits_; }

  BinaryWord extended(char bit) const;
  BinaryWord prefix(std::size_t len) const { return BinaryWord::raw(bits_.substr(0, len)); }
  BinaryWord suffix_from(std::size_t pos) const { return BinaryWord::raw(bits_.substr(pos)); }
  BinaryWord parent() const { return prefix(bits_.empty() ? 0 : bits_.size() - 1); }

  /// True iff this word is a (not necessarily proper) prefix of `other`,
  /// i.e. the interval of `other` lies inside the interval of this word.
  bool is_prefix_of(BinaryWord const& other) const noexcept;
  bool comparable(BinaryWord const& other) const noexcept {
    return is_prefix_of(other) || other.is_prefix_of(*this);
  }

  friend BinaryWord operator+(BinaryWord const& a, BinaryWord const& b) {
    return BinaryWord::raw(a.bits_ + b.bits_);
  }
  friend auto operator<=>(BinaryWord const&, BinaryWord const&) = default;
  friend bool operator==(BinaryWord const&, BinaryWord const&) = default;

 private:
  static BinaryWord raw(std::string bits) {
    BinaryWord w;
    w.bits_ = std::move(bits);
    return w;
  }
  std::string bits_;
};

/// An exact dyadic rational in [0,1], stored as its terminating binary
/// expansion (trailing zeros stripped). The value 1 is kept as a flag; it
/// only ever shows up as a corner coordinate.
class Dyadic {
 public:
  Dyadic() = default;
  static Dyadic one();
  static Dyadic from_bits(std::string_view bits);
  /// num / 2^exp; requires 0 <= num <= 2^exp.
  static Dyadic from_fraction(std::uint64_t num, unsigned exp);
  /// Parses "p/q" with q a power of two, a bare integer 0 or 1, or binary digits "b:b1b2...".
  static Dyadic parse(std::string_view text);

  bool is_one() const noexcept { return one_; }
  /// Binary digits after the point; empty for 0 and for 1.
  std::string const& bits() const noexcept { return bits_; }
  /// Digit i of the expansion (0-based), zero past the end.
  char bit(std::size_t i) const noexcept { return i < bits_.size() ? bits_[i] : '0'; }

  /// Left endpoint and right endpoint of the interval named by a word.
  static Dyadic lower(BinaryWord const& w);
  static Dyadic upper(BinaryWord const& w);

  std::string to_string() const;
  double to_double() const;

  friend std::strong_ordering operator<=>(Dyadic const& a, Dyadic const& b);
  friend bool operator==(Dyadic const&, Dyadic const&) = default;

 private:
  bool one_ = false;
  std::string bits_;
};

using DyadicPoint = std::vector<Dyadic>;

std::string to_string(DyadicPoint const& p);
/// Comma-separated coordinates, each as accepted by Dyadic::parse.
DyadicPoint parse_point(std::string_view text);

/// A standard dyadic rectangle in I^n: one BinaryWord per coordinate.
class Rect {
 public:
  Rect() = default;
  explicit Rect(std::vector<BinaryWord> words);
  static Rect unit(int dim);
  static Rect parse(std::span<std::string const> words);

  int dim() const noexcept { return static_cast<int>(words_.size()); }
  /// Coordinates are 1-based throughout, matching the usual d = 1..n labelling.
  BinaryWord const& word(int d) const { return words_.at(static_cast<std::size_t>(d - 1)); }
  std::vector<BinaryWord> const& words() const noexcept { return words_; }
  std::size_t total_depth() const noexcept;
  bool is_unit() const noexcept { return total_depth() == 0; }

  Rect with_word(int d, BinaryWord w) const;
  Rect extended(int d, char bit) const { return with_word(d, word(d).extended(bit)); }

  std::string to_string() const;

  friend auto operator<=>(Rect const&, Rect const&) = default;
  friend bool operator==(Rect const&, Rect const&) = default;

 private:
  std::vector<BinaryWord> words_;
};

/// [0,1/2) x I^{n-1} and [1/2,1) x I^{n-1}.
Rect rect_Il(int dim);
Rect rect_Ir(int dim);

std::pair<Rect, Rect> halve(Rect const& r, int d);

enum class RectRelation { disjoint, a_contains_b, b_contains_a, equal, partial_overlap };
std::string_view to_string(RectRelation rel);

RectRelation rect_relation(Rect const& a, Rect const& b);
bool interiors_meet(Rect const& a, Rect const& b);
bool contains(Rect const& outer, Rect const& inner);
/// The intersection of two rectangles that meet; precondition interiors_meet(a, b).
Rect intersection(Rect const& a, Rect const& b);

/// Half-open membership. A coordinate equal to 1 belongs to no rectangle.
bool contains(Rect const& r, DyadicPoint const& p);

/// The 2^n corners of cl(r).
std::vector<DyadicPoint> corners(Rect const& r);

/// Lower-left corner and per-coordinate side lengths as exact dyadics.
Dyadic rect_lower(Rect const& r, int d);
Dyadic rect_upper(Rect const& r, int d);

struct RectHash {
  std::size_t operator()(Rect const& r) const noexcept;
};

void check_same_dim(int a, int b);

}  // namespace nv
