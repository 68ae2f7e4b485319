#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nv/dyadic.hpp"
#include "nv/pattern.hpp"

namespace nv {

/// The affine bijection dom -> ran that replaces the prefix dom.word(d) by
/// ran.word(d) in every coordinate d. Its slope in coordinate d is
/// 2^(|dom.word(d)| - |ran.word(d)|).
struct AffinePiece {
  Rect dom;
  Rect ran;

  int dim() const noexcept { return dom.dim(); }
  bool is_trivial() const noexcept { return dom == ran; }
  int exponent(int d) const {
    return static_cast<int>(dom.word(d).size()) - static_cast<int>(ran.word(d).size());
  }

  /// Image of a sub-rectangle of dom.
  Rect push(Rect const& sub) const;
  /// Preimage of a sub-rectangle of ran.
  Rect pull(Rect const& sub) const;
  DyadicPoint apply(DyadicPoint const& p) const;
  AffinePiece restricted(Rect const& sub) const { return {sub, push(sub)}; }
  AffinePiece inverted() const { return {ran, dom}; }

  friend auto operator<=>(AffinePiece const&, AffinePiece const&) = default;
  friend bool operator==(AffinePiece const&, AffinePiece const&) = default;
};

/// An element of nV given by a pattern pair: the domains of the pieces form
/// one pattern, the ranges another. Pieces are kept sorted by domain.
///
/// Construction does not validate; use validate() or Element::checked().
class Element {
 public:
  Element() = default;
  Element(int dim, std::vector<AffinePiece> pieces);
  static Element checked(int dim, std::vector<AffinePiece> pieces);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return pieces_.size(); }
  std::vector<AffinePiece> const& pieces() const noexcept { return pieces_; }
  AffinePiece const& piece(std::size_t i) const { return pieces_.at(i); }

  std::vector<Rect> domain_rects() const;
  std::vector<Rect> range_rects() const;
  Pattern domain_pattern() const { return Pattern(dim_, domain_rects()); }
  Pattern range_pattern() const { return Pattern(dim_, range_rects()); }

  /// Longest word appearing in any domain or range rectangle.
  std::size_t max_word_depth() const noexcept;

  /// Identical piece tables (not the same as equals()).
  friend bool operator==(Element const&, Element const&) = default;

 private:
  int dim_ = 0;
  std::vector<AffinePiece> pieces_;
};

Element identity(int dim);
bool validate(Element const& e);

/// The group product g*h = g o h: apply h first, then g. Juxtaposition in
/// words follows the same rule.
Element compose(Element const& g, Element const& h);
Element inverse(Element const& g);
inline Element operator*(Element const& g, Element const& h) { return compose(g, h); }

/// Precondition: no coordinate of p equals 1.
DyadicPoint apply(Element const& g, DyadicPoint const& p);

bool is_identity(Element const& g);
/// Equality of the induced maps.
bool equals(Element const& g, Element const& h);

/// If g restricted to r is a single admissible affine map, that map as a piece with dom == r.
std::optional<AffinePiece> is_affine_on(Element const& g, Rect const& r);
bool is_identity_on(Element const& g, Rect const& r);

/// Domain pieces of simplify(g) that move points.
std::vector<Rect> support(Element const& g);

/// Greedily merges sibling pieces until no merge applies.
Element simplify(Element const& g);

/// Splits piece `piece_index` in coordinate d on both sides.
Element expansion(Element const& g, std::size_t piece_index, int d);

/// Two random split trees with `size` leaves and a random pairing; deterministic in seed.
Element random_element(int dim, int size, std::uint64_t seed);

/// Conjugate of g into the sub-rectangle r: identity off r, and on r the copy of g
/// transported along the canonical affine identification I^n -> r.
Element embed_into(Element const& g, Rect const& r);

// Piece-list helpers shared with the coset code, where maps are only defined on part of I^n.

/// Pieces of `pieces` restricted to r; the domains must cover r.
std::vector<AffinePiece> restrict_pieces(std::span<AffinePiece const> pieces, Rect const& r);

/// The single affine map extending every piece meeting r, with domain r, if it exists.
std::optional<AffinePiece> affine_extension(std::span<AffinePiece const> pieces, Rect const& r);

/// outer o inner for a partial map `inner` whose ranges lie in the domain of `outer`.
std::vector<AffinePiece> compose_pieces(Element const& outer, std::span<AffinePiece const> inner);

/// Greedy sibling merging on a piece list.
std::vector<AffinePiece> merge_siblings(std::vector<AffinePiece> pieces);

}  // namespace nv
