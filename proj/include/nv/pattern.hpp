#pragma once

#include <memory>
#include <set>
#include <span>
#include <vector>

#include "nv/dyadic.hpp"

namespace nv {

/// True iff the rectangles have pairwise disjoint interiors and cover I^n.
/// The empty set is not a partition.
bool is_partition(std::span<Rect const> rects);

/// A finite partition of I^n into standard dyadic rectangles, kept sorted.
class Pattern {
 public:
  /// Throws std::invalid_argument unless `rects` partition I^n.
  Pattern(int dim, std::vector<Rect> rects);
  static Pattern unit(int dim) { return Pattern(dim, {Rect::unit(dim)}); }

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return rects_.size(); }
  std::vector<Rect> const& rects() const noexcept { return rects_; }

  friend bool operator==(Pattern const&, Pattern const&) = default;

 private:
  struct Unchecked {};
  Pattern(Unchecked, int dim, std::vector<Rect> rects);
  friend Pattern common_refinement(Pattern const&, Pattern const&);

  int dim_;
  std::vector<Rect> rects_;
};

/// Binary split tree; an internal node halves its rectangle in coordinate `split`.
struct SplitTree {
  int split = 0;  // 0 for a leaf
  std::unique_ptr<SplitTree> low;
  std::unique_ptr<SplitTree> high;

  static SplitTree leaf() { return {}; }
  static SplitTree node(int d, SplitTree lo, SplitTree hi);
  bool is_leaf() const noexcept { return split == 0; }
};

Pattern pattern_from_tree(SplitTree const& t, int dim);

Pattern common_refinement(Pattern const& p, Pattern const& q);

/// Corners of all pieces, deduplicated.
std::set<DyadicPoint> corners(Pattern const& p);

/// Pr_d(C_P) for d = 1..n (index d-1).
std::vector<std::set<Dyadic>> corner_projections(Pattern const& p);

/// Partition of I^n minus r into at most total_depth(r) rectangles, obtained by
/// peeling off the sibling of each successive prefix (coordinate 1 first).
/// Throws if r is I^n.
std::vector<Rect> complement_partition(Rect const& r);

/// Every rectangle of total depth 1..max_depth exactly once, ordered by
/// total depth, then by per-coordinate depth profile, then by words.
std::vector<Rect> enumerate_rects(int dim, int max_depth);

/// All rectangles of total depth exactly `depth`, same ordering.
std::vector<Rect> rects_of_depth(int dim, int depth);

}  // namespace nv
