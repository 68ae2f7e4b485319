#include "nv/pattern.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nv {

namespace {

// Sum of 2^-depth over the rectangles equals 1, decided by carrying counts
// from the deepest level upward.
bool volumes_sum_to_one(std::span<Rect const> rects) {
  std::map<std::size_t, std::size_t> per_depth;
  for (auto const& r : rects) ++per_depth[r.total_depth()];
  if (per_depth.empty()) return false;
  std::size_t carry = 0;
  for (std::size_t depth = per_depth.rbegin()->first; depth > 0; --depth) {
    std::size_t count = carry;
    if (auto it = per_depth.find(depth); it != per_depth.end()) count += it->second;
    if (count % 2 != 0) return false;
    carry = count / 2;
  }
  std::size_t top = carry;
  if (auto it = per_depth.find(0); it != per_depth.end()) top += it->second;
  return top == 1;
}

void leaves(SplitTree const& t, Rect const& r, std::vector<Rect>& out) {
  if (t.is_leaf()) {
    out.push_back(r);
    return;
  }
  if (!t.low || !t.high) throw std::invalid_argument("split node needs two children");
  auto [lo, hi] = halve(r, t.split);
  leaves(*t.low, lo, out);
  leaves(*t.high, hi, out);
}

void all_words(int len, std::vector<BinaryWord>& out) {
  out.clear();
  std::size_t const count = std::size_t{1} << len;
  out.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    std::string bits(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i) {
      if ((v >> (len - 1 - i)) & 1U) bits[static_cast<std::size_t>(i)] = '1';
    }
    out.emplace_back(bits);
  }
}

// Compositions of `total` into `parts` non-negative parts, lexicographic
// with the first coordinate deepest first.
void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    compositions(total - k, parts - 1, cur, out);
    cur.pop_back();
  }
}

bool advance(std::vector<std::size_t>& idx, std::vector<int> const& profile,
             std::vector<std::vector<BinaryWord>> const& words_by_len) {
  for (std::size_t c = idx.size(); c-- > 0;) {
    if (++idx[c] < words_by_len[static_cast<std::size_t>(profile[c])].size()) return true;
    idx[c] = 0;
  }
  return false;
}

}  // namespace

bool is_partition(std::span<Rect const> rects) {
  if (rects.empty()) return false;
  int const dim = rects.front().dim();
  for (auto const& r : rects) {
    if (r.dim() != dim) return false;
  }
  if (!volumes_sum_to_one(rects)) return false;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    for (std::size_t j = i + 1; j < rects.size(); ++j) {
      if (interiors_meet(rects[i], rects[j])) return false;
    }
  }
  return true;
}

Pattern::Pattern(int dim, std::vector<Rect> rects) : dim_(dim), rects_(std::move(rects)) {
  for (auto const& r : rects_) check_same_dim(dim_, r.dim());
  if (!is_partition(rects_)) throw std::invalid_argument("rectangles do not partition I^n");
  std::sort(rects_.begin(), rects_.end());
}

Pattern::Pattern(Unchecked, int dim, std::vector<Rect> rects) : dim_(dim), rects_(std::move(rects)) {
  std::sort(rects_.begin(), rects_.end());
}

SplitTree SplitTree::node(int d, SplitTree lo, SplitTree hi) {
  SplitTree t;
  t.split = d;
  t.low = std::make_unique<SplitTree>(std::move(lo));
  t.high = std::make_unique<SplitTree>(std::move(hi));
  return t;
}

Pattern pattern_from_tree(SplitTree const& t, int dim) {
  std::vector<Rect> out;
  leaves(t, Rect::unit(dim), out);
  return Pattern(dim, std::move(out));
}

Pattern common_refinement(Pattern const& p, Pattern const& q) {
  check_same_dim(p.dim(), q.dim());
  std::vector<Rect> out;
  for (auto const& a : p.rects()) {
    for (auto const& b : q.rects()) {
      if (interiors_meet(a, b)) out.push_back(intersection(a, b));
    }
  }
  return Pattern(Pattern::Unchecked{}, p.dim(), std::move(out));
}

std::set<DyadicPoint> corners(Pattern const& p) {
  std::set<DyadicPoint> out;
  for (auto const& r : p.rects()) {
    for (auto& c : corners(r)) out.insert(std::move(c));
  }
  return out;
}

std::vector<std::set<Dyadic>> corner_projections(Pattern const& p) {
  std::vector<std::set<Dyadic>> out(static_cast<std::size_t>(p.dim()));
  for (auto const& r : p.rects()) {
    for (int d = 1; d <= p.dim(); ++d) {
      out[static_cast<std::size_t>(d - 1)].insert(rect_lower(r, d));
      out[static_cast<std::size_t>(d - 1)].insert(rect_upper(r, d));
    }
  }
  return out;
}

std::vector<Rect> complement_partition(Rect const& r) {
  if (r.is_unit()) throw std::invalid_argument("I^n has empty complement");
  std::vector<Rect> out;
  Rect prefix = Rect::unit(r.dim());
  for (int d = 1; d <= r.dim(); ++d) {
    auto const& w = r.word(d);
    for (std::size_t i = 0; i < w.size(); ++i) {
      char const other = w[i] == '0' ? '1' : '0';
      out.push_back(prefix.extended(d, other));
      prefix = prefix.extended(d, w[i]);
    }
  }
  return out;
}

std::vector<Rect> rects_of_depth(int dim, int depth) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<Rect> out;
  std::vector<std::vector<int>> profiles;
  std::vector<int> cur;
  compositions(depth, dim, cur, profiles);
  std::vector<std::vector<BinaryWord>> words_by_len(static_cast<std::size_t>(depth) + 1);
  for (int len = 0; len <= depth; ++len) all_words(len, words_by_len[static_cast<std::size_t>(len)]);

  for (auto const& profile : profiles) {
    // odometer over the word choices of each coordinate
    std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
    while (true) {
      std::vector<BinaryWord> ws;
      ws.reserve(static_cast<std::size_t>(dim));
      for (std::size_t c = 0; c < idx.size(); ++c) {
        ws.push_back(words_by_len[static_cast<std::size_t>(profile[c])][idx[c]]);
      }
      out.emplace_back(std::move(ws));
      if (!advance(idx, profile, words_by_len)) break;
    }
  }
  return out;
}

std::vector<Rect> enumerate_rects(int dim, int max_depth) {
  if (max_depth < 0) throw std::invalid_argument("depth must be non-negative");
  std::vector<Rect> out;
  for (int k = 1; k <= max_depth; ++k) {
    auto layer = rects_of_depth(dim, k);
    out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
  }
  return out;
}

}  // namespace nv
