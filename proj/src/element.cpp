#include "nv/element.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace nv {

namespace {

// Lookup of pieces whose chosen side (domain or range) meets a query rect.
// Pieces are keyed by their coordinate-1 word; comparable words are the
// prefixes of the query word plus everything extending it.
class PieceIndex {
 public:
  enum class Side { domain, range };

  PieceIndex(std::span<AffinePiece const> pieces, Side side) : pieces_(pieces), side_(side) {
    keys_.reserve(pieces.size());
    for (std::size_t i = 0; i < pieces.size(); ++i) keys_.emplace_back(rect_of(i).word(1).str(), i);
    std::sort(keys_.begin(), keys_.end());
  }

  template <typename Fn>
  void for_each_meeting(Rect const& q, Fn&& fn) const {
    auto const& w = q.word(1).str();
    auto visit = [&](auto first, auto last) {
      for (auto it = first; it != last; ++it) {
        if (interiors_meet(rect_of(it->second), q)) fn(pieces_[it->second]);
      }
    };
    for (std::size_t len = 0; len < w.size(); ++len) {
      auto const key = w.substr(0, len);
      auto lo = std::lower_bound(keys_.begin(), keys_.end(), std::make_pair(key, std::size_t{0}));
      auto hi = lo;
      while (hi != keys_.end() && hi->first == key) ++hi;
      visit(lo, hi);
    }
    // w itself and all of its extensions; '2' sorts after '0' and '1'
    auto lo = std::lower_bound(keys_.begin(), keys_.end(), std::make_pair(w, std::size_t{0}));
    auto hi = std::lower_bound(lo, keys_.end(), std::make_pair(w + '2', std::size_t{0}));
    visit(lo, hi);
  }

 private:
  Rect const& rect_of(std::size_t i) const {
    return side_ == Side::domain ? pieces_[i].dom : pieces_[i].ran;
  }

  std::span<AffinePiece const> pieces_;
  Side side_;
  std::vector<std::pair<std::string, std::size_t>> keys_;
};

std::vector<AffinePiece> compose_with_index(PieceIndex const& outer_index,
                                            std::span<AffinePiece const> inner) {
  std::vector<AffinePiece> out;
  out.reserve(inner.size());
  for (auto const& p : inner) {
    outer_index.for_each_meeting(p.ran, [&](AffinePiece const& q) {
      Rect const mid = intersection(p.ran, q.dom);
      out.push_back({p.pull(mid), q.push(mid)});
    });
  }
  return out;
}

// Replaces prefix `from` of `w` by `to`; requires from to be a prefix of w.
BinaryWord substitute(BinaryWord const& w, BinaryWord const& from, BinaryWord const& to) {
  return to + w.suffix_from(from.size());
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<Rect> random_tree_leaves(int dim, int size, std::mt19937_64& rng) {
  std::vector<Rect> leaves{Rect::unit(dim)};
  for (int step = 1; step < size; ++step) {
    auto const at = static_cast<std::size_t>(draw(rng, leaves.size()));
    int const d = 1 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(dim)));
    auto [lo, hi] = halve(leaves[at], d);
    leaves[at] = std::move(lo);
    leaves.push_back(std::move(hi));
  }
  return leaves;
}

}  // namespace

// ---------------------------------------------------------------------------
// AffinePiece

Rect AffinePiece::push(Rect const& sub) const {
  std::vector<BinaryWord> words;
  words.reserve(static_cast<std::size_t>(dim()));
  for (int d = 1; d <= dim(); ++d) words.push_back(substitute(sub.word(d), dom.word(d), ran.word(d)));
  return Rect(std::move(words));
}

Rect AffinePiece::pull(Rect const& sub) const {
  std::vector<BinaryWord> words;
  words.reserve(static_cast<std::size_t>(dim()));
  for (int d = 1; d <= dim(); ++d) words.push_back(substitute(sub.word(d), ran.word(d), dom.word(d)));
  return Rect(std::move(words));
}

DyadicPoint AffinePiece::apply(DyadicPoint const& p) const {
  DyadicPoint out;
  out.reserve(p.size());
  for (int d = 1; d <= dim(); ++d) {
    auto const& bits = p[static_cast<std::size_t>(d - 1)].bits();
    auto const skip = dom.word(d).size();
    std::string tail = bits.size() > skip ? bits.substr(skip) : std::string{};
    out.push_back(Dyadic::from_bits(ran.word(d).str() + tail));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(int dim, std::vector<AffinePiece> pieces) : dim_(dim), pieces_(std::move(pieces)) {
  for (auto const& p : pieces_) {
    check_same_dim(dim_, p.dom.dim());
    check_same_dim(dim_, p.ran.dim());
  }
  std::sort(pieces_.begin(), pieces_.end());
}

Element Element::checked(int dim, std::vector<AffinePiece> pieces) {
  Element e(dim, std::move(pieces));
  if (!validate(e)) throw std::invalid_argument("pieces do not form a pattern pair");
  return e;
}

std::vector<Rect> Element::domain_rects() const {
  std::vector<Rect> out;
  out.reserve(pieces_.size());
  for (auto const& p : pieces_) out.push_back(p.dom);
  return out;
}

std::vector<Rect> Element::range_rects() const {
  std::vector<Rect> out;
  out.reserve(pieces_.size());
  for (auto const& p : pieces_) out.push_back(p.ran);
  return out;
}

std::size_t Element::max_word_depth() const noexcept {
  std::size_t depth = 0;
  for (auto const& p : pieces_) {
    for (auto const* r : {&p.dom, &p.ran}) {
      for (auto const& w : r->words()) depth = std::max(depth, w.size());
    }
  }
  return depth;
}

Element identity(int dim) { return Element(dim, {{Rect::unit(dim), Rect::unit(dim)}}); }

bool validate(Element const& e) {
  if (e.dim() < 1) return false;
  auto const doms = e.domain_rects();
  auto const rans = e.range_rects();
  return is_partition(doms) && is_partition(rans);
}

Element compose(Element const& g, Element const& h) {
  check_same_dim(g.dim(), h.dim());
  PieceIndex const index(g.pieces(), PieceIndex::Side::domain);
  return Element(g.dim(), compose_with_index(index, h.pieces()));
}

std::vector<AffinePiece> compose_pieces(Element const& outer, std::span<AffinePiece const> inner) {
  PieceIndex const index(outer.pieces(), PieceIndex::Side::domain);
  auto out = compose_with_index(index, inner);
  std::sort(out.begin(), out.end());
  return out;
}

Element inverse(Element const& g) {
  std::vector<AffinePiece> pieces;
  pieces.reserve(g.size());
  for (auto const& p : g.pieces()) pieces.push_back(p.inverted());
  return Element(g.dim(), std::move(pieces));
}

DyadicPoint apply(Element const& g, DyadicPoint const& p) {
  check_same_dim(g.dim(), static_cast<int>(p.size()));
  for (auto const& piece : g.pieces()) {
    if (contains(piece.dom, p)) return piece.apply(p);
  }
  throw std::invalid_argument("point " + to_string(p) + " is not in I^n");
}

bool is_identity(Element const& g) {
  return std::all_of(g.pieces().begin(), g.pieces().end(),
                     [](AffinePiece const& p) { return p.is_trivial(); });
}

bool equals(Element const& g, Element const& h) {
  check_same_dim(g.dim(), h.dim());
  return is_identity(compose(g, inverse(h)));
}

std::optional<AffinePiece> affine_extension(std::span<AffinePiece const> pieces, Rect const& r) {
  std::optional<AffinePiece> ext;
  for (auto const& p : pieces) {
    if (!interiors_meet(p.dom, r)) continue;
    if (!ext) {
      std::vector<BinaryWord> image;
      image.reserve(static_cast<std::size_t>(r.dim()));
      for (int d = 1; d <= r.dim(); ++d) {
        auto const& dw = p.dom.word(d);
        auto const& rw = r.word(d);
        auto const& pw = p.ran.word(d);
        if (dw.is_prefix_of(rw)) {
          image.push_back(substitute(rw, dw, pw));
          continue;
        }
        // r is wider than the piece in this coordinate: the piece's extra
        // domain bits must reappear at the end of its range word
        auto const extra = dw.suffix_from(rw.size());
        if (pw.size() < extra.size() || pw.suffix_from(pw.size() - extra.size()) != extra) {
          return std::nullopt;
        }
        image.push_back(pw.prefix(pw.size() - extra.size()));
      }
      ext = AffinePiece{r, Rect(std::move(image))};
    }
    Rect const common = intersection(p.dom, r);
    if (p.push(common) != ext->push(common)) return std::nullopt;
  }
  return ext;
}

std::optional<AffinePiece> is_affine_on(Element const& g, Rect const& r) {
  check_same_dim(g.dim(), r.dim());
  return affine_extension(g.pieces(), r);
}

bool is_identity_on(Element const& g, Rect const& r) {
  auto const piece = is_affine_on(g, r);
  return piece && piece->is_trivial();
}

std::vector<AffinePiece> restrict_pieces(std::span<AffinePiece const> pieces, Rect const& r) {
  std::vector<AffinePiece> out;
  for (auto const& p : pieces) {
    if (interiors_meet(p.dom, r)) out.push_back(p.restricted(intersection(p.dom, r)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffinePiece> merge_siblings(std::vector<AffinePiece> pieces) {
  if (pieces.empty()) return pieces;
  int const dim = pieces.front().dim();
  std::vector<std::optional<AffinePiece>> pool(pieces.begin(), pieces.end());
  std::unordered_map<Rect, std::size_t, RectHash> by_dom;
  for (std::size_t i = 0; i < pool.size(); ++i) by_dom.emplace(pool[i]->dom, i);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!pool[i]) continue;
      for (int d = 1; d <= dim && pool[i]; ++d) {
        auto const& p = *pool[i];
        auto const& dw = p.dom.word(d);
        auto const& rw = p.ran.word(d);
        if (dw.empty() || dw[dw.size() - 1] != '0') continue;
        if (rw.empty() || rw[rw.size() - 1] != '0') continue;
        auto const sib = by_dom.find(p.dom.with_word(d, dw.parent().extended('1')));
        if (sib == by_dom.end()) continue;
        auto const& q = *pool[sib->second];
        if (q.ran != p.ran.with_word(d, rw.parent().extended('1'))) continue;

        AffinePiece merged{p.dom.with_word(d, dw.parent()), p.ran.with_word(d, rw.parent())};
        auto const j = sib->second;
        by_dom.erase(sib);
        by_dom.erase(p.dom);
        pool[j].reset();
        pool[i].reset();
        by_dom.emplace(merged.dom, pool.size());
        pool.emplace_back(std::move(merged));
        changed = true;
      }
    }
  }
  std::vector<AffinePiece> out;
  for (auto& p : pool) {
    if (p) out.push_back(std::move(*p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Element simplify(Element const& g) { return Element(g.dim(), merge_siblings(g.pieces())); }

std::vector<Rect> support(Element const& g) {
  std::vector<Rect> out;
  Element const s = simplify(g);
  for (auto const& p : s.pieces()) {
    if (!p.is_trivial()) out.push_back(p.dom);
  }
  return out;
}

Element expansion(Element const& g, std::size_t piece_index, int d) {
  if (piece_index >= g.size()) {
    throw std::out_of_range("piece index " + std::to_string(piece_index) + " out of range");
  }
  if (d < 1 || d > g.dim()) throw std::out_of_range("coordinate " + std::to_string(d) + " out of range");
  std::vector<AffinePiece> pieces = g.pieces();
  auto const p = pieces[piece_index];
  pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(piece_index));
  pieces.push_back({p.dom.extended(d, '0'), p.ran.extended(d, '0')});
  pieces.push_back({p.dom.extended(d, '1'), p.ran.extended(d, '1')});
  return Element(g.dim(), std::move(pieces));
}

Element random_element(int dim, int size, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (size < 1) throw std::invalid_argument("size must be at least 1");
  std::mt19937_64 rng(seed);
  auto doms = random_tree_leaves(dim, size, rng);
  auto rans = random_tree_leaves(dim, size, rng);
  for (std::size_t i = rans.size(); i > 1; --i) {
    std::swap(rans[i - 1], rans[static_cast<std::size_t>(draw(rng, i))]);
  }
  std::vector<AffinePiece> pieces;
  pieces.reserve(doms.size());
  for (std::size_t i = 0; i < doms.size(); ++i) pieces.push_back({doms[i], rans[i]});
  return Element(dim, std::move(pieces));
}

Element embed_into(Element const& g, Rect const& r) {
  check_same_dim(g.dim(), r.dim());
  auto const to_r = [&](Rect const& x) {
    std::vector<BinaryWord> words;
    words.reserve(static_cast<std::size_t>(r.dim()));
    for (int d = 1; d <= r.dim(); ++d) words.push_back(r.word(d) + x.word(d));
    return Rect(std::move(words));
  };
  std::vector<AffinePiece> pieces;
  for (auto const& p : g.pieces()) pieces.push_back({to_r(p.dom), to_r(p.ran)});
  if (!r.is_unit()) {
    for (auto const& c : complement_partition(r)) pieces.push_back({c, c});
  }
  return Element(g.dim(), std::move(pieces));
}

}  // namespace nv
