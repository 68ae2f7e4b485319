#include "nv/dyadic.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace nv {

namespace {

void strip_trailing_zeros(std::string& bits) {
  while (!bits.empty() && bits.back() == '0') bits.pop_back();
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  std::uint64_t v = 0;
  auto const* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// BinaryWord

BinaryWord::BinaryWord(std::string_view bits) : bits_(bits) {
  if (std::any_of(bits_.begin(), bits_.end(), [](char c) { return c != '0' && c != '1'; })) {
    throw std::invalid_argument("binary word may only contain '0' and '1': '" + bits_ + "'");
  }
}

BinaryWord BinaryWord::extended(char bit) const {
  if (bit != '0' && bit != '1') throw std::invalid_argument("bit must be '0' or '1'");
  return BinaryWord::raw(bits_ + bit);
}

bool BinaryWord::is_prefix_of(BinaryWord const& other) const noexcept {
  return bits_.size() <= other.bits_.size() &&
         std::equal(bits_.begin(), bits_.end(), other.bits_.begin());
}

// ---------------------------------------------------------------------------
// Dyadic

Dyadic Dyadic::one() {
  Dyadic d;
  d.one_ = true;
  return d;
}

Dyadic Dyadic::from_bits(std::string_view bits) {
  Dyadic d;
  d.bits_ = BinaryWord(bits).str();
  strip_trailing_zeros(d.bits_);
  return d;
}

Dyadic Dyadic::from_fraction(std::uint64_t num, unsigned exp) {
  if (exp > 63) throw std::out_of_range("dyadic denominator exceeds 2^63");
  std::uint64_t const den = std::uint64_t{1} << exp;
  if (num > den) throw std::out_of_range("dyadic value exceeds 1");
  if (num == den) return one();
  Dyadic d;
  d.bits_.resize(exp);
  for (unsigned i = 0; i < exp; ++i) d.bits_[i] = ((num >> (exp - 1 - i)) & 1U) ? '1' : '0';
  strip_trailing_zeros(d.bits_);
  return d;
}

Dyadic Dyadic::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.starts_with("b:")) return from_bits(text.substr(2));
  auto const slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto const v = parse_u64(text, "dyadic");
    if (v > 1) throw std::invalid_argument("dyadic must lie in [0,1]: '" + std::string(text) + "'");
    return v == 1 ? one() : Dyadic{};
  }
  auto const num = parse_u64(text.substr(0, slash), "numerator");
  auto const den = parse_u64(text.substr(slash + 1), "denominator");
  if (den == 0 || (den & (den - 1)) != 0) {
    throw std::invalid_argument("denominator must be a power of two: '" + std::string(text) + "'");
  }
  unsigned exp = 0;
  while ((std::uint64_t{1} << exp) != den) ++exp;
  return from_fraction(num, exp);
}

Dyadic Dyadic::lower(BinaryWord const& w) { return from_bits(w.str()); }

Dyadic Dyadic::upper(BinaryWord const& w) {
  std::string bits = w.str();
  auto const last_zero = bits.find_last_of('0');
  if (last_zero == std::string::npos) return one();
  bits.resize(last_zero + 1);
  bits[last_zero] = '1';
  Dyadic d;
  d.bits_ = std::move(bits);
  return d;
}

std::string Dyadic::to_string() const {
  if (one_) return "1";
  if (bits_.empty()) return "0";
  if (bits_.size() > 63) return "b:" + bits_;
  std::uint64_t num = 0;
  for (char c : bits_) num = (num << 1) | (c == '1' ? 1U : 0U);
  return std::to_string(num) + "/" + std::to_string(std::uint64_t{1} << bits_.size());
}

double Dyadic::to_double() const {
  if (one_) return 1.0;
  double v = 0.0;
  double scale = 0.5;
  for (char c : bits_) {
    if (c == '1') v += scale;
    scale *= 0.5;
  }
  return v;
}

std::strong_ordering operator<=>(Dyadic const& a, Dyadic const& b) {
  if (a.one_ || b.one_) return a.one_ <=> b.one_;
  auto const n = std::max(a.bits_.size(), b.bits_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.bit(i) <=> b.bit(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string to_string(DyadicPoint const& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += p[i].to_string();
  }
  return out + ")";
}

DyadicPoint parse_point(std::string_view text) {
  DyadicPoint p;
  while (true) {
    auto const comma = text.find(',');
    p.push_back(Dyadic::parse(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Rect

Rect::Rect(std::vector<BinaryWord> words) : words_(std::move(words)) {
  if (words_.empty()) throw std::invalid_argument("rectangle dimension must be positive");
}

Rect Rect::unit(int dim) {
  if (dim < 1) throw std::invalid_argument("rectangle dimension must be positive");
  return Rect(std::vector<BinaryWord>(static_cast<std::size_t>(dim)));
}

Rect Rect::parse(std::span<std::string const> words) {
  std::vector<BinaryWord> ws;
  ws.reserve(words.size());
  for (auto const& w : words) ws.emplace_back(w);
  return Rect(std::move(ws));
}

std::size_t Rect::total_depth() const noexcept {
  std::size_t depth = 0;
  for (auto const& w : words_) depth += w.size();
  return depth;
}

Rect Rect::with_word(int d, BinaryWord w) const {
  if (d < 1 || d > dim()) {
    throw std::out_of_range("coordinate " + std::to_string(d) + " out of range 1.." +
                            std::to_string(dim()));
  }
  Rect r = *this;
  r.words_[static_cast<std::size_t>(d - 1)] = std::move(w);
  return r;
}

std::string Rect::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (i) out += ",";
    out += words_[i].empty() ? "e" : words_[i].str();
  }
  return out + ")";
}

Rect rect_Il(int dim) { return Rect::unit(dim).extended(1, '0'); }
Rect rect_Ir(int dim) { return Rect::unit(dim).extended(1, '1'); }

std::pair<Rect, Rect> halve(Rect const& r, int d) {
  return {r.extended(d, '0'), r.extended(d, '1')};
}

std::string_view to_string(RectRelation rel) {
  switch (rel) {
    case RectRelation::disjoint: return "disjoint";
    case RectRelation::a_contains_b: return "a_contains_b";
    case RectRelation::b_contains_a: return "b_contains_a";
    case RectRelation::equal: return "equal";
    case RectRelation::partial_overlap: return "partial_overlap";
  }
  return "?";
}

void check_same_dim(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " +
                                std::to_string(b));
  }
}

RectRelation rect_relation(Rect const& a, Rect const& b) {
  check_same_dim(a.dim(), b.dim());
  bool a_wider = false;
  bool b_wider = false;
  for (int d = 1; d <= a.dim(); ++d) {
    auto const& wa = a.word(d);
    auto const& wb = b.word(d);
    if (wa.size() == wb.size()) {
      if (wa != wb) return RectRelation::disjoint;
    } else if (wa.size() < wb.size()) {
      if (!wa.is_prefix_of(wb)) return RectRelation::disjoint;
      a_wider = true;
    } else {
      if (!wb.is_prefix_of(wa)) return RectRelation::disjoint;
      b_wider = true;
    }
  }
  if (a_wider && b_wider) return RectRelation::partial_overlap;
  if (a_wider) return RectRelation::a_contains_b;
  if (b_wider) return RectRelation::b_contains_a;
  return RectRelation::equal;
}

bool interiors_meet(Rect const& a, Rect const& b) {
  check_same_dim(a.dim(), b.dim());
  for (int d = 1; d <= a.dim(); ++d) {
    if (!a.word(d).comparable(b.word(d))) return false;
  }
  return true;
}

bool contains(Rect const& outer, Rect const& inner) {
  check_same_dim(outer.dim(), inner.dim());
  for (int d = 1; d <= outer.dim(); ++d) {
    if (!outer.word(d).is_prefix_of(inner.word(d))) return false;
  }
  return true;
}

Rect intersection(Rect const& a, Rect const& b) {
  std::vector<BinaryWord> words;
  words.reserve(a.words().size());
  for (int d = 1; d <= a.dim(); ++d) {
    auto const& wa = a.word(d);
    auto const& wb = b.word(d);
    words.push_back(wa.size() >= wb.size() ? wa : wb);
  }
  return Rect(std::move(words));
}

bool contains(Rect const& r, DyadicPoint const& p) {
  check_same_dim(r.dim(), static_cast<int>(p.size()));
  for (int d = 1; d <= r.dim(); ++d) {
    auto const& x = p[static_cast<std::size_t>(d - 1)];
    if (x.is_one()) return false;
    auto const& w = r.word(d);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (x.bit(i) != w[i]) return false;
    }
  }
  return true;
}

Dyadic rect_lower(Rect const& r, int d) { return Dyadic::lower(r.word(d)); }
Dyadic rect_upper(Rect const& r, int d) { return Dyadic::upper(r.word(d)); }

std::vector<DyadicPoint> corners(Rect const& r) {
  auto const n = static_cast<std::size_t>(r.dim());
  std::vector<DyadicPoint> out;
  out.reserve(std::size_t{1} << n);
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    DyadicPoint p(n);
    for (std::size_t i = 0; i < n; ++i) {
      int const d = static_cast<int>(i) + 1;
      p[i] = (mask >> i) & 1U ? rect_upper(r, d) : rect_lower(r, d);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::size_t RectHash::operator()(Rect const& r) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto const& w : r.words()) {
    h ^= std::hash<std::string>{}(w.str()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace nv
