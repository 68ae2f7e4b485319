#include "nv/words.hpp"

#include <cctype>
#include <charconv>

namespace nv {

namespace {

Rect rect1(int dim, std::string_view w1) { return Rect::unit(dim).with_word(1, BinaryWord(w1)); }

Rect rect2(int dim, int d, std::string_view w1, std::string_view wd) {
  return rect1(dim, w1).with_word(d, BinaryWord(wd));
}

void check_dim(int dim) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
}

void check_index(int i) {
  if (i < 0) throw std::invalid_argument("generator index must be non-negative");
}

Element lift(Element const& base, int i) {
  if (i == 0) return base;
  return embed_into(base, rect1(base.dim(), std::string(static_cast<std::size_t>(i), '0')));
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w;
    skip_ws();
    while (pos_ < text_.size()) {
      w.push_back(term());
      skip_ws();
    }
    return w;
  }

 private:
  GenSymbol term() {
    GenSymbol s;
    std::size_t const start = pos_;
    if (accept("Pb[")) {
      s.kind = GenKind::PiBar;
      s.i = integer();
    } else if (accept("P[")) {
      s.kind = GenKind::Pi;
      s.i = integer();
    } else if (accept("X[") || accept("C[")) {
      s.kind = text_[start] == 'X' ? GenKind::X : GenKind::C;
      s.d = integer();
      expect(',');
      s.i = integer();
    } else {
      throw ParseError("expected generator X[d,i], C[d,i], P[i] or Pb[i]", pos_);
    }
    expect(']');
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      std::size_t const exp_pos = pos_;
      s.exp = integer();
      if (s.exp == 0) throw ParseError("exponent must be nonzero", exp_pos);
    }
    return s;
  }

  int integer() {
    skip_ws();
    std::size_t const start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    auto const* first = text_.data() + start + (start < text_.size() && text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_) throw ParseError("expected integer", start);
    skip_ws();
    return value;
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element make_X(int d, int i, int dim) {
  check_dim(dim);
  check_index(i);
  if (d < 1 || d > dim) throw std::invalid_argument("X[d,i] needs 1 <= d <= n");
  Element base;
  if (d == 1) {
    base = Element(dim, {{rect1(dim, "00"), rect1(dim, "0")},
                         {rect1(dim, "01"), rect1(dim, "10")},
                         {rect1(dim, "1"), rect1(dim, "11")}});
  } else {
    base = Element(dim, {{rect2(dim, d, "00", ""), rect2(dim, d, "0", "")},
                         {rect2(dim, d, "01", ""), rect2(dim, d, "1", "0")},
                         {rect2(dim, d, "1", ""), rect2(dim, d, "1", "1")}});
  }
  return lift(base, i);
}

Element make_C(int d, int i, int dim) {
  check_dim(dim);
  check_index(i);
  if (dim < 2 || d < 2 || d > dim) throw std::invalid_argument("C[d,i] needs n >= 2 and 2 <= d <= n");
  Element base(dim, {{rect2(dim, d, "0", ""), rect2(dim, d, "", "0")},
                     {rect2(dim, d, "1", ""), rect2(dim, d, "", "1")}});
  return lift(base, i);
}

Element make_pi(int i, int dim) {
  check_dim(dim);
  check_index(i);
  Element base(dim, {{rect1(dim, "00"), rect1(dim, "00")},
                     {rect1(dim, "01"), rect1(dim, "1")},
                     {rect1(dim, "1"), rect1(dim, "01")}});
  return lift(base, i);
}

Element make_pibar(int i, int dim) {
  check_dim(dim);
  check_index(i);
  Element base(dim, {{rect1(dim, "0"), rect1(dim, "1")}, {rect1(dim, "1"), rect1(dim, "0")}});
  return lift(base, i);
}

Element generator(GenSymbol const& s, int dim) {
  switch (s.kind) {
    case GenKind::X: return make_X(s.d, s.i, dim);
    case GenKind::C: return make_C(s.d, s.i, dim);
    case GenKind::Pi: return make_pi(s.i, dim);
    case GenKind::PiBar: return make_pibar(s.i, dim);
  }
  throw std::invalid_argument("unknown generator kind");
}

Element eval_word(Word const& w, int dim) { return eval_word(w, dim, generator); }

Element eval_word(Word const& w, int dim, GeneratorFn const& gen) {
  Element result = identity(dim);
  for (auto const& s : w) {
    if (s.exp == 0) throw std::invalid_argument("exponent must be nonzero");
    Element g = gen(s, dim);
    if (s.exp < 0) g = inverse(g);
    for (int k = 0; k < std::abs(s.exp); ++k) result = simplify(compose(result, g));
  }
  return result;
}

Word parse_word(std::string_view text) { return Parser(text).parse(); }

std::string format_symbol(GenSymbol const& s) {
  std::string out;
  switch (s.kind) {
    case GenKind::X: out = "X[" + std::to_string(s.d) + "," + std::to_string(s.i) + "]"; break;
    case GenKind::C: out = "C[" + std::to_string(s.d) + "," + std::to_string(s.i) + "]"; break;
    case GenKind::Pi: out = "P[" + std::to_string(s.i) + "]"; break;
    case GenKind::PiBar: out = "Pb[" + std::to_string(s.i) + "]"; break;
  }
  if (s.exp != 1) out += "^" + std::to_string(s.exp);
  return out;
}

std::string format_word(Word const& w) {
  std::string out;
  for (auto const& s : w) {
    if (!out.empty()) out += ' ';
    out += format_symbol(s);
  }
  return out;
}

Word inverse_word(Word const& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& s : out) s.exp = -s.exp;
  return out;
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (auto const& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace nv
