#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nv/element.hpp"

namespace nv {

// Generators of nV. Base cases (index 0) as piece tables; index i >= 1 is
// the index-0 map conjugated into [0, 2^-i) x I^{n-1} and the identity elsewhere.
Element make_X(int d, int i, int dim);
Element make_C(int d, int i, int dim);
Element make_pi(int i, int dim);
Element make_pibar(int i, int dim);

enum class GenKind { X, C, Pi, PiBar };

struct GenSymbol {
  GenKind kind = GenKind::X;
  int d = 0;  // X: 1..n, C: 2..n, unused otherwise
  int i = 0;
  int exp = 1;

  friend bool operator==(GenSymbol const&, GenSymbol const&) = default;
};

using Word = std::vector<GenSymbol>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string const& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// word := term* ; term := sym ("^" int)? ;
/// sym  := "X[" d "," i "]" | "C[" d "," i "]" | "P[" i "]" | "Pb[" i "]"
/// Index ranges are checked by eval_word, not here.
Word parse_word(std::string_view text);
std::string format_word(Word const& w);
std::string format_symbol(GenSymbol const& s);

/// The generator named by s with exponent 1. Throws std::invalid_argument for bad indices.
Element generator(GenSymbol const& s, int dim);

/// Maps a symbol (exponent ignored) to its element; lets checks run against altered generators.
using GeneratorFn = std::function<Element(GenSymbol const&, int)>;

/// Product of the symbols, leftmost outermost: "a b" is a o b.
Element eval_word(Word const& w, int dim);
Element eval_word(Word const& w, int dim, GeneratorFn const& gen);
inline Element eval_word(std::string_view text, int dim) { return eval_word(parse_word(text), dim); }

inline GenSymbol X(int d, int i, int exp = 1) { return {GenKind::X, d, i, exp}; }
inline GenSymbol C(int d, int i, int exp = 1) { return {GenKind::C, d, i, exp}; }
inline GenSymbol Pi(int i, int exp = 1) { return {GenKind::Pi, 0, i, exp}; }
inline GenSymbol PiBar(int i, int exp = 1) { return {GenKind::PiBar, 0, i, exp}; }

Word inverse_word(Word const& w);
Word concat(std::initializer_list<Word> parts);

}  // namespace nv
