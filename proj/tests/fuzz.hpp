#pragma once

#include <cstdint>
#include <random>

#include "nv/element.hpp"
#include "nv/words.hpp"

namespace nvtest {

inline int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/// A symbol valid in dimension dim, index up to i_max, exponent in {-2,-1,1,2}.
inline nv::GenSymbol random_symbol(std::mt19937_64& rng, int dim, int i_max = 3) {
  static constexpr int exps[] = {-2, -1, 1, 2};
  int const exp = exps[rng() % 4];
  int const i = draw(rng, 0, i_max);
  int const kinds = dim >= 2 ? 4 : 3;
  switch (draw(rng, 0, kinds - 1)) {
    case 0: return nv::X(draw(rng, 1, dim), i, exp);
    case 1: return nv::Pi(i, exp);
    case 2: return nv::PiBar(i, exp);
    default: return nv::C(draw(rng, 2, dim), i, exp);
  }
}

inline nv::Word random_word(std::mt19937_64& rng, int dim, int max_len, int i_max = 3) {
  nv::Word w;
  int const len = draw(rng, 0, max_len);
  for (int k = 0; k < len; ++k) w.push_back(random_symbol(rng, dim, i_max));
  return w;
}

inline nv::Element random_element(std::mt19937_64& rng, int dim, int max_size) {
  return nv::random_element(dim, draw(rng, 1, max_size), rng());
}

/// Random point with coordinates k / 2^bits, all in [0,1).
inline nv::DyadicPoint random_point(std::mt19937_64& rng, int dim, unsigned bits = 12) {
  nv::DyadicPoint p;
  for (int d = 0; d < dim; ++d) p.push_back(nv::Dyadic::from_fraction(rng() % (1ULL << bits), bits));
  return p;
}

}  // namespace nvtest
