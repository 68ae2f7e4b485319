#pragma once

#include <string>
#include <vector>

#include "nv/words.hpp"

namespace nv {

/// One checked identity. `lhs`/`rhs` are words in the generator language, or
/// for checks that are not equations, a description of the tested property.
struct CheckInstance {
  std::string family;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool informational = false;  // reported, never counted as a failure
};

struct CheckReport {
  std::string name;
  int dim = 0;
  std::vector<CheckInstance> instances;
  std::vector<std::string> notes;

  std::size_t failures() const;
  std::size_t counted() const;
  bool all_pass() const { return failures() == 0; }
};

/// Every admissible instance, indices up to i_max, of the ten relation
/// families of the finite presentation of nV, checked by exact equality.
CheckReport relation_suite(int dim, int i_max, GeneratorFn const& gen = generator);

/// Conjugation identities expressing X_{d,i}, pi_i, pibar_i and C_{d',i} through
/// the index-0/1/2/3 generators, and pibar_0, C_{d',0} as words in the generating set S.
CheckReport corollary_checks(int dim, int i_max);

/// Identity-on-rectangle and commutation premises of the fixed-point argument.
CheckReport premise_checks(int dim);

/// A named member of the finite generating set S, given by a word.
struct SLetter {
  std::string name;
  Word word;
};

/// S = {X_{d,1}, X_{d,1} X_{d,0}^-1, C_{d',2}, pi_0, pi_3, pibar_3}.
std::vector<SLetter> generating_set_S(int dim);

}  // namespace nv
