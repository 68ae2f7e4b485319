#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nv/element.hpp"
#include "nv/words.hpp"

namespace nv {

// H is the subgroup of elements fixing I_l pointwise. A left coset kH is
// determined by k restricted to I_l, and kH lies in X exactly when that
// restriction is one affine piece; X is then parameterised by k(I_l).

bool in_H(Element const& h);

struct CosetRep {
  int dim = 0;
  std::vector<AffinePiece> restriction;  // domains partition I_l

  friend bool operator==(CosetRep const&, CosetRep const&) = default;
};

CosetRep coset_of(Element const& k);
/// Same map on I_l, compared piecewise on the common refinement.
bool coset_eq(CosetRep const& a, CosetRep const& b);
/// The coset g.kH = (g o k)H.
CosetRep translate(Element const& g, CosetRep const& c);

/// k(I_l) when kH is in X.
std::optional<Rect> in_X(CosetRep const& c);

/// A k in nV, affine on I_l with k(I_l) = r. Throws for r = I^n.
Element rect_to_coset(Rect const& r);

/// Membership of c in gX, i.e. g^-1.c in X.
bool in_gX(Element const& g, CosetRep const& c);

enum class Verdict { stable, growing };
enum class Enumeration { pruned, exhaustive };

std::string_view to_string(Verdict v);

/// |X - gX| and |gX - X| restricted to rectangles of total depth <= depth.
///
/// out_side lists r = k(I_l) for cosets of X outside gX (g^-1 not affine on r);
/// in_side lists r for the cosets g.kH outside X (g not affine on r).
/// Counts are cumulative per depth. Failing rectangles are closed under
/// taking ancestors, so a depth with no new failure certifies that the
/// counts never change again; that is the only way to reach `stable`.
struct TruncatedCocycle {
  int dim = 0;
  int depth = 0;
  std::vector<Rect> out_side;
  std::vector<Rect> in_side;
  std::vector<std::size_t> out_counts;  // index k-1 holds the count up to depth k
  std::vector<std::size_t> in_counts;
  Verdict verdict = Verdict::growing;
  int stable_from = 0;   // least d with constant totals on [d, depth]; 0 if growing
  int certified_at = 0;  // first depth without new failures; 0 if none

  std::size_t total() const noexcept { return out_side.size() + in_side.size(); }
  std::size_t total_at(int k) const { return out_counts.at(k - 1) + in_counts.at(k - 1); }
  double norm() const;  // sqrt(total())
};

TruncatedCocycle sym_diff_truncated(Element const& g, int depth, Enumeration how = Enumeration::pruned);

/// pi_g(c) = chi_gX(c) - chi_X(c), in {-1, 0, 1}.
int cocycle_value(Element const& g, CosetRep const& c);

struct CocycleIdentityReport {
  std::size_t cosets_checked = 0;
  std::size_t failures = 0;
  std::array<std::size_t, 3> gh_values{};  // counts of pi_gh = -1, 0, +1
  std::vector<std::string> failing;        // first few offending cosets
  bool all_pass() const noexcept { return failures == 0; }
};

/// Checks pi_gh(c) = pi_g(c) + pi_h(g^-1 c) over the cosets of all rectangles up
/// to `depth` together with their g- and gh-translates.
CocycleIdentityReport cocycle_identity_check(Element const& g, Element const& h, int depth);

/// Which cosets of X count as lying outside X_P.
enum class XpPredicate {
  single_piece,      // k(I_l) not inside a single piece of P
  corner_closed,     // some corner of P in cl(k(I_l))
  corner_half_open,  // some corner of P in k(I_l)
  corner_interior,   // some corner of P in the open interior of k(I_l)
};

std::string_view to_string(XpPredicate p);
std::optional<XpPredicate> parse_xp_predicate(std::string_view s);

/// alpha_1 = (1/4, 0, ..., 0) and alpha_i = 1/2 e_i for i >= 2.
std::vector<DyadicPoint> alpha_points(int dim);

bool outside_Xp(Rect const& r, Pattern const& p, std::vector<DyadicPoint> const& corner_points, XpPredicate pred);

struct FpViolation {
  Rect rect;
  int alpha = 0;       // 1-based
  int coordinate = 0;  // 1-based
  DyadicPoint image;

  friend auto operator<=>(FpViolation const&, FpViolation const&) = default;
};

struct FpProbeReport {
  XpPredicate predicate = XpPredicate::single_piece;
  int depth = 0;
  std::size_t pattern_size = 0;
  std::vector<Rect> members;  // truncated X - X_P
  std::vector<FpViolation> violations;
  std::vector<std::pair<Rect, Rect>> collisions;  // equal f_P values
  std::map<XpPredicate, std::size_t> member_counts;

  bool injective() const noexcept { return collisions.empty(); }
};

/// f_P(kH) = (k(alpha_1), ..., k(alpha_n)) over the truncated X - X_P, with P
/// the domain pattern of g as given. Violations are data, not errors.
FpProbeReport f_P_probe(Element const& g, int depth, XpPredicate pred = XpPredicate::single_piece);

struct PropernessEntry {
  std::string word;  // over the letters of S
  std::size_t pieces = 0;
  std::size_t sym_diff = 0;
  Verdict verdict = Verdict::growing;
  double bound = 0.0;  // (|X delta gX| + 4)^n
  bool pass = false;
};

struct PropernessReport {
  int dim = 0;
  int radius = 0;
  int depth = 0;
  std::vector<PropernessEntry> stable;
  std::vector<PropernessEntry> growing;
  std::size_t failures() const;
};

/// Walks the ball of the given radius over S and S^-1 (duplicates removed by
/// simplified piece table) and checks the piece-count bound on STABLE elements.
PropernessReport properness_bound_check(int dim, int radius, int depth);

struct NormalizerReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  std::vector<std::string> failing;
};

/// Random hbar fixing I_r and h in H: they commute and hbar^-1 h hbar stays in H.
NormalizerReport normalizer_commutation_check(int dim, int samples, std::uint64_t seed);

/// An element of H: a random element embedded into I_r.
Element random_H_element(int dim, int size, std::uint64_t seed);
/// An element fixing I_r: a random element embedded into I_l.
Element random_Hbar_element(int dim, int size, std::uint64_t seed);

}  // namespace nv
