#include <doctest.h>

#include "printers.hpp"

#include <random>
#include <set>

#include "fuzz.hpp"
#include "nv/cocycle.hpp"
#include "oracles.hpp"

using namespace nv;

namespace {

Rect R(std::vector<std::string> const& words) { return Rect::parse(words); }

std::set<std::string> keys(std::vector<Rect> const& rs) {
  std::set<std::string> out;
  for (auto const& r : rs) out.insert(r.to_string());
  return out;
}

std::set<std::string> keys_1d(std::set<std::string> const& words) {
  std::set<std::string> out;
  for (auto const& w : words) out.insert("(" + w + ")");
  return out;
}

// swaps (10...) and (11...) inside I_r, fixes I_l
Element right_swap(int dim) {
  auto const u = Rect::unit(dim);
  return Element::checked(dim, {{u.with_word(1, BinaryWord("0")), u.with_word(1, BinaryWord("0"))},
                                {u.with_word(1, BinaryWord("10")), u.with_word(1, BinaryWord("11"))},
                                {u.with_word(1, BinaryWord("11")), u.with_word(1, BinaryWord("10"))}});
}

Element random_word_element(std::mt19937_64& rng, int dim, int max_len) {
  return eval_word(nvtest::random_word(rng, dim, max_len), dim);
}

}  // namespace

TEST_SUITE("cocycle") {

TEST_CASE("in_H") {
  CHECK(in_H(identity(2)));
  CHECK_FALSE(in_H(make_pibar(0, 2)));
  CHECK(in_H(right_swap(1)));
  CHECK(in_H(right_swap(3)));
  CHECK(in_H(random_H_element(2, 5, 7)));
  CHECK_FALSE(in_H(make_X(1, 1, 2)));
}

TEST_CASE("cosets") {
  CHECK(in_X(coset_of(identity(2))) == rect_Il(2));
  CHECK(coset_of(right_swap(2)) == coset_of(identity(2)));
  auto const pb = coset_of(make_pibar(0, 2));
  REQUIRE(pb.restriction.size() == 1);
  CHECK(pb.restriction[0] == AffinePiece{rect_Il(2), rect_Ir(2)});
  CHECK(in_X(pb) == rect_Ir(2));
  CHECK_FALSE(in_X(coset_of(make_pi(0, 1))));

  std::mt19937_64 rng(71);
  for (int k = 0; k < 200; ++k) {
    int const dim = nvtest::draw(rng, 1, 3);
    auto const g = nvtest::random_element(rng, dim, 6);
    auto const h = random_H_element(dim, nvtest::draw(rng, 1, 5), rng());
    REQUIRE(in_H(h));
    CHECK(coset_eq(coset_of(g), coset_of(compose(g, h))));
    // translating by g equals the coset of the product
    auto const k2 = nvtest::random_element(rng, dim, 6);
    CHECK(coset_eq(translate(g, coset_of(k2)), coset_of(compose(g, k2))));
  }
  CHECK_FALSE(coset_eq(coset_of(identity(1)), coset_of(make_pibar(0, 1))));
}

TEST_CASE("rect_to_coset") {
  CHECK_THROWS(rect_to_coset(Rect::unit(2)));
  CHECK(validate(rect_to_coset(rect_Ir(2))));
  CHECK(validate(rect_to_coset(R({"", "00"}))));
  for (int n = 1; n <= 3; ++n) {
    for (auto const& r : enumerate_rects(n, n == 3 ? 4 : 6)) {
      auto const k = rect_to_coset(r);
      CHECK(validate(k));
      CHECK(in_X(coset_of(k)) == r);
    }
  }
}

TEST_CASE("in_gX") {
  auto const x = make_X(1, 0, 1);
  CHECK_FALSE(in_gX(x, coset_of(rect_to_coset(R({"1"})))));
  // x^-1 is the single piece (0) -> (00) on the left half
  CHECK(in_gX(x, coset_of(rect_to_coset(R({"0"})))));
  CHECK(in_gX(x, coset_of(rect_to_coset(R({"00"})))));
  CHECK_FALSE(in_gX(make_pibar(0, 2), coset_of(rect_to_coset(R({"", "0"})))));
  for (auto const& r : enumerate_rects(2, 3)) {
    auto const c = coset_of(rect_to_coset(r));
    CHECK(in_gX(identity(2), c) == in_X(c).has_value());
  }
}

TEST_CASE("sym_diff_truncated examples") {
  auto const x = make_X(1, 0, 1);
  for (int D = 3; D <= 8; ++D) {
    auto const t = sym_diff_truncated(x, D);
    CHECK(keys(t.out_side) == std::set<std::string>{"(1)"});
    CHECK(keys(t.in_side) == std::set<std::string>{"(0)"});
    CHECK(t.total() == 2);
    CHECK(t.verdict == Verdict::stable);
    CHECK(t.stable_from == 1);
    CHECK(t.certified_at == 2);
    CHECK(t.norm() == doctest::Approx(std::sqrt(2.0)));
  }
  for (int D = 1; D <= 8; ++D) CHECK(sym_diff_truncated(make_pibar(0, 1), D).total() == 0);
  for (int D = 2; D <= 7; ++D) {
    auto const t = sym_diff_truncated(make_pibar(0, 2), D);
    CHECK(t.out_side.size() == oracle::strip_count(D));
    CHECK(t.in_side.size() == oracle::strip_count(D));
    CHECK(t.verdict == Verdict::growing);
    for (auto const& r : t.out_side) CHECK(r.word(1).empty());
  }
  CHECK_THROWS(sym_diff_truncated(x, 0));
}

TEST_CASE("n = 1 sym_diff agrees with the interval oracle") {
  std::mt19937_64 rng(73);
  for (int k = 0; k < 60; ++k) {
    auto const g = random_word_element(rng, 1, 4);
    auto const t = sym_diff_truncated(g, 7);
    auto const o = oracle::sym_diff_1d(g, 7);
    CHECK(keys(t.out_side) == keys_1d(o.out_side));
    CHECK(keys(t.in_side) == keys_1d(o.in_side));
  }
}

TEST_CASE("pruned enumeration matches exhaustive, counts are monotone") {
  std::mt19937_64 rng(79);
  for (int k = 0; k < 40; ++k) {
    int const dim = nvtest::draw(rng, 1, 3);
    auto const g = random_word_element(rng, dim, 3);
    int const D = dim == 3 ? 4 : 6;
    auto const p = sym_diff_truncated(g, D);
    auto const e = sym_diff_truncated(g, D, Enumeration::exhaustive);
    CHECK(p.out_side == e.out_side);
    CHECK(p.in_side == e.in_side);
    for (int j = 2; j <= D; ++j) CHECK(p.total_at(j) >= p.total_at(j - 1));
    if (p.verdict == Verdict::stable) {
      auto const more = sym_diff_truncated(g, D + 1);
      CHECK(more.verdict == Verdict::stable);
      CHECK(more.total() == p.total());
    }
  }
}

TEST_CASE("n = 1 stabilization by element depth + 1") {
  std::vector<Element> gens;
  for (int i = 0; i <= 3; ++i) {
    gens.push_back(make_X(1, i, 1));
    gens.push_back(make_pi(i, 1));
    gens.push_back(make_pibar(i, 1));
  }
  std::mt19937_64 rng(83);
  for (int k = 0; k < 100; ++k) gens.push_back(random_word_element(rng, 1, 4));
  for (auto const& g : gens) {
    int const D = static_cast<int>(simplify(g).max_word_depth()) + 1;
    auto const t = sym_diff_truncated(g, D);
    CHECK(t.verdict == Verdict::stable);
  }
}

TEST_CASE("cocycle identity") {
  auto const x = make_X(1, 0, 1);
  auto const r = cocycle_identity_check(x, x, 8);
  CHECK(r.all_pass());
  CHECK(r.cosets_checked == 3 * enumerate_rects(1, 8).size());
  CHECK(cocycle_identity_check(x, identity(1), 6).all_pass());

  std::mt19937_64 rng(89);
  for (int k = 0; k < 10; ++k) {
    auto const g = random_word_element(rng, 2, 3);
    auto const h = random_word_element(rng, 2, 3);
    CHECK(cocycle_identity_check(g, h, 5).all_pass());
  }
}

TEST_CASE("cocycle values lie in {-1, 0, 1}") {
  std::mt19937_64 rng(97);
  for (int k = 0; k < 20; ++k) {
    int const dim = nvtest::draw(rng, 1, 2);
    auto const g = random_word_element(rng, dim, 3);
    for (auto const& r : enumerate_rects(dim, 4)) {
      int const v = cocycle_value(g, coset_of(rect_to_coset(r)));
      CHECK(v >= -1);
      CHECK(v <= 1);
    }
  }
}

TEST_CASE("f_P probe") {
  auto const x = make_X(1, 0, 1);
  auto const r = f_P_probe(x, 8);
  CHECK(r.violations.empty());
  CHECK(r.injective());
  CHECK(r.member_counts.size() == 4);
  CHECK(r.member_counts.at(XpPredicate::single_piece) == r.members.size());
  // for n = 1 the single-piece and open-interior predicates coincide
  CHECK(r.member_counts.at(XpPredicate::corner_interior) == r.members.size());
  // closed corners put [0, 2^-k) outside X_P, whose image leaves the grid
  CHECK_FALSE(f_P_probe(x, 8, XpPredicate::corner_closed).violations.empty());

  for (int i = 0; i <= 3; ++i) {
    for (auto const& g : {make_X(1, i, 1), make_pi(i, 1), make_pibar(i, 1)}) {
      auto const p = f_P_probe(g, 8);
      CHECK(p.violations.empty());
      CHECK(p.injective());
    }
  }

  auto const pb = f_P_probe(make_pibar(0, 2), 5);
  auto const o = oracle::fp_probe(make_pibar(0, 2), 5);
  CHECK(keys(pb.members) == o.members);
  std::set<std::tuple<std::string, int, int>> got;
  for (auto const& v : pb.violations) got.emplace(v.rect.to_string(), v.alpha, v.coordinate);
  CHECK(got == o.violations);
  CHECK(pb.injective() == o.injective);

  CHECK(alpha_points(3).size() == 3);
  CHECK(to_string(alpha_points(2)[0]) == "(1/4,0)");
  CHECK(to_string(alpha_points(2)[1]) == "(0,1/2)");
  CHECK(parse_xp_predicate("corner_closed") == XpPredicate::corner_closed);
  CHECK_FALSE(parse_xp_predicate("closed"));
}

TEST_CASE("properness bound") {
  auto const x = make_X(1, 0, 1);
  auto const t = sym_diff_truncated(x, 8);
  CHECK(simplify(x).size() <= t.total() + 4);
  auto const r = properness_bound_check(1, 3, 12);
  CHECK(r.failures() == 0);
  CHECK(r.growing.empty());
  REQUIRE_FALSE(r.stable.empty());
  CHECK(r.stable[0].word == "1");
  CHECK(r.stable[0].pieces == 1);
  CHECK(r.stable[0].bound == doctest::Approx(4.0));
  // n = 2: most of the ball grows and is reported, never asserted
  auto const r2 = properness_bound_check(2, 1, 5);
  CHECK(r2.failures() == 0);
  CHECK_FALSE(r2.growing.empty());
}

TEST_CASE("normalizer commutation") {
  CHECK(in_H(compose(compose(inverse(make_X(1, 1, 2)), right_swap(2)), make_X(1, 1, 2))));
  CHECK(normalizer_commutation_check(2, 200, 3).failures == 0);
  CHECK(normalizer_commutation_check(3, 50, 4).failures == 0);
}

}  // TEST_SUITE
