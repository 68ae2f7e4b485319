#include <doctest.h>

#include "printers.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fuzz.hpp"
#include "nv/element.hpp"
#include "nv/words.hpp"

using namespace nv;

namespace {

Rect R(std::vector<std::string> const& words) { return Rect::parse(words); }
DyadicPoint P(std::string_view s) { return parse_point(s); }

// ---- n = 1 oracles on plain (dom word, ran word) pairs, integer arithmetic ----

using Table = std::vector<std::pair<std::string, std::string>>;

Table table_of(Element const& g) {
  Table t;
  for (auto const& p : g.pieces()) t.emplace_back(p.dom.word(1).str(), p.ran.word(1).str());
  return t;
}

std::uint64_t word_value(std::string const& w, unsigned scale) {
  std::uint64_t v = 0;
  for (char c : w) v = 2 * v + (c == '1');
  return v << (scale - w.size());
}

// image of x / 2^scale; scale must exceed every word length
std::uint64_t oracle_apply(Table const& t, std::uint64_t x, unsigned scale) {
  for (auto const& [dom, ran] : t) {
    std::uint64_t const lo = word_value(dom, scale);
    if (x < lo || x >= lo + (std::uint64_t{1} << (scale - dom.size()))) continue;
    std::uint64_t const off = x - lo;
    std::uint64_t const image_off =
        dom.size() >= ran.size() ? off << (dom.size() - ran.size()) : off >> (ran.size() - dom.size());
    return word_value(ran, scale) + image_off;
  }
  FAIL("point not covered");
  return 0;
}

std::size_t table_depth(Table const& t) {
  std::size_t m = 0;
  for (auto const& [a, b] : t) m = std::max({m, a.size(), b.size()});
  return m;
}

// Two interval exchange maps with slopes 2^k agree iff they agree on the grid one level finer than all words.
bool oracle_equal(Table const& a, Table const& b) {
  unsigned const level = static_cast<unsigned>(std::max(table_depth(a), table_depth(b)) + 1);
  unsigned const scale = 2 * level + 2;
  for (std::uint64_t k = 0; k < (std::uint64_t{1} << level); ++k) {
    std::uint64_t const x = k << (scale - level);
    if (oracle_apply(a, x, scale) != oracle_apply(b, x, scale)) return false;
  }
  return true;
}

// Least piece count over every sequence of sibling-pair merges.
std::size_t oracle_reduced_size(Table t) {
  std::sort(t.begin(), t.end());
  std::set<Table> seen{t};
  std::vector<Table> frontier{t};
  std::size_t best = t.size();
  while (!frontier.empty()) {
    Table const cur = frontier.back();
    frontier.pop_back();
    best = std::min(best, cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = 0; j < cur.size(); ++j) {
        auto const& [d0, r0] = cur[i];
        auto const& [d1, r1] = cur[j];
        if (d0.empty() || r0.empty() || d0.back() != '0' || r0.back() != '0') continue;
        if (d1 != d0.substr(0, d0.size() - 1) + "1" || r1 != r0.substr(0, r0.size() - 1) + "1") continue;
        Table next;
        for (std::size_t k = 0; k < cur.size(); ++k) {
          if (k != i && k != j) next.push_back(cur[k]);
        }
        next.emplace_back(d0.substr(0, d0.size() - 1), r0.substr(0, r0.size() - 1));
        std::sort(next.begin(), next.end());
        if (seen.insert(next).second) frontier.push_back(std::move(next));
      }
    }
  }
  return best;
}

Element refined_identity() {
  return Element::checked(2, {{R({"0", "0"}), R({"0", "0"})},
                              {R({"0", "1"}), R({"0", "1"})},
                              {R({"1", "0"}), R({"1", "0"})},
                              {R({"1", "1"}), R({"1", "1"})}});
}

}  // namespace

TEST_SUITE("element") {

TEST_CASE("identity") {
  CHECK(nv::apply(identity(2), P("1/4,1/2")) == P("1/4,1/2"));
  auto const g = make_X(1, 0, 2);
  CHECK(compose(identity(2), g) == g);
  CHECK(inverse(identity(3)) == identity(3));
  CHECK(is_identity(identity(2)));
  CHECK(is_identity(refined_identity()));
  CHECK_FALSE(is_identity(make_pibar(0, 1)));
}

TEST_CASE("validate") {
  CHECK(validate(identity(1)));
  CHECK_FALSE(validate(Element(1, {{R({"0"}), R({"0"})}, {R({"1"}), R({"0"})}})));
  CHECK(validate(Element(1, {{R({"00"}), R({"0"})}, {R({"01"}), R({"10"})}, {R({"1"}), R({"11"})}})));
  CHECK_THROWS(Element::checked(1, {{R({"0"}), R({"0"})}, {R({"0"}), R({"1"})}}));
  CHECK_THROWS(Element::checked(2, {{R({"0", ""}), R({"0", ""})}, {R({"1"}), R({"1"})}}));
}

TEST_CASE("compose and inverse") {
  auto const x = make_X(1, 0, 1);
  CHECK(is_identity(compose(x, inverse(x))));
  CHECK(is_identity(compose(inverse(x), x)));
  CHECK(compose(x, x).size() == 4);
  CHECK(inverse(inverse(x)) == x);
  CHECK(inverse(x).domain_pattern() == x.range_pattern());
  CHECK(inverse(x).range_pattern() == x.domain_pattern());
  CHECK(nv::apply(inverse(x), P("1/4")) == P("1/8"));
  CHECK_THROWS(compose(x, identity(2)));

  auto const swap = compose(make_pibar(0, 1), make_pibar(0, 1));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    auto const p = nvtest::random_point(rng, 1);
    CHECK(nv::apply(swap, p) == p);
  }
}

TEST_CASE("apply X_{1,0}") {
  auto const x = make_X(1, 0, 1);
  CHECK(nv::apply(x, P("1/8")) == P("1/4"));
  CHECK(nv::apply(x, P("3/8")) == P("5/8"));
  CHECK(nv::apply(x, P("3/4")) == P("7/8"));
  CHECK(nv::apply(x, P("0")) == P("0"));
}

TEST_CASE("equals") {
  auto const x = make_X(1, 0, 1);
  CHECK(equals(x, x));
  CHECK(equals(x, expansion(x, 0, 1)));
  CHECK_FALSE(equals(make_pi(0, 1), make_pibar(0, 1)));
  CHECK(nv::apply(make_pi(0, 1), P("1/8")) != nv::apply(make_pibar(0, 1), P("1/8")));
  CHECK(equals(refined_identity(), identity(2)));
  CHECK_THROWS(equals(x, identity(2)));
}

TEST_CASE("is_affine_on") {
  for (auto const& r : enumerate_rects(2, 3)) {
    auto const piece = is_affine_on(identity(2), r);
    REQUIRE(piece);
    CHECK(piece->is_trivial());
  }
  auto const pb = make_pibar(0, 2);
  auto const on_left = is_affine_on(pb, rect_Il(2));
  REQUIRE(on_left);
  CHECK(on_left->ran == rect_Ir(2));
  CHECK_FALSE(is_affine_on(pb, R({"", "0"})));
  CHECK(is_affine_on(make_X(1, 0, 1), R({"0"})) == std::nullopt);
  CHECK(is_affine_on(make_X(1, 0, 1), R({"010"}))->ran == R({"100"}));
}

TEST_CASE("is_affine_on recovers every piece") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    int const dim = nvtest::draw(rng, 1, 3);
    auto const g = nvtest::random_element(rng, dim, 8);
    for (auto const& p : g.pieces()) {
      auto const a = is_affine_on(g, p.dom);
      REQUIRE(a);
      CHECK(*a == p);
    }
  }
}

TEST_CASE("support and is_identity_on") {
  CHECK(support(identity(2)).empty());
  CHECK(support(make_pibar(0, 1)) == std::vector{R({"0"}), R({"1"})});
  for (auto const& r : support(make_X(1, 1, 2))) CHECK(contains(rect_Il(2), r));
  CHECK(is_identity_on(identity(2), Rect::unit(2)));
  CHECK(is_identity_on(make_X(1, 1, 1), rect_Ir(1)));
  CHECK_FALSE(is_identity_on(make_X(1, 0, 1), rect_Ir(1)));

  std::mt19937_64 rng(23);
  for (int k = 0; k < 100; ++k) {
    int const dim = nvtest::draw(rng, 1, 2);
    auto const g = nvtest::random_element(rng, dim, 6);
    auto const sup = support(g);
    for (auto const& r : enumerate_rects(dim, 4)) {
      bool const off = std::none_of(sup.begin(), sup.end(), [&](Rect const& s) { return interiors_meet(s, r); });
      if (off) CHECK(is_identity_on(g, r));
    }
  }
}

TEST_CASE("simplify") {
  CHECK(simplify(refined_identity()).size() == 1);
  CHECK(simplify(make_X(1, 0, 1)).size() == 3);
  CHECK(simplify(expansion(expansion(make_X(1, 0, 1), 1, 1), 0, 1)).size() == 3);
  std::mt19937_64 rng(29);
  for (int k = 0; k < 1000; ++k) {
    int const dim = nvtest::draw(rng, 1, 3);
    auto const g = nvtest::random_element(rng, dim, 8);
    auto const s = simplify(g);
    CHECK(validate(s));
    CHECK(equals(g, s));
    CHECK(s.size() <= g.size());
  }
}

TEST_CASE("simplify reaches the reduced tree pair for n = 1") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 300; ++k) {
    auto g = nvtest::random_element(rng, 1, 6);
    // grow some redundancy so there is something to reduce
    for (int e = nvtest::draw(rng, 0, 3); e > 0; --e) g = expansion(g, rng() % g.size(), 1);
    CHECK(simplify(g).size() == oracle_reduced_size(table_of(g)));
  }
  for (int i = 0; i <= 3; ++i) {
    for (auto const& g : {make_X(1, i, 1), make_pi(i, 1), make_pibar(i, 1)}) {
      CHECK(simplify(g).size() == oracle_reduced_size(table_of(g)));
    }
  }
}

TEST_CASE("expansion") {
  auto const e = expansion(identity(2), 0, 1);
  CHECK(e.size() == 2);
  CHECK(is_identity(e));
  std::mt19937_64 rng(37);
  for (int k = 0; k < 100; ++k) {
    int const dim = nvtest::draw(rng, 1, 3);
    auto const g = nvtest::random_element(rng, dim, 6);
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (int d = 1; d <= dim; ++d) {
        auto const x = expansion(g, i, d);
        CHECK(x.size() == g.size() + 1);
        CHECK(equals(g, x));
      }
    }
    CHECK_THROWS(expansion(g, g.size(), 1));
    CHECK_THROWS(expansion(g, 0, dim + 1));
  }
}

TEST_CASE("random_element") {
  CHECK(is_identity(random_element(2, 1, 5)));
  CHECK(random_element(3, 7, 99) == random_element(3, 7, 99));
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto const g = random_element(1 + static_cast<int>(s % 3), 1 + static_cast<int>(s % 9), s);
    CHECK(validate(g));
    CHECK(g.size() == 1 + s % 9);
  }
}

TEST_CASE("group laws on fuzzed triples") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 300; ++k) {
    int const dim = nvtest::draw(rng, 1, 3);
    auto const a = nvtest::random_element(rng, dim, 6);
    auto const b = nvtest::random_element(rng, dim, 6);
    auto const c = nvtest::random_element(rng, dim, 6);
    CHECK(equals(compose(compose(a, b), c), compose(a, compose(b, c))));
    CHECK(equals(compose(identity(dim), a), a));
    CHECK(equals(compose(a, identity(dim)), a));
    CHECK(is_identity(compose(a, inverse(a))));
    CHECK(is_identity(compose(inverse(a), a)));
    CHECK(validate(compose(a, b)));
  }
}

TEST_CASE("apply is consistent with compose") {
  std::mt19937_64 rng(43);
  for (int k = 0; k < 100; ++k) {
    int const dim = nvtest::draw(rng, 1, 3);
    auto const g = nvtest::random_element(rng, dim, 6);
    auto const h = nvtest::random_element(rng, dim, 6);
    auto const gh = compose(g, h);
    for (int j = 0; j < 100; ++j) {
      auto const p = nvtest::random_point(rng, dim);
      CHECK(nv::apply(gh, p) == nv::apply(g, nv::apply(h, p)));
    }
  }
}

TEST_CASE("equals is an equivalence relation") {
  std::mt19937_64 rng(47);
  for (int k = 0; k < 100; ++k) {
    int const dim = nvtest::draw(rng, 1, 2);
    auto const g = nvtest::random_element(rng, dim, 5);
    auto const g2 = expansion(g, rng() % g.size(), nvtest::draw(rng, 1, dim));
    auto const g3 = simplify(expansion(g2, rng() % g2.size(), nvtest::draw(rng, 1, dim)));
    CHECK(equals(g, g));
    CHECK(equals(g, g2) == equals(g2, g));
    CHECK(equals(g, g2));
    CHECK(equals(g2, g3));
    CHECK(equals(g, g3));
  }
}

TEST_CASE("n = 1 agrees with the integer interval-map oracle") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 300; ++k) {
    auto const g = nvtest::random_element(rng, 1, 6);
    auto const h = nvtest::random_element(rng, 1, 6);
    auto const gh = compose(g, h);
    unsigned const scale = 40;
    for (std::uint64_t x = 0; x < 256; ++x) {
      std::uint64_t const pt = x << (scale - 8);
      CHECK(oracle_apply(table_of(gh), pt, scale) ==
            oracle_apply(table_of(g), oracle_apply(table_of(h), pt, scale), scale));
    }
    CHECK(equals(g, h) == oracle_equal(table_of(g), table_of(h)));
    CHECK(oracle_equal(table_of(g), table_of(simplify(g))));
  }
  // equal maps with different tables
  auto const x = make_X(1, 0, 1);
  CHECK(oracle_equal(table_of(x), table_of(expansion(x, 2, 1))));
  CHECK_FALSE(oracle_equal(table_of(x), table_of(make_pi(0, 1))));
}

}  // TEST_SUITE
