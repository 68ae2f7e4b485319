#include "nv/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "nv/parallel.hpp"
#include "nv/presentation.hpp"

namespace nv {

namespace {

// Order of enumerate_rects: total depth, then depth profile with coordinate 1
// deepest first, then the words.
bool enumeration_less(Rect const& a, Rect const& b) {
  if (a.total_depth() != b.total_depth()) return a.total_depth() < b.total_depth();
  for (int d = 1; d <= a.dim(); ++d) {
    if (a.word(d).size() != b.word(d).size()) return a.word(d).size() > b.word(d).size();
  }
  return a < b;
}

std::vector<Rect> failing_rects(Element const& g, std::vector<Rect> const& candidates) {
  auto const fails = parallel_map(candidates.size(), [&](std::size_t i) {
    return static_cast<char>(!affine_extension(g.pieces(), candidates[i]).has_value());
  });
  std::vector<Rect> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (fails[i]) out.push_back(candidates[i]);
  }
  return out;
}

// Failing rectangles by depth; layers[k-1] holds depth k.
std::vector<std::vector<Rect>> failing_layers(Element const& g, int depth, Enumeration how) {
  std::vector<std::vector<Rect>> layers;
  for (int k = 1; k <= depth; ++k) {
    std::vector<Rect> candidates;
    if (how == Enumeration::exhaustive || k == 1) {
      candidates = rects_of_depth(g.dim(), k);
    } else {
      for (auto const& r : layers.back()) {
        for (int d = 1; d <= g.dim(); ++d) {
          candidates.push_back(r.extended(d, '0'));
          candidates.push_back(r.extended(d, '1'));
        }
      }
      std::sort(candidates.begin(), candidates.end(), enumeration_less);
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
    layers.push_back(failing_rects(g, candidates));
  }
  return layers;
}

std::string piece_key(Element const& e) {
  std::string key;
  for (auto const& p : e.pieces()) key += p.dom.to_string() + ">" + p.ran.to_string() + ";";
  return key;
}

bool point_meets(Rect const& r, DyadicPoint const& c, XpPredicate pred) {
  for (int d = 1; d <= r.dim(); ++d) {
    auto const& x = c[static_cast<std::size_t>(d - 1)];
    auto const lo = rect_lower(r, d);
    auto const hi = rect_upper(r, d);
    bool inside = false;
    switch (pred) {
      case XpPredicate::corner_closed: inside = lo <= x && x <= hi; break;
      case XpPredicate::corner_half_open: inside = lo <= x && x < hi; break;
      case XpPredicate::corner_interior: inside = lo < x && x < hi; break;
      case XpPredicate::single_piece: throw std::logic_error("not a corner predicate");
    }
    if (!inside) return false;
  }
  return true;
}

}  // namespace

bool in_H(Element const& h) { return is_identity_on(h, rect_Il(h.dim())); }

CosetRep coset_of(Element const& k) {
  return {k.dim(), merge_siblings(restrict_pieces(k.pieces(), rect_Il(k.dim())))};
}

bool coset_eq(CosetRep const& a, CosetRep const& b) {
  check_same_dim(a.dim, b.dim);
  for (auto const& pa : a.restriction) {
    for (auto const& pb : b.restriction) {
      if (!interiors_meet(pa.dom, pb.dom)) continue;
      Rect const common = intersection(pa.dom, pb.dom);
      if (pa.push(common) != pb.push(common)) return false;
    }
  }
  return true;
}

CosetRep translate(Element const& g, CosetRep const& c) {
  check_same_dim(g.dim(), c.dim);
  return {c.dim, merge_siblings(compose_pieces(g, c.restriction))};
}

std::optional<Rect> in_X(CosetRep const& c) {
  auto const piece = affine_extension(c.restriction, rect_Il(c.dim));
  if (!piece) return std::nullopt;
  return piece->ran;
}

Element rect_to_coset(Rect const& r) {
  if (r.is_unit()) throw std::invalid_argument("k(I_l) cannot be all of I^n");
  auto const rest = complement_partition(r);
  // split I_r into as many pieces as the complement has: a chain along coordinate 1
  std::vector<Rect> right;
  Rect tail = rect_Ir(r.dim());
  for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
    auto [lo, hi] = halve(tail, 1);
    right.push_back(std::move(lo));
    tail = std::move(hi);
  }
  right.push_back(std::move(tail));
  std::vector<AffinePiece> pieces{{rect_Il(r.dim()), r}};
  for (std::size_t i = 0; i < rest.size(); ++i) pieces.push_back({right[i], rest[i]});
  return Element(r.dim(), std::move(pieces));
}

bool in_gX(Element const& g, CosetRep const& c) { return in_X(translate(inverse(g), c)).has_value(); }

std::string_view to_string(Verdict v) { return v == Verdict::stable ? "STABLE" : "GROWING"; }

double TruncatedCocycle::norm() const { return std::sqrt(static_cast<double>(total())); }

TruncatedCocycle sym_diff_truncated(Element const& g, int depth, Enumeration how) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  TruncatedCocycle t;
  t.dim = g.dim();
  t.depth = depth;
  auto const out_layers = failing_layers(inverse(g), depth, how);
  auto const in_layers = failing_layers(g, depth, how);
  for (int k = 1; k <= depth; ++k) {
    auto const& o = out_layers[static_cast<std::size_t>(k - 1)];
    auto const& i = in_layers[static_cast<std::size_t>(k - 1)];
    t.out_side.insert(t.out_side.end(), o.begin(), o.end());
    t.in_side.insert(t.in_side.end(), i.begin(), i.end());
    t.out_counts.push_back(t.out_side.size());
    t.in_counts.push_back(t.in_side.size());
    if (t.certified_at == 0 && o.empty() && i.empty()) t.certified_at = k;
  }
  if (t.certified_at != 0) {
    t.verdict = Verdict::stable;
    t.stable_from = depth;
    while (t.stable_from > 1 && t.total_at(t.stable_from - 1) == t.total()) --t.stable_from;
  }
  return t;
}

int cocycle_value(Element const& g, CosetRep const& c) {
  return static_cast<int>(in_gX(g, c)) - static_cast<int>(in_X(c).has_value());
}

CocycleIdentityReport cocycle_identity_check(Element const& g, Element const& h, int depth) {
  check_same_dim(g.dim(), h.dim());
  Element const gh = compose(g, h);
  Element const g_inv = inverse(g);

  std::vector<CosetRep> cosets;
  for (auto const& r : enumerate_rects(g.dim(), depth)) {
    auto const c = coset_of(rect_to_coset(r));
    cosets.push_back(translate(g, c));
    cosets.push_back(translate(gh, c));
    cosets.push_back(c);
  }

  struct Outcome {
    int gh_value = 0;
    bool ok = true;
  };
  auto const outcomes = parallel_map(cosets.size(), [&](std::size_t idx) {
    auto const& c = cosets[idx];
    int const lhs = cocycle_value(gh, c);
    int const rhs = cocycle_value(g, c) + cocycle_value(h, translate(g_inv, c));
    return Outcome{lhs, lhs == rhs};
  });

  CocycleIdentityReport report;
  report.cosets_checked = cosets.size();
  for (std::size_t idx = 0; idx < outcomes.size(); ++idx) {
    auto const& o = outcomes[idx];
    if (o.gh_value < -1 || o.gh_value > 1) throw std::logic_error("cocycle value outside {-1,0,1}");
    ++report.gh_values[static_cast<std::size_t>(o.gh_value + 1)];
    if (!o.ok) {
      ++report.failures;
      if (report.failing.size() < 10) {
        std::string desc;
        for (auto const& p : cosets[idx].restriction) desc += p.dom.to_string() + "->" + p.ran.to_string() + " ";
        report.failing.push_back(desc);
      }
    }
  }
  return report;
}

std::string_view to_string(XpPredicate p) {
  switch (p) {
    case XpPredicate::single_piece: return "single_piece";
    case XpPredicate::corner_closed: return "corner_closed";
    case XpPredicate::corner_half_open: return "corner_half_open";
    case XpPredicate::corner_interior: return "corner_interior";
  }
  return "?";
}

std::optional<XpPredicate> parse_xp_predicate(std::string_view s) {
  for (auto p : {XpPredicate::single_piece, XpPredicate::corner_closed, XpPredicate::corner_half_open,
                 XpPredicate::corner_interior}) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

std::vector<DyadicPoint> alpha_points(int dim) {
  std::vector<DyadicPoint> out;
  DyadicPoint a1(static_cast<std::size_t>(dim));
  a1[0] = Dyadic::from_fraction(1, 2);
  out.push_back(a1);
  for (int i = 2; i <= dim; ++i) {
    DyadicPoint a(static_cast<std::size_t>(dim));
    a[static_cast<std::size_t>(i - 1)] = Dyadic::from_fraction(1, 1);
    out.push_back(a);
  }
  return out;
}

bool outside_Xp(Rect const& r, Pattern const& p, std::vector<DyadicPoint> const& corner_points, XpPredicate pred) {
  if (pred == XpPredicate::single_piece) {
    return std::none_of(p.rects().begin(), p.rects().end(), [&](Rect const& piece) { return contains(piece, r); });
  }
  return std::any_of(corner_points.begin(), corner_points.end(),
                     [&](DyadicPoint const& c) { return point_meets(r, c, pred); });
}

FpProbeReport f_P_probe(Element const& g, int depth, XpPredicate pred) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  int const dim = g.dim();
  Pattern const pattern = g.domain_pattern();
  auto const corner_set = corners(pattern);
  std::vector<DyadicPoint> const corner_points(corner_set.begin(), corner_set.end());
  auto const grid = corner_projections(pattern);
  auto const alphas = alpha_points(dim);
  auto const rects = enumerate_rects(dim, depth);

  FpProbeReport report;
  report.predicate = pred;
  report.depth = depth;
  report.pattern_size = pattern.size();
  for (auto p : {XpPredicate::single_piece, XpPredicate::corner_closed, XpPredicate::corner_half_open,
                 XpPredicate::corner_interior}) {
    auto const flags = parallel_map(rects.size(), [&](std::size_t i) {
      return static_cast<char>(outside_Xp(rects[i], pattern, corner_points, p));
    });
    report.member_counts[p] = static_cast<std::size_t>(std::count(flags.begin(), flags.end(), 1));
    if (p == pred) {
      for (std::size_t i = 0; i < rects.size(); ++i) {
        if (flags[i]) report.members.push_back(rects[i]);
      }
    }
  }

  std::map<std::vector<DyadicPoint>, Rect> seen;
  for (auto const& r : report.members) {
    AffinePiece const k{rect_Il(dim), r};
    std::vector<DyadicPoint> value;
    for (std::size_t a = 0; a < alphas.size(); ++a) {
      auto image = k.apply(alphas[a]);
      for (int d = 1; d <= dim; ++d) {
        if (!grid[static_cast<std::size_t>(d - 1)].contains(image[static_cast<std::size_t>(d - 1)])) {
          report.violations.push_back({r, static_cast<int>(a) + 1, d, image});
        }
      }
      value.push_back(std::move(image));
    }
    auto [it, inserted] = seen.emplace(std::move(value), r);
    if (!inserted) report.collisions.emplace_back(it->second, r);
  }
  return report;
}

std::size_t PropernessReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(stable.begin(), stable.end(), [](PropernessEntry const& e) { return !e.pass; }));
}

PropernessReport properness_bound_check(int dim, int radius, int depth) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  auto const letters = generating_set_S(dim);
  std::vector<std::pair<std::string, Element>> alphabet;
  for (auto const& l : letters) {
    Element const e = eval_word(l.word, dim);
    alphabet.emplace_back("{" + l.name + "}", e);
    alphabet.emplace_back("{" + l.name + "}^-1", inverse(e));
  }

  std::vector<std::pair<std::string, Element>> ball{{"1", identity(dim)}};
  std::unordered_map<std::string, std::size_t> seen{{piece_key(ball.front().second), 0}};
  std::size_t layer_begin = 0;
  for (int step = 1; step <= radius; ++step) {
    std::size_t const layer_end = ball.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (auto const& [name, letter] : alphabet) {
        Element e = simplify(compose(ball[i].second, letter));
        auto key = piece_key(e);
        if (seen.contains(key)) continue;
        seen.emplace(std::move(key), ball.size());
        std::string word = ball[i].first == "1" ? name : ball[i].first + " " + name;
        ball.emplace_back(std::move(word), std::move(e));
      }
    }
    layer_begin = layer_end;
  }

  auto const entries = parallel_map(ball.size(), [&](std::size_t i) {
    auto const& [word, g] = ball[i];
    auto const t = sym_diff_truncated(g, depth);
    PropernessEntry e;
    e.word = word;
    e.pieces = g.size();
    e.sym_diff = t.total();
    e.verdict = t.verdict;
    e.bound = std::pow(static_cast<double>(t.total()) + 4.0, dim);
    e.pass = static_cast<double>(e.pieces) <= e.bound;
    return e;
  });

  PropernessReport report{dim, radius, depth, {}, {}};
  for (auto const& e : entries) (e.verdict == Verdict::stable ? report.stable : report.growing).push_back(e);
  return report;
}

Element random_H_element(int dim, int size, std::uint64_t seed) {
  return embed_into(random_element(dim, size, seed), rect_Ir(dim));
}

Element random_Hbar_element(int dim, int size, std::uint64_t seed) {
  return embed_into(random_element(dim, size, seed), rect_Il(dim));
}

NormalizerReport normalizer_commutation_check(int dim, int samples, std::uint64_t seed) {
  NormalizerReport report;
  report.samples = static_cast<std::size_t>(samples);
  auto const ok = parallel_map(report.samples, [&](std::size_t s) {
    std::uint64_t const base = seed * 1000003ULL + 2 * s;
    int const size_a = 1 + static_cast<int>(s % 5);
    int const size_b = 1 + static_cast<int>((s / 5) % 5);
    Element const hbar = random_Hbar_element(dim, size_a, base);
    Element const h = random_H_element(dim, size_b, base + 1);
    bool const commute = equals(compose(hbar, h), compose(h, hbar));
    bool const conj_in_H = in_H(compose(compose(inverse(hbar), h), hbar));
    return static_cast<char>(commute && conj_in_H);
  });
  for (std::size_t s = 0; s < ok.size(); ++s) {
    if (!ok[s]) {
      ++report.failures;
      report.failing.push_back("sample " + std::to_string(s));
    }
  }
  return report;
}

}  // namespace nv
