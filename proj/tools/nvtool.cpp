// nvtool: command-line front end for the nV library.
//
// Exit status: 0 all checks pass, 1 some check failed, 2 usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nv/cocycle.hpp"
#include "nv/json_io.hpp"
#include "nv/presentation.hpp"
#include "nv/words.hpp"

namespace {

using nv::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 1;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 1;
  std::string element_file;
  std::string word;
  std::string word2;
  std::string point;
  std::string with_word;
  std::string depths = "1..6";
  std::string predicate = "single_piece";
  int depth = 8;
  int imax = 3;
  int ball = 2;
  int size = 4;
  int samples = 200;
};

struct Outcome {
  Outcome() = default;
  Outcome(json r, bool p = true, std::vector<std::string> t = {})
      : result(std::move(r)), pass(p), text(std::move(t)) {}

  json result;
  bool pass = true;
  std::vector<std::string> text;  // text-format rendering; generic if empty
};

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nv::Element eval_checked(std::string const& text, int n) {
  try {
    return nv::eval_word(text, n);
  } catch (nv::ParseError const& e) {
    throw UsageError(std::string("bad word: ") + e.what());
  } catch (std::invalid_argument const& e) {
    throw UsageError(std::string("bad word: ") + e.what());
  }
}

// The element named by --word or --element-file.
nv::Element input_element(Options const& o) {
  if (!o.element_file.empty()) {
    if (!o.word.empty()) throw UsageError("give either --word or --element-file, not both");
    nv::Element g;
    try {
      auto doc = json::parse(read_file(o.element_file));
      // a saved nvtool report carries the element under result.element
      if (doc.contains("result") && doc["result"].contains("element")) doc = doc["result"]["element"];
      g = nv::element_from_json(doc);
    } catch (json::exception const& e) {
      throw UsageError(std::string("bad element file: ") + e.what());
    } catch (nv::JsonError const& e) {
      throw UsageError(std::string("bad element file: ") + e.what());
    }
    if (g.dim() != o.n) throw UsageError("element file has n = " + std::to_string(g.dim()));
    return g;
  }
  return eval_checked(o.word, o.n);
}

std::vector<std::string> piece_lines(nv::Element const& g) {
  std::vector<std::string> out;
  for (auto const& p : g.pieces()) out.push_back("  " + p.dom.to_string() + " -> " + p.ran.to_string());
  return out;
}

std::pair<int, int> parse_depths(std::string const& s) {
  auto const dots = s.find("..");
  try {
    if (dots == std::string::npos) return {1, std::stoi(s)};
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (std::exception const&) {
    throw UsageError("--depths expects D or A..B");
  }
}

void positive(int v, char const* name) {
  if (v < 1) throw UsageError(std::string(name) + " must be positive");
}

Outcome cmd_eval(Options const& o) {
  auto const g = input_element(o);
  Outcome out{{{"element", nv::element_to_json(g)}, {"pieces", g.size()}}};
  out.text.push_back("pieces: " + std::to_string(g.size()));
  for (auto& l : piece_lines(g)) out.text.push_back(l);
  return out;
}

Outcome cmd_equal(Options const& o) {
  auto const a = eval_checked(o.word, o.n);
  auto const b = eval_checked(o.word2, o.n);
  bool const eq = nv::equals(a, b);
  return {{{"equal", eq}}, eq, {std::string("equal: ") + (eq ? "true" : "false")}};
}

Outcome cmd_apply(Options const& o) {
  auto const g = input_element(o);
  nv::DyadicPoint p;
  try {
    p = nv::parse_point(o.point);
  } catch (std::exception const& e) {
    throw UsageError(std::string("bad point: ") + e.what());
  }
  if (static_cast<int>(p.size()) != o.n) throw UsageError("point must have n coordinates");
  for (auto const& x : p) {
    if (x.is_one()) throw UsageError("point coordinates must lie in [0,1)");
  }
  auto const image = nv::apply(g, p);
  return {{{"point", nv::to_json(p)}, {"image", nv::to_json(image)}}, true, {"image: " + nv::to_string(image)}};
}

Outcome cmd_support(Options const& o) {
  auto const sup = nv::support(input_element(o));
  json rects = json::array();
  Outcome out;
  for (auto const& r : sup) {
    rects.push_back(nv::to_json(r));
    out.text.push_back("  " + r.to_string());
  }
  out.text.insert(out.text.begin(), "support pieces: " + std::to_string(sup.size()));
  out.result = {{"support", std::move(rects)}, {"count", sup.size()}};
  return out;
}

Outcome cmd_simplify(Options const& o) {
  auto const g = input_element(o);
  auto const s = nv::simplify(g);
  Outcome out{{{"pieces_before", g.size()}, {"pieces_after", s.size()}, {"element", nv::element_to_json(s)}}};
  out.text.push_back("pieces: " + std::to_string(g.size()) + " -> " + std::to_string(s.size()));
  for (auto& l : piece_lines(s)) out.text.push_back(l);
  return out;
}

Outcome check_outcome(nv::CheckReport const& r) {
  Outcome out{nv::to_json(r), r.all_pass()};
  out.text.push_back(r.name + " n=" + std::to_string(r.dim) + ": " + std::to_string(r.counted()) + " instances, " +
                     std::to_string(r.failures()) + " failures");
  for (auto const& c : r.instances) {
    if (!c.pass) {
      out.text.push_back(std::string(c.informational ? "  info " : "  FAIL ") + c.family + ": " + c.lhs + " = " +
                         c.rhs);
    }
  }
  for (auto const& n : r.notes) out.text.push_back("  note: " + n);
  return out;
}

Outcome cmd_cocycle(Options const& o) {
  positive(o.depth, "--depth");
  auto const g = input_element(o);
  auto const t = nv::sym_diff_truncated(g, o.depth);
  Outcome out{nv::to_json(t)};
  out.text.push_back("|X delta gX| up to depth " + std::to_string(o.depth) + ": " + std::to_string(t.total()) +
                     " (out " + std::to_string(t.out_side.size()) + ", in " + std::to_string(t.in_side.size()) +
                     ")");
  std::string verdict(nv::to_string(t.verdict));
  if (t.verdict == nv::Verdict::stable) verdict += "(" + std::to_string(t.stable_from) + ")";
  out.text.push_back("verdict: " + verdict);
  if (auto f = nv::almost_invariance_finding(t); !f.empty()) out.text.push_back(f);
  if (!o.with_word.empty()) {
    auto const h = eval_checked(o.with_word, o.n);
    auto const id = nv::cocycle_identity_check(g, h, o.depth);
    out.result["cocycle_identity"] = nv::to_json(id);
    out.pass = id.all_pass();
    out.text.push_back("cocycle identity: " + std::to_string(id.cosets_checked) + " cosets, " +
                       std::to_string(id.failures) + " failures");
  }
  return out;
}

Outcome cmd_probe(Options const& o) {
  auto const [lo, hi] = parse_depths(o.depths);
  if (lo < 1 || hi < lo) throw UsageError("--depths must satisfy 1 <= A <= B");
  auto const g = input_element(o);
  auto const t = nv::sym_diff_truncated(g, hi);
  auto const check = nv::sym_diff_truncated(g, hi, nv::Enumeration::exhaustive);
  bool const agree = t.out_side == check.out_side && t.in_side == check.in_side;
  json rows = json::array();
  Outcome out;
  out.text.push_back("depth  out  in  total");
  for (int k = lo; k <= hi; ++k) {
    auto const i = static_cast<std::size_t>(k - 1);
    rows.push_back({{"depth", k}, {"out", t.out_counts[i]}, {"in", t.in_counts[i]}, {"total", t.total_at(k)}});
    out.text.push_back(std::to_string(k) + "  " + std::to_string(t.out_counts[i]) + "  " +
                       std::to_string(t.in_counts[i]) + "  " + std::to_string(t.total_at(k)));
  }
  out.result = {{"depths", {lo, hi}},
                {"per_depth", std::move(rows)},
                {"verdict", nv::to_string(t.verdict)},
                {"stable_from", t.stable_from},
                {"certified_at", t.certified_at},
                {"pruned_matches_exhaustive", agree}};
  if (auto f = nv::almost_invariance_finding(t); !f.empty()) {
    out.result["finding"] = f;
    out.text.push_back(f);
  }
  out.text.push_back(std::string("verdict: ") + std::string(nv::to_string(t.verdict)));
  out.text.push_back(std::string("pruned matches exhaustive: ") + (agree ? "yes" : "no"));
  out.pass = agree;
  return out;
}

Outcome cmd_fprobe(Options const& o) {
  positive(o.depth, "--depth");
  auto const pred = nv::parse_xp_predicate(o.predicate);
  if (!pred) throw UsageError("unknown --predicate " + o.predicate);
  auto const g = input_element(o);
  auto const r = nv::f_P_probe(g, o.depth, *pred);
  Outcome out{nv::to_json(r)};
  out.text.push_back("members of X - X_P: " + std::to_string(r.members.size()));
  for (auto const& [p, c] : r.member_counts) {
    out.text.push_back("  " + std::string(nv::to_string(p)) + ": " + std::to_string(c));
  }
  out.text.push_back("grid violations: " + std::to_string(r.violations.size()));
  out.text.push_back(std::string("injective: ") + (r.injective() ? "yes" : "no"));
  return out;
}

Outcome cmd_properness(Options const& o) {
  positive(o.ball, "--ball");
  positive(o.depth, "--depth");
  auto const r = nv::properness_bound_check(o.n, o.ball, o.depth);
  Outcome out{nv::to_json(r), r.failures() == 0};
  out.text.push_back("ball elements: " + std::to_string(r.stable.size() + r.growing.size()));
  out.text.push_back("stable: " + std::to_string(r.stable.size()) + ", growing (not asserted): " +
                     std::to_string(r.growing.size()));
  out.text.push_back("bound failures: " + std::to_string(r.failures()));
  for (auto const& e : r.stable) {
    if (!e.pass) out.text.push_back("  FAIL " + e.word + ": " + std::to_string(e.pieces) + " pieces");
  }
  return out;
}

Outcome cmd_random(Options const& o) {
  positive(o.size, "--size");
  auto const g = nv::random_element(o.n, o.size, o.seed);
  Outcome out{{{"element", nv::element_to_json(g)}}};
  for (auto& l : piece_lines(g)) out.text.push_back(l);
  return out;
}

Outcome cmd_normalizer(Options const& o) {
  positive(o.samples, "--samples");
  auto const r = nv::normalizer_commutation_check(o.n, o.samples, o.seed);
  return {nv::to_json(r), r.failures == 0,
          {"samples: " + std::to_string(r.samples) + ", failures: " + std::to_string(r.failures)}};
}

// Plain rendering of a JSON result for commands without a dedicated one.
void render_generic(std::ostream& os, json const& j, std::string const& prefix) {
  if (j.is_object()) {
    for (auto const& [k, v] : j.items()) render_generic(os, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_generic(os, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

json config_echo(std::string const& command, Options const& o) {
  json c{{"n", o.n}, {"format", o.format}};
  if (!o.word.empty()) c["word"] = o.word;
  if (!o.element_file.empty()) c["element_file"] = o.element_file;
  if (command == "equal") c["word2"] = o.word2;
  if (command == "apply") c["point"] = o.point;
  if (command == "relations" || command == "corollaries") c["imax"] = o.imax;
  if (command == "cocycle" || command == "fprobe" || command == "properness") c["depth"] = o.depth;
  if (command == "cocycle" && !o.with_word.empty()) c["with"] = o.with_word;
  if (command == "probe") c["depths"] = o.depths;
  if (command == "fprobe") c["predicate"] = o.predicate;
  if (command == "properness") c["ball"] = o.ball;
  if (command == "random") c["size"] = o.size;
  if (command == "normalizer") c["samples"] = o.samples;
  if (command == "random" || command == "normalizer") c["seed"] = o.seed;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the Brin-Thompson groups nV"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(nv::kVersion));
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "dimension n >= 1")->check(CLI::PositiveNumber);
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", o.output, "write the report here instead of stdout");
    sub->add_option("--seed", o.seed, "random seed");
  };
  auto add_element = [&](CLI::App* sub) {
    sub->add_option("--word", o.word, "word in X[d,i] C[d,i] P[i] Pb[i] with optional ^k");
    sub->add_option("--element-file", o.element_file, "element as piece-table JSON");
  };

  struct Command {
    CLI::App* app;
    Outcome (*run)(Options const&);
  };
  std::vector<Command> commands;
  auto sub = [&](char const* name, char const* help, Outcome (*run)(Options const&)) {
    auto* s = app.add_subcommand(name, help);
    add_common(s);
    commands.push_back({s, run});
    return s;
  };

  add_element(sub("eval", "evaluate a word to a piece table", cmd_eval));
  auto* equal = sub("equal", "decide whether two words name the same element", cmd_equal);
  equal->add_option("--w1,--word1", o.word, "first word");
  equal->add_option("--w2,--word2", o.word2, "second word");
  auto* apply = sub("apply", "apply an element to a dyadic point", cmd_apply);
  add_element(apply);
  apply->add_option("--point", o.point, "comma-separated coordinates, e.g. 1/8,1/2")->required();
  add_element(sub("support", "pieces moved by the element", cmd_support));
  add_element(sub("simplify", "merge sibling pieces", cmd_simplify));
  sub("relations", "check the relations of the finite presentation",
      [](Options const& opt) { return check_outcome(nv::relation_suite(opt.n, opt.imax)); })
      ->add_option("--imax", o.imax, "largest generator index")
      ->check(CLI::PositiveNumber);
  sub("premises", "check the fixed-point premises",
      [](Options const& opt) { return check_outcome(nv::premise_checks(opt.n)); });
  sub("corollaries", "check the conjugation identities",
      [](Options const& opt) { return check_outcome(nv::corollary_checks(opt.n, opt.imax)); })
      ->add_option("--imax", o.imax, "largest generator index")
      ->check(CLI::PositiveNumber);
  auto* cocycle = sub("cocycle", "truncated |X delta gX| and the cocycle", cmd_cocycle);
  add_element(cocycle);
  cocycle->add_option("--depth", o.depth, "total depth bound");
  cocycle->add_option("--with", o.with_word, "second word h for the cocycle identity check");
  auto* probe = sub("probe", "per-depth counts of |X delta gX|", cmd_probe);
  add_element(probe);
  probe->add_option("--depths", o.depths, "depth range A..B");
  auto* fprobe = sub("fprobe", "grid and injectivity probe of f_P", cmd_fprobe);
  add_element(fprobe);
  fprobe->add_option("--depth", o.depth, "total depth bound");
  fprobe->add_option("--predicate", o.predicate,
                     "single_piece, corner_closed, corner_half_open or corner_interior");
  auto* properness = sub("properness", "piece-count bound over a word ball", cmd_properness);
  properness->add_option("--ball", o.ball, "word-ball radius over S");
  properness->add_option("--depth", o.depth, "total depth bound");
  sub("random", "random element", cmd_random)->add_option("--size", o.size, "number of pieces");
  sub("normalizer", "commutation of H with elements fixing I_r", cmd_normalizer)
      ->add_option("--samples", o.samples, "number of fuzzed pairs");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    std::cerr << "nvtool: " << e.what() << "\n";
    return 2;
  }

  for (auto const& c : commands) {
    if (!c.app->parsed()) continue;
    std::string const name = c.app->get_name();
    Outcome out;
    try {
      out = c.run(o);
    } catch (UsageError const& e) {
      std::cerr << "nvtool " << name << ": " << e.what() << "\n";
      return 2;
    } catch (std::invalid_argument const& e) {
      std::cerr << "nvtool " << name << ": " << e.what() << "\n";
      return 2;
    }

    std::ostringstream report;
    if (o.format == "json") {
      json doc{{"tool", nv::kToolName},
               {"version", nv::kVersion},
               {"command", name},
               {"config", config_echo(name, o)},
               {"status", out.pass ? "pass" : "fail"},
               {"result", std::move(out.result)}};
      report << doc.dump(2) << "\n";
    } else {
      report << name << " (n=" << o.n << "): " << (out.pass ? "pass" : "FAIL") << "\n";
      if (out.text.empty()) {
        render_generic(report, out.result, "");
      } else {
        for (auto const& l : out.text) report << l << "\n";
      }
    }

    if (o.output.empty()) {
      std::cout << report.str();
    } else {
      std::ofstream f(o.output);
      if (!f) {
        std::cerr << "nvtool: cannot write " << o.output << "\n";
        return 2;
      }
      f << report.str();
    }
    return out.pass ? 0 : 1;
  }
  return 2;
}
