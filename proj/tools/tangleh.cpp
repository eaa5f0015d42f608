#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tangleh/complex.hpp"
#include "tangleh/error.hpp"
#include "tangleh/moves.hpp"
#include "tangleh/render.hpp"

namespace {

using namespace tangleh;

struct InputOpts {
  std::string file;
  std::string inline_code;
  std::string signs_override;
  std::string pairing = "ad";
  int max_n = kMaxCrossingsDefault;
};

struct OutputOpts {
  std::string field = "q";
  bool json = false;
  bool legacy = false;
  std::string normalize;
  bool euler_check = false;
};

void add_input_flags(CLI::App* cmd, InputOpts& in) {
  auto* f = cmd->add_option("--file", in.file, "read the diagram code from a file");
  auto* p = cmd->add_option("--pd", in.inline_code, "inline diagram code (JSON)");
  f->excludes(p);
  cmd->add_option("--signs", in.signs_override, "override the sign string");
  cmd->add_option("--zero-pairing", in.pairing, "strand pairs joined by the 0-smoothing")
      ->check(CLI::IsMember({"ad", "ab"}));
  cmd->add_option("--max-n", in.max_n, "crossing-count cap");
}

std::string read_source(const InputOpts& in) {
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) fail(Err::MalformedSyntax, "cannot open file: " + in.file);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  if (!in.inline_code.empty()) return in.inline_code;
  fail(Err::MalformedSyntax, "no input: pass --file PATH or --pd 'JSON'");
}

bool looks_like_gauss(const std::string& text) {
  auto j = nlohmann::json::parse(text, nullptr, false);
  return j.is_object() && j.contains("gauss");
}

Tangle load_tangle(const InputOpts& in) {
  std::string text = read_source(in);
  if (looks_like_gauss(text))
    fail(Err::MalformedSyntax,
         "gauss codes are validated only; homology and smoothing run on pd codes");
  Tangle d = parse_pd_code(text);
  if (!in.signs_override.empty()) {
    d.signs = in.signs_override;
    d.signs_defaulted = false;
  }
  validate_tangle(d);
  return d;
}

bool is_prime(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
  if (spec == "q") return fn(QField{});
  if (spec == "gf2") return fn(PField{2});
  if (spec.rfind("gfp:", 0) == 0) {
    uint32_t p = 0;
    try {
      p = static_cast<uint32_t>(std::stoul(spec.substr(4)));
    } catch (const std::exception&) {
      fail(Err::MalformedSyntax, "bad field characteristic in '" + spec + "'");
    }
    if (!is_prime(p)) fail(Err::MalformedSyntax, "field characteristic must be prime: " + spec);
    return fn(PField{p});
  }
  fail(Err::MalformedSyntax, "unknown field '" + spec + "' (expected q, gf2, or gfp:P)");
}

int cmd_homology(const InputOpts& in, const OutputOpts& out) {
  Tangle d = load_tangle(in);
  Pairing pairing = pairing_from_string(in.pairing);
  return with_field(out.field, [&](auto K) {
    auto C = build_complex(d, pairing, in.max_n);
    const bool want_reps = out.json || out.legacy;
    auto H = compute_homology(C, K, want_reps);
    Summary s = summarize(d, C, H, K);
    s.euler = graded_euler_characteristic(d, pairing, in.max_n);
    if (out.euler_check && table_euler(s.table) != s.euler)
      fail(Err::InternalInconsistency,
           "graded Euler characteristic mismatch: homology gives " + table_euler(s.table).str() +
               ", state sum gives " + s.euler.str());
    int shift = 0;
    if (!out.normalize.empty()) {
      if (out.normalize != "min-zero")
        fail(Err::MalformedSyntax, "unknown normalization '" + out.normalize + "'");
      shift = min_zero_shift(s.table);
    }
    if (out.json)
      std::cout << homology_json(d, s, !out.normalize.empty(), shift);
    else
      std::cout << homology_text(d, s, out.legacy, shift);
    return 0;
  });
}

int cmd_smooth(const InputOpts& in, const std::string& state) {
  Tangle d = load_tangle(in);
  std::cout << smooth_report(d, state, pairing_from_string(in.pairing), in.max_n);
  return 0;
}

int cmd_localmap(const InputOpts& in, const std::string& from, const std::string& to) {
  Tangle d = load_tangle(in);
  std::cout << localmap_report(d, from, to, pairing_from_string(in.pairing), in.max_n);
  return 0;
}

int cmd_euler(const InputOpts& in, bool json) {
  Tangle d = load_tangle(in);
  Laurent chi = graded_euler_characteristic(d, pairing_from_string(in.pairing), in.max_n);
  if (json) {
    nlohmann::ordered_json doc;
    doc["n"] = d.n();
    doc["n_plus"] = d.n_plus();
    doc["n_minus"] = d.n_minus();
    doc["euler"] = chi.str();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << chi.str() << "\n";
  }
  return 0;
}

int cmd_validate(const InputOpts& in) {
  std::string text = read_source(in);
  if (looks_like_gauss(text)) {
    GaussCode g = parse_gauss_code(text);
    std::string topo;
    for (const auto& t : g.topologies) topo += t;
    std::cout << "OK: gauss code, " << g.crossings() << " crossing(s), " << g.components.size()
              << " component(s), topology " << topo << "\n";
    return 0;
  }
  Tangle d = parse_pd_code(text);
  if (!in.signs_override.empty()) {
    d.signs = in.signs_override;
    d.signs_defaulted = false;
  }
  validate_tangle(d);
  std::set<std::string> labels;
  for (const auto& t : d.tuples)
    for (const auto& tok : t) labels.insert(strip_label(tok));
  if (d.signs_defaulted) std::cout << "warning: sign type defaulted to all '+'\n";
  std::cout << "OK: " << d.n() << " crossing(s), " << labels.size() << " strand label(s), "
            << d.free_circles << " free circle(s), " << d.free_arcs << " free arc(s)\n";
  std::cout << "canonical: " << serialize_pd_code(d) << "\n";
  return 0;
}

struct FuzzOpts {
  uint64_t seed = 1;
  int trials = 50;
  int max_n = 6;
  std::string moves = "r1,r2";
  std::string field = "q";
  std::string pairing = "ad";
};

int cmd_fuzz(const FuzzOpts& fo) {
  bool do_r1 = fo.moves.find("r1") != std::string::npos;
  bool do_r2 = fo.moves.find("r2") != std::string::npos;
  if (!do_r1 && !do_r2)
    fail(Err::MalformedSyntax, "no moves enabled: --moves takes r1, r2, or r1,r2");
  Pairing pairing = pairing_from_string(fo.pairing);

  return with_field(fo.field, [&](auto K) {
    std::mt19937_64 rng(fo.seed);
    auto ri = [&rng](int lo, int hi) {
      return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    };
    int applied = 0;
    for (int trial = 0; trial < fo.trials; ++trial) {
      Tangle d = random_tangle(rng(), ri(0, fo.max_n), ri(0, 3));
      Cdiag cd = compile(d);

      // Universally valid sites only: R1 anywhere, R2 as a self-slide or
      // against a free component (free components are parallel to anything).
      struct Site {
        bool r1;
        std::string s1, s2;
        char hand;
      };
      std::vector<Site> sites;
      if (do_r1) {
        for (const auto& lab : cd.labels) sites.push_back({true, lab, "", "+-"[ri(0, 1)]});
        if (d.free_arcs > 0) sites.push_back({true, kFreeArc, "", "+-"[ri(0, 1)]});
        if (d.free_circles > 0) sites.push_back({true, kFreeCircle, "", "+-"[ri(0, 1)]});
      }
      if (do_r2) {
        for (const auto& lab : cd.labels) {
          sites.push_back({false, lab, lab, ' '});
          if (d.free_arcs > 0) {
            sites.push_back({false, lab, kFreeArc, ' '});
            sites.push_back({false, kFreeArc, lab, ' '});
          }
          if (d.free_circles > 0) {
            sites.push_back({false, lab, kFreeCircle, ' '});
            sites.push_back({false, kFreeCircle, lab, ' '});
          }
        }
        if (d.free_arcs >= 2) sites.push_back({false, kFreeArc, kFreeArc, ' '});
        if (d.free_circles >= 2) sites.push_back({false, kFreeCircle, kFreeCircle, ' '});
        if (d.free_arcs >= 1 && d.free_circles >= 1) {
          sites.push_back({false, kFreeArc, kFreeCircle, ' '});
          sites.push_back({false, kFreeCircle, kFreeArc, ' '});
        }
      }
      if (sites.empty()) continue;
      const Site& site = sites[ri(0, static_cast<int>(sites.size()) - 1)];
      Tangle moved = site.r1 ? apply_r1(d, site.s1, site.hand) : apply_r2(d, site.s1, site.s2);

      auto before = homology_table(d, K, pairing, kMaxCrossingsDefault);
      auto after = homology_table(moved, K, pairing, kMaxCrossingsDefault);
      ++applied;
      if (before != after) {
        std::cerr << "mismatch on trial " << trial << ": " << serialize_pd_code(d) << " after "
                  << (site.r1 ? (std::string("r1 ") + site.s1 + " " + site.hand)
                              : (std::string("r2 ") + site.s1 + " " + site.s2))
                  << " -> " << serialize_pd_code(moved) << "\n";
        return 1;
      }
    }
    std::cout << "fuzz: " << fo.trials << " trial(s), " << applied
              << " move(s) applied, 0 mismatches\n";
    return 0;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bigraded homology of tangle diagrams from extended pd codes"};
  app.require_subcommand(1);

  InputOpts in;
  OutputOpts out;
  std::string state, from, to;
  bool euler_json = false;
  FuzzOpts fo;

  auto* homology = app.add_subcommand("homology", "compute the bigraded homology table");
  add_input_flags(homology, in);
  homology->add_option("--field", out.field, "coefficient field: q, gf2, or gfp:P");
  homology->add_flag("--json", out.json, "emit the JSON document");
  homology->add_flag("--legacy-grading", out.legacy,
                     "print weighted-average quantum degrees as decimals");
  homology->add_option("--normalize", out.normalize, "min-zero: shift q so the minimum is 0");
  homology->add_flag("--euler-check", out.euler_check,
                     "cross-check the table against the state-sum Euler characteristic");

  auto* smooth = app.add_subcommand("smooth", "list the components of one smoothing state");
  add_input_flags(smooth, in);
  smooth->add_option("--state", state, "smoothing state bit string")->required();

  auto* localmap = app.add_subcommand("localmap", "print one edge map of the cube");
  add_input_flags(localmap, in);
  localmap->add_option("--from", from, "source state bit string")->required();
  localmap->add_option("--to", to, "target state bit string")->required();

  auto* euler = app.add_subcommand("euler", "state-sum graded Euler characteristic");
  add_input_flags(euler, in);
  euler->add_flag("--json", euler_json, "emit JSON");

  auto* fuzz = app.add_subcommand("fuzz", "randomized Reidemeister invariance campaign");
  fuzz->add_option("--seed", fo.seed, "campaign seed");
  fuzz->add_option("--trials", fo.trials, "number of diagrams");
  fuzz->add_option("--max-n", fo.max_n, "crossing cap per diagram");
  fuzz->add_option("--moves", fo.moves, "comma list of enabled moves (r1,r2)");
  fuzz->add_option("--field", fo.field, "coefficient field: q, gf2, or gfp:P");
  fuzz->add_option("--zero-pairing", fo.pairing, "strand pairs joined by the 0-smoothing")
      ->check(CLI::IsMember({"ad", "ab"}));

  auto* validate = app.add_subcommand("validate", "parse and validate a pd or gauss code");
  add_input_flags(validate, in);

  CLI11_PARSE(app, argc, argv);

  try {
    if (homology->parsed()) return cmd_homology(in, out);
    if (smooth->parsed()) return cmd_smooth(in, state);
    if (localmap->parsed()) return cmd_localmap(in, from, to);
    if (euler->parsed()) return cmd_euler(in, euler_json);
    if (fuzz->parsed()) return cmd_fuzz(fo);
    if (validate->parsed()) return cmd_validate(in);
  } catch (const TangleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return err_is_internal(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
