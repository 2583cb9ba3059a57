#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "valmat/family.hpp"
#include "valmat/induction.hpp"
#include "valmat/intersection.hpp"
#include "valmat/json_io.hpp"
#include "valmat/rado.hpp"
#include "valmat/suites.hpp"
#include "valmat/tropical.hpp"
#include "valmat/vgm.hpp"

namespace {

using namespace valmat;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw json_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string pairs_one_based(ElemSet pairs) {
  std::string s = "{";
  bool first = true;
  for (int p : pairs) {
    if (!first) s += ",";
    s += std::to_string(p + 1);
    first = false;
  }
  return s + "}";
}

int cmd_check(const std::string& path, const std::string& kind) {
  std::string text = read_file(path);
  if (kind == "matroid") {
    Matroid m = parse_matroid_json(text);
    ExchangeCheck c = check_basis_exchange(m);
    if (c.ok) {
      std::cout << "ok: basis exchange holds (" << m.bases().size() << " bases)\n";
      return kExitPass;
    }
    std::cout << "violation: " << c.witness->to_string() << "\n";
    return kExitCheckFailed;
  }
  if (kind == "valmat") {
    ValuatedCheck c = check_valuated(parse_valmat_json(text));
    if (c.ok) {
      std::cout << "ok: valuated exchange axiom holds\n";
      return kExitPass;
    }
    std::cout << "violation: " << c.witness->to_string() << "\n";
    return kExitCheckFailed;
  }
  if (kind == "vgm") {
    VgmCheck c = check_vgm(parse_vgm_json(text));
    if (c.ok) {
      std::cout << "ok: vgm axioms hold\n";
      return kExitPass;
    }
    std::cout << "violation: " << c.witness->to_string() << "\n";
    return kExitCheckFailed;
  }
  if (kind == "robust") {
    RobustResult r = is_robust(parse_matroid_json(text));
    if (r.robust) {
      std::cout << "ok: robust with 0-based pair indices S=" << r.s_pairs.to_string() << " K="
                << r.k_pairs.to_string() << " (1-based S=" << pairs_one_based(r.s_pairs) << " K="
                << pairs_one_based(r.k_pairs) << ")\n";
      return kExitPass;
    }
    std::cout << "not robust: " << r.reason << "\n";
    return kExitCheckFailed;
  }
  throw json_error("unknown kind: " + kind);
}

ElemSet parse_set_arg(const std::string& arg) {
  ElemSet x;
  std::istringstream ss(arg);
  int v;
  char sep;
  while (ss >> v) {
    x.insert(v);
    ss >> sep;
  }
  return x;
}

int cmd_induce(const std::string& path, const std::string& eval_set, int layer_override) {
  RMinorRep rep = parse_rminor_json(read_file(path));
  if (layer_override >= 0 && layer_override != rep.layer())
    throw json_error("requested layer " + std::to_string(layer_override) + " does not match the rank identity (d=" +
                     std::to_string(rep.layer()) + ")");
  if (!eval_set.empty()) {
    std::cout << eval_rminor(rep, parse_set_arg(eval_set)).to_string() << "\n";
    return kExitPass;
  }
  std::cout << valmat_to_json(rminor_table(rep));
  return kExitPass;
}

int cmd_dual_cert(const std::string& graph_path, const std::string& matroid_path) {
  WeightedBipGraph g = parse_graph_json(read_file(graph_path));
  Matroid m = parse_matroid_json(read_file(matroid_path));
  DualCert cert = dual_certificate(g, m);
  std::cout << cert_to_json(cert);
  return kExitPass;
}

int cmd_rado_check(const std::string& path, const std::string& lemma) {
  RMinorRep rm = parse_rminor_json(read_file(path));
  RadoRep rep(rm.graph, rm.matroid);
  if (lemma == "rado") {
    bool all_ok = true;
    for_each_subset(rep.v_nodes(), [&](ElemSet x) {
      if (rado_independent(rep, x) != rado_independent_matching(rep, x)) {
        std::cout << "mismatch at X=" << x.to_string() << "\n";
        all_ok = false;
      }
    });
    if (all_ok) std::cout << "ok: rank condition = matching oracle on all subsets of V\n";
    return all_ok ? kExitPass : kExitCheckFailed;
  }
  if (lemma == "rho") {
    auto bad = check_rho_submodular(rep);
    auto more = check_rho_value_bounds(rep);
    bad.insert(bad.end(), more.begin(), more.end());
    for (const std::string& b : bad) std::cout << b << "\n";
    if (bad.empty()) std::cout << "ok: rho is submodular and meets the (ind)/(cir)/(spn) bounds\n";
    return bad.empty() ? kExitPass : kExitCheckFailed;
  }
  if (lemma == "uncrossing") {
    UncrossingReport ur = check_uncrossing(rep);
    for (const std::string& v : ur.violations) std::cout << v << "\n";
    if (ur.ok())
      std::cout << "ok: uncrossing I over " << ur.pairs_checked_one << " pairs, II over " << ur.pairs_checked_two
                << " pairs\n";
    return ur.ok() ? kExitPass : kExitCheckFailed;
  }
  if (lemma == "robust") {
    RobustResult r = is_robust(represented_matroid(rep));
    if (r.robust)
      std::cout << "ok: represented matroid is robust, K=" << pairs_one_based(r.k_pairs) << " (1-based)\n";
    else
      std::cout << "not robust: " << r.reason << "\n";
    return r.robust ? kExitPass : kExitCheckFailed;
  }
  throw json_error("unknown lemma: " + lemma);
}

int cmd_family(int n, std::uint64_t seed, const std::string& emit, bool neg_inf) {
  Rng rng(seed);
  if (emit == "b0") {
    std::cout << sparse_paving_to_json(2 * n, 4, family_H(n));
    return kExitPass;
  }
  if (emit == "b1") {
    std::vector<ElemSet> circuits;
    for (ElemSet c : family_H(n))
      if (c != family_star()) circuits.push_back(c);
    std::cout << sparse_paving_to_json(2 * n, 4, circuits);
    return kExitPass;
  }
  if (emit == "valmat") {
    std::cout << valmat_to_json(make_Fn(random_family_params(rng, n, neg_inf)));
    return kExitPass;
  }
  if (emit == "hnat") {
    FamilyParams p;
    p.n = n;
    p.star_value = rng.negative_rational();
    for (ElemSet x : family_H(n)) {
      if (x == family_star()) continue;
      Rat frac = make_rat(rng.range(1, 999), 1000);
      p.values[x] = ExtRat(Rat(-1) + (p.star_value + 1) * frac);
    }
    std::cout << vgm_to_json(make_h_natural(p));
    return kExitPass;
  }
  throw json_error("unknown emit target: " + emit);
}

int cmd_trop_check(const std::string& poly_path, const std::string& matrix_path) {
  TropPoly p = parse_troppoly_json(read_file(poly_path));
  std::vector<ExpVec> support;
  for (const auto& [a, c] : p.coeffs()) support.push_back(a);
  bool mconv = is_mconvex(support);
  bool nonneg = p.nonneg_coeffs();
  std::cout << "support M-convex: " << (mconv ? "yes" : "no") << "\n";
  std::cout << "coefficients nonnegative: " << (nonneg ? "yes" : "no") << "\n";
  bool ok = mconv && nonneg;
  if (!matrix_path.empty()) {
    CommutationReport rep = check_commutation(parse_puiseux_matrix_json(read_file(matrix_path)), p);
    for (const std::string& d : rep.diffs) std::cout << d << "\n";
    std::cout << (rep.ok() ? "commutation: ok\n" : "commutation: FAILED\n");
    ok = ok && rep.ok();
  }
  return ok ? kExitPass : kExitCheckFailed;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

int cmd_suite(const std::string& name, std::uint64_t seed) {
  std::vector<std::string> to_run;
  if (name == "all")
    to_run = suite_names();
  else
    to_run.push_back(name);
  bool all_pass = true;
  for (const std::string& s : to_run) {
    SuiteResult res = run_suite(s, seed);
    // stdout is byte-identical for a fixed seed; timing goes to stderr
    std::cout << "suite " << res.suite << ": " << (res.pass ? "PASS" : "FAIL") << "\n";
    for (const SuiteCheck& c : res.checks)
      std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << (c.detail.empty() ? "" : " - " + c.detail)
                << "\n";
    std::cout << "{\"suite\":\"" << json_escape(res.suite) << "\",\"pass\":" << (res.pass ? "true" : "false")
              << ",\"seed\":" << seed << ",\"checks\":" << res.checks.size() << "}\n";
    std::cerr << "suite " << res.suite << " took " << res.elapsed_ms << " ms\n";
    all_pass = all_pass && res.pass;
  }
  return all_pass ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for valuated matroids and their representations"};
  app.require_subcommand(1);

  std::string path, kind = "valmat", eval_set, lemma = "rado", matroid_path, matrix_path, emit = "valmat",
              suite_name;
  bool table = false, neg_inf = false;
  int n = 3, layer = -1;
  std::uint64_t seed = 0;

  auto* check = app.add_subcommand("check", "verify the axioms of an artifact file");
  check->add_option("file", path)->required();
  check->add_option("--kind", kind, "matroid|valmat|vgm|robust");

  auto* induce = app.add_subcommand("induce", "evaluate an R-minor representation");
  induce->add_option("file", path)->required();
  induce->add_flag("--table", table, "dump the full value table (default)");
  induce->add_option("--eval", eval_set, "comma-separated set to evaluate");
  induce->add_option("--layer", layer, "expected layer, validated against the rank identity");

  auto* dual = app.add_subcommand("dual-cert", "optimal dual certificate for an induced matching program");
  dual->add_option("graph", path)->required();
  dual->add_option("matroid", matroid_path)->required();

  auto* rado = app.add_subcommand("rado-check", "structural lemma checks on a representation");
  rado->add_option("file", path)->required();
  rado->add_option("--lemma", lemma, "rado|rho|uncrossing|robust");

  auto* family = app.add_subcommand("family", "emit counterexample-family artifacts");
  family->add_option("--n", n)->check(CLI::Range(2, 16));
  family->add_option("--seed", seed);
  family->add_option("--emit", emit, "valmat|b0|b1|hnat");
  family->add_flag("--neg-inf", neg_inf, "allow -inf values off X*");

  auto* vgmc = app.add_subcommand("vgm-check", "verify the vgm axioms of a file");
  vgmc->add_option("file", path)->required();

  auto* trop = app.add_subcommand("trop-check", "tropical support and commutation checks");
  trop->add_option("poly", path)->required();
  trop->add_option("--matrix", matrix_path, "Puiseux matrix file (array of rows of scalar strings)");

  auto* suite = app.add_subcommand("suite", "run a named acceptance suite (or 'all')");
  suite->add_option("name", suite_name)->required();
  suite->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(path, kind);
    if (induce->parsed()) return cmd_induce(path, eval_set, layer);
    if (dual->parsed()) return cmd_dual_cert(path, matroid_path);
    if (rado->parsed()) return cmd_rado_check(path, lemma);
    if (family->parsed()) return cmd_family(n, seed, emit, neg_inf);
    if (vgmc->parsed()) return cmd_check(path, "vgm");
    if (trop->parsed()) return cmd_trop_check(path, matrix_path);
    if (suite->parsed()) return cmd_suite(suite_name, seed);
  } catch (const json_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const unknown_suite_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const no_certificate_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
