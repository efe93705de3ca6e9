// mixvol: exact verification of difference-body and mixed-volume
// inequalities on rational polytopes.
//
// Subcommands:
//   verify <checker> ...   run one checker on one body, print a report
//   search ...             seeded random trials of a checker
//   selftest               built-in identity suite
//
// Exit codes: 0 pass, 2 violation found, 1 usage or computation error.

#include "mixvol/combinatorics.hpp"
#include "mixvol/constructions.hpp"
#include "mixvol/covers.hpp"
#include "mixvol/io.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/polytope.hpp"
#include "mixvol/report.hpp"
#include "mixvol/search.hpp"
#include "mixvol/selftest.hpp"
#include "mixvol/verifiers.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

using namespace mixvol;

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct CommonOptions {
  std::string out_path;
  std::string format = "json";
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--out", opt.out_path, "Write the report to this file instead of stdout");
  cmd->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_flag("--force", opt.force,
                "Lift the dimension-8 soft cap (exact high-dimensional hulls are expensive)");
}

void apply_force(const CommonOptions& opt) {
  if (opt.force) {
    set_hull_dimension_limit(64);
    std::cerr << "warning: dimension cap lifted to 64; runtime may be very long\n";
  }
}

void emit(const CommonOptions& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + opt.out_path);
  out << text << "\n";
}

struct VerifyOptions {
  CommonOptions common;
  std::string checker;
  std::string body_path;
  std::string simplex_sides;
  std::string staircase_path;
  std::vector<std::string> l_paths;
  std::string cover_text;
  std::string sigma_text;
  int k = -1;
  int p = 1;
  std::vector<int> kvec;
  int n = 0;
};

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t at = 0;
  while (at <= text.size()) {
    const std::size_t comma = text.find(',', at);
    out.push_back(parse_rational(
        text.substr(at, comma == std::string::npos ? std::string::npos : comma - at)));
    if (comma == std::string::npos) break;
    at = comma + 1;
  }
  return out;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  for (const Rational& r : parse_rational_list(text)) {
    if (denominator(r) != 1) throw std::invalid_argument("expected integers in list");
    out.push_back(static_cast<int>(numerator(r)));
  }
  return out;
}

VPolytope load_main_body(const VerifyOptions& opt) {
  const int sources = (opt.body_path.empty() ? 0 : 1) + (opt.simplex_sides.empty() ? 0 : 1) +
                      (opt.staircase_path.empty() ? 0 : 1);
  if (sources != 1) {
    throw std::invalid_argument(
        "exactly one body source required: --body file | --simplex c1,...,cn | --staircase "
        "file");
  }
  if (!opt.body_path.empty()) return load_body_file(opt.body_path);
  if (!opt.simplex_sides.empty()) return axis_simplex(parse_rational_list(opt.simplex_sides));
  return load_staircase_file(opt.staircase_path);
}

int require_k(const VerifyOptions& opt) {
  if (opt.k < 0) throw std::invalid_argument(opt.checker + ": --k is required");
  return opt.k;
}

VerificationReport verify_vandermonde(const VerifyOptions& opt) {
  if (opt.n < 1) throw std::invalid_argument("vandermonde: --n is required");
  const int n = opt.n;
  const int p = opt.p;
  Rational lhs;
  Rational rhs;
  std::vector<std::pair<std::string, ReportParam>> params{{"n", std::int64_t{n}},
                                                          {"p", std::int64_t{p}}};
  if (opt.k >= 0) {
    // Sum over k_1+...+k_p = k of prod C(n, k_i) = C(pn, k).
    Integer sum(0);
    for (const std::vector<int>& parts : compositions(opt.k, p, n)) {
      Integer term(1);
      for (int ki : parts) term *= binomial(n, ki);
      sum += term;
    }
    lhs = Rational(sum);
    rhs = Rational(binomial(p * n, opt.k));
    params.emplace_back("k", std::int64_t{opt.k});
  } else {
    // Sum_k C(pn,k) C(n,k) = C(pn+n, n).
    Integer sum(0);
    for (int k = 0; k <= n; ++k) sum += binomial(p * n, k) * binomial(n, k);
    lhs = Rational(sum);
    rhs = Rational(binomial(p * n + n, n));
  }
  return make_report("vandermonde", std::move(params), lhs, rhs, /*expected_equality=*/true,
                     /*proven=*/true, digest_bodies({}));
}

VerificationReport run_checker(const VerifyOptions& opt) {
  if (opt.checker == "vandermonde") return verify_vandermonde(opt);

  const VPolytope body = load_main_body(opt);
  const int n = body.ambient_dim();
  VolumeCache cache;

  if (opt.checker == "rogers-shephard") return check_rogers_shephard(body, &cache);
  if (opt.checker == "godbersen") return check_godbersen(body, require_k(opt), &cache);
  if (opt.checker == "schneider") return check_schneider(body, opt.p, &cache);
  if (opt.checker == "conj1") return check_conjecture1(body, opt.p, require_k(opt), &cache);
  if (opt.checker == "conj2") return check_conjecture2(body, opt.p, opt.kvec, &cache);
  if (opt.checker == "conj2-reduction") {
    return check_conjecture2_reduction(body, opt.p, opt.kvec, &cache);
  }
  if (opt.checker == "alesker") return alesker_coefficient(body, opt.p, opt.kvec, &cache);
  if (opt.checker == "dual-bt") {
    if (opt.cover_text.empty()) {
      throw std::invalid_argument("dual-bt: --cover is required (e.g. --cover 1,2/2/1)");
    }
    return check_dual_bt(body, cover_from_text(n, opt.p, opt.cover_text), &cache);
  }
  if (opt.checker == "decomposition") {
    std::vector<VPolytope> l_bodies;
    for (const std::string& path : opt.l_paths) l_bodies.push_back(load_body_file(path));
    if (l_bodies.empty()) l_bodies.assign(opt.p, body);  // default L_i = K
    return check_decomposition(body, l_bodies, &cache);
  }
  if (opt.checker == "lemma-exact") {
    if (opt.sigma_text.empty()) {
      throw std::invalid_argument("lemma-exact: --sigma is required (e.g. --sigma 1,3)");
    }
    std::vector<int> members = parse_index_list(opt.sigma_text);
    for (int& m : members) m -= 1;  // 1-based on the command line
    const CoordinateSubset sigma = CoordinateSubset::of(n, std::move(members));
    const int k = sigma.size();
    if (k > 0 && opt.l_paths.empty()) {
      throw std::invalid_argument("lemma-exact: --L body.json is required when sigma is nonempty");
    }
    std::vector<VPolytope> bodies_w1;
    if (k > 0) {
      const VPolytope l_body = load_body_file(opt.l_paths.front());
      bodies_w1.assign(k, l_body);
    }
    const std::vector<VPolytope> bodies_w2(n - k, body);
    return lemma_exact_sequence_check(sigma, bodies_w2, bodies_w1, &cache);
  }
  throw std::invalid_argument("unknown checker: " + opt.checker);
}

int cmd_verify(const VerifyOptions& opt) {
  apply_force(opt.common);
  const VerificationReport report = run_checker(opt);
  emit(opt.common,
       opt.common.format == "csv" ? report_csv_text(report) : report_json_text(report));
  if (is_violation(report)) {
    std::cerr << "VIOLATION: " << report.name << " gap " << to_string(report.gap) << "\n";
    return kExitViolation;
  }
  return kExitPass;
}

struct SearchOptions {
  CommonOptions common;
  std::string target = "conj2";
  std::string body_class = "antiblocking";
  SearchConfig config;
  int k = -1;
};

int cmd_search(const SearchOptions& opt) {
  apply_force(opt.common);
  SearchConfig config = opt.config;
  if (!parse_target(opt.target, config.target)) {
    throw std::invalid_argument(
        "unsupported search target: " + opt.target +
        " (searchable: rogers-shephard godbersen schneider conj1 conj2 alesker decomposition)");
  }
  if (!parse_body_class(opt.body_class, config.body_class)) {
    throw std::invalid_argument("--class must be antiblocking or general");
  }
  if (opt.k >= 0) {
    if (!config.k_spec.empty()) {
      throw std::invalid_argument("give either --k or --kvec, not both");
    }
    config.k_spec = {opt.k};
  }
  if (config.n * config.p > hull_dimension_limit()) {
    throw std::invalid_argument("search needs dimension " + std::to_string(config.n * config.p) +
                                " > cap " + std::to_string(hull_dimension_limit()) +
                                "; pass --force to proceed");
  }
  config.out_format = opt.common.format == "csv" ? OutputFormat::csv : OutputFormat::json;
  const SearchResult result = search_counterexamples(config);
  emit(opt.common, config.out_format == OutputFormat::csv ? search_csv_text(config, result)
                                                          : search_json_text(config, result));
  if (result.summary.violations > 0) {
    std::cerr << "VIOLATION: " << result.summary.violations << " of " << result.summary.trials
              << " trials, min gap " << to_string(result.summary.min_gap) << "\n";
    return kExitViolation;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact mixed-volume and difference-body inequality checker"};
  app.require_subcommand(1);

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "Run one checker on one body");
  verify
      ->add_option("checker", verify_opt.checker,
                   "One of: rogers-shephard godbersen schneider conj1 conj2 conj2-reduction "
                   "dual-bt decomposition alesker lemma-exact vandermonde")
      ->required();
  verify->add_option("--body", verify_opt.body_path, "Body JSON file ({dim, vertices})");
  verify->add_option("--simplex", verify_opt.simplex_sides,
                     "Axis simplex conv{0, c1 e1, ..., cn en} from side lengths c1,...,cn");
  verify->add_option("--staircase", verify_opt.staircase_path,
                     "Staircase JSON file ({dim, generators})");
  verify->add_option("--L", verify_opt.l_paths,
                     "Companion body JSON file(s): L factors for decomposition, the W1 body for "
                     "lemma-exact");
  verify->add_option("--k", verify_opt.k, "Multiplicity parameter k");
  verify->add_option("--p", verify_opt.p, "Number of factors p")->capture_default_str();
  verify->add_option("--kvec", verify_opt.kvec,
                     "Comma-separated k_1,...,k_p (alesker: partition k_0,...,k_p)")
      ->delimiter(',');
  verify->add_option("--cover", verify_opt.cover_text,
                     "Uniform cover, blocks '/'-separated, members 1-based (e.g. 1,2/2/1)");
  verify->add_option("--sigma", verify_opt.sigma_text,
                     "Coordinate subset, 1-based (e.g. 1,3), for lemma-exact");
  verify->add_option("--n", verify_opt.n, "Ambient dimension (vandermonde only)");
  add_common(verify, verify_opt.common);

  SearchOptions search_opt;
  CLI::App* search = app.add_subcommand("search", "Seeded random counterexample search");
  search->add_option("--target", search_opt.target, "Checker to search")->capture_default_str();
  search->add_option("--class", search_opt.body_class, "Body class: antiblocking | general")
      ->capture_default_str();
  search->add_option("--n", search_opt.config.n, "Ambient dimension")->capture_default_str();
  search->add_option("--p", search_opt.config.p, "Number of factors")->capture_default_str();
  search->add_option("--k", search_opt.k, "Multiplicity parameter for godbersen/conj1");
  search->add_option("--kvec", search_opt.config.k_spec,
                     "Comma-separated multiplicities for conj2/alesker")
      ->delimiter(',');
  search->add_option("--trials", search_opt.config.trials, "Number of trials")
      ->capture_default_str();
  search->add_option("--seed", search_opt.config.seed, "Master seed (required: runs must be reproducible)")
      ->required();
  search->add_option("--grid-q", search_opt.config.grid_q,
                     "Coordinate grid denominator for generated bodies")
      ->capture_default_str();
  search->add_option("--max-generators", search_opt.config.max_generators,
                     "Upper bound on generator/point count per body")
      ->capture_default_str();
  add_common(search, search_opt.common);

  bool quick = false;
  bool inject_fault = false;
  CLI::App* selftest = app.add_subcommand("selftest", "Run the built-in identity suite");
  selftest->add_flag("--quick", quick, "Skip the 6-dimensional cases and shrink corpora");
  selftest->add_flag("--inject-fault", inject_fault,
                     "Add a perturbed-constant control item that must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return kExitError;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_opt);
    if (search->parsed()) return cmd_search(search_opt);
    return run_selftest(quick, inject_fault, std::cout) ? kExitPass : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
