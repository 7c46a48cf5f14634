#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "kwise/approx.hpp"
#include "kwise/error.hpp"
#include "kwise/extremal.hpp"
#include "kwise/gram.hpp"
#include "kwise/grid.hpp"
#include "kwise/symmetrize.hpp"
#include "kwise/verify/json_io.hpp"
#include "kwise/verify/suites.hpp"

namespace kwise::cli {
namespace {

using io::Json;
using io::to_json;

struct Report {
  std::string command;
  Json params = Json::object();
  Json rows = Json::array();
  Json verdicts = Json::array();

  void verdict(const std::string& id, bool passed, Json detail = Json()) {
    Json v = {{"id", id}, {"passed", passed}};
    if (!detail.is_null()) v["detail"] = std::move(detail);
    verdicts.push_back(std::move(v));
  }
  // Recorded-only verdicts carry "gating": false and never set the exit code.
  bool failed() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const Json& v) {
      return !v.value("passed", true) && v.value("gating", true);
    });
  }
};

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

void check_nk(int n, int k, int k_min = 1) {
  require(n >= 1, "n must be >= 1");
  require(k >= k_min && k <= n, "k must satisfy " + std::to_string(k_min) + " <= k <= n");
}

Json pair_json(const ExtremalPair& p) {
  return {{"mu", to_json(p.mu)}, {"nu", to_json(p.nu)}, {"test", to_json(p.test)},
          {"advantage", to_json(p.advantage)}, {"indist_level", p.indist_level}};
}

// ---------------------------------------------------------------------------

Report cmd_grid(int n, const std::string& kind_text) {
  require(n >= 1, "n must be >= 1");
  Report r{"grid"};
  const GridKind kind = parse_grid_kind(kind_text);
  r.params = {{"n", n}, {"grid", std::string(to_string(kind))}};
  const Grid g = grid_points(kind, n);
  for (std::size_t i = 0; i < g.size(); ++i) {
    Json row = {{"index", i}, {"point", to_json(g.points[i])}};
    if (kind == GridKind::kOut) row["weight"] = point_to_weight(n, g.points[i]);
    r.rows.push_back(std::move(row));
  }
  // IN_{n+1} stretched by (n+1)/n lands on OUT_n.
  if (kind == GridKind::kOut) {
    const auto stretched = stretch_map(n).apply(grid_points(GridKind::kIn, n + 1).points);
    r.verdict("stretch-identity", stretched == g.points);
  }
  return r;
}

Report cmd_gram(int n, int max_deg) {
  require(n >= 1, "n must be >= 1");
  require(max_deg >= 0, "max-deg must be >= 0");
  require(max_deg < n, "max-deg must be < n");
  Report r{"gram"};
  r.params = {{"n", n}, {"max_deg", max_deg}};
  const OrthoBasis rec = build_basis_recurrence(n, max_deg);
  const OrthoBasis gs = build_basis_gs(n, max_deg);
  for (int d = 0; d <= max_deg; ++d) {
    const auto i = static_cast<std::size_t>(d);
    Json row = {{"d", d}, {"psi", to_json(rec.psi[i])}, {"norm_sq", to_json(rec.norm_sq[i])}};
    row["alpha_sq"] = d >= 1 ? to_json(alpha_sq(n, d)) : Json();
    r.rows.push_back(std::move(row));
  }
  r.verdict("recurrence-equals-gram-schmidt", rec == gs);
  return r;
}

Report cmd_approx(int n, int k, std::optional<int> max_deg, const std::string& grid_text,
                  const std::string& method) {
  check_nk(n, k);
  const GridKind kind = parse_grid_kind(grid_text);
  require(method == "lp" || method == "truncate", "method must be lp or truncate");
  const int deg = max_deg.value_or(k - 1);
  require(deg >= 0, "max-deg must be >= 0");
  Report r{"approx"};
  r.params = {{"n", n}, {"k", k}, {"max_deg", deg}, {"grid", std::string(to_string(kind))},
              {"method", method}};
  const Polynomial xk = Polynomial::monomial(k);
  ApproxCertificate cert = [&] {
    if (method == "lp") return linf_best_approx(xk, grid_points(kind, n), deg);
    require(deg == k - 1, "truncate produces degree k-1; max-deg must be k-1");
    ApproxCertificate out = monomial_gram_truncation(n, k);
    return kind == GridKind::kOut ? out : shift_reduce(xk, out);
  }();
  Json row = to_json(cert);
  row["uniform_reference"] = to_json(uniform_reference_error(k));
  if (k < n) {
    row["hardness_reference_sq"] = to_json(monomial_hardness_ref_sq(n, k));
    row["c_sq"] = to_json(monomial_leading_coeff_sq(n, k));
  }
  r.rows.push_back(std::move(row));
  r.verdict("certificate-integrity", cert.integrity_holds());
  return r;
}

Report cmd_symm_pw(int n, int k, std::optional<int> w) {
  check_nk(n, k, 0);
  require(!w || (*w >= 0 && *w <= k), "w must satisfy 0 <= w <= k");
  Report r{"symm pw"};
  r.params = {{"n", n}, {"k", k}};
  if (w) r.params["w"] = *w;
  Polynomial sum;
  for (int v = 0; v <= k; ++v) {
    const SymmetrizedTest p = build_pw(n, k, v);
    sum += p.poly;
    if (w && v != *w) continue;
    Json row = {{"w", v}, {"poly", to_json(p.poly)}, {"zeros", to_json(p.zeros)},
                {"leading_abs", to_json(p.leading_abs)}, {"leading_sign", p.leading_sign}};
    if ((n - k) % 2 == 0) {
      const Rational closed = cw_closed_form(n, k, v);
      row["closed_form"] = to_json(closed);
      r.verdict("closed-form-w" + std::to_string(v), closed == p.leading_abs);
    }
    r.rows.push_back(std::move(row));
  }
  r.verdict("partition-of-unity", sum == Polynomial::constant(Rational(1)));
  return r;
}

Report cmd_symm_argmax(int n, int k) {
  check_nk(n, k, 0);
  require(n % 2 == 0 && k % 2 == 0, "argmax requires even n and even k");
  Report r{"symm argmax"};
  r.params = {{"n", n}, {"k", k}};
  const CwArgmax a = cw_argmax(n, k);
  r.rows.push_back({{"argmax_w", a.w}, {"mirror", a.mirror}, {"cw_max", to_json(a.leading_abs)},
                    {"central_closed_form", to_json(a.central_closed_form)},
                    {"magnitudes", to_json(a.magnitudes)}});
  r.verdict("argmax-at-center", a.w == k / 2);
  r.verdict("central-closed-form", a.leading_abs == a.central_closed_form);
  return r;
}

Report cmd_pair(int n, int k, std::optional<int> w, bool best_w, std::optional<std::string> tv) {
  check_nk(n, k);
  const int chosen = (w ? 1 : 0) + (best_w ? 1 : 0) + (tv ? 1 : 0);
  require(chosen == 1, "give exactly one of --w, --best-w, --tv");
  Report r{"pair"};
  r.params = {{"n", n}, {"k", k}};
  if (tv) {
    const TvMode mode = parse_tv_mode(*tv);
    require(mode != TvMode::kEnumerate || k <= kMaxEnumerateK,
            "enumerate requires k <= " + std::to_string(kMaxEnumerateK));
    r.params["tv"] = std::string(to_string(mode));
    const TvResult res = extremal_tv(n, k, mode);
    Json row = pair_json(res.pair);
    row["tv"] = to_json(res.tv);
    row["exact"] = res.exact;
    row["lp_solves"] = res.lp_solves;
    r.rows.push_back(std::move(row));
    r.verdict("indistinguishable", is_jwise_indist(res.pair.mu, res.pair.nu, k - 1));
    return r;
  }
  int target = w.value_or(0);
  require(target >= 0 && target <= k, "w must satisfy 0 <= w <= k");
  if (best_w) {
    r.params["best_w"] = true;
    Rational best(-1);
    for (int v = 0; v <= k; ++v) {
      const Rational a = extremal_pair_for_test(n, k, v).advantage;
      if (a > best) {
        best = a;
        target = v;
      }
    }
  } else {
    r.params["w"] = target;
  }
  const ExtremalPair p = extremal_pair_for_test(n, k, target);
  const DualityReport d = duality_check(n, k, target);
  Json row = pair_json(p);
  row["w"] = target;
  row["approx_error"] = to_json(d.approx_error);
  r.rows.push_back(std::move(row));
  r.verdict("strong-duality", d.holds && d.lp_advantage == p.advantage);
  return r;
}

Json bound_row(const BoundReport& b) {
  Json row = {{"n", b.n}, {"k", b.k}, {"B_sq", to_json(b.bound_sq)}, {"reference_w", b.reference_w},
              {"lp_by_w", to_json(b.lp_by_w)}, {"lp_advantage", to_json(b.lp_advantage)},
              {"max_lp_advantage", to_json(b.max_lp_advantage)},
              {"approx_error", to_json(b.approx_error)}, {"tv_star", to_json(b.tv_star)},
              {"tv_exact", b.tv_exact}};
  row["lower_bound_holds"] = b.lower_bound_holds ? Json(*b.lower_bound_holds) : Json();
  row["decomposition_holds"] = b.decomposition_holds;
  row["slack_holds"] = b.slack_holds;
  row["measured_c"] = b.measured_c ? Json(*b.measured_c) : Json();
  row["duality_holds"] = b.duality_holds;
  return row;
}

Report cmd_bounds(int n, int k, int slack_cap) {
  check_nk(n, k);
  require(slack_cap >= 0, "slack-cap must be >= 0");
  Report r{"bounds"};
  r.params = {{"n", n}, {"k", k}, {"slack_cap", slack_cap}};
  const BoundReport b = verify_sandwich(n, k, slack_cap);
  r.rows.push_back(bound_row(b));
  if (b.lower_bound_holds) r.verdict("lower-bound", *b.lower_bound_holds);
  r.verdict("upper-bound-slack", b.slack_holds);
  r.verdict("decomposition", b.decomposition_holds);
  r.verdict("duality", b.duality_holds);
  return r;
}

int default_n_max(const std::string& suite) {
  static const std::map<std::string, int> defaults = {
      {"orthogonality", 60}, {"hardness", 24}, {"symmetrize", 30}, {"duality", 16},
      {"sandwich", 20},      {"moments", 8},   {"appendix", 10000}};
  return defaults.at(suite);
}

Report cmd_verify(const std::string& suite, std::optional<int> n_max, int pairs, std::uint64_t seed,
                  int slack_cap, int jobs) {
  const auto names = verify::suite_names();
  require(suite == "all" || std::find(names.begin(), names.end(), suite) != names.end(),
          "unknown suite '" + suite + "'");
  require(!n_max || *n_max >= 1, "n-max must be >= 1");
  require(!n_max || suite == "appendix" || suite == "all" || *n_max <= 64, "n-max must be <= 64");
  require(pairs >= 1, "pairs must be >= 1");
  Report r{"verify"};
  r.params = {{"suite", suite}, {"pairs", pairs}, {"seed", seed}, {"slack_cap", slack_cap}};
  if (n_max) r.params["n_max"] = *n_max;
  const std::vector<std::string> run = suite == "all" ? names : std::vector<std::string>{suite};
  for (const auto& name : run) {
    verify::SuiteOptions opt;
    opt.n_max = n_max.value_or(default_n_max(name));
    opt.jobs = jobs;
    opt.pairs_per_n = pairs;
    opt.seed = seed;
    opt.slack_cap = slack_cap;
    const verify::SuiteReport s = verify::run_suite(name, opt).front();
    for (auto row : s.rows) {
      Json tagged = {{"suite", name}};
      tagged.update(row);
      r.rows.push_back(std::move(tagged));
    }
    for (auto& v : s.verdicts_json()) r.verdicts.push_back(v);
  }
  return r;
}

// ---------------------------------------------------------------------------

void emit(const Report& r, const std::string& format, const std::string& out_path, std::ostream& out) {
  std::string text;
  if (format == "csv") {
    text = io::rows_to_csv(r.rows);
  } else {
    text = io::make_report(r.command, r.params, r.rows, r.verdicts).dump(2) + "\n";
  }
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file '" + out_path + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact k-wise indistinguishability toolkit", "kwise"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  std::string out_path;
  int jobs = 1;
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_path, "output file (default stdout)");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  int n = 0, k = 0, slack_cap = 4, pairs = 1000;
  std::optional<int> w, max_deg, n_max;
  std::optional<std::string> tv;
  std::string grid = "in", method = "lp", suite;
  std::uint64_t seed = 20240611;
  bool best_w = false;

  auto* c_grid = app.add_subcommand("grid", "grid points of IN_n or OUT_n");
  c_grid->add_option("--n", n)->required();
  c_grid->add_option("--grid", grid)->check(CLI::IsMember({"in", "out"}));

  int gram_deg = 0;
  auto* c_gram = app.add_subcommand("gram", "Gram polynomials, norms and recurrence constants");
  c_gram->add_option("--n", n)->required();
  c_gram->add_option("--max-deg", gram_deg)->required();

  auto* c_approx = app.add_subcommand("approx", "uniform approximation of x^k on a grid");
  c_approx->add_option("--n", n)->required();
  c_approx->add_option("--k", k)->required();
  c_approx->add_option("--max-deg", max_deg, "degree bound (default k-1)");
  c_approx->add_option("--grid", grid)->check(CLI::IsMember({"in", "out"}));
  c_approx->add_option("--method", method)->check(CLI::IsMember({"lp", "truncate"}));

  auto* c_symm = app.add_subcommand("symm", "symmetrized weight tests");
  c_symm->require_subcommand(1);
  auto* c_pw = c_symm->add_subcommand("pw", "p_w polynomials and leading coefficients");
  c_pw->add_option("--n", n)->required();
  c_pw->add_option("--k", k)->required();
  c_pw->add_option("--w", w);
  auto* c_argmax = c_symm->add_subcommand("argmax", "argmax of |C_w| for even n, k");
  c_argmax->add_option("--n", n)->required();
  c_argmax->add_option("--k", k)->required();

  auto* c_pair = app.add_subcommand("pair", "extremal indistinguishable pairs");
  c_pair->add_option("--n", n)->required();
  c_pair->add_option("--k", k)->required();
  c_pair->add_option("--w", w);
  c_pair->add_flag("--best-w", best_w);
  c_pair->add_option("--tv", tv)->check(CLI::IsMember({"enumerate", "alternate"}));

  auto* c_bounds = app.add_subcommand("bounds", "upper and lower bounds for one (n, k) cell");
  c_bounds->add_option("--n", n)->required();
  c_bounds->add_option("--k", k)->required();
  c_bounds->add_option("--slack-cap", slack_cap);

  auto* c_verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> choices = verify::suite_names();
  choices.push_back("all");
  c_verify->add_option("--suite", suite)->required()->check(CLI::IsMember(choices));
  c_verify->add_option("--n-max", n_max, "sweep bound (k bound for appendix)");
  c_verify->add_option("--pairs", pairs, "random pairs per n (moments)");
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--slack-cap", slack_cap);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "kwise: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    Report r;
    if (c_grid->parsed()) r = cmd_grid(n, grid);
    else if (c_gram->parsed()) r = cmd_gram(n, gram_deg);
    else if (c_approx->parsed()) r = cmd_approx(n, k, max_deg, grid, method);
    else if (c_pw->parsed()) r = cmd_symm_pw(n, k, w);
    else if (c_argmax->parsed()) r = cmd_symm_argmax(n, k);
    else if (c_pair->parsed()) r = cmd_pair(n, k, w, best_w, tv);
    else if (c_bounds->parsed()) r = cmd_bounds(n, k, slack_cap);
    else r = cmd_verify(suite, n_max, pairs, seed, slack_cap, jobs);
    emit(r, format, out_path, out);
    if (r.failed()) {
      err << "kwise: verification finding in '" << r.command << "'\n";
      return kFinding;
    }
    return kOk;
  } catch (const DomainError& e) {
    err << "kwise: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "kwise: internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace kwise::cli
