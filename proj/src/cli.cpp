#include "hyperchar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hyperchar/characters.hpp"

namespace hyperchar {

namespace {

void check_cli_bound(const std::string& what, int n, int min_n, int max_n) {
  if (n < min_n || n > max_n)
    throw CLI::ValidationError(what + ": --n must lie in [" + std::to_string(min_n) +
                               ", " + std::to_string(max_n) + "]");
}

std::string tsv_row(int n, const std::vector<Rational>& ascending) {
  std::string s = std::to_string(n) + "\t";
  for (size_t i = 0; i < ascending.size(); ++i) {
    if (i) s += ",";
    s += rational_str(ascending[i]);
  }
  return s;
}

std::vector<Rational> tpoly_ascending(const TPoly& p) {
  std::vector<Rational> c(p.is_zero() ? 1 : p.max_exponent() + 1, Rational(0));
  for (const auto& [e, v] : p.terms()) c[e] = v;
  return c;
}

// --- verification suites ------------------------------------------------

struct CheckList {
  std::vector<IdentityCheck> items;
  std::vector<std::string> findings;  // informative lines, never failures

  void add(std::string name, bool pass, int bad = -1) {
    items.push_back({std::move(name), pass, pass ? -1 : bad});
  }
  void append(std::vector<IdentityCheck> more) {
    for (auto& c : more) items.push_back(std::move(c));
  }
};

CharPoly pointed_partition_char_target(int n) {
  // (s - n)^{n-1}, ascending coefficients.
  CharPoly cp;
  cp.n = n;
  cp.coeffs.assign(n, Rational(0));
  for (int j = 0; j <= n - 1; ++j)
    cp.coeffs[j] = Rational(binomial(n - 1, j)) * rational_pow(Rational(-n), n - 1 - j);
  return cp;
}

void series_checks(int trunc, int max_n, CheckList& cl) {
  const int count_n = std::min(max_n, 6);
  const HypertreeSeriesBundle hb = solve_hypertree_system(std::max(count_n, 2));
  for (int n = 2; n <= count_n; ++n) {
    const Rational count =
        hb.ha.coeff(n).subst_u_one().subst_t(Rational(1)).constant_term();
    cl.add("hypertree_count_n" + std::to_string(n),
           count == Rational(Int(enumerate_hypertrees(n).size())));
  }
  for (int n = 2; n <= std::min(max_n, 5); ++n)
    cl.add("cyclic_count_n" + std::to_string(n),
           tau(n).eval(1) == Rational(Int(enumerate_cyclic_hypertrees(n).size())));
  for (int n = 2; n <= count_n; ++n)
    cl.add("tau_rank_polynomial_n" + std::to_string(n),
           tau(n) == cyclic_rank_polynomial(n));

  for (int n = 2; n <= trunc; ++n) {
    bool ok = true;
    try {
      chi_checked(n);
    } catch (const ConsistencyError&) {
      ok = false;
    }
    cl.add("chi_methods_agree_n" + std::to_string(n), ok);
  }
  for (int n = 2; n <= std::min(max_n, 5); ++n)
    cl.add("chi_poset_oracle_n" + std::to_string(n),
           chi_checked(n) == family_char_poly(Family::Hypertree, n));
  for (int n = 3; n <= trunc; ++n) {
    const Rational want =
        rational_pow(Rational(n - 1), n - 2) * ((n % 2 == 1) ? 1 : -1);
    cl.add("mobius_hat_n" + std::to_string(n), mobius_hat(n) == want);
  }

  const Theorem1Report rep = verify_functional_equation(trunc);
  cl.add("functional_equation_system", rep.system_ok, rep.system_bad_degree);
  cl.add("functional_equation_lambert", rep.lambert_ok, rep.lambert_bad_degree);

  const HypertreeSeriesBundle hfull = solve_hypertree_system(trunc);
  cl.add("ha_pointing", hfull.ha_p == hfull.ha.x_ddx());
  const CyclicSeriesBundle cfull = solve_cyclic_system(trunc, true);
  cl.add("hac_pointing", cfull.hac_p == cfull.hac.x_ddx());
}

void posets_checks(int max_n, CheckList& cl) {
  const int m = std::min(max_n, 5);
  for (int n = 1; n <= m; ++n) {
    const CharPoly want = pointed_partition_char_target(n);
    cl.add("pp_char_poly_n" + std::to_string(n),
           family_char_poly(Family::PointedPartition, n) == want);
    cl.add("forest_char_poly_n" + std::to_string(n),
           family_char_poly(Family::RootedForest, n) == want);
  }
  for (int n = 1; n <= m; ++n)
    cl.add("phi_n" + std::to_string(n), verify_phi(n).pass());
  for (int n = 1; n <= m; ++n)
    cl.add("forest_boolean_intervals_n" + std::to_string(n),
           forest_intervals_boolean(n));

  // Identity column of the Whitney character against t^r chi(1/t).
  const Family fams[] = {Family::Hypertree, Family::PointedPartition,
                         Family::RootedForest};
  for (Family f : fams)
    for (int n = (f == Family::Hypertree ? 2 : 1); n <= m; ++n) {
      const SymFunc w = whitney_character(f, n, m);
      const TPoly dims = w.exp_specialize().coeff(n).to_tpoly();
      const CharPoly cp = family_char_poly(f, n);
      TPoly want;
      const int r = static_cast<int>(cp.coeffs.size()) - 1;
      for (int j = 0; j <= r; ++j) want += TPoly::monomial(r - j, cp.coeffs[j]);
      cl.add("whitney_chi_" + family_to_string(f) + "_n" + std::to_string(n),
             dims == want);
    }
}

void conjecture_checks(int max_n, CheckList& cl) {
  for (int n = 2; n <= std::min(max_n, 5); ++n) {
    const ConjectureReport r = conjecture_report(n);
    cl.add("conjecture_dimensions_n" + std::to_string(n), r.dimension_check);
    cl.findings.push_back("conjecture_equal_n" + std::to_string(n) +
                          (r.equal ? ": equal" : ": differs (finding, not a failure)"));
  }
}

bool run_suites(const std::string& suite, int trunc, int max_n, std::ostream& out) {
  CheckList cl;
  if (suite == "series" || suite == "all") series_checks(trunc, max_n, cl);
  if (suite == "identities" || suite == "all") cl.append(verify_identities(trunc));
  if (suite == "posets" || suite == "all") posets_checks(max_n, cl);
  if (suite == "annexe" || suite == "all")
    cl.append(annexe_check(std::min(max_n, 5), trunc));
  if (suite == "conjecture" || suite == "all") conjecture_checks(max_n, cl);

  bool all_pass = true;
  for (const IdentityCheck& c : cl.items) {
    out << c.name << ": " << (c.pass ? "ok" : "FAIL");
    if (!c.pass && c.first_bad_degree >= 0)
      out << " (degree " << c.first_bad_degree << ")";
    out << "\n";
    all_pass = all_pass && c.pass;
  }
  for (const std::string& line : cl.findings) out << line << "\n";
  return all_pass;
}

SymFunc character_by_name(const std::string& which, int cap) {
  if (which == "HA") return annexe_characters(cap).ha;
  if (which == "HAC") return annexe_characters(cap).hac;
  if (which == "HAL") return hal(cap).hal;
  if (which == "WHPP") return wh_pp(cap);
  if (which == "CE") return ce_formula(cap);
  if (which == "M") return anticyclic_m(cap);
  throw CLI::ValidationError("char: unknown --which value '" + which + "'");
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact hypertree-poset invariants and character systems"};
  app.require_subcommand(1);
  app.fallthrough();  // --trunc/--cache-dir may follow the subcommand

  int trunc = 8;
  app.add_option("--trunc", trunc, "truncation order for series and characters")
      ->check(CLI::Range(2, 16));
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "directory for enumeration caches")
      ->envname("HYPERCHAR_CACHE_DIR");

  int n = 0;
  std::string method = "checked";
  std::string format = "plain";
  std::string family = "hypertree";
  std::string dump_path;
  std::string which = "HAL";
  int degree = 0;
  std::string suite = "all";
  int max_n = 5;
  bool conjecture_flag = false;

  CLI::App* chi_cmd = app.add_subcommand(
      "chi", "characteristic polynomial of the hypertree poset on n vertices");
  chi_cmd->add_option("--n", n, "number of vertices")->required();
  chi_cmd->add_option("--method", method, "via_tau | triangular (default: both, cross-checked)")
      ->check(CLI::IsMember({"via_tau", "triangular"}));
  chi_cmd->add_option("--format", format, "plain | json | tsv")
      ->check(CLI::IsMember({"plain", "json", "tsv"}));

  CLI::App* tau_cmd = app.add_subcommand(
      "tau", "rank generating polynomial of cyclic hypertrees on n vertices");
  tau_cmd->add_option("--n", n, "number of vertices")->required();
  tau_cmd->add_option("--format", format, "plain | json | tsv")
      ->check(CLI::IsMember({"plain", "json", "tsv"}));

  CLI::App* mh_cmd = app.add_subcommand(
      "mobius-hat", "Moebius number of the bounded hypertree poset");
  mh_cmd->add_option("--n", n, "number of vertices")->required();

  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "list the structures of a family");
  enum_cmd->add_option("--family", family, "hypertree | cyclic_hypertree | pointed_partition | forest")
      ->check(CLI::IsMember({"hypertree", "cyclic_hypertree", "pointed_partition", "forest"}));
  enum_cmd->add_option("--n", n, "number of vertices")->required();
  enum_cmd->add_option("--dump", dump_path, "write the cache file here instead of stdout");

  CLI::App* char_cmd = app.add_subcommand(
      "char", "one homogeneous component of a character series");
  char_cmd->add_option("--which", which, "HA | HAC | HAL | WHPP | CE | M")
      ->required()
      ->check(CLI::IsMember({"HA", "HAC", "HAL", "WHPP", "CE", "M"}));
  char_cmd->add_option("--degree", degree, "homogeneous degree")->required();

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run a verification suite, one line per check");
  verify_cmd->add_option("--suite", suite, "series | identities | posets | annexe | conjecture | all")
      ->check(CLI::IsMember({"series", "identities", "posets", "annexe", "conjecture", "all"}));
  verify_cmd->add_option("--max-n", max_n, "largest n for enumeration-backed checks");

  CLI::App* report_cmd = app.add_subcommand("report", "emit a JSON report");
  report_cmd->add_flag("--conjecture", conjecture_flag,
                       "Whitney character vs the suspended system");
  report_cmd->add_option("--n", n, "number of vertices")->required();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (chi_cmd->parsed()) {
      check_cli_bound("chi", n, 2, 30);
      const CharPoly cp = method == "via_tau"    ? chi(n, ChiMethod::ViaTau)
                          : method == "triangular" ? chi(n, ChiMethod::Triangular)
                                                   : chi_checked(n);
      if (format == "json")
        out << cp.to_multipoly().to_json().dump(2) << "\n";
      else if (format == "tsv")
        out << tsv_row(n, cp.coeffs) << "\n";
      else
        out << cp.str() << "\n";
      return 0;
    }

    if (tau_cmd->parsed()) {
      check_cli_bound("tau", n, 2, 30);
      const TPoly t = tau(n);
      if (format == "json")
        out << MultiPoly::from_tpoly(t).to_json().dump(2) << "\n";
      else if (format == "tsv")
        out << tsv_row(n, tpoly_ascending(t)) << "\n";
      else
        out << t.str() << "\n";
      return 0;
    }

    if (mh_cmd->parsed()) {
      check_cli_bound("mobius-hat", n, 3, 30);
      out << rational_str(mobius_hat(n)) << "\n";
      return 0;
    }

    if (enum_cmd->parsed()) {
      const Family f = family_from_string(family);
      const int limit = f == Family::CyclicHypertree ? 5
                        : f == Family::Hypertree     ? 6
                                                     : 6;
      const int low = (f == Family::Hypertree || f == Family::CyclicHypertree) ? 2 : 1;
      check_cli_bound("enumerate " + family, n, low, limit);
      const std::vector<std::string> lines =
          enumerate_lines_cached(f, n, limit, cache_dir);
      if (!dump_path.empty()) {
        std::ofstream file(dump_path);
        if (!file) throw CLI::ValidationError("enumerate: cannot open " + dump_path);
        write_cache(file, f, n, lines);
        out << "wrote " << lines.size() << " lines to " << dump_path << "\n";
      } else {
        std::ostringstream buf;
        write_cache(buf, f, n, lines);
        out << buf.str();
      }
      return 0;
    }

    if (char_cmd->parsed()) {
      if (degree < 1 || degree > 12)
        throw CLI::ValidationError("char: --degree must lie in [1, 12]");
      const SymFunc f = character_by_name(which, std::max(degree, 2));
      out << f.degree_json(degree).dump(2) << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      if (max_n < 2 || max_n > 6)
        throw CLI::ValidationError("verify: --max-n must lie in [2, 6]");
      return run_suites(suite, trunc, max_n, out) ? 0 : 1;
    }

    if (report_cmd->parsed()) {
      if (!conjecture_flag)
        throw CLI::ValidationError("report: --conjecture is the only report");
      check_cli_bound("report --conjecture", n, 2, 5);
      out << conjecture_report(n).to_json().dump(2) << "\n";
      return 0;
    }

    err << "no subcommand\n";
    return 2;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ConsistencyError& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace hyperchar
