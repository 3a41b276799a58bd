#pragma once

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permstat/bijections.hpp"
#include "permstat/jfraction.hpp"
#include "permstat/laguerre.hpp"
#include "permstat/polynomials.hpp"
#include "permstat/tables.hpp"
#include "permstat/verify.hpp"

namespace permstat::cli {

namespace detail {

inline Permutation parse_perm_args(const std::vector<std::string>& tokens) {
  std::string joined;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) joined += ' ';
    joined += tokens[i];
  }
  return parse_permutation(joined);
}

inline Var var_by_name(const std::string& name) {
  for (int i = 0; i < kVarCount; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  throw DomainError("unknown variable '" + name + "'");
}

inline MultiPoly::Assignment parse_assignments(const std::vector<std::string>& sets) {
  MultiPoly::Assignment a;
  for (const std::string& s : sets) {
    const size_t eq = s.find('=');
    if (eq == std::string::npos) throw DomainError("--set expects var=integer, got '" + s + "'");
    const Var v = var_by_name(s.substr(0, eq));
    a[v] = BigInt(s.substr(eq + 1));
  }
  return a;
}

inline void print_record(const StatRecord& rec, std::ostream& out) {
  for (const auto& [name, value] : rec.counts()) out << name << ' ' << value << '\n';
  for (const auto& [name, vec] : rec.vectors()) {
    out << name;
    for (size_t i = 0; i < vec.size(); ++i) out << (i ? "," : " ") << vec[i];
    out << '\n';
  }
}

}  // namespace detail

/// Runs one command line; output goes to `out`, diagnostics to `err`.
/// Returns the process exit status.
inline int run_command(const std::vector<std::string>& args, std::ostream& out,
                       std::ostream& err) {
  CLI::App app{"exact permutation statistics, bijections and polynomial identities"};
  app.require_subcommand(1);

  // stats
  std::vector<std::string> stats_perm;
  std::string convention = "zz";
  CLI::App* stats_cmd = app.add_subcommand("stats", "statistics of one permutation");
  stats_cmd->add_option("perm", stats_perm, "one-line permutation word")->required();
  stats_cmd->add_option("--convention", convention, "boundary convention: zz, zt or tt")
      ->check(CLI::IsMember({"zz", "zt", "tt"}));

  // bijection
  std::string bij_kind;
  std::vector<std::string> bij_perm;
  CLI::App* bij_cmd = app.add_subcommand("bijection", "apply one of the bijections");
  bij_cmd->add_option("kind", bij_kind, "phi, psi, fv or fz")
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "fv", "fz"}));
  bij_cmd->add_option("perm", bij_perm, "one-line permutation word")->required();

  // poly
  std::string poly_family;
  int poly_n = 0;
  int poly_jobs = 1;
  std::vector<std::string> poly_sets;
  CLI::App* poly_cmd = app.add_subcommand("poly", "build a generating polynomial");
  poly_cmd->add_option("family", poly_family, "A, B, C or Dstar")
      ->required()
      ->check(CLI::IsMember({"A", "B", "Bcyclic", "Blinear", "C", "Dstar"}));
  poly_cmd->add_option("--n", poly_n, "size")->required();
  poly_cmd->add_option("--set", poly_sets, "integer substitution var=value (repeatable)");
  poly_cmd->add_option("--jobs", poly_jobs, "worker threads");

  // coeff
  std::string coeff_fam;
  int coeff_n = 0, coeff_k = 0, coeff_j = 0;
  CLI::App* coeff_cmd = app.add_subcommand("coeff", "build one coefficient polynomial");
  coeff_cmd->add_option("family", coeff_fam, "a, b, c or d")
      ->required()
      ->check(CLI::IsMember({"a", "b", "c", "d"}));
  coeff_cmd->add_option("--n", coeff_n, "size")->required();
  coeff_cmd->add_option("--k", coeff_k, "valley index")->required();
  coeff_cmd->add_option("--j", coeff_j, "fixed-point index (family b)");

  // table
  std::string table_name;
  std::string table_format = "csv";
  CLI::App* table_cmd = app.add_subcommand("table", "regenerate a built-in reference table");
  table_cmd->add_option("name", table_name, "table name")
      ->required()
      ->check(CLI::IsMember({"appendix-a", "appendix-b", "appendix-c", "appendix-d", "figure-1",
                             "figure-2"}));
  table_cmd->add_option("--format", table_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  // verify
  std::string verify_id;
  int verify_nmax = -1;
  int verify_jobs = 1;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run identity checks");
  verify_cmd->add_option("check", verify_id, "check id or 'all'")->required();
  verify_cmd->add_option("--n-max", verify_nmax, "largest size to check")->required();
  verify_cmd->add_option("--jobs", verify_jobs, "worker threads");

  // series
  std::string series_id;
  int series_order = 0;
  CLI::App* series_cmd = app.add_subcommand("series", "truncated continued-fraction series");
  series_cmd->add_option("id", series_id, "scheme id (see README)")->required();
  series_cmd->add_option("--order", series_order, "truncation order")->required();

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("permstat");
    for (const std::string& a : argv_copy) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*stats_cmd) {
      const Permutation p = detail::parse_perm_args(stats_perm);
      const BoundaryConvention conv = convention == "zz" ? BoundaryConvention::ZeroZero
                                      : convention == "zt" ? BoundaryConvention::ZeroTop
                                                           : BoundaryConvention::TopTop;
      StatRecord rec = linear_stats(p, conv);
      rec.merge(cyclic_stats(p));
      rec.merge(pattern_stats(p));
      rec.merge(crossing_nesting(p));
      detail::print_record(rec, out);
      const PermutationFlags flags = predicates(p);
      out << "is_derangement " << (flags.is_derangement ? 1 : 0) << '\n';
      out << "is_coderangement " << (flags.is_coderangement ? 1 : 0) << '\n';
      out << "is_alternating " << (flags.is_alternating ? 1 : 0) << '\n';
      out << "is_involution " << (flags.is_involution ? 1 : 0) << '\n';
      return 0;
    }

    if (*bij_cmd) {
      const Permutation p = detail::parse_perm_args(bij_perm);
      if (bij_kind == "phi") {
        out << phi(p).to_string() << '\n';
      } else if (bij_kind == "psi") {
        out << psi(p).to_string() << '\n';
      } else if (bij_kind == "fv") {
        out << fv_map(p).to_string() << '\n';
      } else {
        out << fz_map(p).to_string() << '\n';
      }
      return 0;
    }

    if (*poly_cmd) {
      PolyFamily fam = PolyFamily::A;
      if (poly_family == "B" || poly_family == "Bcyclic") fam = PolyFamily::BCyclic;
      if (poly_family == "Blinear") fam = PolyFamily::BLinear;
      if (poly_family == "C") fam = PolyFamily::C;
      if (poly_family == "Dstar") fam = PolyFamily::DStar;
      MultiPoly result = build_polynomial(fam, poly_n, poly_jobs);
      if (!poly_sets.empty()) result = result.specialize(detail::parse_assignments(poly_sets));
      out << result.to_string() << '\n';
      return 0;
    }

    if (*coeff_cmd) {
      CoeffFamily fam = CoeffFamily::A;
      if (coeff_fam == "b") fam = CoeffFamily::B;
      if (coeff_fam == "c") fam = CoeffFamily::C;
      if (coeff_fam == "d") fam = CoeffFamily::D;
      out << coeff_family(fam, coeff_n, coeff_k, coeff_j).to_string() << '\n';
      return 0;
    }

    if (*table_cmd) {
      const Table t = make_table(table_name);
      const OutputFormat fmt = table_format == "csv"    ? OutputFormat::Csv
                               : table_format == "text" ? OutputFormat::Text
                                                        : OutputFormat::Json;
      out << render_table(t, fmt);
      return 0;
    }

    if (*verify_cmd) {
      std::vector<std::string> ids;
      if (verify_id == "all") {
        for (const CheckInfo& c : check_registry()) ids.push_back(c.id);
      } else {
        ids.push_back(check_info(verify_id).id);
      }
      bool all_pass = true;
      for (const std::string& id : ids) {
        const CheckInfo& info = check_info(id);
        const int hi = std::min(verify_nmax, check_bound(info));
        for (int n = info.min_n; n <= hi; ++n) {
          const VerificationReport rep = verify(id, n, verify_jobs);
          all_pass = all_pass && rep.pass;
          nlohmann::ordered_json line;
          line["check"] = rep.check;
          line["n"] = rep.n;
          line["status"] = rep.pass ? "pass" : "fail";
          if (rep.witness.empty()) {
            line["witness"] = nullptr;
          } else {
            line["witness"] = rep.witness;
          }
          out << line.dump() << '\n';
        }
      }
      return all_pass ? 0 : 1;
    }

    if (*series_cmd) {
      TruncatedSeries s(series_order);
      if (series_id == "S") {
        s = sfraction_series(eulerian_sfraction_letters(), series_order);
      } else {
        s = jfraction_series(cf_scheme(series_id).jf, series_order);
      }
      for (int k = 0; k <= s.order(); ++k) out << "x^" << k << ": " << s[k].to_string() << '\n';
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

inline int run_main(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace permstat::cli
