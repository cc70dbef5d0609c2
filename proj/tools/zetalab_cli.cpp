// Command-line front end: interactive evaluation of the library's main
// quantities and batch runs of the identity audit.
//
// Exit codes: 0 success / all checks pass, 1 check failures present,
// 2 usage or parse error.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zetalab/zetalab.hpp"

namespace {

std::string iso8601_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void print_value(const std::string& label, double value, double err = -1.0) {
  std::printf("%s = %.15g", label.c_str(), value);
  if (err >= 0.0) std::printf("   (err estimate %.3g)", err);
  std::printf("\n");
}

int run_audit(const zetalab::audit::AuditConfig& config, const std::string& mode,
              const std::string& filter, const std::string& format, const std::string& out_path,
              std::string timestamp) {
  if (timestamp.empty()) timestamp = iso8601_now();
  auto report = zetalab::audit::run_all(config, mode, filter, timestamp);

  std::ostringstream body;
  if (format == "json") {
    body << zetalab::audit::to_json(report).dump(2) << "\n";
  } else if (format == "csv") {
    body << zetalab::audit::to_csv(report);
  } else {
    for (const auto& c : report.checks) {
      body << c.id << " [" << zetalab::audit::to_string(c.mode) << "] "
           << zetalab::audit::to_string(c.status) << "  max_diff=" << zetalab::audit::format_double(c.max_pairwise_diff)
           << " tol=" << zetalab::audit::format_double(c.tolerance);
      if (c.ratio_diagnostic && !c.ratio_diagnostic->nearest_simple_factor.empty())
        body << "  factor=" << c.ratio_diagnostic->nearest_simple_factor;
      body << "\n";
      for (const auto& r : c.routes)
        body << "    " << r.name << " = " << zetalab::audit::format_double(r.value) << "\n";
      if (!c.notes.empty()) body << "    note: " << c.notes << "\n";
    }
    body << "summary: pass=" << report.summary.pass << " fail=" << report.summary.fail
         << " mismatch=" << report.summary.mismatch << "\n";
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output path: " << out_path << "\n";
      return 2;
    }
    out << body.str();
  }
  return report.summary.fail > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetalab: Stieltjes constants, Hurwitz zeta, quadratic L-functions, and an identity audit"};
  app.require_subcommand(1);

  // gamma
  auto* gamma_cmd = app.add_subcommand("gamma", "print gamma_k(a) with error estimate");
  int gk = 0;
  std::string ga = "1/1";
  gamma_cmd->add_option("--k", gk, "index k")->required();
  gamma_cmd->add_option("--a", ga, "shift a as p/q")->required();

  // hurwitz
  auto* hz_cmd = app.add_subcommand("hurwitz", "print zeta(s, a)");
  double hs = 0.0;
  std::string ha = "1/1";
  hz_cmd->add_option("--s", hs, "s (real, != 1)")->required();
  hz_cmd->add_option("--a", ha, "shift a as p/q")->required();

  // lfun
  auto* lf_cmd = app.add_subcommand("lfun", "print L_D(s)");
  std::int64_t ld = 0;
  double ls = 0.0;
  std::string lroute = "hurwitz";
  std::uint64_t llimit = 10000000;
  lf_cmd->add_option("--disc", ld, "fundamental discriminant D")->required();
  lf_cmd->add_option("--s", ls, "s (real)")->required();
  lf_cmd->add_option("--route", lroute, "hurwitz | euler | fe")
      ->check(CLI::IsMember({"hurwitz", "euler", "fe"}));
  lf_cmd->add_option("--limit", llimit, "prime limit for the euler route");

  // primeprod
  auto* pp_cmd = app.add_subcommand("primeprod", "truncated Euler product over residue classes");
  std::int64_t pmod = 0;
  std::string minus_list, plus_list;
  double pexp = 2.0;
  std::uint64_t plimit = 10000000;
  pp_cmd->add_option("--mod", pmod, "modulus")->required();
  pp_cmd->add_option("--minus", minus_list, "residues with (p^s-1)/(p^s+1) factors, comma separated");
  pp_cmd->add_option("--plus", plus_list, "residues with (p^s+1)/(p^s-1) factors, comma separated");
  pp_cmd->add_option("--exp", pexp, "exponent s > 1")->required();
  pp_cmd->add_option("--limit", plimit, "sieve limit");

  // audit
  auto* audit_cmd = app.add_subcommand("audit", "run the identity audit");
  std::string a_filter, a_mode = "audited", a_format = "text", a_out, a_timestamp;
  zetalab::audit::AuditConfig config;
  audit_cmd->add_option("--prop", a_filter, "glob filter on check ids, e.g. 'P7*'");
  audit_cmd->add_option("--mode", a_mode, "literal | audited | both")
      ->check(CLI::IsMember({"literal", "audited", "both"}));
  audit_cmd->add_option("--limit", config.sieve_limit, "sieve limit for prime products");
  audit_cmd->add_option("--radius", config.epstein_radius, "lattice radius for the Epstein routes");
  audit_cmd->add_option("--nmax", config.n_max, "partial-sum cutoff for Stieltjes routes");
  audit_cmd->add_option("--theta7", config.theta7, "candidate angle for the Clausen combination");
  std::string p3exp = "sqrt23";
  audit_cmd->add_option("--p3-exponent", p3exp, "literal-series exponent candidate: sqrt23 | sqrt3")
      ->check(CLI::IsMember({"sqrt23", "sqrt3"}));
  audit_cmd->add_option("--format", a_format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  audit_cmd->add_option("--out", a_out, "write the report to this path");
  audit_cmd->add_option("--timestamp", a_timestamp,
                        "fixed ISO-8601 timestamp for byte-reproducible reports");

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "critical-strip value with bracketing bounds");
  double bs = 0.5;
  bounds_cmd->add_option("--s", bs, "s in (0,1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return 2;
  }

  try {
    if (*gamma_cmd) {
      auto a = zetalab::Rational::parse(ga);
      auto g = zetalab::stieltjes::stieltjes_gamma(gk, a.to_double());
      print_value("gamma_" + std::to_string(gk) + "(" + a.to_string() + ")", g.value, g.err_estimate);
    } else if (*hz_cmd) {
      auto a = zetalab::Rational::parse(ha);
      print_value("zeta(" + std::to_string(hs) + ", " + a.to_string() + ")",
                  zetalab::zeta::hurwitz_zeta(hs, a.to_double()));
    } else if (*lf_cmd) {
      zetalab::lfunctions::LValue v;
      if (lroute == "euler") {
        v = zetalab::lfunctions::l_value_euler(ld, ls, llimit);
      } else if (lroute == "fe") {
        v = zetalab::lfunctions::l_value_via_fe(ld, 1.0 - ls);  // report L(s) computed from L(1-s)
      } else {
        v = zetalab::lfunctions::l_value(ld, ls);
      }
      std::ostringstream label;
      label << "L_{" << ld << "}(" << ls << ") [" << zetalab::lfunctions::route_name(v.route) << "]";
      print_value(label.str(), v.value, v.err_estimate);
    } else if (*pp_cmd) {
      zetalab::primeprod::ResidueProductSpec spec;
      spec.modulus = pmod;
      spec.exponent = pexp;
      spec.limit = plimit;
      auto parse_list = [&spec](const std::string& text, zetalab::primeprod::FactorSign sign) {
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (!tok.empty()) spec.pattern[std::stoll(tok)] = sign;
        }
      };
      parse_list(minus_list, zetalab::primeprod::FactorSign::minus);
      parse_list(plus_list, zetalab::primeprod::FactorSign::plus);
      auto r = zetalab::primeprod::residue_product(spec);
      print_value("product", r.value);
      std::printf("log-tail bound = %.6g   primes used = %llu\n", r.log_tail_bound,
                  static_cast<unsigned long long>(r.primes_used));
    } else if (*audit_cmd) {
      config.p3_exponent_sqrt23 = (p3exp == "sqrt23");
      return run_audit(config, a_mode, a_filter, a_format, a_out, a_timestamp);
    } else if (*bounds_cmd) {
      double z = zetalab::zeta::zeta_crit_strip(bs);
      double lower = 1.0 / (bs - 1.0) + 0.5 * (1.0 + bs / 6.0 * std::pow(0.8, 1.0 + bs));
      double upper = 1.0 / (bs - 1.0) + 0.5 * (1.0 + bs / 6.0);
      print_value("zeta(" + std::to_string(bs) + ")", z);
      print_value("lower bound", lower);
      print_value("upper bound", upper);
      std::printf("inside bounds: %s\n", (lower < z && z < upper) ? "yes" : "NO");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
