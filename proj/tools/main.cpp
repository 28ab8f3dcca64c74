#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bellpf/boson.hpp"
#include "bellpf/combinatorics.hpp"
#include "bellpf/egf.hpp"
#include "bellpf/partition.hpp"
#include "bellpf/serialize.hpp"
#include "bellpf/verification.hpp"

using namespace bellpf;

namespace {

RationalEgf parse_coeff_list(const std::string& text) {
  std::vector<Rational> coeffs;
  size_t start = 0;
  for (;;) {
    size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    coeffs.push_back(parse_rational(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  const unsigned order = static_cast<unsigned>(coeffs.size()) - 1;
  return RationalEgf(order, std::move(coeffs));
}

std::string coeff_line(const RationalEgf& s) {
  std::string line;
  for (unsigned n = 0; n <= s.order(); ++n) {
    if (n > 0) line += ' ';
    line += to_string(s[n]);
  }
  return line;
}

void attach_format(CLI::App* cmd, std::string* format, const std::vector<std::string>& allowed) {
  cmd->add_option("--format", *format, "output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse_error";
  if (dynamic_cast<const DivergentIntegrand*>(&e)) return "divergent_integrand";
  if (dynamic_cast<const SingularDecomposition*>(&e)) return "singular_decomposition";
  if (dynamic_cast<const fock::NonConvergenceError*>(&e)) return "non_convergence";
  if (dynamic_cast<const std::domain_error*>(&e)) return "domain_error";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_argument";
  if (dynamic_cast<const std::out_of_range*>(&e)) return "out_of_range";
  return "error";
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"exact normal-ordering combinatorics and boson partition functions"};
  app.require_subcommand(1);

  // ---- bell ----
  unsigned bell_n = 0;
  std::string bell_format = "text";
  auto* bell_cmd = app.add_subcommand("bell", "Bell number B(n)");
  bell_cmd->add_option("--n", bell_n, "index")->required();
  attach_format(bell_cmd, &bell_format, {"text", "json", "csv"});
  bell_cmd->callback([&] {
    Integer b = bell(bell_n);
    if (bell_format == "json") {
      Json j{{"n", bell_n}, {"bell", to_string(b)}};
      std::cout << j.dump() << "\n";
    } else if (bell_format == "csv") {
      std::cout << "n,bell\n" << bell_n << "," << to_string(b) << "\n";
    } else {
      std::cout << to_string(b) << "\n";
    }
  });

  // ---- stirling ----
  unsigned st_n = 0;
  int st_k = -1;
  std::string st_format = "text";
  auto* st_cmd = app.add_subcommand("stirling", "Stirling numbers of the second kind");
  st_cmd->add_option("--n", st_n, "row index")->required();
  st_cmd->add_option("--k", st_k, "block count; omit for the whole row");
  attach_format(st_cmd, &st_format, {"text", "json", "csv"});
  st_cmd->callback([&] {
    if (st_k >= 0) {
      Integer v = stirling2(st_n, static_cast<unsigned>(st_k));
      if (st_format == "json") {
        Json j{{"n", st_n}, {"k", st_k}, {"value", to_string(v)}};
        std::cout << j.dump() << "\n";
      } else if (st_format == "csv") {
        std::cout << "n,k,value\n" << st_n << "," << st_k << "," << to_string(v) << "\n";
      } else {
        std::cout << to_string(v) << "\n";
      }
      return;
    }
    StirlingTable table;
    if (st_format == "json") {
      Json row = Json::array();
      for (unsigned k = 0; k <= st_n; ++k) row.push_back(to_string(table(st_n, k)));
      Json j{{"n", st_n}, {"row", row}};
      std::cout << j.dump() << "\n";
    } else if (st_format == "csv") {
      std::cout << "n,k,value\n";
      for (unsigned k = 0; k <= st_n; ++k) {
        std::cout << st_n << "," << k << "," << to_string(table(st_n, k)) << "\n";
      }
    } else {
      for (unsigned k = 0; k <= st_n; ++k) {
        if (k > 0) std::cout << ' ';
        std::cout << to_string(table(st_n, k));
      }
      std::cout << "\n";
    }
  });

  // ---- bellpoly ----
  unsigned bp_n = 0;
  std::string bp_format = "text";
  auto* bp_cmd = app.add_subcommand("bellpoly", "Bell polynomial B_n(y)");
  bp_cmd->add_option("--n", bp_n, "index")->required();
  attach_format(bp_cmd, &bp_format, {"text", "json", "csv"});
  bp_cmd->callback([&] {
    Polynomial p = bell_polynomial(bp_n);
    if (bp_format == "json") {
      Json j{{"n", bp_n}, {"poly", polynomial_json(p)}};
      std::cout << j.dump() << "\n";
    } else if (bp_format == "csv") {
      std::cout << "k,coeff\n";
      for (int k = 0; k <= p.degree(); ++k) {
        std::cout << k << "," << to_string(p.coeff(k)) << "\n";
      }
    } else {
      std::cout << p.to_text() << "\n";
    }
  });

  // ---- graphs ----
  unsigned gr_n = 0;
  bool gr_dot = false;
  std::string gr_format = "text";
  auto* gr_cmd = app.add_subcommand("graphs", "enumerate set partitions as Bell graphs");
  gr_cmd->add_option("--n", gr_n, "element count")->required();
  gr_cmd->add_flag("--dot", gr_dot, "emit one DOT graph per partition");
  attach_format(gr_cmd, &gr_format, {"text", "json", "dot"});
  gr_cmd->callback([&] {
    if (gr_dot || gr_format == "dot") {
      for_each_partition(gr_n, [](const SetPartition& p) {
        std::cout << graph_to_dot(make_bell_graph(p));
      });
      return;
    }
    if (gr_format == "json") {
      Json parts = Json::array();
      for_each_partition(gr_n, [&parts](const SetPartition& p) {
        Json blocks = Json::array();
        for (const auto& b : p.blocks) blocks.push_back(b);
        parts.push_back(std::move(blocks));
      });
      Json j{{"n", gr_n}, {"count", parts.size()}, {"partitions", parts}};
      std::cout << j.dump() << "\n";
      return;
    }
    for_each_partition(gr_n, [](const SetPartition& p) {
      std::string line;
      for (size_t i = 0; i < p.blocks.size(); ++i) {
        if (i > 0) line += '|';
        for (size_t j = 0; j < p.blocks[i].size(); ++j) {
          if (j > 0) line += ',';
          line += std::to_string(p.blocks[i][j]);
        }
      }
      std::cout << line << "\n";
    });
  });

  // ---- normal-order ----
  std::string no_expr;
  std::string no_format = "text";
  auto* no_cmd = app.add_subcommand("normal-order", "normal form of an operator expression");
  no_cmd->add_option("--expr", no_expr, "expression, e.g. \"(ad*a)^3\"")->required();
  attach_format(no_cmd, &no_format, {"text", "json"});
  no_cmd->callback([&] {
    NormalPolynomial nf = normal_order(parse_expression(no_expr));
    if (no_format == "json") {
      std::cout << normal_polynomial_json(nf).dump() << "\n";
    } else {
      std::cout << nf.to_text() << "\n";
    }
  });

  // ---- egf-exp / egf-log ----
  std::string egf_coeffs;
  std::string egf_format = "text";
  auto* ee_cmd = app.add_subcommand("egf-exp", "exponential of a truncated egf, a_0 = 0");
  ee_cmd->add_option("--coeffs", egf_coeffs, "comma-separated rationals a_0..a_M")->required();
  attach_format(ee_cmd, &egf_format, {"text", "json"});
  ee_cmd->callback([&] {
    RationalEgf out = egf_exp(parse_coeff_list(egf_coeffs));
    if (egf_format == "json") {
      std::cout << series_json(out).dump() << "\n";
    } else {
      std::cout << coeff_line(out) << "\n";
    }
  });
  std::string egl_coeffs;
  std::string egl_format = "text";
  auto* el_cmd = app.add_subcommand("egf-log", "logarithm of a truncated egf, a_0 = 1");
  el_cmd->add_option("--coeffs", egl_coeffs, "comma-separated rationals a_0..a_M")->required();
  attach_format(el_cmd, &egl_format, {"text", "json"});
  el_cmd->callback([&] {
    RationalEgf out = egf_log(parse_coeff_list(egl_coeffs));
    if (egl_format == "json") {
      std::cout << series_json(out).dump() << "\n";
    } else {
      std::cout << coeff_line(out) << "\n";
    }
  });

  // ---- pfi ----
  auto* pfi_cmd = app.add_subcommand("pfi", "partition-function integrand <z|exp(-beta H)|z>");
  pfi_cmd->require_subcommand(1);
  std::string pf_beta = "1";
  std::string pf_z = "1";
  std::string pf_format = "text";
  int pf_precision = 12;
  auto* pf_free = pfi_cmd->add_subcommand("free", "free gas, H = eps ad a");
  pf_free->add_option("--beta-eps", pf_beta, "beta*eps > 0, rational")->required();
  pf_free->add_option("--z", pf_z, "real coherent label, rational");
  pf_free->add_option("--precision", pf_precision, "significant digits")->capture_default_str();
  attach_format(pf_free, &pf_format, {"text", "json"});
  pf_free->callback([&] {
    const double beta_eps = parse_rational(pf_beta).get_d();
    const double z = parse_rational(pf_z).get_d();
    const double value = free_gas_pfi(-beta_eps, z);
    if (pf_format == "json") {
      Json j{{"model", "free"},
             {"beta_eps", pf_beta},
             {"z", pf_z},
             {"value", format_double(value, pf_precision)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << format_double(value, pf_precision) << "\n";
    }
  });
  std::string ps_c1 = "0", ps_c2 = "1", ps_x = "-1", ps_z = "1";
  std::string ps_format = "text";
  int ps_precision = 12;
  auto* pf_su11 = pfi_cmd->add_subcommand("su11", "quadratic generator, Gauss-decomposed");
  pf_su11->add_option("--c1", ps_c1, "pair coefficient, rational")->required();
  pf_su11->add_option("--c2", ps_c2, "number coefficient, rational")->required();
  pf_su11->add_option("--x", ps_x, "x = -beta*eps, rational")->required();
  pf_su11->add_option("--z", ps_z, "real coherent label, rational");
  pf_su11->add_option("--precision", ps_precision, "significant digits")->capture_default_str();
  attach_format(pf_su11, &ps_format, {"text", "json"});
  pf_su11->callback([&] {
    Su11Params p{{parse_rational(ps_c1).get_d(), 0.0}, parse_rational(ps_c2).get_d(),
                 parse_rational(ps_x).get_d()};
    std::complex<double> value = su11_pfi(p, parse_rational(ps_z).get_d());
    if (ps_format == "json") {
      Json j{{"model", "su11"}, {"c1", ps_c1},
             {"c2", ps_c2},     {"x", ps_x},
             {"z", ps_z},       {"re", format_double(value.real(), ps_precision)},
             {"im", format_double(value.imag(), ps_precision)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << format_double(value.real(), ps_precision);
      if (value.imag() != 0.0) std::cout << " " << format_double(value.imag(), ps_precision);
      std::cout << "\n";
    }
  });

  // ---- vn ----
  std::string vn_c1, vn_c2;
  unsigned vn_order = 4;
  std::string vn_format = "json";
  auto* vn_cmd = app.add_subcommand("vn", "exact vertex multipliers V_n(y) for the su11 model");
  vn_cmd->add_option("--c1", vn_c1, "rational")->required();
  vn_cmd->add_option("--c2", vn_c2, "rational")->required();
  vn_cmd->add_option("--order", vn_order, "series order")->capture_default_str();
  attach_format(vn_cmd, &vn_format, {"json", "text", "csv"});
  vn_cmd->callback([&] {
    Rational c1 = parse_rational(vn_c1);
    Rational c2 = parse_rational(vn_c2);
    PfiVnSeries s = su11_vn_series(c1, c2, vn_order);
    if (vn_format == "json") {
      std::cout << vn_series_json("su11", c1, c2, s).dump() << "\n";
    } else if (vn_format == "csv") {
      std::cout << "n,constant,linear\n";
      for (unsigned n = 1; n <= s.order; ++n) {
        const Polynomial& v = s.vn[n - 1];
        std::cout << n << "," << to_string(v.coeff(0)) << "," << to_string(v.coeff(1)) << "\n";
      }
    } else {
      for (unsigned n = 1; n <= s.order; ++n) {
        std::cout << "V" << n << " = " << s.vn[n - 1].to_text() << "\n";
      }
    }
  });

  // ---- z ----
  auto* z_cmd = app.add_subcommand("z", "partition function Z");
  z_cmd->require_subcommand(1);
  std::vector<std::string> zf_betas;
  std::string zf_method = "closed";
  std::string zf_format = "text";
  std::string zf_tol = "1/100000000";
  int zf_precision = 12;
  auto* z_free = z_cmd->add_subcommand("free", "free gas");
  z_free->add_option("--beta-eps", zf_betas, "beta*eps values, rational")->required();
  z_free->add_option("--method", zf_method, "closed | quadrature | trace")
      ->check(CLI::IsMember({"closed", "quadrature", "trace"}))
      ->capture_default_str();
  z_free->add_option("--tol", zf_tol, "tolerance, rational")->capture_default_str();
  z_free->add_option("--precision", zf_precision, "significant digits")->capture_default_str();
  attach_format(z_free, &zf_format, {"text", "json", "csv"});
  z_free->callback([&] {
    const double tol = parse_rational(zf_tol).get_d();
    std::vector<std::pair<std::string, double>> rows;
    for (const std::string& btext : zf_betas) {
      const double beta_eps = parse_rational(btext).get_d();
      double value = 0.0;
      if (zf_method == "closed") {
        value = free_gas_Z_closed({beta_eps});
      } else if (zf_method == "quadrature") {
        value = free_gas_Z_quadrature({beta_eps}, tol);
      } else {
        value = fock::trace_thermal(
            [beta_eps](int n) { return free_gas_thermal_matrix(beta_eps, n); }, tol);
      }
      rows.emplace_back(btext, value);
    }
    if (zf_format == "json") {
      Json arr = Json::array();
      for (const auto& [b, v] : rows) {
        arr.push_back(Json{{"model", "free"},
                           {"method", zf_method},
                           {"beta_eps", b},
                           {"Z", format_double(v, zf_precision)}});
      }
      std::cout << arr.dump() << "\n";
    } else if (zf_format == "csv") {
      std::cout << "beta_eps,Z\n";
      for (const auto& [b, v] : rows) {
        std::cout << b << "," << format_double(v, zf_precision) << "\n";
      }
    } else {
      for (const auto& [b, v] : rows) std::cout << format_double(v, zf_precision) << "\n";
    }
  });
  std::string zs_c1, zs_c2;
  std::vector<std::string> zs_xs;
  std::string zs_method = "quadrature";
  std::string zs_format = "text";
  std::string zs_tol = "1/100000000";
  int zs_precision = 12;
  auto* z_su11 = z_cmd->add_subcommand("su11", "quadratic generator");
  z_su11->add_option("--c1", zs_c1, "rational")->required();
  z_su11->add_option("--c2", zs_c2, "rational")->required();
  z_su11->add_option("--x", zs_xs, "x = -beta*eps values, rational")->required();
  z_su11->add_option("--method", zs_method, "quadrature | trace")
      ->check(CLI::IsMember({"quadrature", "trace"}))
      ->capture_default_str();
  z_su11->add_option("--tol", zs_tol, "tolerance, rational")->capture_default_str();
  z_su11->add_option("--precision", zs_precision, "significant digits")->capture_default_str();
  attach_format(z_su11, &zs_format, {"text", "json", "csv"});
  z_su11->callback([&] {
    const double tol = parse_rational(zs_tol).get_d();
    const double c1 = parse_rational(zs_c1).get_d();
    const double c2 = parse_rational(zs_c2).get_d();
    std::vector<std::pair<std::string, double>> rows;
    for (const std::string& xtext : zs_xs) {
      Su11Params p{{c1, 0.0}, c2, parse_rational(xtext).get_d()};
      double value = 0.0;
      if (zs_method == "quadrature") {
        value = su11_Z_quadrature(p, tol);
      } else {
        value = fock::trace_thermal([&p](int n) { return su11_thermal_matrix(p, n); }, tol);
      }
      rows.emplace_back(xtext, value);
    }
    if (zs_format == "json") {
      Json arr = Json::array();
      for (const auto& [x, v] : rows) {
        arr.push_back(Json{{"model", "su11"},
                           {"method", zs_method},
                           {"c1", zs_c1},
                           {"c2", zs_c2},
                           {"x", x},
                           {"Z", format_double(v, zs_precision)}});
      }
      std::cout << arr.dump() << "\n";
    } else if (zs_format == "csv") {
      std::cout << "x,Z\n";
      for (const auto& [x, v] : rows) {
        std::cout << x << "," << format_double(v, zs_precision) << "\n";
      }
    } else {
      for (const auto& [x, v] : rows) std::cout << format_double(v, zs_precision) << "\n";
    }
  });

  // ---- verify ----
  std::string vf_suite = "all";
  std::string vf_format = "text";
  int vf_precision = 12;
  auto* vf_cmd = app.add_subcommand("verify", "run the cross-oracle check suite");
  vf_cmd->add_option("--suite", vf_suite, "all | fast")
      ->check(CLI::IsMember({"all", "fast"}))
      ->capture_default_str();
  vf_cmd->add_option("--precision", vf_precision, "significant digits")->capture_default_str();
  attach_format(vf_cmd, &vf_format, {"text", "json"});
  bool verify_failed = false;
  vf_cmd->callback([&] {
    auto records = run_verification(vf_suite == "fast" ? VerifySuite::Fast : VerifySuite::All);
    int passed = 0;
    for (const auto& r : records) {
      if (r.pass) ++passed;
      if (vf_format == "json") {
        Json j{{"check", r.check},
               {"dim", r.dim},
               {"value", format_double(r.value, vf_precision)},
               {"tolerance", format_double(r.tolerance, vf_precision)},
               {"pass", r.pass}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.check << " dim=" << r.dim
                  << " value=" << format_double(r.value, vf_precision)
                  << " tol=" << format_double(r.tolerance, vf_precision) << "\n";
      }
    }
    if (vf_format == "text") {
      std::cout << "ok " << passed << "/" << records.size() << "\n";
    }
    verify_failed = passed != static_cast<int>(records.size());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    Json j{{"error",
            {{"kind", "parse_error"}, {"message", e.what()}, {"offset", e.offset()}}}};
    std::cout << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json j{{"error", {{"kind", error_kind(e)}, {"message", e.what()}}}};
    std::cout << j.dump() << "\n";
    return 1;
  }
  return verify_failed ? 1 : 0;
}
