// Command-line front end for the series / Hopf-algebra library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 numerical blow-up.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fliess/abel.hpp"
#include "fliess/antipode.hpp"
#include "fliess/devlin.hpp"
#include "fliess/io.hpp"
#include "fliess/verify.hpp"

namespace {

using namespace fliess;

void emit(const std::string& format, const std::string& text,
          const nlohmann::json& j) {
  if (format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text << "\n";
}

nlohmann::json series_json(const Series& s) {
  return {{"kind", "series"}, {"series", to_json(s)}};
}

nlohmann::json helement_json(const HElement& h) {
  return {{"kind", "helement"}, {"helement", to_json(h)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the output feedback Hopf algebra of "
               "formal power series over the alphabet {x0, x1}"};
  app.require_subcommand(1);

  std::string format = "text";
  int max_degree = 8;
  unsigned seed = 0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--max-degree", max_degree, "Truncation degree bound")
      ->envname("FLIESS_MAX_DEGREE")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "Seed for randomized verification suites")
      ->capture_default_str();

  std::string lhs_expr, rhs_expr, word_expr;
  std::string alpha_expr = "0", beta_expr = "0", omega_expr = "0";
  int devlin_n = 4;
  std::string devlin_route = "recursive";
  std::string antipode_method = "left";
  std::string inverse_method = "antipode";
  double z0 = 1.0, t_end = 0.1, step = 1e-4, blowup = 1e6;
  int rm_n = 0;

  auto* sh = app.add_subcommand("shuffle", "Shuffle product of two series");
  sh->add_option("lhs", lhs_expr, "Left series")->required();
  sh->add_option("rhs", rhs_expr, "Right series")->required();

  auto* dv = app.add_subcommand("devlin", "Canonical grade-n polynomial");
  dv->add_option("--n", devlin_n, "Grade")->required()->check(CLI::PositiveNumber);
  dv->add_option("--route", devlin_route, "Computation route")
      ->check(CLI::IsMember({"recursive", "closed", "antipode"}))
      ->capture_default_str();

  auto* ap = app.add_subcommand("antipode", "Antipode of a coordinate function");
  ap->add_option("--word", word_expr, "Index word")->required();
  ap->add_option("--method", antipode_method, "Recursion to use")
      ->check(CLI::IsMember({"left", "right", "direct"}))
      ->capture_default_str();

  auto* inv = app.add_subcommand("inverse", "Composition-group inverse");
  inv->add_option("series", lhs_expr, "Series to invert")->required();
  inv->add_option("--method", inverse_method, "Computation route")
      ->check(CLI::IsMember({"antipode", "fixpoint"}))
      ->capture_default_str();

  auto* co = app.add_subcommand("compose", "Composition product");
  co->add_option("lhs", lhs_expr, "Outer series")->required();
  co->add_option("rhs", rhs_expr, "Inner series")->required();

  auto* mc = app.add_subcommand("mod-compose", "Modified composition product");
  mc->add_option("lhs", lhs_expr, "Outer series")->required();
  mc->add_option("rhs", rhs_expr, "Inner series")->required();

  auto* fb = app.add_subcommand("feedback", "Output feedback product");
  fb->add_option("plant", lhs_expr, "Plant series")->required();
  fb->add_option("controller", rhs_expr, "Controller series")->required();

  auto* uf = app.add_subcommand("unity-feedback", "Unity feedback closure");
  uf->add_option("plant", lhs_expr, "Plant series")->required();

  auto* vf = app.add_subcommand("verify", "Run the invariant suites");

  auto* ab = app.add_subcommand("abel-sim", "Integrate dz/dt = a(t)z^3 + b(t)z^2");
  ab->add_option("--alpha", alpha_expr, "Polynomial a(t)")->required();
  ab->add_option("--beta", beta_expr, "Polynomial b(t)")->required();
  ab->add_option("--z0", z0, "Initial value")->capture_default_str();
  ab->add_option("--t-end", t_end, "Integration horizon")->capture_default_str();
  ab->add_option("--step", step, "RK4 step size")->capture_default_str();
  ab->add_option("--blowup", blowup, "Escape threshold on |z|")
      ->capture_default_str();

  auto* rm = app.add_subcommand("return-map", "Return-map coefficients a_n(omega)");
  rm->add_option("--alpha", alpha_expr, "Polynomial a(t)")->required();
  rm->add_option("--beta", beta_expr, "Polynomial b(t)")->required();
  rm->add_option("--omega", omega_expr, "Evaluation point (rational)")->required();
  rm->add_option("--n", rm_n, "Number of coefficients (default: max degree)");

  for (auto* sub : {sh, dv, ap, inv, co, mc, fb, uf, vf, ab, rm})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    const int n = max_degree;
    if (sh->parsed()) {
      const Series out = shuffle_series(parse_series(lhs_expr), parse_series(rhs_expr));
      emit(format, to_string(out), series_json(out));
    } else if (dv->parsed()) {
      Series out;
      if (devlin_route == "recursive") {
        out = devlin_recursive(devlin_n).poly;
      } else if (devlin_route == "antipode") {
        out = devlin_antipode(devlin_n, devlin_n).poly;
      } else {
        for (const Word& eta : words_of_degree(devlin_n))
          out.add_term(eta, Rat(devlin_coeff_closed(eta, devlin_n)));
      }
      emit(format, to_string(out), series_json(out));
    } else if (ap->parsed()) {
      const Word eta = parse_word(word_expr);
      HElement out;
      if (antipode_method == "left") out = antipode_left(eta);
      else if (antipode_method == "right") out = antipode_right(eta);
      else out = antipode_direct(eta);
      emit(format, to_string(out), helement_json(out));
    } else if (inv->parsed()) {
      const Series c = parse_series(lhs_expr);
      const Series out = inverse_method == "antipode"
                             ? group_inverse(c, n)
                             : group_inverse_fixpoint(c, n);
      emit(format, to_string(out), series_json(out));
    } else if (co->parsed() || mc->parsed()) {
      const Series c = parse_series(lhs_expr);
      const Series d = parse_series(rhs_expr);
      const Series out = co->parsed() ? compose(c, d, n) : mod_compose(c, d, n);
      emit(format, to_string(out), series_json(out));
    } else if (fb->parsed()) {
      const Series out =
          feedback(parse_series(lhs_expr), parse_series(rhs_expr), n);
      emit(format, to_string(out), series_json(out));
    } else if (uf->parsed()) {
      const Series out = unity_feedback(parse_series(lhs_expr), n);
      emit(format, to_string(out), series_json(out));
    } else if (vf->parsed()) {
      const auto results = run_verification(max_degree, seed);
      if (format == "json") {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& r : results)
          checks.push_back({{"name", r.name}, {"passed", r.passed},
                            {"detail", r.detail}});
        emit(format, "",
             {{"kind", "verify"}, {"checks", checks},
              {"all_passed", all_passed(results)}});
      } else {
        for (const auto& r : results) {
          std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
          if (!r.passed && !r.detail.empty()) std::cout << ": " << r.detail;
          std::cout << "\n";
        }
      }
      return all_passed(results) ? 0 : 1;
    } else if (ab->parsed()) {
      const InputPair u{parse_poly(alpha_expr), parse_poly(beta_expr)};
      const double z = abel_numeric(u, z0, t_end, step, blowup);
      emit(format, format_double(z),
           {{"kind", "float"}, {"value", z}});
    } else if (rm->parsed()) {
      const InputPair u{parse_poly(alpha_expr), parse_poly(beta_expr)};
      const int count = rm_n > 0 ? rm_n : n;
      const auto coeffs = return_map_coeffs(u, parse_rational(omega_expr), count);
      if (format == "json") {
        nlohmann::json values = nlohmann::json::array();
        for (const Rat& a : coeffs) values.push_back(to_json(a));
        emit(format, "", {{"kind", "rationals"}, {"values", values}});
      } else {
        for (std::size_t k = 0; k < coeffs.size(); ++k)
          std::cout << "a_" << (k + 1) << " = " << to_string(coeffs[k]) << "\n";
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return 2;
  } catch (const BlowupError& e) {
    std::cerr << "error: blowup: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: invalid: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
