// rigidcheck: batch verifier for the dual construction from invertible
// exterior/symmetric powers, with machine-readable JSON reports.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rigid/rigid.hpp"

namespace {

using rigid::certify_dual;
using rigid::CertificationRun;
using rigid::DualCertificate;
using rigid::Json;
using rigid::Mode;
using rigid::NotInvertibleError;
using rigid::Rational;
using rigid::SuperSpace;
using rigid::VerificationReport;

class Timer {
 public:
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int emit(VerificationReport report, const Timer& timer, const std::string& format) {
  report.elapsed_ms = timer.elapsed_ms();
  if (format == "text")
    std::cout << report.to_text();
  else
    std::cout << report.to_json().dump(2) << '\n';
  return report.passed() ? 0 : 1;
}

void append_recursion_checks(VerificationReport& report, int n, Mode mode, bool with_witness,
                             const std::string& prefix) {
  const rigid::RecursionReport rec = rigid::check_recursion(n, mode);
  Json witness;
  if (with_witness || !rec.holds) {
    witness = Json::object();
    witness["lhs"] = rigid::element_to_json(rec.lhs);
    witness["rhs"] = rigid::element_to_json(rec.rhs);
  }
  report.add(prefix + "eq1", rec.holds, std::move(witness));
}

// Every check of the construction pipeline for one backend, plus the
// cross-module dichotomy root and, where the vanishing statement
// applies, the subdimension check.
void append_rigidity_checks(VerificationReport& report, const SuperSpace& x, int n, Mode mode,
                            const std::string& prefix, const Rational* expected_dimension,
                            std::optional<DualCertificate>* certificate_out = nullptr) {
  CertificationRun run;
  try {
    run = certify_dual(x, n, mode);
  } catch (const NotInvertibleError& error) {
    report.add(prefix + "power-invertible", false, Json(error.what()));
    return;
  }
  report.add(prefix + "power-invertible", true);
  for (const auto& check : run.checks) {
    Json witness;
    if (!check.holds) witness = rigid::identity_check_to_json(check, true);
    report.add(prefix + check.name, check.holds, std::move(witness));
  }
  if (!run.certificate.has_value()) return;
  const DualCertificate& cert = *run.certificate;

  const rigid::TracePolynomial binom =
      mode == Mode::bosonic ? rigid::falling_binomial(n) : rigid::rising_binomial(n);
  const Rational root_value = binom.eval_at(cert.dimension);
  report.add(prefix + "dimension-dichotomy-root", root_value == 1 || root_value == -1,
             Json(rigid::rational_to_string(root_value)));

  if (rigid::subdimension_expected(x, mode))
    report.add(prefix + "subdimension", rigid::check_subdimension(x, n, mode));

  Json dim_witness = Json::object();
  dim_witness["dimension"] = rigid::rational_to_string(cert.dimension);
  dim_witness["sign"] = cert.sign;
  if (expected_dimension != nullptr)
    report.add(prefix + "dimension-expected", cert.dimension == *expected_dimension,
               std::move(dim_witness));
  else
    report.add(prefix + "dimension", true, std::move(dim_witness));

  if (certificate_out != nullptr) *certificate_out = std::move(*run.certificate);
}

void append_appendix_checks(VerificationReport& report, const std::string& prefix) {
  const rigid::AppendixReport rep = rigid::replay_appendix();
  for (const auto& check : rep.checks) {
    Json witness;
    if (check.name == "phi2-coefficients") {
      witness = Json::object();
      witness["coeff_id"] = rigid::rational_to_string(rep.coeff_identity);
      witness["coeff_phi"] = rigid::rational_to_string(rep.coeff_phi);
    } else if (!check.holds) {
      witness = rigid::identity_check_to_json(check, true);
    }
    report.add(prefix + check.name, check.holds, std::move(witness));
  }
}

void append_dimpoly_checks(VerificationReport& report, int n, Mode mode, bool with_witness,
                           const std::string& prefix) {
  const rigid::TracePolynomial traced = rigid::closure_trace(rigid::mode_idempotent(n, mode));
  const rigid::TracePolynomial closed =
      mode == Mode::bosonic ? rigid::falling_binomial(n) : rigid::rising_binomial(n);
  Json witness;
  if (with_witness || traced != closed) {
    witness = Json::object();
    witness["coefficients"] = rigid::polynomial_to_json(traced);
    witness["closed_form"] = rigid::polynomial_to_json(closed);
  }
  report.add(prefix + "closed-form", traced == closed, std::move(witness));
}

void append_solve_checks(VerificationReport& report, int n, long long bound, bool with_witness,
                         const std::string& prefix) {
  const std::vector<rigid::Integer> solutions =
      rigid::solve_dimension_equation(n, rigid::Integer(static_cast<long>(bound)));
  const bool dichotomy = solutions.size() == 2 && solutions[0] == n && solutions[1] == -1;
  Json witness;
  if (with_witness || !dichotomy) {
    witness = Json::array();
    for (const rigid::Integer& t : solutions) witness.push_back(t.get_str());
  }
  report.add(prefix + "dichotomy", dichotomy, std::move(witness));
}

struct BackendRow {
  SuperSpace x;
  int n;
  Mode mode;
  Rational expected_dimension;
};

std::vector<BackendRow> acceptance_backends() {
  return {
      {SuperSpace::even_space(2), 2, Mode::bosonic, Rational(2)},
      {SuperSpace::even_space(3), 3, Mode::bosonic, Rational(3)},
      {SuperSpace::even_space(4), 4, Mode::bosonic, Rational(4)},
      {SuperSpace::odd_space(1), 2, Mode::bosonic, Rational(-1)},
      {SuperSpace::odd_space(1), 3, Mode::bosonic, Rational(-1)},
      {SuperSpace::odd_space(2), 2, Mode::fermionic, Rational(-2)},
      {SuperSpace::odd_space(3), 3, Mode::fermionic, Rational(-3)},
  };
}

void append_fixture_checks(VerificationReport& report, const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  const fs::path p(path);
  if (fs::is_directory(p)) {
    for (const auto& entry : fs::directory_iterator(p))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(p);
  }

  for (const fs::path& file : files) {
    const std::string prefix = "fixture/" + file.filename().string() + "/";
    try {
      std::ifstream in(file);
      if (!in) throw std::runtime_error("cannot open " + file.string());
      Json parsed;
      in >> parsed;
      const DualCertificate cert = rigid::certificate_from_json(parsed);
      report.add(prefix + "load", true);
      for (const auto& check : rigid::verify_certificate(cert))
        report.add(prefix + check.name, check.holds);
    } catch (const std::exception& error) {
      report.add(prefix + "load", false, Json(error.what()));
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for duals built from invertible exterior/symmetric powers"};
  app.require_subcommand(1);

  std::string format = "json";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  int n = 3;
  std::string mode_str = "bosonic";
  unsigned even_dim = 0;
  unsigned odd_dim = 0;
  long long bound = 10000;
  std::string cert_path;
  std::vector<std::string> fixture_paths;

  CLI::App* recursion = app.add_subcommand(
      "recursion", "Verify the symmetrizer sandwich recursion in the group algebra");
  recursion->add_option("--n", n, "Symmetric group degree")->required()->check(CLI::Range(2, 8));
  recursion->add_option("--mode", mode_str, "bosonic (skew) or fermionic (plain)")
      ->check(CLI::IsMember({"bosonic", "fermionic"}));

  CLI::App* rigidity = app.add_subcommand(
      "rigidity", "Build and certify the dual of X=(even|odd) from its n-th power");
  rigidity->add_option("--even", even_dim, "Even dimension of X")->check(CLI::Range(0, 8));
  rigidity->add_option("--odd", odd_dim, "Odd dimension of X")->check(CLI::Range(0, 8));
  rigidity->add_option("--n", n, "Power exponent")->required()->check(CLI::Range(2, 8));
  rigidity->add_option("--mode", mode_str, "bosonic (exterior) or fermionic (symmetric)")
      ->check(CLI::IsMember({"bosonic", "fermionic"}));
  rigidity->add_option("--write-cert", cert_path, "Write the certificate JSON to this file");

  CLI::App* appendix =
      app.add_subcommand("appendix", "Replay the diagrammatic n=3 derivation step by step");

  CLI::App* dimpoly = app.add_subcommand(
      "dimpoly", "Check the closure trace of the degree-n idempotent against its closed form");
  dimpoly->add_option("--n", n, "Degree")->required()->check(CLI::Range(1, 8));
  dimpoly->add_option("--mode", mode_str, "bosonic or fermionic")
      ->check(CLI::IsMember({"bosonic", "fermionic"}));

  CLI::App* solve =
      app.add_subcommand("solve-t", "Scan integers for solutions of the dimension equation");
  solve->add_option("--n", n, "Power exponent")->required()->check(CLI::Range(2, 64));
  solve->add_option("--bound", bound, "Scan |t| <= bound")
      ->check(CLI::Range(1LL, 1000000LL))
      ->capture_default_str();

  CLI::App* suite = app.add_subcommand("suite", "Run the full acceptance matrix");
  suite->add_option("--fixtures", fixture_paths,
                    "Certificate fixture files or directories to re-verify");

  for (CLI::App* sub : {recursion, rigidity, appendix, dimpoly, solve, suite}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  const Timer timer;
  try {
    if (recursion->parsed()) {
      VerificationReport report;
      report.command = "recursion";
      report.parameters["n"] = n;
      report.parameters["mode"] = mode_str;
      append_recursion_checks(report, n, rigid::mode_from_string(mode_str), true, "");
      return emit(std::move(report), timer, format);
    }

    if (rigidity->parsed()) {
      VerificationReport report;
      report.command = "rigidity";
      report.parameters["even"] = even_dim;
      report.parameters["odd"] = odd_dim;
      report.parameters["n"] = n;
      report.parameters["mode"] = mode_str;
      const SuperSpace x = SuperSpace::mixed(even_dim, odd_dim);
      std::optional<DualCertificate> cert;
      append_rigidity_checks(report, x, n, rigid::mode_from_string(mode_str), "", nullptr, &cert);
      if (!cert_path.empty() && cert.has_value()) {
        std::ofstream out(cert_path);
        if (!out) throw std::runtime_error("cannot write " + cert_path);
        out << rigid::certificate_to_json(*cert).dump(2) << '\n';
      }
      return emit(std::move(report), timer, format);
    }

    if (appendix->parsed()) {
      VerificationReport report;
      report.command = "appendix";
      append_appendix_checks(report, "");
      return emit(std::move(report), timer, format);
    }

    if (dimpoly->parsed()) {
      VerificationReport report;
      report.command = "dimpoly";
      report.parameters["n"] = n;
      report.parameters["mode"] = mode_str;
      append_dimpoly_checks(report, n, rigid::mode_from_string(mode_str), true, "");
      return emit(std::move(report), timer, format);
    }

    if (solve->parsed()) {
      VerificationReport report;
      report.command = "solve-t";
      report.parameters["n"] = n;
      report.parameters["bound"] = bound;
      append_solve_checks(report, n, bound, true, "");
      return emit(std::move(report), timer, format);
    }

    if (suite->parsed()) {
      VerificationReport report;
      report.command = "suite";
      if (!fixture_paths.empty()) {
        Json fixtures = Json::array();
        for (const std::string& f : fixture_paths) fixtures.push_back(f);
        report.parameters["fixtures"] = std::move(fixtures);
      }

      for (int degree = 2; degree <= 6; ++degree)
        for (Mode mode : {Mode::bosonic, Mode::fermionic})
          append_recursion_checks(report, degree, mode, false,
                                  "recursion/" + std::string(rigid::mode_name(mode)) +
                                      "/n=" + std::to_string(degree) + "/");

      for (const BackendRow& row : acceptance_backends())
        append_rigidity_checks(report, row.x, row.n, row.mode,
                               "rigidity/" + row.x.parity_string() + "/" +
                                   rigid::mode_name(row.mode) + "/n=" + std::to_string(row.n) +
                                   "/",
                               &row.expected_dimension);

      append_appendix_checks(report, "appendix/");

      for (int degree = 2; degree <= 20; ++degree)
        append_solve_checks(report, degree, 10000, false,
                            "solve-t/n=" + std::to_string(degree) + "/");

      for (int degree = 1; degree <= 6; ++degree) {
        for (Mode mode : {Mode::bosonic, Mode::fermionic})
          append_dimpoly_checks(report, degree, mode, false,
                                "dimpoly/" + std::string(rigid::mode_name(mode)) +
                                    "/n=" + std::to_string(degree) + "/");
        report.add("dimpoly/vanish-at-n/n=" + std::to_string(degree),
                   rigid::falling_binomial(degree + 1).eval_at(Rational(degree)) == 0);
      }

      for (int d = 1; d <= 4; ++d)
        for (int degree = 1; degree <= 4; ++degree) {
          const auto power = rigid::power_object(
              SuperSpace::even_space(static_cast<std::size_t>(d)), degree, Mode::bosonic);
          const bool ok = rigid::falling_binomial(degree).eval_at(Rational(d)) ==
                          rigid::categorical_dimension(power.part.summand);
          report.add("cross/even/d=" + std::to_string(d) + "/n=" + std::to_string(degree), ok);
        }
      for (int q = 1; q <= 2; ++q)
        for (int degree = 1; degree <= 3; ++degree) {
          const auto power = rigid::power_object(
              SuperSpace::odd_space(static_cast<std::size_t>(q)), degree, Mode::bosonic);
          const bool ok = rigid::falling_binomial(degree).eval_at(Rational(-q)) ==
                          rigid::categorical_dimension(power.part.summand);
          report.add("cross/odd/q=" + std::to_string(q) + "/n=" + std::to_string(degree), ok);
        }

      for (const std::string& path : fixture_paths) append_fixture_checks(report, path);

      return emit(std::move(report), timer, format);
    }
  } catch (const NotInvertibleError& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  } catch (const rigid::TheoremFalsified& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& error) {
    std::cerr << "usage error: " << error.what() << '\n';
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 1;
  }

  return 2;
}
