// fanoverify: verification suites, quadric classification and stability
// invariants from the command line. Exit codes: 0 pass, 1 failure, 2 usage.

#include "fano/normal_form.hpp"
#include "fano/stability.hpp"
#include "fano/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace fano;

namespace {

constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json fraction(const Rational& r) { return r.str(); }

// ---------------------------------------------------------------------------

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

int cmd_verify(const std::string& suite, const std::string& format, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<SuiteResult> results;
  if (suite == "all") {
    for (const auto& name : suite_names()) results.push_back(run_suite(name, seed));
  } else {
    results.push_back(run_suite(suite, seed));
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  int total = 0, passed = 0;
  for (const auto& r : results)
    for (const auto& c : r.checks) {
      ++total;
      passed += c.pass ? 1 : 0;
    }

  if (format == "md") {
    std::cout << "# fanoverify " << kVersion << ": verify " << suite << "\n\n";
    std::cout << "seed " << seed << "; " << passed << "/" << total << " checks passed\n";
    for (const auto& r : results) {
      std::cout << "\n## " << r.suite << "\n\n| check | anchor | origin | expected | computed | result |\n";
      std::cout << "|---|---|---|---|---|---|\n";
      for (const auto& c : r.checks)
        std::cout << "| " << md_escape(c.name) << " | " << md_escape(c.anchor) << " | " << c.origin << " | `"
                  << md_escape(c.expected) << "` | `" << md_escape(c.computed) << "` | "
                  << (c.pass ? "pass" : "FAIL") << " |\n";
    }
  } else {
    json j;
    j["tool"] = "fanoverify";
    j["version"] = kVersion;
    j["command"] = "verify";
    j["suite"] = suite;
    j["seed"] = seed;
    json suites = json::array();
    for (const auto& r : results) {
      json checks = json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name},
                          {"anchor", c.anchor},
                          {"origin", c.origin},
                          {"expected", c.expected},
                          {"computed", c.computed},
                          {"pass", c.pass}});
      suites.push_back({{"suite", r.suite}, {"pass", r.passed()}, {"checks", checks}});
    }
    j["suites"] = suites;
    j["summary"] = {{"checks", total}, {"passed", passed}, {"failed", total - passed}};
    j["timing_ms"] = ms;
    std::cout << j.dump(2) << "\n";
  }
  return passed == total ? 0 : 1;
}

// ---------------------------------------------------------------------------

QuadricCoeffs<Rational> parse_coeffs(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 6) throw UsageError("--coeffs needs exactly six comma-separated rationals");
  QuadricCoeffs<Rational> s;
  bool nonzero = false;
  for (int i = 0; i < 6; ++i) {
    try {
      s(i) = Rational::parse(parts[static_cast<std::size_t>(i)]);
    } catch (const std::invalid_argument&) {
      throw UsageError("cannot parse coefficient '" + parts[static_cast<std::size_t>(i)] + "'");
    }
    nonzero = nonzero || !s(i).is_zero();
  }
  if (!nonzero) throw UsageError("all coefficients are zero");
  return s;
}

int cmd_classify(const std::string& coeffs, const std::string& format) {
  const auto s = parse_coeffs(coeffs);
  const auto [first, second] = hessian_factors(s);
  if (first.is_zero() || second.is_zero()) {
    std::cerr << "singular quadric: the Hessian determinant -2*F1*F2 vanishes because ";
    if (first.is_zero()) std::cerr << "F1 = s0 s4 - s1 s3 + s2^2 + 2 s2 s5 - 3 s5^2 is zero";
    if (first.is_zero() && second.is_zero()) std::cerr << " and ";
    if (second.is_zero())
      std::cerr << "F2 = 4 s0 s2 s4 - s0 s3^2 - 4 s0 s4 s5 - s1^2 s4 + 4 s1 s3 s5 - 16 s2 s5^2 + 16 s5^3 is zero";
    std::cerr << "\n";
    return 1;
  }
  Classification r;
  try {
    r = classify(s);
  } catch (const SingularQuadric& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  const bool replayed = verify_witness(r);

  json j;
  j["tool"] = "fanoverify";
  j["version"] = kVersion;
  j["command"] = "classify";
  json in = json::array();
  for (int i = 0; i < 6; ++i) in.push_back(fraction(s(i)));
  j["input"] = in;
  j["case"] = r.label.number;
  j["lambda"] = r.label.lambda ? json(r.label.lambda->str()) : json(nullptr);
  j["mu"] = r.label.mu ? json(r.label.mu->str()) : json(nullptr);
  json nf = json::array();
  for (int i = 0; i < 6; ++i) nf.push_back(r.normal_form(i).str());
  j["normal_form"] = nf;
  json moduli = json::array();
  if (r.witness.tower)
    for (const auto& m : r.witness.tower->moduli()) moduli.push_back(m.str());
  j["extension_moduli"] = moduli;
  json moves = json::array();
  for (const auto& m : r.witness.moves) moves.push_back(m.str());
  j["witness"] = moves;
  j["witness_replayed"] = replayed;
  j["git"] = to_string(r.label.git);
  j["hessian"] = {{"determinant", hessian_det(s).str()}, {"F1", first.str()}, {"F2", second.str()}};
  j["branches_tried"] = r.branches_tried;

  if (format == "md") {
    std::cout << "# classify " << coeffs << "\n\n";
    std::cout << "- case: " << r.label.number << "\n- GIT: " << to_string(r.label.git) << "\n";
    if (r.label.lambda) std::cout << "- lambda: `" << r.label.lambda->str() << "`\n";
    if (r.label.mu) std::cout << "- mu: `" << r.label.mu->str() << "`\n";
    std::cout << "- normal form: `" << nf.dump() << "`\n";
    if (!moduli.empty()) std::cout << "- extension moduli: `" << moduli.dump() << "`\n";
    std::cout << "- witness (" << (replayed ? "replayed" : "REPLAY FAILED") << "):\n";
    for (const auto& m : r.witness.moves) std::cout << "  - `" << m.str() << "`\n";
    std::cout << "- Hessian factors: F1 = " << first << ", F2 = " << second << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return replayed ? 0 : 1;
}

// ---------------------------------------------------------------------------

json s_report_json(const SReport& r) {
  json pieces = json::array();
  for (const auto& p : r.pieces)
    pieces.push_back({{"interval", {p.lo.str(), p.hi.str()}}, {"P^3", p.integrand.str()}, {"integral", p.integral.str()}});
  return {{"target", r.target},       {"tau", r.tau.str()},        {"S", r.value.str()},
          {"beta", r.beta.str()},     {"pieces", pieces},
          {"decimal", {{"S", r.value.to_double()}, {"beta", r.beta.to_double()}}}};
}

json w_report_json(const WReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms)
    terms.push_back({{"region", t.label},
                     {"u", {t.u_lo.str(), t.u_hi.str()}},
                     {"v", {t.v_lo.str(), t.v_hi.str()}},
                     {"integrand", t.integrand.str()},
                     {"value", t.value.str()}});
  return {{"target", r.target}, {"value", r.value.str()}, {"terms", terms}};
}

json cert_json(const DeltaCertificate& c) {
  json cand = json::array(), names = json::array();
  for (const auto& [name, v] : c.candidates) {
    cand.push_back(v.str());
    names.push_back(name);
  }
  return {{"target", c.target}, {"bound", c.bound.str()}, {"candidates", cand}, {"candidate_names", names},
          {"decimal", c.bound.to_double()}};
}

int cmd_invariants(const std::string& target, const std::string& format) {
  json j;
  bool ok = true;
  if (target == "surface-H" || target == "surface-E") {
    const auto r = s_divisor(target == "surface-H" ? class_H() : class_E());
    j = s_report_json(r);
    ok = r.value < Rational(1);
  } else if (target == "delta-generic") {
    const auto cfg = dp4_blowup_config();
    const auto c = delta_bound_generic_point();
    j = cert_json(c);
    j["S(W^S;G)"] = w_report_json(s_w2_exceptional(cfg));
    const auto off = s_w3_point(cfg, false), on = s_w3_point(cfg, true);
    j["S(W^{S,G};O)"] = {{"off_curves", off.value.str()},
                         {"on_curves", on.value.str()},
                         {"F_O", w_report_json(on.f_o)}};
    ok = c.bound > Rational(1);
  } else {
    const auto c = beta_certificate_curve_case();
    json rows = json::array();
    for (const auto& [n, cert] : c.per_n) {
      const auto r = s_w2_curve_on_E(n);
      json mult = json::array();
      for (const auto& m : r.ord_term_by_multiplicity) mult.push_back(m.str());
      rows.push_back({{"n", n},
                      {"ord_term", r.ord_term.str()},
                      {"ord_term_by_multiplicity", mult},
                      {"volume_term", r.volume.value.str()},
                      {"S_bound", r.total.str()},
                      {"nef_confirmed", r.nef_confirmed},
                      {"certificate", cert_json(cert)}});
      ok = ok && cert.bound > Rational(1);
    }
    j = {{"target", "beta-curve"}, {"per_n", rows}, {"worst_bound", c.bound.str()}};
    Rational worst_s;
    for (int n : {0, 2, 4, 6}) worst_s = std::max(worst_s, s_w2_curve_on_E(n).total);
    j["worst_S_bound"] = worst_s.str();
  }
  if (format == "md") {
    std::cout << "# invariants " << target << "\n\n```json\n" << j.dump(2) << "\n```\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the K-stability computation for Bl_C Q"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string suite, format = "json", coeffs, target;
  std::uint64_t seed = kDefaultSeed;

  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);

  auto* verify = app.add_subcommand("verify", "Run golden and property suites");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));
  verify->add_option("--seed", seed, "Seed for randomized suites");

  auto* cls = app.add_subcommand("classify", "Reduce a quadric through C4 to its normal form");
  cls->add_option("--coeffs", coeffs, "s0,...,s5 as p/q rationals")->required();
  cls->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));

  auto* inv = app.add_subcommand("invariants", "Compute S-invariants and certificates");
  inv->add_option("--target", target, "Invariant")
      ->required()
      ->check(CLI::IsMember({"surface-H", "surface-E", "delta-generic", "beta-curve"}));
  inv->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "md"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help() << "\n";
    return 2;
  }

  try {
    if (*verify) return cmd_verify(suite, format, seed);
    if (*cls) return cmd_classify(coeffs, format);
    if (*inv) return cmd_invariants(target, format);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
