#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <stretchforge/suites.hpp>

namespace {

using stretchforge::CheckReport;
using stretchforge::SuiteOptions;

int default_order() {
  if (const char* env = std::getenv("STRETCHFORGE_ORDER")) {
    try {
      return std::stoi(env);
    } catch (...) {
      std::cerr << "ignoring malformed STRETCHFORGE_ORDER='" << env << "'\n";
    }
  }
  return 8;
}

struct OutputOptions {
  std::string out;
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--out", out.out, "write the report to a file");
  cmd->add_option("--format", out.format, "report format")
      ->check(CLI::IsMember({"json", "text"}));
}

int emit(const CheckReport& report, const OutputOptions& out) {
  const std::string body = out.format == "text"
                               ? report.to_text()
                               : report.to_json().dump(2) + "\n";
  if (out.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream file(out.out);
    if (!file) {
      std::cerr << "cannot write " << out.out << "\n";
      return 2;
    }
    file << body;
  }
  return report.any_failed() ? 1 : 0;
}

/// Expands "a..b" ranges and plain integers.
std::vector<int> expand_class_list(const std::vector<std::string>& args) {
  std::vector<int> values;
  for (const auto& a : args) {
    const auto dots = a.find("..");
    if (dots == std::string::npos) {
      values.push_back(std::stoi(a));
      continue;
    }
    const int lo = std::stoi(a.substr(0, dots));
    const int hi = std::stoi(a.substr(dots + 2));
    for (int v = lo; v <= hi; ++v) values.push_back(v);
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification suites for stretched boundary actions"};
  app.require_subcommand(1);

  SuiteOptions opts;
  opts.order = default_order();
  OutputOptions out;

  int n = 2, p = 1, m = 2, k = 10, upto = 200;
  int certify_p = 1, certify_q = 1;
  bool condition_a = false;
  std::string space;
  std::vector<std::string> algebra_specs;
  std::vector<std::string> class_list;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--order", opts.order, "series truncation order")
        ->capture_default_str();
    cmd->add_option("--tol", opts.tol, "numeric tolerance")
        ->capture_default_str();
    cmd->add_option("--seed", opts.seed, "sampling seed")
        ->capture_default_str();
    cmd->add_option("--samples", opts.samples, "numeric sample count")
        ->capture_default_str();
    cmd->add_option("--pairs", opts.pairs, "random bracket pairs")
        ->capture_default_str();
    add_output_flags(cmd, out);
  };

  auto* stretch = app.add_subcommand(
      "stretch", "pull back so(1,n) collar fields under y -> y^p");
  stretch->add_option("--n", n, "hyperbolic dimension")->required();
  stretch->add_option("--p", p, "stretch exponent")->required();
  add_common(stretch);

  auto* kp = app.add_subcommand(
      "klein-poincare",
      "the conformal ball model as a valuation-2 stretch of the projective one");
  kp->add_option("--n", n, "hyperbolic dimension")->required();
  add_common(kp);

  auto* cond = app.add_subcommand(
      "condition-a", "normalizer = subalgebra + center, at the algebra level");
  cond->add_option("specs", algebra_specs,
                   "ALGEBRA SUBALGEBRA pairs; several pairs form a direct "
                   "product (built-in names or JSON files)")
      ->required()
      ->expected(-2);
  add_output_flags(cond, out);

  auto* poset = app.add_subcommand(
      "poset", "divisibility order on analytic stretch classes");
  poset->require_subcommand(1);
  auto* check = poset->add_subcommand("check", "is b tighter than a?");
  check->add_option("a", certify_p, "first class exponent")->required();
  check->add_option("b", certify_q, "second class exponent")->required();
  add_output_flags(check, out);
  auto* tightest_cmd =
      poset->add_subcommand("tightest", "minimum of a set of classes");
  tightest_cmd
      ->add_option("classes", class_list, "exponents or ranges like 1..12")
      ->required();
  add_output_flags(tightest_cmd, out);
  auto* certify = poset->add_subcommand(
      "certify", "conjugacy certificate for two stretch classes");
  certify->add_option("p", certify_p, "first class exponent")->required();
  certify->add_option("q", certify_q, "second class exponent")->required();
  certify->add_flag("--condition-a", condition_a,
                    "assume the stabilizer condition holds");
  add_output_flags(certify, out);
  auto* enumerate =
      poset->add_subcommand("enumerate", "first k stretch classes");
  enumerate->add_option("k", k, "class count")->required();
  add_output_flags(enumerate, out);
  auto* axioms =
      poset->add_subcommand("axioms", "partial-order axioms on 1..N");
  axioms->add_option("n", upto, "largest exponent")->required();
  add_output_flags(axioms, out);

  auto* eigen = app.add_subcommand(
      "eigencheck", "geodesic-symmetry eigenvalue multiplicities");
  eigen->add_option("space", space, "complex or real")
      ->required()
      ->check(CLI::IsMember({"complex", "real"}));
  eigen->add_option("m", m, "dimension")->required();
  add_output_flags(eigen, out);

  CLI11_PARSE(app, argc, argv);

  try {
    CheckReport report;
    if (stretch->parsed()) {
      report = stretchforge::run_stretch_suite(n, p, opts);
    } else if (kp->parsed()) {
      report = stretchforge::run_klein_poincare_suite(n, opts);
    } else if (cond->parsed()) {
      if (algebra_specs.size() % 2 != 0)
        throw std::invalid_argument(
            "condition-a takes ALGEBRA SUBALGEBRA pairs");
      std::vector<std::pair<std::string, std::string>> pairs;
      for (std::size_t i = 0; i + 1 < algebra_specs.size(); i += 2)
        pairs.emplace_back(algebra_specs[i], algebra_specs[i + 1]);
      report = stretchforge::run_condition_a_suite(pairs);
    } else if (check->parsed()) {
      report = stretchforge::run_poset_check(certify_p, certify_q);
    } else if (tightest_cmd->parsed()) {
      report = stretchforge::run_poset_tightest(expand_class_list(class_list));
    } else if (certify->parsed()) {
      report = stretchforge::run_poset_certify(certify_p, certify_q,
                                               condition_a);
    } else if (enumerate->parsed()) {
      report = stretchforge::run_poset_enumerate(k);
    } else if (axioms->parsed()) {
      report = stretchforge::run_poset_axioms(upto);
    } else if (eigen->parsed()) {
      report = stretchforge::run_eigencheck_suite(space, m);
    }
    return emit(report, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
