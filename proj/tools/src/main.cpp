#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cobalex/cli/run.hpp"

namespace {

using cobalex::cli::JobSpec;

nlohmann::json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cobalex::Error(cobalex::ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw cobalex::Error(cobalex::ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cobalex: Alexander-polynomial TQFT invariants of Lagrangian cobordisms"};
  app.require_subcommand(1);

  JobSpec job;
  std::string input_path, route = "both", output_path;
  long d = 0;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("--input", input_path, "descriptor JSON file ('-' for stdin)")->required();
  };
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--pretty", job.pretty, "human-readable text instead of JSON");
    sub->add_option("-o", output_path, "write the report to FILE");
  };

  auto* alex = app.add_subcommand("alex", "normalized Alexander polynomial of a closed-up cobordism");
  with_input(alex);
  alex->add_option("--route", route, "det, trace or both")->check(CLI::IsMember({"det", "trace", "both"}));
  common(alex);

  auto* casson = app.add_subcommand("casson", "Casson invariant, Σ j² a_j");
  with_input(casson);
  common(casson);

  auto* sw = app.add_subcommand("sw", "Seiberg-Witten invariants, Σ (j - d) a_j over j > d");
  with_input(sw);
  auto* d_opt = sw->add_option("--d", d, "degree (default: all 0..g)");
  common(sw);

  auto* betti = app.add_subcommand("betti", "Poincaré polynomials");
  betti->require_subcommand(1);
  auto* sym = betti->add_subcommand("sym", "Sym^k of a genus-g surface");
  sym->add_option("--g", job.g)->required();
  sym->add_option("--k", job.k)->required();
  common(sym);
  auto* moduli = betti->add_subcommand("moduli", "moduli space of flat connections (Atiyah-Bott)");
  moduli->add_option("--g", job.g)->required()->check(CLI::PositiveNumber);
  common(moduli);
  auto* graded = betti->add_subcommand("casson-graded", "graded Casson state-space dimensions");
  graded->add_option("--g", job.g)->required()->check(CLI::PositiveNumber);
  common(graded);

  auto* compose = app.add_subcommand("compose", "compose a list of cobordisms, left to right");
  with_input(compose);
  common(compose);

  auto* verify = app.add_subcommand("verify", "run the property suite");
  verify->add_option("--g-max", job.g_max, "largest genus for random samples")->check(CLI::Range(1u, 3u));
  verify->add_option("--samples", job.samples, "random samples per check");
  verify->add_option("--seed", job.seed, "generator seed");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cobalex::cli::kUsage;
  }

  for (auto* sub : {alex, casson, sw, compose, verify})
    if (sub->parsed()) job.command = sub->get_name();
  if (betti->parsed()) {
    job.command = "betti";
    for (auto* sub : {sym, moduli, graded})
      if (sub->parsed()) job.betti_kind = sub->get_name();
  }
  if (d_opt->count() > 0) job.d = d;

  try {
    job.route = cobalex::cli::parse_route(route);
    if (!input_path.empty()) {
      if (input_path == "-") job.input = nlohmann::json::parse(std::cin);
      else job.input = read_input(input_path);
    }
  } catch (const cobalex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cobalex::cli::kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: stdin: " << e.what() << "\n";
    return cobalex::cli::kUsage;
  }

  const auto result = cobalex::cli::run(job);
  if (!output_path.empty()) {
    std::ofstream out(output_path);
    if (!out) {
      std::cerr << "error: cannot write " << output_path << "\n";
      return cobalex::cli::kUsage;
    }
    out << result.output;
  } else {
    std::cout << result.output;
  }
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  return result.exit_code;
}
