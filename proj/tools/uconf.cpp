#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "uconf/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with bundles over unordered configuration spaces"};
  app.require_subcommand(1);

  uconf::CommandOptions opt;
  std::size_t max_points = 0;
  std::size_t k = 0;
  uconf::LawOptions laws;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", opt.model, "model JSON file (default: bundled M3)");
    sub->add_option("--max-points", max_points, "largest configuration kept (default: |M|)");
  };
  auto sections = [&](CLI::App* sub, bool rhs) {
    sub->add_option("--lhs", opt.lhs, "section JSON file")->required();
    if (rhs) sub->add_option("--rhs", opt.rhs, "section JSON file")->required();
  };

  auto* dims = app.add_subcommand("dims", "closed-form vs enumerated tensor dimensions");
  common(dims);
  dims->add_option("--k", k, "number of points")->required();

  auto* axioms = app.add_subcommand("axioms", "run the seeded law suites");
  common(axioms);
  axioms->add_option("--seed", laws.seed, "random seed (UCONF_SEED overrides)");
  axioms->add_option("--cases", laws.cases, "cases per law");
  axioms->add_option("--max-degree", laws.max_degree, "degree bound of random monomials");

  auto* bracket = app.add_subcommand("bracket", "Poisson bracket of two sections");
  common(bracket);
  sections(bracket, true);

  auto* conv = app.add_subcommand("convolve", "convolution product of two sections");
  common(conv);
  sections(conv, true);

  auto* eval = app.add_subcommand("eval", "evaluate a section as a functional at a field");
  common(eval);
  sections(eval, false);
  eval->add_option("--field", opt.field, "field JSON file")->required();

  auto* peierls = app.add_subcommand("peierls-check", "compare with the Peierls bracket");
  common(peierls);
  sections(peierls, true);
  peierls->add_option("--field", opt.field, "field JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, std::cerr, std::cerr);
    return code == 0 ? 0 : uconf::kInputError;
  }

  for (auto* sub : app.get_subcommands())
    if (sub->count("--max-points")) opt.max_points = max_points;

  if (const char* env = std::getenv("UCONF_SEED")) {
    try {
      laws.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "uconf: UCONF_SEED must be a non-negative integer\n";
      return uconf::kInputError;
    }
  }

  if (*dims) return uconf::cmd_dims(opt, k, std::cout, std::cerr);
  if (*axioms) return uconf::cmd_axioms(opt, laws, std::cout, std::cerr);
  if (*bracket) return uconf::cmd_bracket(opt, std::cout, std::cerr);
  if (*conv) return uconf::cmd_convolve(opt, std::cout, std::cerr);
  if (*eval) return uconf::cmd_eval(opt, std::cout, std::cerr);
  return uconf::cmd_peierls_check(opt, std::cout, std::cerr);
}
