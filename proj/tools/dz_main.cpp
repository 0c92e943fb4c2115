// Command-line front end: construct series pairs, verify pairs, enumerate
// orbits, inspect the catalog, generate Hall pairs, compute Pade forms.
#include <CLI11.hpp>

#include <iostream>

#include "dz/jobspec.hpp"

namespace {

void add_param_opts(CLI::App* cmd, std::map<std::string, std::string>& params,
                    std::initializer_list<const char*> names) {
  for (const char* name : names) {
    auto key = std::string(name);
    cmd->add_option_function<std::string>(
        "--" + key, [&params, key](const std::string& v) { params[key] = v; });
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dz: exact workbench for Davenport-Zannier polynomial pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  dz::cli::JobSpec spec;
  std::string format = "json";
  app.add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", spec.jobs, "worker threads for parameter sweeps")
      ->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand(
      "construct", "build a certified pair from one of the infinite series");
  construct->add_option_function<std::string>(
      "--series",
      [&](const std::string& v) { spec.params["series"] = v; },
      "A, C, D, E_even, E_odd, F, G, H, I, J, selfdual, split_sym, split_asym")
      ->required();
  add_param_opts(construct, spec.params,
                 {"s", "t", "k", "l", "r", "m", "p", "q", "lift"});

  auto* verify = app.add_subcommand("verify", "certify a pair from a file or inline");
  add_param_opts(verify, spec.params, {"file", "P", "Q", "passport"});

  auto* enumer = app.add_subcommand("enumerate", "list all plane trees with a passport");
  add_param_opts(enumer, spec.params, {"passport", "bound"});

  auto* cat = app.add_subcommand("catalog", "inspect or verify the stored pairs");
  add_param_opts(cat, spec.params, {"name"});
  cat->add_flag_function("--verify-all",
                         [&](int64_t) { spec.params["verify-all"] = "1"; });

  auto* hall = app.add_subcommand("hall", "integer pairs with small |a^3 - b^2|");
  add_param_opts(hall, spec.params, {"count"});

  auto* pade = app.add_subcommand("pade",
                                  "pade form of (1-x)^a (1+x)^b at order [n/m]");
  add_param_opts(pade, spec.params, {"a", "b", "n", "m"});

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : {construct, verify, enumer, cat, hall, pade})
    if (sub->parsed()) spec.command = sub->get_name();
  spec.json = (format == "json");

  dz::cli::Outcome out = dz::cli::run(spec);
  std::cout << out.output;
  return out.status;
}
