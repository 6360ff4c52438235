// sklyanin: run verification suites for a 4-dimensional Sklyanin algebra and its
// Klein-four cocycle twist, or export presentations as JSON.

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sklyanin/cocycle.hpp"
#include "sklyanin/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitArithmetic = 3;

sklyanin::Rational parse_flag(const std::string& text, const char* flag) {
  try {
    return sklyanin::parse_rational(text);
  } catch (const sklyanin::Error& e) {
    throw sklyanin::Error(sklyanin::ErrorCode::Parse, std::string(flag) + ": " + e.what());
  }
}

void write_output(const nlohmann::json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw sklyanin::Error(sklyanin::ErrorCode::Precondition, "cannot open " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Sklyanin algebras and their cocycle twists"};
  app.require_subcommand(1);

  std::string beta = "2", gamma = "3", alpha, out;
  std::string suite;
  std::size_t degree = 6, module_degree = 5;
  std::string algebra = "both";

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--beta", beta, "beta as p/q")->capture_default_str();
    cmd->add_option("--gamma", gamma, "gamma as p/q")->capture_default_str();
    cmd->add_option("--alpha", alpha, "alpha as p/q (derived from beta and gamma when omitted)");
    cmd->add_option("--out", out, "write JSON here instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite and print a JSON report");
  std::vector<std::string> choices = sklyanin::suite_names();
  choices.push_back("all");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(choices));
  verify->add_option("--degree", degree, "degree bound for quotient computations")->capture_default_str();
  verify->add_option("--module-degree", module_degree, "top degree of truncated modules")->capture_default_str();
  verify->add_option("--algebra", algebra, "algebras for the Hilbert suite")
      ->check(CLI::IsMember({"sklyanin", "twist", "both"}))
      ->capture_default_str();
  add_params(verify);

  std::string which = "both";
  CLI::App* exp = app.add_subcommand("export", "print presentations as JSON");
  exp->add_option("--algebra", which, "sklyanin, twist or both")
      ->check(CLI::IsMember({"sklyanin", "twist", "both"}))
      ->capture_default_str();
  add_params(exp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  sklyanin::RunConfig config;
  try {
    config.beta = parse_flag(beta, "--beta");
    config.gamma = parse_flag(gamma, "--gamma");
    if (!alpha.empty()) config.alpha = parse_flag(alpha, "--alpha");
    config.degree = degree;
    config.module_degree = module_degree;
    const std::map<std::string, sklyanin::AlgebraChoice> algebras{{"sklyanin", sklyanin::AlgebraChoice::Sklyanin},
                                                                  {"twist", sklyanin::AlgebraChoice::Twist},
                                                                  {"both", sklyanin::AlgebraChoice::Both}};
    config.algebra = algebras.at(algebra);
    (void)sklyanin::config_parameters(config);
  } catch (const sklyanin::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*exp) {
      const sklyanin::Parameters params = sklyanin::config_parameters(config);
      nlohmann::json j = nlohmann::json::object();
      if (which != "twist") j["sklyanin"] = sklyanin::to_json(sklyanin::sklyanin_presentation(params));
      if (which != "sklyanin") j["twist"] = sklyanin::to_json(sklyanin::twisted_sklyanin_presentation(params));
      write_output(j, out);
      return 0;
    }

    const auto reports = sklyanin::run_suite(suite, config);
    nlohmann::json j = nlohmann::json::array();
    bool failed = false;
    for (const auto& r : reports) {
      j.push_back(sklyanin::to_json(r));
      failed = failed || r.status == sklyanin::Status::Fail;
      std::cerr << sklyanin::to_string(r.status) << "  " << r.name << '\n';
    }
    write_output(j, out);
    return failed ? kExitFail : 0;
  } catch (const sklyanin::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_arithmetic() ? kExitArithmetic : kExitConfig;
  }
}
