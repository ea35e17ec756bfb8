// surprise command-line front end.
//
// Exit status: 0 success, 1 a verification check failed, 2 bad input
// (usage, syntax, unknown world, malformed model, empty law set).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "surprise/surprise.hpp"

namespace {

using namespace surprise;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "R", "D", or "{Mo,Tu,...}".
RunSet parse_law(const std::string& text) {
  if (text == "R") return RunSet::all();
  if (text == "D") return RunSet::days();
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw Error("law must be R, D or a run set like {Mo,none}");
  RunSet out;
  std::string inner = text.substr(1, text.size() - 2);
  std::istringstream ss(inner);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    const std::string name = item.substr(b, e - b + 1);
    auto r = run_from_name(name);
    if (!r) throw Error("unknown run name '" + name + "'");
    out.insert(*r);
  }
  return out;
}

void explain(std::ostream& os, const Formula& f, const std::function<bool(const Formula&)>& value, int depth) {
  os << std::string(2 * depth, ' ') << (value(f) ? "T  " : "F  ") << render(f) << "\n";
  switch (f.kind()) {
    case Formula::Kind::Implies:
      explain(os, f.lhs(), value, depth + 1);
      explain(os, f.rhs(), value, depth + 1);
      break;
    case Formula::Kind::Box: explain(os, f.body(), value, depth + 1); break;
    default: break;
  }
}

struct EvalArgs {
  std::string formula;
  std::string run;
  std::string model;
  std::string world;
  bool explain = false;
};

int cmd_eval(const EvalArgs& a) {
  const Formula f = parse(a.formula, builtin_macros());
  std::function<bool(const Formula&)> value;
  std::optional<KripkeModel> model;
  if (!a.run.empty()) {
    auto r = run_from_name(a.run);
    if (!r) throw Error("unknown run name '" + a.run + "'");
    require_propositional(f);
    value = [r](const Formula& g) { return eval_run(g, *r); };
  } else {
    model = model_from_json_string(read_file(a.model));
    const std::size_t w = model->index_of(a.world);
    value = [&model, w](const Formula& g) { return eval_at(*model, w, g); };
  }
  std::cout << (value(f) ? "true" : "false") << "\n";
  if (a.explain) explain(std::cout, f, value, 0);
  return 0;
}

int cmd_analyze(const std::string& law_text, bool json) {
  const RunSet law = parse_law(law_text);
  const LawReport r = analyze_law(law);
  if (json)
    std::cout << law_report_json(r).dump(2) << "\n";
  else
    std::cout << law_report_text(r);
  return 0;
}

int cmd_verify(std::size_t bound, std::size_t samples, std::uint64_t seed, bool json) {
  VerifyOptions opt;
  opt.bound = bound;
  opt.samples = samples;
  opt.seed = seed;
  const VerificationReport r = verify_all(opt);
  if (json)
    std::cout << verification_json(r).dump(2) << "\n";
  else
    std::cout << verification_text(r);
  std::cerr << "elapsed " << r.elapsed_ms << " ms\n";
  return r.ok() ? 0 : kExitFail;
}

int cmd_export(const std::string& target, const std::string& format) {
  KripkeModel m;
  if (target == "mg")
    m = standard_models().full;
  else if (target == "mgplus")
    m = standard_models().days;
  else
    m = universal_model();
  if (format == "json")
    std::cout << model_to_json_string(m);
  else
    std::cout << model_to_dot(m, target);
  return 0;
}

int cmd_enumerate(bool json) {
  const auto recs = enumerate_axiom_systems();
  if (json)
    std::cout << enumeration_json(recs).dump(2) << "\n";
  else
    std::cout << enumeration_text(recs);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knowledge sets, surprising days and modal surprise over six runs"};
  app.require_subcommand(1);

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Evaluate a formula at a run or at a world of a model");
  eval->add_option("formula", ev.formula, "Formula text")->required();
  auto* run_opt = eval->add_option("--run", ev.run, "Run: Mo, Tu, We, Th, Fr or none");
  auto* model_opt = eval->add_option("--model", ev.model, "Kripke model JSON file");
  auto* world_opt = eval->add_option("--world", ev.world, "World id in the model");
  eval->add_flag("--explain", ev.explain, "Print the evaluation tree");
  run_opt->excludes(model_opt)->excludes(world_opt);
  model_opt->needs(world_opt);
  world_opt->needs(model_opt);

  std::string law;
  bool analyze_json = false;
  auto* analyze = app.add_subcommand("analyze", "Solve the fixed-point announcement for a law set");
  analyze->add_option("--law", law, "R, D or a run set such as {Mo,none}")->required();
  analyze->add_flag("--json", analyze_json, "Emit JSON");

  std::size_t bound = 3, samples = 500;
  std::uint64_t seed = 0;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Run the full verification suite");
  verify->add_option("--bound", bound, "World bound for preorder enumeration")->check(CLI::Range(1, 4));
  verify->add_option("--samples", samples, "Random samples per randomized check")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Seed for all randomized checks");
  verify->add_flag("--json", verify_json, "Emit JSON");

  std::string target, format = "json";
  auto* exp = app.add_subcommand("export", "Print a built-in model");
  exp->add_option("target", target, "mg, mgplus or universal")
      ->required()
      ->check(CLI::IsMember({"mg", "mgplus", "universal"}));
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  bool enum_json = false;
  auto* enumerate = app.add_subcommand("enumerate", "Tabulate the 64 canonical axiom systems");
  enumerate->add_flag("--json", enum_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*eval) {
      if (ev.run.empty() && ev.model.empty()) throw Error("eval needs --run or --model with --world");
      return cmd_eval(ev);
    }
    if (*analyze) return cmd_analyze(law, analyze_json);
    if (*verify) return cmd_verify(bound, samples, seed, verify_json);
    if (*exp) return cmd_export(target, format);
    if (*enumerate) return cmd_enumerate(enum_json);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n  " << ev.formula << "\n  " << std::string(e.column() - 1, ' ') << "^\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
