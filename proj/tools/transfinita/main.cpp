// transfinita: evaluate expressions over ordinals, surintegers, surrationals
// and their complexification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "transfinita/eval.hpp"
#include "transfinita/format.hpp"
#include "transfinita/parser.hpp"

namespace {

using transfinita::Env;
using transfinita::EvalError;
using transfinita::Value;

nlohmann::json error_json(const EvalError& e) {
  return {{"kind", std::string(transfinita::to_string(e.kind()))},
          {"op", e.op()},
          {"message", e.what()},
          {"line", e.pos().line},
          {"column", e.pos().column}};
}

// One batch/--json record; "value" and "canonical" on success, "error" otherwise.
nlohmann::json record(const std::string& input, const Env& env, bool& ok) {
  nlohmann::json j = {{"schema", "1"}, {"input", input}};
  try {
    const Value v = transfinita::eval_text(input, env);
    j["type"] = std::string(transfinita::type_name(v));
    j["value"] = transfinita::to_json(v);
    j["canonical"] = transfinita::print_canonical(v);
    ok = true;
  } catch (const EvalError& e) {
    j["error"] = error_json(e);
    ok = false;
  }
  if (env.oracle_log && !env.oracle_log->empty()) {
    j["oracle"] = *env.oracle_log;
    env.oracle_log->clear();
  }
  return j;
}

void print_oracle(const Env& env) {
  if (!env.oracle_log) return;
  for (const auto& line : *env.oracle_log) std::cerr << line << '\n';
  env.oracle_log->clear();
}

int run_eval(const std::string& expr, const Env& env, bool json) {
  if (json) {
    bool ok = false;
    std::cout << record(expr, env, ok).dump() << '\n';
    return ok ? 0 : 1;
  }
  try {
    const Value v = transfinita::eval_text(expr, env);
    print_oracle(env);
    std::cout << transfinita::print_canonical(v) << '\n';
    return 0;
  } catch (const EvalError& e) {
    print_oracle(env);
    std::cerr << "error at " << e.pos().line << ':' << e.pos().column << ": " << e.what() << '\n';
    return 1;
  }
}

int run_batch(const std::string& path, const Env& env) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot open " << path << '\n';
    return 2;
  }
  bool all_ok = true;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    bool ok = false;
    std::cout << record(line, env, ok).dump() << '\n';
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

int run_repl(Env env, bool json) {
  const bool tty = std::getenv("TERM") != nullptr;
  std::string line;
  auto prompt = [&] {
    if (tty) std::cout << "> " << std::flush;
  };
  for (prompt(); std::getline(std::cin, line); prompt()) {
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (line == ":quit" || line == ":q") break;
      if (line.rfind(":let ", 0) == 0) {
        const std::string rest = line.substr(5);
        const auto eq = rest.find('=');
        if (eq == std::string::npos) {
          std::cout << "usage: :let name = expr\n";
          continue;
        }
        const std::string name = trim(rest.substr(0, eq));
        auto parsed = transfinita::parse(name);
        const auto* e = std::get_if<transfinita::ExprPtr>(&parsed);
        if (!e || !std::holds_alternative<transfinita::Expr::Var>((*e)->node)) {
          std::cout << "not a variable name: " << name << '\n';
          continue;
        }
        const Value v = transfinita::eval_text(rest.substr(eq + 1), env);
        print_oracle(env);
        env.vars.insert_or_assign(name, v);
        std::cout << name << " = " << transfinita::print_canonical(v) << '\n';
      } else if (line.rfind(":type ", 0) == 0) {
        const Value v = transfinita::eval_text(line.substr(6), env);
        print_oracle(env);
        std::cout << transfinita::type_name(v) << '\n';
      } else if (line == ":lambda") {
        std::cout << transfinita::to_string(env.lambda) << '\n';
      } else if (line.rfind(":lambda ", 0) == 0) {
        const Value v = transfinita::eval_text(line.substr(8), env);
        const auto lambda = transfinita::to_ordinal(v, ":lambda");
        if (!transfinita::is_valid_lambda(lambda)) {
          std::cout << "lambda must be w or a transfinite x-number such as w^w\n";
          continue;
        }
        env.lambda = lambda;
        std::cout << "lambda = " << transfinita::to_string(lambda) << '\n';
      } else if (line == ":oracle on" || line == ":oracle off") {
        env.oracle = line == ":oracle on";
        std::cout << "oracle " << (env.oracle ? "on" : "off") << '\n';
      } else if (line[0] == ':') {
        std::cout << "commands: :let name = expr, :type expr, :lambda [expr], :oracle on|off, :quit\n";
      } else if (json) {
        bool ok = false;
        std::cout << record(line, env, ok).dump() << '\n';
      } else {
        const Value v = transfinita::eval_text(line, env);
        print_oracle(env);
        std::cout << transfinita::print_canonical(v) << '\n';
      }
    } catch (const EvalError& e) {
      print_oracle(env);
      std::cout << "error at " << e.pos().line << ':' << e.pos().column << ": " << e.what() << '\n';
    } catch (const transfinita::Error& e) {
      std::cout << "error: " << e.what() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic on ordinals below epsilon_0, surintegers, surrationals and their complexification"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  bool oracle = false;
  std::uint64_t max_magnitude = 0;
  app.add_flag("--json", json, "Emit JSON records");
  app.add_flag("--oracle", oracle, "Cross-check recursive operations against definitional unfolding");
  app.add_option("--max-magnitude", max_magnitude, "Largest finite intermediate, in bits");

  std::string expr;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate one expression");
  eval_cmd->add_option("expr", expr, "Expression")->required();

  std::string file;
  auto* batch_cmd = app.add_subcommand("batch", "Evaluate one expression per line, emitting JSON records");
  batch_cmd->add_option("file", file, "Input file")->required()->check(CLI::ExistingFile);

  auto* repl_cmd = app.add_subcommand("repl", "Interactive session");

  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> oracle_log;
  Env env;
  env.oracle = oracle;
  env.oracle_log = &oracle_log;
  if (max_magnitude > 0) env.limits.max_bits = max_magnitude;

  if (*eval_cmd) return run_eval(expr, env, json);
  if (*batch_cmd) return run_batch(file, env);
  if (*repl_cmd) return run_repl(env, json);
  return 2;
}
