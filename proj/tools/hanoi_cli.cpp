// Command-line front end: verification reports, Q-tables, the kernel report,
// relator checks, the disk game and portrait export.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "hanoi/automorphism.hpp"
#include "hanoi/errors.hpp"
#include "hanoi/expected_values.hpp"
#include "hanoi/hanoi_analysis.hpp"
#include "hanoi/hanoi_game.hpp"
#include "hanoi/wreath_words.hpp"

namespace {

using nlohmann::json;
using namespace hanoi;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("hanoi");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("LOGLEVEL")) {
    const std::string text = level;
    if (text == "error") {
      spdlog::set_level(spdlog::level::err);
    } else if (text == "info") {
      spdlog::set_level(spdlog::level::info);
    } else if (text == "debug") {
      spdlog::set_level(spdlog::level::debug);
    }
  }
}

void require_budget(int depth, bool slow) {
  if (depth > kDefaultDepthBudget && !slow) {
    throw ResourceError("depth " + std::to_string(depth) + " is beyond the default budget of " +
                        std::to_string(kDefaultDepthBudget) + "; pass --slow to allow it");
  }
}

json result(std::string id, json computed, json expected_value) {
  const bool pass = computed == expected_value;
  return {{"id", std::move(id)},
          {"computed", std::move(computed)},
          {"expected", std::move(expected_value)},
          {"pass", pass}};
}

struct Report {
  std::string command;
  json params = json::object();
  json results = json::array();

  bool pass() const {
    for (const auto& r : results) {
      if (!r.at("pass").get<bool>()) {
        return false;
      }
    }
    return true;
  }

  json to_json() const {
    return {{"command", command}, {"params", params}, {"results", results}, {"pass", pass()}};
  }
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(out_path);
  if (!file) {
    throw UsageError("cannot write to '" + out_path + "'");
  }
  file << text;
}

int emit(const Report& report, const std::string& out_path) {
  for (const auto& r : report.results) {
    std::cerr << (r.at("pass").get<bool>() ? "PASS " : "FAIL ") << r.at("id").get<std::string>()
              << '\n';
  }
  const bool pass = report.pass();
  std::cerr << report.command << ": " << (pass ? "pass" : "FAIL") << '\n';
  write_output(report.to_json().dump(2) + "\n", out_path);
  return pass ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- commands

struct VerifyArgs {
  std::string id;
  int depth = kDefaultDepthBudget;
  bool slow = false;
  bool list = false;
};

int run_verify(const VerifyArgs& args, const std::string& out) {
  if (args.list) {
    json list = json::array();
    for (const auto& id : lemma_ids()) {
      list.push_back({{"id", id}, {"statement", std::string(lemma_statement(id))}});
      std::cerr << id << "  " << lemma_statement(id) << '\n';
    }
    write_output(json{{"command", "verify --list"}, {"lemmas", list}}.dump(2) + "\n", out);
    return kExitPass;
  }
  if (args.id.empty()) {
    throw UsageError("verify needs a lemma id, 'all', or --list");
  }
  std::vector<std::string> ids;
  if (args.id == "all") {
    ids = lemma_ids();
  } else {
    lemma_statement(args.id);  // rejects unknown ids
    ids.push_back(args.id);
  }
  QuotientCache cache;
  Report report{"verify", {{"id", args.id}, {"depth", args.depth}, {"slow", args.slow}}};
  for (const auto& id : ids) {
    if (lemma_uses_quotients(id)) {
      require_budget(args.depth, args.slow);
    }
    const LemmaReport r = verify_lemma(cache, id, args.depth);
    report.results.push_back(
        {{"id", r.id}, {"computed", r.computed}, {"expected", r.expected}, {"pass", r.pass}});
  }
  return emit(report, out);
}

int run_qtable(int n_max, int depth, bool slow, const std::string& out) {
  require_budget(depth, slow);
  if (n_max < 1 || n_max >= depth) {
    throw UsageError("qtable needs 1 <= n-max < depth");
  }
  QuotientCache cache;
  Report report{"qtable", {{"n_max", n_max}, {"depth", depth}, {"slow", slow}}};
  for (int n = 1; n <= n_max; ++n) {
    for (int big_n = n + 1; big_n <= depth; ++big_n) {
      const std::string id = "q(" + std::to_string(big_n) + "," + std::to_string(n) + ")";
      report.results.push_back(result(id, to_string(q_order(cache, big_n, n)),
                                      to_string(q_order_closed_form(n))));
    }
  }
  return emit(report, out);
}

int run_kernel_report(int n_max, int depth, bool slow, const std::string& out) {
  require_budget(depth, slow);
  QuotientCache cache;
  const KernelReport r = kernel_report(cache, n_max, depth);
  Report report{"kernel-report", {{"n_max", n_max}, {"depth", depth}, {"slow", slow}}};
  json computed = to_json(r);
  json expected_value = {{"kernel order", expected("kernel.order")},
                         {"kernel type", expected("kernel.type")}};
  json summary = {{"kernel order", computed.at("kernel order")},
                  {"kernel type", computed.at("kernel type")}};
  for (const auto& row : r.rows) {
    const std::string n = std::to_string(row.n);
    const std::string next = std::to_string(row.n + 1);
    summary["|Gamma_" + next + "|"] = to_string(row.gamma_next);
    summary["|K_{" + n + "," + next + "}|"] = to_string(row.k);
    summary["|H_{" + n + "," + next + "}|"] = to_string(row.h);
    expected_value["|Gamma_" + next + "|"] = to_string(gamma_order_closed_form(row.n + 1));
    expected_value["|K_{" + n + "," + next + "}|"] = to_string(k_order_closed_form(row.n));
    expected_value["|H_{" + n + "," + next + "}|"] = expected("h.order");
  }
  json entry = result("kernel", summary, expected_value);
  entry["pass"] = entry["pass"].get<bool>() && r.pass;
  entry["report"] = computed;
  report.results.push_back(entry);
  return emit(report, out);
}

int run_relators(int max_tau, int depth, const std::string& out) {
  if (max_tau < 0 || depth < 1) {
    throw UsageError("relators needs max-tau >= 0 and depth >= 1");
  }
  Report report{"relators", {{"max_tau", max_tau}, {"depth", depth}}};
  for (const char* w : {"aa", "bb", "cc"}) {
    report.results.push_back(result(w, check_relator(Word(w), depth), true));
  }
  for (int i = 1; i <= 4; ++i) {
    for (int n = 0; n <= max_tau; ++n) {
      const std::string id = "tau^" + std::to_string(n) + "(w" + std::to_string(i) + ")";
      report.results.push_back(result(id, check_relator(parse_word_expression(id), depth), true));
    }
  }
  report.results.push_back(result("ab", check_relator(Word("ab"), depth), false));
  return emit(report, out);
}

int run_game_act(const std::string& state_text, const std::string& move_text,
                 const std::string& out) {
  const GameState state = GameState::parse(state_text);
  const Move move = parse_move(move_text);
  const GameState moved = apply_move(state, move);
  // The same move read off the generator's portrait.
  const Vertex image = apply(evaluate(Word(std::string(1, to_char(move))), state.disks()),
                             state.vertex());
  Report report{"game act", {{"state", state.to_string()}, {"move", std::string(1, to_char(move))}}};
  report.results.push_back(
      result("act", moved.to_string(), GameState(image.digits()).to_string()));
  std::cerr << moved.to_string() << '\n';
  return emit(report, out);
}

int run_game_solve(int disks, const std::string& out) {
  const Word word = solve(disks);
  GameState s = GameState::all_on(1, disks);
  json moves = json::array();
  for (char x : word.letters()) {
    moves.push_back(std::string(1, x));
    s = apply_move(s, parse_move(std::string(1, x)));
  }
  const std::size_t optimum = (std::size_t{1} << disks) - 1;
  Report report{"game solve", {{"disks", disks}}};
  report.results.push_back(result(
      "solve",
      {{"word", word.to_string()}, {"moves", moves}, {"length", word.size()},
       {"final", s.to_string()}},
      {{"word", word.to_string()}, {"moves", moves}, {"length", optimum},
       {"final", GameState::all_on(3, disks).to_string()}}));
  std::cerr << word.to_string() << '\n';
  return emit(report, out);
}

int run_export(const std::string& what, const std::string& expression, int depth,
               const std::string& format, const std::string& out) {
  if (what != "portrait") {
    throw UsageError("export supports only 'portrait'");
  }
  if (depth < 0) {
    throw UsageError("depth must be non-negative");
  }
  const Word w = parse_word_expression(expression);
  const Portrait p = evaluate(w, depth);
  if (format == "dot") {
    write_output(to_dot(p, "portrait"), out);
  } else {
    write_output(to_json(p).dump(2) + "\n", out);
  }
  return kExitPass;
}

int run(int argc, char** argv) {
  CLI::App app{"Hanoi towers group: truncated-quotient verification and the disk game"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("--out", out, "write the report to FILE instead of stdout");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "check one lemma id, or all of them");
  verify_cmd->add_option("id", verify.id, "lemma id or 'all'");
  verify_cmd->add_option("--depth", verify.depth, "truncation depth")->capture_default_str();
  verify_cmd->add_flag("--slow", verify.slow, "allow depths beyond the default budget");
  verify_cmd->add_flag("--list", verify.list, "list lemma ids");

  int q_n_max = 2, q_depth = kDefaultDepthBudget;
  bool q_slow = false;
  auto* qtable_cmd = app.add_subcommand("qtable", "orders of Stab(n)/Rist(n) in G_N");
  qtable_cmd->add_option("--n-max", q_n_max)->capture_default_str();
  qtable_cmd->add_option("--depth", q_depth)->capture_default_str();
  qtable_cmd->add_flag("--slow", q_slow);

  int k_n_max = 2, k_depth = kDefaultDepthBudget;
  bool k_slow = false;
  auto* kernel_cmd = app.add_subcommand("kernel-report", "assemble the rigid kernel order");
  kernel_cmd->add_option("--n-max", k_n_max)->capture_default_str();
  kernel_cmd->add_option("--depth", k_depth)->capture_default_str();
  kernel_cmd->add_flag("--slow", k_slow);

  int max_tau = 4, r_depth = kDefaultDepthBudget;
  auto* relators_cmd = app.add_subcommand("relators", "evaluate the defining relators");
  relators_cmd->add_option("--max-tau", max_tau)->capture_default_str();
  relators_cmd->add_option("--depth", r_depth)->capture_default_str();

  auto* game_cmd = app.add_subcommand("game", "the Towers of Hanoi game");
  game_cmd->require_subcommand(1);
  std::string state_text, move_text;
  auto* act_cmd = game_cmd->add_subcommand("act", "apply one move to a position");
  act_cmd->add_option("--state", state_text, "pegs, smallest disk first, e.g. 2,1,3")->required();
  act_cmd->add_option("--move", move_text, "a, b or c")->required();
  int disks = 3;
  auto* solve_cmd = game_cmd->add_subcommand("solve", "shortest solution by BFS");
  solve_cmd->add_option("--disks", disks)->required();

  std::string export_what, export_word, export_format = "json";
  int export_depth = kDefaultDepthBudget;
  auto* export_cmd = app.add_subcommand("export", "write a portrait as DOT or JSON");
  export_cmd->add_option("what", export_what, "portrait")->required();
  export_cmd->add_option("word", export_word, "word expression, e.g. acab or tau^2(w1)")
      ->required();
  export_cmd->add_option("--depth", export_depth)->capture_default_str();
  export_cmd->add_option("--format", export_format)
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify_cmd->parsed()) {
    return run_verify(verify, out);
  }
  if (qtable_cmd->parsed()) {
    return run_qtable(q_n_max, q_depth, q_slow, out);
  }
  if (kernel_cmd->parsed()) {
    return run_kernel_report(k_n_max, k_depth, k_slow, out);
  }
  if (relators_cmd->parsed()) {
    return run_relators(max_tau, r_depth, out);
  }
  if (act_cmd->parsed()) {
    return run_game_act(state_text, move_text, out);
  }
  if (solve_cmd->parsed()) {
    return run_game_solve(disks, out);
  }
  return run_export(export_what, export_word, export_depth, export_format, out);
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  try {
    return run(argc, argv);
  } catch (const hanoi::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const hanoi::UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hanoi::DepthError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hanoi::ParseError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const hanoi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
