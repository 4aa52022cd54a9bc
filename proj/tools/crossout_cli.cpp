// crossout: command-line front end for the crossout engine, identity checks,
// the dinner game and the local game service.

#include <csignal>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crossout/correspondence.hpp"
#include "crossout/errors.hpp"
#include "crossout/game.hpp"
#include "crossout/hermite.hpp"
#include "crossout/identity_suite.hpp"
#include "crossout/json_io.hpp"
#include "crossout/service.hpp"
#include "crossout/statistics.hpp"

using namespace crossout;

namespace {

constexpr int kExitUnequal = 1;
constexpr int kExitUsage = 2;

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Permutation read_permutation(const std::string& arg) {
  return Permutation::parse(arg == "-" ? read_all(std::cin) : arg);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const std::string& suites, int n_max, bool force, bool as_json) {
  if (n_max < 1) throw ValidationError("--n must be at least 1");
  std::vector<std::string> names;
  for (const std::string& s : split_list(suites)) names.push_back(canonical_suite(s));
  if (names.empty()) throw ValidationError("--suite is empty");

  std::size_t total = 0, unequal = 0;
  for (const std::string& suite : names)
    for (int n = 1; n <= n_max; ++n)
      run_suite(suite, n, SweepOptions{force}, [&](const IdentityReport& r) {
        ++total;
        if (!r.equal()) ++unequal;
        if (as_json) {
          std::cout << to_json(r).dump() << '\n';
        } else {
          std::cout << (r.equal() ? "equal   " : "UNEQUAL ") << r.id << " n=" << r.n;
          if (!r.params.empty()) std::cout << ' ' << r.params;
          std::cout << ": " << to_string(r.lhs);
          if (!r.equal()) std::cout << " vs " << to_string(r.rhs);
          std::cout << '\n';
        }
        std::cout.flush();
      });
  if (!as_json)
    std::cout << total - unequal << '/' << total << " identities equal\n";
  return unequal == 0 ? 0 : kExitUnequal;
}

// ---- play -----------------------------------------------------------------

void print_plate(const GameState& s) {
  const std::map<int, Player> eaten = s.eaten();
  std::cout << "position:";
  for (int i = 1; i <= s.w().size(); ++i) std::cout << ' ' << std::setw(3) << i;
  std::cout << "\nvalue:   ";
  for (int i = 1; i <= s.w().size(); ++i) std::cout << ' ' << std::setw(3) << s.w().at(i);
  std::cout << "\neaten:   ";
  for (int i = 1; i <= s.w().size(); ++i) {
    const auto it = eaten.find(i);
    std::cout << "   " << (it == eaten.end() ? '.' : to_char(it->second));
  }
  std::cout << '\n';
}

void print_analysis(const GameState& s) {
  const std::map<int, Player> pred = analysis(s);
  std::cout << "optimal play from here:";
  for (const auto& [pos, who] : pred) std::cout << ' ' << pos << ':' << to_char(who);
  std::cout << "\nnext optimal move: " << optimal_move(s) << '\n';
}

void print_summary(const GameState& s) {
  const Marking m = allocation(s);
  std::cout << "final allocation: " << m.to_string() << '\n';
  std::cout << "optimal allocation: " << crossout_mark(s.w()).to_string() << '\n';
  std::cout << "no trade possible: " << (no_trade_check(s) ? "yes" : "no") << '\n';
  json stats = to_json(stat_bundle(s.w()));
  if (s.w().size() % 2 != 0) stats.erase("z");
  std::cout << "tuple: " << to_json(encode(s.w())).dump() << '\n';
  std::cout << "stats: " << stats.dump() << '\n';
}

int run_play(GameState s) {
  const Player human = *s.human_role();
  std::cout << "You are " << (human == Player::Alice ? "Alice (you want high values)"
                                                     : "Bob (you want positions on the right)")
            << ". Enter a position, 'a' for analysis, 'q' to quit.\n";
  std::string line;
  while (!s.over()) {
    if (s.is_engine_turn()) {
      const int pos = engine_move(s);
      s = s.apply_move(pos);
      std::cout << "engine (" << to_char(opponent(human)) << ") eats position " << pos
                << " (value " << s.w().at(pos) << ")\n";
      continue;
    }
    print_plate(s);
    std::cout << "your move> " << std::flush;
    if (!std::getline(std::cin, line)) return 0;
    if (line == "q" || line == "quit") return 0;
    if (line == "a" || line == "analysis") {
      print_analysis(s);
      continue;
    }
    try {
      std::size_t used = 0;
      const int pos = std::stoi(line, &used);
      if (used != line.size()) throw std::invalid_argument("trailing input");
      s = s.apply_move(pos);
    } catch (const MoveError& e) {
      std::cout << "illegal move: " << e.what() << '\n';
    } catch (const std::exception&) {
      std::cout << "enter a position number, 'a' or 'q'\n";
    }
  }
  print_plate(s);
  print_summary(s);
  return 0;
}

// ---- serve ----------------------------------------------------------------

HttpFrontend* g_frontend = nullptr;

extern "C" void on_signal(int) {
  if (g_frontend) g_frontend->stop();
}

int run_serve(const std::string& host, int port, const std::string& log_path) {
  std::optional<GameService> service;
  if (log_path.empty())
    service.emplace();
  else
    service.emplace(log_path);
  HttpFrontend frontend(*service);
  const int bound = frontend.bind(host, port);
  if (bound < 0) {
    std::cerr << "crossout: cannot bind " << host << ':' << port << '\n';
    return 1;
  }
  g_frontend = &frontend;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  std::cout << "listening on http://" << host << ':' << bound << std::endl;
  frontend.listen();
  g_frontend = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossout correspondence, identity checks and the dinner game"};
  app.require_subcommand(1);

  std::string w_arg;
  auto* encode_cmd = app.add_subcommand("encode", "Print the crossout tuple of a permutation");
  encode_cmd->add_option("w", w_arg, "permutation, e.g. \"2 6 4 1 3 11 5 7 10 12 9 8\" or -")
      ->required();

  std::string tuple_arg;
  auto* decode_cmd = app.add_subcommand("decode", "Recover the permutation from a tuple");
  decode_cmd->add_option("tuple", tuple_arg, "tuple JSON or - for stdin")->required();

  auto* mark_cmd = app.add_subcommand("mark", "Print the crossout marking of a permutation");
  mark_cmd->add_option("w", w_arg, "permutation or -")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Print aa, ab, ba, bb, z and inv of a permutation");
  stats_cmd->add_option("w", w_arg, "permutation or -")->required();

  std::string suites = "roundtrip";
  int n = 0;
  bool force = false;
  bool as_json = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks for n = 1..N");
  verify_cmd->add_option("--suite", suites, "comma list of suites")->capture_default_str();
  verify_cmd->add_option("--n", n, "largest n")->required();
  verify_cmd->add_flag("--force,--max-n", force, "lift the exhaustive-sweep guard");
  verify_cmd->add_flag("--json", as_json, "one JSON report per line");

  std::string ranks_arg;
  auto* prob_cmd = app.add_subcommand("prob", "Probability that Alice eats the given ranks");
  prob_cmd->add_option("--n", n, "morsels per player")->required();
  prob_cmd->add_option("--ranks", ranks_arg, "comma list of ranks, e.g. 3,4")->required();
  prob_cmd->add_flag("--json", as_json, "print {num, den}");

  int size = 0;
  std::uint64_t seed = 0;
  std::string role = "A";
  auto* play_cmd = app.add_subcommand("play", "Play the dinner game against the engine");
  auto* play_n = play_cmd->add_option("--n", n, "random game with N = 2n morsels");
  auto* play_size = play_cmd->add_option("--size", size, "random game with this many morsels");
  auto* play_w = play_cmd->add_option("--w", w_arg, "explicit permutation");
  play_n->excludes(play_size)->excludes(play_w);
  play_size->excludes(play_w);
  play_cmd->add_option("--seed", seed, "shuffle seed")->capture_default_str();
  play_cmd->add_option("--role", role, "A (Alice) or B (Bob)")->capture_default_str();

  std::string host = "127.0.0.1";
  int port = 8080;
  std::string log_path;
  auto* serve_cmd = app.add_subcommand("serve", "Start the local game service");
  serve_cmd->add_option("--host", host)->capture_default_str();
  serve_cmd->add_option("--port", port, "0 picks a free port")->capture_default_str();
  serve_cmd->add_option("--log", log_path, "append requests to this JSON-lines file");

  auto* replay_cmd = app.add_subcommand("replay", "Replay a request log and print the responses");
  replay_cmd->add_option("log", log_path)->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*encode_cmd) {
      std::cout << to_json(encode(read_permutation(w_arg))).dump() << '\n';
    } else if (*decode_cmd) {
      const std::string text = tuple_arg == "-" ? read_all(std::cin) : tuple_arg;
      json j;
      try {
        j = json::parse(text);
      } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed tuple JSON: ") + e.what());
      }
      if (j.contains("tuple")) j = j.at("tuple");
      std::cout << decode(tuple_from_json(j)).to_string() << '\n';
    } else if (*mark_cmd) {
      std::cout << crossout_mark(read_permutation(w_arg)).to_string() << '\n';
    } else if (*stats_cmd) {
      const Permutation w = read_permutation(w_arg);
      json j = to_json(stat_bundle(w));
      if (w.size() % 2 != 0) j.erase("z");
      std::cout << j.dump() << '\n';
    } else if (*verify_cmd) {
      return run_verify(suites, n, force, as_json);
    } else if (*prob_cmd) {
      std::vector<int> ranks;
      for (const std::string& r : split_list(ranks_arg)) {
        try {
          ranks.push_back(std::stoi(r));
        } catch (const std::exception&) {
          throw ValidationError("rank '" + r + "' is not an integer");
        }
      }
      const Rational p = alice_probability(n, ranks);
      std::cout << (as_json ? to_json(p).dump() : to_string(p)) << '\n';
    } else if (*play_cmd) {
      const Player human = player_from_string(role);
      if (!w_arg.empty()) return run_play(new_game(Permutation::parse(w_arg), human));
      if (*play_n && n < 1) throw ValidationError("--n must be at least 1");
      const int morsels = *play_size ? size : (*play_n ? 2 * n : 8);
      if (morsels < 1) throw ValidationError("--size must be at least 1");
      return run_play(new_random_game(morsels, seed, human));
    } else if (*serve_cmd) {
      return run_serve(host, port, log_path);
    } else if (*replay_cmd) {
      for (const ServiceResponse& r : replay(log_path))
        std::cout << json{{"status", r.status}, {"body", r.body}}.dump() << '\n';
    }
  } catch (const GuardLimitError& e) {
    std::cerr << "crossout: refused: " << e.what() << " (use --force)\n";
    return kExitUsage;
  } catch (const ConstraintViolation& e) {
    std::cerr << "crossout: " << e.what() << " (label " << e.index() << ")\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "crossout: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
