#include "cteleport/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "cteleport/entanglement.hpp"
#include "cteleport/partition_scan.hpp"
#include "cteleport/state_io.hpp"

namespace cteleport::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text, std::string_view what) {
  text = trim(text);
  double value = 0.0;
  const char* begin = text.data();
  if (!text.empty() && text.front() == '+') ++begin;
  const auto [end, ec] = std::from_chars(begin, text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw std::invalid_argument("cannot parse " + std::string(what) + " '" + std::string(text) +
                                "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::purity: return "purity";
    case Command::criterion: return "criterion";
    case Command::scan: return "scan";
    case Command::teleport: return "teleport";
    case Command::eq5check: return "eq5check";
  }
  return "";
}

std::string num(const Json& v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
  return buf;
}

std::string assignment_label(const Json& a) {
  std::ostringstream os;
  os << a["alice"][0].get<int>() << a["alice"][1].get<int>() << '|' << a["bob"][0].get<int>()
     << a["bob"][1].get<int>() << '|' << a["charlie"].get<int>();
  return os.str();
}

PureState teleport_input(const CliConfig& config) {
  if (trim(config.input) == "random") {
    std::mt19937_64 rng(config.seed);
    return random_state(2, rng);
  }
  auto coefficients = parse_coefficients(config.input);
  if (coefficients.size() != 4) {
    throw std::invalid_argument("--input needs 4 coefficients, got " +
                                std::to_string(coefficients.size()));
  }
  require_normalized(coefficients, "--input");
  return make_state(2, std::move(coefficients));
}

}  // namespace

double parse_theta(std::string_view text) {
  text = trim(text);
  const auto pi_at = text.find("pi");
  if (pi_at == std::string_view::npos) return parse_number(text, "theta");

  double factor = 1.0;
  std::string_view head = trim(text.substr(0, pi_at));
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty() && head != "+") {
    if (head.back() != '*') throw std::invalid_argument("cannot parse theta '" + std::string(text) + "'");
    factor = parse_number(head.substr(0, head.size() - 1), "theta");
  }
  std::string_view tail = trim(text.substr(pi_at + 2));
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("cannot parse theta '" + std::string(text) + "'");
    const double den = parse_number(tail.substr(1), "theta");
    if (den == 0.0) throw std::invalid_argument("theta divides by zero");
    factor /= den;
  }
  return factor * std::numbers::pi;
}

std::array<int, 2> parse_pair(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw std::invalid_argument("expected two comma-separated qubit labels, got '" +
                                std::string(text) + "'");
  }
  std::array<int, 2> out{};
  for (int k = 0; k < 2; ++k) {
    const auto p = trim(parts[k]);
    const auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), out[k]);
    if (p.empty() || ec != std::errc{} || end != p.data() + p.size()) {
      throw std::invalid_argument("bad qubit label '" + std::string(p) + "'");
    }
  }
  return out;
}

std::vector<Amplitude> parse_coefficients(std::string_view text) {
  std::vector<Amplitude> out;
  for (const auto part : split(text, ',')) {
    const auto pieces = split(part, ':');
    if (pieces.size() > 2) throw std::invalid_argument("bad coefficient '" + std::string(part) + "'");
    const double re = parse_number(pieces[0], "coefficient");
    const double im = pieces.size() == 2 ? parse_number(pieces[1], "coefficient") : 0.0;
    out.emplace_back(re, im);
  }
  return out;
}

Json build_report(const CliConfig& config) {
  if (!(config.tol > 0.0)) throw std::invalid_argument("--tol must be positive");
  const PureState state = load_state(config.state);
  const RoleAssignment& assign = config.assignment;

  switch (config.command) {
    case Command::purity:
      return to_json(purity_table(state, config.tol));
    case Command::criterion:
      return to_json(criterion_check(state, assign, config.theta, config.tol));
    case Command::scan:
      return to_json(scan(state, config.tol));
    case Command::teleport: {
      assign.validate();
      const PureState input = teleport_input(config);
      const auto records = simulate(state, assign, config.theta, input);
      Json j;
      j["assignment"] = to_json(assign);
      j["theta"] = config.theta;
      j["seed"] = config.seed;
      j["input"] = to_json(input)["amplitudes"];
      j["records"] = to_json(records);
      j["average_fidelity"] = average_fidelity(records);
      return j;
    }
    case Command::eq5check: {
      const auto result = eq5_factorization(state, assign, config.theta, config.tol);
      Json j;
      j["assignment"] = to_json(assign);
      j["theta"] = config.theta;
      j["holds"] = result.holds;
      j["max_deviation"] = result.max_deviation;
      return j;
    }
  }
  throw std::invalid_argument("unknown command");
}

std::string render_table(Command command, const Json& r) {
  std::ostringstream os;
  switch (command) {
    case Command::purity: {
      os << "pair  purity\n";
      for (const auto& item : r["pairs"].items()) os << item.key() << "    " << num(item.value()) << '\n';
      os << "qubit purity\n";
      for (const auto& item : r["singles"].items()) os << item.key() << "     " << num(item.value()) << '\n';
      os << "mmes: " << (r["mmes"].get<bool>() ? "true" : "false") << "  worst pair "
         << r["worst_pair"].get<std::string>() << "  max deviation " << num(r["max_deviation"])
         << '\n';
      break;
    }
    case Command::criterion:
      os << "assignment         " << assignment_label(r["assignment"]) << '\n'
         << "theta              " << num(r["theta"]) << '\n'
         << "sigma111 defect    " << num(r["sigma111_defect"]) << '\n'
         << "sigma112 defect    " << num(r["sigma112_defect"]) << '\n'
         << "purity alice pair  " << num(r["purity_alice_pair"]) << '\n'
         << "purity bob pair    " << num(r["purity_bob_pair"]) << '\n'
         << "verdict            " << (r["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
      break;
    case Command::scan:
      os << "assignment  kind            min_defect               argmin_theta             "
            "purity_alice             purity_bob               roots\n";
      for (const auto& e : r) {
        char line[256];
        std::snprintf(line, sizeof line, "%-11s %-15s %-24s %-24s %-24s %-24s",
                      assignment_label(e).c_str(), e["kind"].get<std::string>().c_str(),
                      num(e["min_defect"]).c_str(), num(e["argmin_theta"]).c_str(),
                      num(e["purity_alice"]).c_str(), num(e["purity_bob"]).c_str());
        os << line;
        for (const auto& root : e["roots"]) os << ' ' << num(root);
        os << '\n';
      }
      break;
    case Command::teleport: {
      os << "assignment " << assignment_label(r["assignment"]) << "  theta " << num(r["theta"])
         << "  seed " << r["seed"].get<std::uint64_t>() << '\n';
      os << "input";
      for (const auto& a : r["input"]) os << "  " << num(a[0]) << ':' << num(a[1]);
      os << "\noutcome  probability              fidelity\n";
      for (const auto& rec : r["records"]) {
        char line[128];
        std::snprintf(line, sizeof line, "%d %d %d    %-24s %s", rec["outcome"][0].get<int>(),
                      rec["outcome"][1].get<int>(), rec["outcome"][2].get<int>(),
                      num(rec["probability"]).c_str(), num(rec["fidelity"]).c_str());
        os << line << '\n';
      }
      os << "average fidelity " << num(r["average_fidelity"]) << '\n';
      break;
    }
    case Command::eq5check:
      os << "assignment     " << assignment_label(r["assignment"]) << '\n'
         << "theta          " << num(r["theta"]) << '\n'
         << "max deviation  " << num(r["max_deviation"]) << '\n'
         << "factorization  " << (r["holds"].get<bool>() ? "holds" : "violated") << '\n';
      break;
  }
  return os.str();
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  Json report;
  try {
    report = build_report(config);
  } catch (const std::exception& e) {
    err << "cteleport " << command_name(config.command) << ": " << e.what() << '\n';
    return kExitInputError;
  }
  if (config.output == OutputFormat::json) {
    out << report.dump(2) << '\n';
  } else {
    out << render_table(config.command, report);
  }
  if (config.command == Command::criterion && !report["pass"].get<bool>()) return kExitVerdictFail;
  return kExitOk;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Controlled two-qubit teleportation through five-qubit channels"};
  app.require_subcommand(1);

  CliConfig config;
  std::string alice = "1,2";
  std::string bob = "3,4";
  int charlie = 5;
  std::string theta = "0";
  std::string output = "table";

  const std::vector<std::pair<Command, std::string>> commands{
      {Command::purity, "Pair and single-qubit purities, maximal-entanglement check"},
      {Command::criterion, "Unitarity of sigma111 and sigma112 for one assignment and angle"},
      {Command::scan, "Classify the Charlie angle for all 30 role assignments"},
      {Command::teleport, "Simulate all 32 outcomes of the protocol"},
      {Command::eq5check, "Check the Pauli factorization of all 32 operators"}};

  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [command, help] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(command)), help);
    sub->add_option("--state", config.state, "Catalog name or state file")->required();
    sub->add_option("--alice", alice, "Alice's qubits A1,A2")->capture_default_str();
    sub->add_option("--bob", bob, "Bob's qubits B1,B2")->capture_default_str();
    sub->add_option("--charlie", charlie, "Charlie's qubit")->capture_default_str();
    sub->add_option("--theta", theta, "Charlie basis angle in radians (pi/4 style allowed)")
        ->capture_default_str();
    sub->add_option("--input", config.input, "random, or 4 coefficients re[:im],...")
        ->capture_default_str();
    sub->add_option("--seed", config.seed, "Seed for random inputs")->capture_default_str();
    sub->add_option("--output", output, "table or json")
        ->check(CLI::IsMember({"table", "json"}))
        ->capture_default_str();
    sub->add_option("--tol", config.tol, "Unitarity tolerance")->capture_default_str();
    subs.emplace_back(sub, command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cteleport: " << e.what() << '\n';
    return kExitInputError;
  }

  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) config.command = command;
  }
  try {
    config.assignment.alice = parse_pair(alice);
    config.assignment.bob = parse_pair(bob);
    config.assignment.charlie = charlie;
    config.theta = parse_theta(theta);
  } catch (const std::exception& e) {
    err << "cteleport: " << e.what() << '\n';
    return kExitInputError;
  }
  config.output = output == "json" ? OutputFormat::json : OutputFormat::table;
  return run(config, out, err);
}

}  // namespace cteleport::cli
