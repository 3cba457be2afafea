#include "cteleport/state_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace cteleport {

namespace {

std::string located(std::string_view source, std::size_t line, const std::string& msg) {
  std::ostringstream os;
  os << source << ':' << line << ": " << msg;
  return os.str();
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

PureState finish(int num_qubits, std::vector<Amplitude> amplitudes, std::string_view source) {
  require_normalized(amplitudes, source);
  try {
    return make_state(num_qubits, std::move(amplitudes));
  } catch (const std::invalid_argument& e) {
    throw StateFormatError(std::string(source) + ": " + e.what());
  }
}

PureState parse_json(std::string_view text, std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StateFormatError(located(source, line_of_offset(text, e.byte), e.what()));
  }
  const auto fail = [&](const std::string& msg) -> PureState {
    throw StateFormatError(std::string(source) + ": " + msg);
  };
  if (!doc.is_object() || !doc.contains("num_qubits") || !doc.contains("amplitudes")) {
    return fail("expected an object with \"num_qubits\" and \"amplitudes\"");
  }
  if (!doc["num_qubits"].is_number_integer()) return fail("\"num_qubits\" must be an integer");
  const int n = doc["num_qubits"].get<int>();
  if (n < 1 || n > 30) return fail("\"num_qubits\" out of range: " + std::to_string(n));
  const auto& list = doc["amplitudes"];
  if (!list.is_array()) return fail("\"amplitudes\" must be an array");
  if (list.size() != (std::size_t{1} << n)) {
    return fail("\"amplitudes\" has " + std::to_string(list.size()) + " entries, expected " +
                std::to_string(std::size_t{1} << n));
  }
  std::vector<Amplitude> amplitudes;
  amplitudes.reserve(list.size());
  for (std::size_t k = 0; k < list.size(); ++k) {
    const auto& entry = list[k];
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
      return fail("amplitudes[" + std::to_string(k) + "] must be [re, im]");
    }
    amplitudes.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return finish(n, std::move(amplitudes), source);
}

PureState parse_text(std::string_view text, std::string_view source) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  int n = 0;
  std::map<std::size_t, Amplitude> entries;
  std::map<std::size_t, std::size_t> seen_at;

  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::string bits;
    double re = 0.0;
    double im = 0.0;
    std::string extra;
    if (!(fields >> bits >> re >> im) || (fields >> extra)) {
      throw StateFormatError(located(source, line_no, "expected \"bitstring re im\""));
    }
    if (bits.empty() || bits.size() > 30 ||
        bits.find_first_not_of("01") != std::string::npos) {
      throw StateFormatError(located(source, line_no, "invalid bitstring '" + bits + "'"));
    }
    if (n == 0) n = static_cast<int>(bits.size());
    if (static_cast<int>(bits.size()) != n) {
      throw StateFormatError(located(source, line_no,
                                     "bitstring length " + std::to_string(bits.size()) +
                                         " differs from earlier lines (" + std::to_string(n) +
                                         ")"));
    }
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw StateFormatError(located(source, line_no, "amplitude is not finite"));
    }
    const std::size_t index = std::stoull(bits, nullptr, 2);
    if (const auto it = seen_at.find(index); it != seen_at.end()) {
      throw StateFormatError(located(source, line_no,
                                     "bitstring " + bits + " already given on line " +
                                         std::to_string(it->second)));
    }
    seen_at[index] = line_no;
    entries[index] = {re, im};
  }
  if (n == 0) throw StateFormatError(std::string(source) + ": no amplitudes found");

  std::vector<Amplitude> amplitudes(std::size_t{1} << n);
  for (const auto& [index, value] : entries) amplitudes[index] = value;
  return finish(n, std::move(amplitudes), source);
}

}  // namespace

void require_normalized(std::span<const Amplitude> amplitudes, std::string_view what) {
  const double norm2 = squared_norm(amplitudes);
  if (!(std::abs(norm2 - 1.0) <= kIngestNormTolerance)) {
    std::ostringstream os;
    os.precision(17);
    os << what << ": squared norm " << norm2 << " deviates from 1 by more than "
       << kIngestNormTolerance;
    throw StateFormatError(os.str());
  }
}

PureState parse_state(std::string_view text, std::string_view source) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text, source);
  return parse_text(text, source);
}

PureState read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StateFormatError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_state(buffer.str(), path.string());
}

PureState load_state(std::string_view name_or_path) {
  try {
    return named_state(name_or_path);
  } catch (const std::invalid_argument&) {
  }
  const std::filesystem::path path{std::string(name_or_path)};
  if (!std::filesystem::exists(path)) {
    throw StateFormatError("'" + std::string(name_or_path) +
                           "' is neither a catalog state nor a readable file");
  }
  return read_state_file(path);
}

}  // namespace cteleport
