#include "cteleport/state.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace cteleport {

namespace {

void check_qubit_count(int n) {
  if (n < 1 || n > 30) {
    throw std::invalid_argument("qubit count must be in [1, 30], got " + std::to_string(n));
  }
}

void check_label(int label, int n) {
  if (label < 1 || label > n) {
    throw std::invalid_argument("qubit label " + std::to_string(label) + " outside [1, " +
                                std::to_string(n) + "]");
  }
}

struct SignedKet {
  std::size_t index;
  int sign;
};

PureState from_kets(int n, double magnitude, std::initializer_list<SignedKet> kets) {
  std::vector<Amplitude> a(std::size_t{1} << n);
  for (const auto& k : kets) a[k.index] = magnitude * k.sign;
  return make_state(n, std::move(a));
}

}  // namespace

double squared_norm(std::span<const Amplitude> v) {
  double total = 0.0;
  for (const auto& x : v) total += std::norm(x);
  return total;
}

PureState make_state(int num_qubits, std::vector<Amplitude> amplitudes) {
  check_qubit_count(num_qubits);
  const std::size_t expected = std::size_t{1} << num_qubits;
  if (amplitudes.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) + " amplitudes for " +
                                std::to_string(num_qubits) + " qubits, got " +
                                std::to_string(amplitudes.size()));
  }
  for (const auto& x : amplitudes) {
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
      throw std::invalid_argument("amplitudes must be finite");
    }
  }
  const double norm2 = squared_norm(amplitudes);
  if (norm2 == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  const double deviation = std::abs(1.0 - norm2);
  if (deviation > 0.0) {
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& x : amplitudes) x *= scale;
  }
  return PureState(num_qubits, std::move(amplitudes), deviation);
}

PureState basis_state(int num_qubits, std::size_t index) {
  check_qubit_count(num_qubits);
  std::vector<Amplitude> a(std::size_t{1} << num_qubits);
  if (index >= a.size()) throw std::invalid_argument("basis index out of range");
  a[index] = 1.0;
  return make_state(num_qubits, std::move(a));
}

PureState random_state(int num_qubits, std::mt19937_64& rng) {
  check_qubit_count(num_qubits);
  std::normal_distribution<double> gauss;
  std::vector<Amplitude> a(std::size_t{1} << num_qubits);
  for (auto& x : a) {
    const double re = gauss(rng);
    x = {re, gauss(rng)};
  }
  return make_state(num_qubits, std::move(a));
}

std::vector<std::string> catalog_names() {
  return {"man_m5",         "brown",         "ghz5",           "bell_phi_plus",
          "bell_phi_minus", "bell_psi_plus", "bell_psi_minus", "product_zero_n"};
}

PureState named_state(std::string_view name, int product_qubits) {
  const double quarter = 0.25;
  const double eighth_root = 1.0 / (2.0 * std::sqrt(2.0));
  const double half_root = 1.0 / std::sqrt(2.0);

  if (name == "man_m5") {
    return from_kets(5, quarter,
                     {{0b00000, +1}, {0b00001, +1}, {0b00110, +1}, {0b00111, -1},
                      {0b01010, +1}, {0b01011, +1}, {0b01100, -1}, {0b01101, +1},
                      {0b10010, -1}, {0b10011, +1}, {0b10100, +1}, {0b10101, +1},
                      {0b11000, +1}, {0b11001, -1}, {0b11110, +1}, {0b11111, +1}});
  }
  if (name == "brown") {
    return from_kets(5, eighth_root,
                     {{0b00101, +1}, {0b00110, -1}, {0b01000, +1}, {0b01011, -1},
                      {0b10001, +1}, {0b10010, +1}, {0b11100, +1}, {0b11111, +1}});
  }
  if (name == "ghz5") return from_kets(5, half_root, {{0b00000, +1}, {0b11111, +1}});
  if (name == "bell_phi_plus") return from_kets(2, half_root, {{0b00, +1}, {0b11, +1}});
  if (name == "bell_phi_minus") return from_kets(2, half_root, {{0b00, +1}, {0b11, -1}});
  if (name == "bell_psi_plus") return from_kets(2, half_root, {{0b01, +1}, {0b10, +1}});
  if (name == "bell_psi_minus") return from_kets(2, half_root, {{0b01, +1}, {0b10, -1}});
  if (name == "product_zero_n") return basis_state(product_qubits, 0);

  constexpr std::string_view prefix = "product_zero_";
  if (name.starts_with(prefix)) {
    const auto digits = name.substr(prefix.size());
    int n = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && end == digits.data() + digits.size()) return basis_state(n, 0);
  }
  throw std::invalid_argument("unknown catalog state '" + std::string(name) + "'");
}

PureState tensor(const PureState& a, const PureState& b) {
  const std::size_t db = b.dim();
  std::vector<Amplitude> out(a.dim() * db);
  for (std::size_t ka = 0; ka < a.dim(); ++ka) {
    for (std::size_t kb = 0; kb < db; ++kb) out[ka * db + kb] = a[ka] * b[kb];
  }
  return make_state(a.num_qubits() + b.num_qubits(), std::move(out));
}

PureState permute_qubits(const PureState& s, std::span<const int> new_label_of) {
  const int n = s.num_qubits();
  if (static_cast<int>(new_label_of.size()) != n) {
    throw std::invalid_argument("permutation must map all " + std::to_string(n) + " qubits");
  }
  std::vector<bool> seen(n + 1, false);
  for (int target : new_label_of) {
    check_label(target, n);
    if (seen[target]) throw std::invalid_argument("permutation is not a bijection");
    seen[target] = true;
  }

  std::vector<Amplitude> out(s.dim());
  for (std::size_t old_index = 0; old_index < s.dim(); ++old_index) {
    std::size_t new_index = 0;
    for (int q = 1; q <= n; ++q) {
      const auto bit = static_cast<std::size_t>(qubit_bit(old_index, q, n));
      new_index |= bit << bit_position(new_label_of[q - 1], n);
    }
    out[new_index] = s[old_index];
  }
  // A permutation moves amplitudes without touching them.
  return PureState(n, std::move(out), s.input_norm_deviation_);
}

Amplitude inner_product(const PureState& a, const PureState& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("inner product of states with different qubit counts");
  }
  Amplitude total = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) total += std::conj(a[k]) * b[k];
  return total;
}

std::vector<Amplitude> project_subsystem(const PureState& s, const PureState& bra,
                                         std::span<const int> labels) {
  const int n = s.num_qubits();
  const int m = static_cast<int>(labels.size());
  if (bra.num_qubits() != m) {
    throw std::invalid_argument("bra has " + std::to_string(bra.num_qubits()) +
                                " qubits but " + std::to_string(m) + " labels were given");
  }
  if (m >= n) throw std::invalid_argument("projection must leave at least one qubit");
  std::vector<bool> measured(n + 1, false);
  for (int label : labels) {
    check_label(label, n);
    if (measured[label]) throw std::invalid_argument("projection labels overlap");
    measured[label] = true;
  }
  std::vector<int> rest;
  for (int q = 1; q <= n; ++q) {
    if (!measured[q]) rest.push_back(q);
  }

  // Scatter tables: where each bra bit and each residual bit lands in s.
  const auto scatter = [n](std::span<const int> group, std::size_t local) {
    const int width = static_cast<int>(group.size());
    std::size_t global = 0;
    for (int k = 0; k < width; ++k) {
      const auto bit = (local >> (width - 1 - k)) & 1u;
      global |= bit << bit_position(group[k], n);
    }
    return global;
  };

  const std::size_t rest_dim = std::size_t{1} << rest.size();
  std::vector<std::size_t> rest_offset(rest_dim);
  for (std::size_t e = 0; e < rest_dim; ++e) rest_offset[e] = scatter(rest, e);

  std::vector<Amplitude> residual(rest_dim);
  for (std::size_t b = 0; b < bra.dim(); ++b) {
    const Amplitude weight = std::conj(bra[b]);
    if (weight == 0.0) continue;
    const std::size_t offset = scatter(labels, b);
    for (std::size_t e = 0; e < rest_dim; ++e) residual[e] += weight * s[offset | rest_offset[e]];
  }
  return residual;
}

}  // namespace cteleport
