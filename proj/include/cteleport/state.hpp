#pragma once

#include <complex>
#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cteleport {

using Amplitude = std::complex<double>;

// Basis-index convention used everywhere in this library:
//
//   amplitude k of an n-qubit state is the coefficient of the ket whose
//   big-endian bit string is k, with qubit label 1 as the most significant
//   bit and label n as the least significant one.
//
// Reading a ket such as |A1 A2 B1 B2 C> left to right therefore gives its
// index directly; |00101> is index 5.
constexpr std::size_t bit_position(int label, int num_qubits) {
  return static_cast<std::size_t>(num_qubits - label);
}

constexpr int qubit_bit(std::size_t index, int label, int num_qubits) {
  return static_cast<int>((index >> bit_position(label, num_qubits)) & 1u);
}

// Normalized pure state over num_qubits qubits. Immutable once built.
class PureState {
 public:
  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& operator[](std::size_t k) const { return amplitudes_[k]; }

  // |1 - sum |a_k|^2| of the data handed to make_state, before scaling.
  double input_norm_deviation() const { return input_norm_deviation_; }
  // True when make_state had to rescale by more than 1e-12.
  bool was_renormalized() const { return input_norm_deviation_ > 1e-12; }

  friend PureState make_state(int num_qubits, std::vector<Amplitude> amplitudes);
  friend PureState permute_qubits(const PureState& s, std::span<const int> new_label_of);

 private:
  PureState(int n, std::vector<Amplitude> a, double deviation)
      : num_qubits_(n), amplitudes_(std::move(a)), input_norm_deviation_(deviation) {}

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
  double input_norm_deviation_;
};

// Builds a state, dividing by the norm. Throws std::invalid_argument on a
// length that is not 2^num_qubits, non-finite entries or a zero vector.
PureState make_state(int num_qubits, std::vector<Amplitude> amplitudes);

// Catalog: man_m5, brown, ghz5, bell_phi_plus, bell_phi_minus, bell_psi_plus,
// bell_psi_minus, product_zero_n. `product_qubits` sizes product_zero_n only.
// The Bell names follow the usual convention, Phi = (|00> +- |11>)/sqrt2 and
// Psi = (|01> +- |10>)/sqrt2. "product_zero_<k>" is accepted as shorthand.
PureState named_state(std::string_view name, int product_qubits = 5);
std::vector<std::string> catalog_names();

// Computational basis state |index> on num_qubits qubits.
PureState basis_state(int num_qubits, std::size_t index);

// Haar-random pure state: i.i.d. complex Gaussians, normalized.
PureState random_state(int num_qubits, std::mt19937_64& rng);

// a's qubits become labels 1..n_a, b's become n_a+1..n_a+n_b.
PureState tensor(const PureState& a, const PureState& b);

// new_label_of[q-1] is the label that old qubit q moves to. Must be a
// bijection on 1..n.
PureState permute_qubits(const PureState& s, std::span<const int> new_label_of);

// sum_k conj(a_k) b_k
Amplitude inner_product(const PureState& a, const PureState& b);

// Contracts `bra` (a state on labels.size() qubits; its qubit k sits on
// labels[k]) against `s`. Returns the unnormalized residual on the remaining
// qubits, in ascending label order. Its squared norm is the probability of
// the projected outcome.
std::vector<Amplitude> project_subsystem(const PureState& s, const PureState& bra,
                                         std::span<const int> labels);

double squared_norm(std::span<const Amplitude> v);

}  // namespace cteleport
