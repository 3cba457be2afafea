#pragma once

#include <map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "cteleport/state.hpp"

namespace cteleport {

// Reduced state on an ordered set of kept qubits (ascending labels).
class DensityMatrix {
 public:
  DensityMatrix(Eigen::MatrixXcd entries, std::vector<int> labels)
      : entries_(std::move(entries)), labels_(std::move(labels)) {}

  Eigen::Index dim() const { return entries_.rows(); }
  const Eigen::MatrixXcd& entries() const { return entries_; }
  const std::vector<int>& labels() const { return labels_; }

  Amplitude trace() const { return entries_.trace(); }
  double hermiticity_defect() const { return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff(); }
  double min_eigenvalue() const;

 private:
  Eigen::MatrixXcd entries_;
  std::vector<int> labels_;
};

using QubitPair = std::pair<int, int>;

// rho[r][c] = sum_e psi(r, e) conj(psi(c, e)), e running over the traced-out
// qubits. `keep` must be nonempty with distinct labels in 1..n.
DensityMatrix partial_trace(const PureState& s, std::vector<int> keep);

// Tr(rho^2)
double purity(const DensityMatrix& rho);

struct MmesVerdict {
  bool is_mmes = false;
  QubitPair worst_pair{1, 2};
  double max_deviation = 0.0;
};

struct PurityReport {
  std::map<QubitPair, double> pair_purities;
  std::map<int, double> single_purities;
  MmesVerdict mmes;
};

inline constexpr double kMmesPairPurity = 0.25;

// All ten pair purities and five single-qubit purities of a 5-qubit state,
// plus the maximal-multipartite-entanglement verdict at `tol`.
PurityReport purity_table(const PureState& s, double tol = 1e-10);

// Tr(rho_12^2) written out as four squared block norms plus twice the six
// squared block overlaps of the 32 amplitudes. Independent of partial_trace.
double purity_eq8(const PureState& s);

// True iff every pair purity lies within tol of 1/4. Ties in the deviation
// resolve to the lexicographically first pair.
MmesVerdict mmes_check(const PureState& s, double tol);

}  // namespace cteleport
