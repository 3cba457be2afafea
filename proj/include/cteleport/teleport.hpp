#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cteleport/state.hpp"

namespace cteleport {

// Which physical channel qubit plays A1, A2 (Alice), B1, B2 (Bob) and C
// (Charlie). Order inside a role is significant: it fixes operator layout.
struct RoleAssignment {
  std::array<int, 2> alice{1, 2};
  std::array<int, 2> bob{3, 4};
  int charlie = 5;

  // Throws std::invalid_argument unless the five labels permute {1..5}.
  void validate() const;
  // Labels in role order A1 A2 B1 B2 C.
  std::array<int, 5> role_order() const { return {alice[0], alice[1], bob[0], bob[1], charlie}; }
  // "12|34|5"
  std::string to_string() const;

  friend bool operator==(const RoleAssignment&, const RoleAssignment&) = default;
};

// Measurement outcome labels. i, j in 1..4 index Alice's Bell results on
// (a1, A1) and (a2, A2); n in 1..2 indexes Charlie's result.
struct Outcome {
  int i = 1;
  int j = 1;
  int n = 1;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

// Bell basis, index 1..4:
//   1: (|00> + |11>)/sqrt2   2: (|00> - |11>)/sqrt2
//   3: (|01> + |10>)/sqrt2   4: (|01> - |10>)/sqrt2
// With this numbering a Bell outcome k multiplies the operator on the right
// by pauli_factor(k): I, Z, X, -iY.
PureState bell_state(int index);
Eigen::Matrix2cd pauli_factor(int index);

// Charlie's basis: n = 1 -> cos t|0> + sin t|1>, n = 2 -> sin t|0> - cos t|1>.
PureState charlie_state(int n, double theta);

using Operator = Eigen::Matrix4cd;

enum class Layout { action, paper };

// sigma^{ijn}(theta) for one channel and role assignment.
//
// The action layout maps input coefficients to Bob's unnormalized state:
//   bob = action * x / (4 sqrt2).
// The paper layout is its transpose: rows indexed by Alice's pair, columns
// by Bob's basis.
struct TransformationOperator {
  Operator action;
  Outcome labels;
  double theta = 0.0;

  Operator paper() const { return action.transpose(); }
  Operator in(Layout layout) const { return layout == Layout::action ? action : paper(); }
};

// Relabels the channel so the roles sit at labels 1..5 in order A1 A2 B1 B2 C.
PureState to_role_order(const PureState& channel, const RoleAssignment& assign);

// sigma^{11n} in paper layout, read straight off the amplitudes of a channel
// already in role order:
//   n = 1: [k][b] = 2 sqrt2 (a_{k,b,0} cos t + a_{k,b,1} sin t)
//   n = 2: [k][b] = 2 sqrt2 (a_{k,b,0} sin t - a_{k,b,1} cos t)
Operator sigma_formula(const PureState& ordered_channel, int n, double theta);

// Formula path: sigma^{11n} * (pauli_factor(i) (x) pauli_factor(j)).
TransformationOperator transformation_operator(const PureState& channel,
                                               const RoleAssignment& assign, Outcome labels,
                                               double theta);

// Projection path: builds each column from the 7-qubit joint state
// |e_alpha>|channel>, contracting Bell i on (a1, A1), Bell j on (a2, A2) and
// Charlie's vector n. Action layout.
Operator projected_operator(const PureState& channel, const RoleAssignment& assign,
                            Outcome labels, double theta);

inline constexpr double kDefaultTolerance = 1e-10;

struct UnitarityVerdict {
  bool unitary = false;
  // Frobenius norm of M^dagger M - I.
  double defect = 0.0;
};

double unitarity_defect(const Operator& m);
UnitarityVerdict is_unitary(const Operator& m, double tol = kDefaultTolerance);
UnitarityVerdict is_unitary(const TransformationOperator& op, double tol = kDefaultTolerance);

struct CriterionReport {
  RoleAssignment assignment;
  double theta = 0.0;
  double sigma111_defect = 0.0;
  double sigma112_defect = 0.0;
  bool pass = false;
  double purity_alice_pair = 0.0;
  double purity_bob_pair = 0.0;
};

// PASS iff sigma^{111} and sigma^{112} are both unitary within tol. The pair
// purities are reported alongside; 1/4 on both pairs is necessary for PASS.
CriterionReport criterion_check(const PureState& channel, const RoleAssignment& assign,
                                double theta, double tol = kDefaultTolerance);

struct Eq5Result {
  bool holds = false;
  double max_deviation = 0.0;
};

// Compares projected_operator against sigma^{11n} (P_i (x) P_j) for all 32
// labels, entrywise within tol.
Eq5Result eq5_factorization(const PureState& channel, const RoleAssignment& assign, double theta,
                            double tol = kDefaultTolerance);

enum class Correction { adjoint, inverse };

struct TeleportationRecord {
  Outcome outcome;
  double probability = 0.0;
  // Bob's unnormalized post-measurement amplitudes, before correction.
  std::array<Amplitude, 4> bob_residual{};
  // Empty when the outcome has zero probability.
  std::optional<PureState> bob_corrected;
  double fidelity = 0.0;
  bool recoverable = false;
};

// Runs the protocol on |input>|channel>: Bell measurements on (a1, A1) and
// (a2, A2), Charlie's measurement at angle theta, then Bob's correction by
// the formula-path operator. Records come out in (i, j, n) lexicographic
// order. With Correction::inverse a singular operator marks the record
// unrecoverable and the fidelity is that of the uncorrected state.
std::vector<TeleportationRecord> simulate(const PureState& channel, const RoleAssignment& assign,
                                          double theta, const PureState& input,
                                          Correction correction = Correction::adjoint);

// Probability-weighted mean fidelity over the records.
double average_fidelity(const std::vector<TeleportationRecord>& records);

}  // namespace cteleport
