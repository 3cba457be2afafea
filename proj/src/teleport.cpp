#include "cteleport/teleport.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cteleport/entanglement.hpp"

namespace cteleport {

namespace {

const double kSqrt2 = std::sqrt(2.0);

void check_outcome(const Outcome& o) {
  if (o.i < 1 || o.i > 4 || o.j < 1 || o.j > 4) {
    throw std::invalid_argument("Bell index must be in 1..4");
  }
  if (o.n != 1 && o.n != 2) throw std::invalid_argument("Charlie outcome must be 1 or 2");
}

void require_channel(const PureState& channel) {
  if (channel.num_qubits() != 5) {
    throw std::invalid_argument("channel must have 5 qubits, got " +
                                std::to_string(channel.num_qubits()));
  }
}

Operator kron(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Operator out;
  for (int r1 = 0; r1 < 2; ++r1) {
    for (int c1 = 0; c1 < 2; ++c1) {
      for (int r2 = 0; r2 < 2; ++r2) {
        for (int c2 = 0; c2 < 2; ++c2) out(2 * r1 + r2, 2 * c1 + c2) = a(r1, c1) * b(r2, c2);
      }
    }
  }
  return out;
}

// Joint 7-qubit layout: a1 a2 A1 A2 B1 B2 C.
constexpr std::array<int, 5> kMeasuredLabels{1, 3, 2, 4, 7};

std::vector<Amplitude> bob_residual(const PureState& joint, const Outcome& o, double theta) {
  const PureState bra =
      tensor(tensor(bell_state(o.i), bell_state(o.j)), charlie_state(o.n, theta));
  return project_subsystem(joint, bra, kMeasuredLabels);
}

std::vector<Outcome> all_outcomes() {
  std::vector<Outcome> out;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      for (int n = 1; n <= 2; ++n) out.push_back({i, j, n});
    }
  }
  return out;
}

}  // namespace

void RoleAssignment::validate() const {
  std::array<int, 5> labels = role_order();
  std::sort(labels.begin(), labels.end());
  for (int k = 0; k < 5; ++k) {
    if (labels[k] != k + 1) {
      throw std::invalid_argument("role assignment " + to_string() +
                                  " is not a permutation of qubits 1..5");
    }
  }
}

std::string RoleAssignment::to_string() const {
  return std::to_string(alice[0]) + std::to_string(alice[1]) + "|" + std::to_string(bob[0]) +
         std::to_string(bob[1]) + "|" + std::to_string(charlie);
}

PureState bell_state(int index) {
  const double h = 1.0 / kSqrt2;
  switch (index) {
    case 1: return make_state(2, {h, 0, 0, h});
    case 2: return make_state(2, {h, 0, 0, -h});
    case 3: return make_state(2, {0, h, h, 0});
    case 4: return make_state(2, {0, h, -h, 0});
    default: throw std::invalid_argument("Bell index must be in 1..4");
  }
}

Eigen::Matrix2cd pauli_factor(int index) {
  Eigen::Matrix2cd m;
  switch (index) {
    case 1: m << 1, 0, 0, 1; break;
    case 2: m << 1, 0, 0, -1; break;
    case 3: m << 0, 1, 1, 0; break;
    case 4: m << 0, -1, 1, 0; break;  // -i * sigma_y
    default: throw std::invalid_argument("Pauli index must be in 1..4");
  }
  return m;
}

PureState charlie_state(int n, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  if (n == 1) return make_state(1, {c, s});
  if (n == 2) return make_state(1, {s, -c});
  throw std::invalid_argument("Charlie outcome must be 1 or 2");
}

PureState to_role_order(const PureState& channel, const RoleAssignment& assign) {
  require_channel(channel);
  assign.validate();
  std::array<int, 5> new_label_of{};
  const auto order = assign.role_order();
  for (int role = 0; role < 5; ++role) new_label_of[order[role] - 1] = role + 1;
  return permute_qubits(channel, new_label_of);
}

Operator sigma_formula(const PureState& ordered_channel, int n, double theta) {
  require_channel(ordered_channel);
  if (n != 1 && n != 2) throw std::invalid_argument("Charlie outcome must be 1 or 2");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double w0 = n == 1 ? c : s;
  const double w1 = n == 1 ? s : -c;
  Operator paper;
  for (int k = 0; k < 4; ++k) {
    for (int b = 0; b < 4; ++b) {
      const std::size_t base = 8 * k + 2 * b;
      paper(k, b) = 2.0 * kSqrt2 * (ordered_channel[base] * w0 + ordered_channel[base + 1] * w1);
    }
  }
  return paper;
}

TransformationOperator transformation_operator(const PureState& channel,
                                               const RoleAssignment& assign, Outcome labels,
                                               double theta) {
  check_outcome(labels);
  const PureState ordered = to_role_order(channel, assign);
  const Operator base = sigma_formula(ordered, labels.n, theta).transpose();
  return {base * kron(pauli_factor(labels.i), pauli_factor(labels.j)), labels, theta};
}

Operator projected_operator(const PureState& channel, const RoleAssignment& assign,
                            Outcome labels, double theta) {
  check_outcome(labels);
  const PureState ordered = to_role_order(channel, assign);
  Operator action;
  for (int alpha = 0; alpha < 4; ++alpha) {
    const PureState joint = tensor(basis_state(2, alpha), ordered);
    const auto residual = bob_residual(joint, labels, theta);
    for (int b = 0; b < 4; ++b) action(b, alpha) = 4.0 * kSqrt2 * residual[b];
  }
  return action;
}

double unitarity_defect(const Operator& m) {
  return (m.adjoint() * m - Operator::Identity()).norm();
}

UnitarityVerdict is_unitary(const Operator& m, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const double defect = unitarity_defect(m);
  return {defect <= tol, defect};
}

UnitarityVerdict is_unitary(const TransformationOperator& op, double tol) {
  return is_unitary(op.action, tol);
}

CriterionReport criterion_check(const PureState& channel, const RoleAssignment& assign,
                                double theta, double tol) {
  CriterionReport report;
  report.assignment = assign;
  report.theta = theta;
  const auto v1 = is_unitary(transformation_operator(channel, assign, {1, 1, 1}, theta), tol);
  const auto v2 = is_unitary(transformation_operator(channel, assign, {1, 1, 2}, theta), tol);
  report.sigma111_defect = v1.defect;
  report.sigma112_defect = v2.defect;
  report.pass = v1.unitary && v2.unitary;
  report.purity_alice_pair = purity(partial_trace(channel, {assign.alice[0], assign.alice[1]}));
  report.purity_bob_pair = purity(partial_trace(channel, {assign.bob[0], assign.bob[1]}));
  return report;
}

Eq5Result eq5_factorization(const PureState& channel, const RoleAssignment& assign, double theta,
                            double tol) {
  const PureState ordered = to_role_order(channel, assign);
  const std::array<Operator, 2> base{sigma_formula(ordered, 1, theta).transpose(),
                                     sigma_formula(ordered, 2, theta).transpose()};
  Eq5Result result;
  for (const Outcome& o : all_outcomes()) {
    const Operator factored = base[o.n - 1] * kron(pauli_factor(o.i), pauli_factor(o.j));
    const Operator projected = projected_operator(channel, assign, o, theta);
    result.max_deviation =
        std::max(result.max_deviation, (factored - projected).cwiseAbs().maxCoeff());
  }
  result.holds = result.max_deviation <= tol;
  return result;
}

std::vector<TeleportationRecord> simulate(const PureState& channel, const RoleAssignment& assign,
                                          double theta, const PureState& input,
                                          Correction correction) {
  if (input.num_qubits() != 2) throw std::invalid_argument("input state must have 2 qubits");
  const PureState ordered = to_role_order(channel, assign);
  const PureState joint = tensor(input, ordered);
  const Eigen::Vector4cd x = Eigen::Map<const Eigen::Vector4cd>(input.amplitudes().data());

  std::vector<TeleportationRecord> records;
  records.reserve(32);
  for (const Outcome& o : all_outcomes()) {
    TeleportationRecord rec;
    rec.outcome = o;
    const auto residual = bob_residual(joint, o, theta);
    std::copy(residual.begin(), residual.end(), rec.bob_residual.begin());
    rec.probability = squared_norm(residual);
    if (rec.probability == 0.0) {
      records.push_back(std::move(rec));
      continue;
    }

    const Eigen::Vector4cd r = Eigen::Map<const Eigen::Vector4cd>(residual.data());
    const Operator op = transformation_operator(channel, assign, o, theta).action;
    Eigen::Vector4cd corrected = r;
    if (correction == Correction::adjoint) {
      corrected = op.adjoint() * r;
      rec.recoverable = corrected.squaredNorm() > 0.0;
      if (!rec.recoverable) corrected = r;
    } else {
      const Eigen::FullPivLU<Operator> lu(op);
      rec.recoverable = lu.isInvertible();
      if (rec.recoverable) corrected = lu.solve(r);
    }
    rec.bob_corrected = make_state(2, {corrected[0], corrected[1], corrected[2], corrected[3]});
    const Eigen::Vector4cd bob =
        Eigen::Map<const Eigen::Vector4cd>(rec.bob_corrected->amplitudes().data());
    rec.fidelity = std::norm(x.dot(bob));
    records.push_back(std::move(rec));
  }
  return records;
}

double average_fidelity(const std::vector<TeleportationRecord>& records) {
  double weighted = 0.0;
  double total = 0.0;
  for (const auto& r : records) {
    weighted += r.probability * r.fidelity;
    total += r.probability;
  }
  return total > 0.0 ? weighted / total : 0.0;
}

}  // namespace cteleport
