#include "cteleport/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cteleport {

namespace {

void require_five_qubits(const PureState& s) {
  if (s.num_qubits() != 5) {
    throw std::invalid_argument("expected a 5-qubit state, got " +
                                std::to_string(s.num_qubits()) + " qubits");
  }
}

std::map<QubitPair, double> pair_purities(const PureState& s) {
  std::map<QubitPair, double> out;
  for (int p = 1; p <= 5; ++p) {
    for (int q = p + 1; q <= 5; ++q) out[{p, q}] = purity(partial_trace(s, {p, q}));
  }
  return out;
}

MmesVerdict verdict_from(const std::map<QubitPair, double>& pairs, double tol) {
  MmesVerdict v;
  v.max_deviation = -1.0;
  for (const auto& [pair, value] : pairs) {
    const double deviation = std::abs(value - kMmesPairPurity);
    if (deviation > v.max_deviation) {
      v.max_deviation = deviation;
      v.worst_pair = pair;
    }
  }
  v.is_mmes = v.max_deviation <= tol;
  return v;
}

}  // namespace

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(entries_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix partial_trace(const PureState& s, std::vector<int> keep) {
  const int n = s.num_qubits();
  if (keep.empty()) throw std::invalid_argument("partial trace needs at least one kept qubit");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw std::invalid_argument("kept qubit labels must be distinct");
  }
  if (keep.front() < 1 || keep.back() > n) {
    throw std::invalid_argument("kept qubit label outside [1, " + std::to_string(n) + "]");
  }

  std::vector<int> traced;
  for (int q = 1, k = 0; q <= n; ++q) {
    if (k < static_cast<int>(keep.size()) && keep[k] == q) {
      ++k;
    } else {
      traced.push_back(q);
    }
  }

  const auto offsets = [n](const std::vector<int>& group) {
    const int width = static_cast<int>(group.size());
    std::vector<std::size_t> out(std::size_t{1} << width);
    for (std::size_t local = 0; local < out.size(); ++local) {
      for (int k = 0; k < width; ++k) {
        const auto bit = (local >> (width - 1 - k)) & 1u;
        out[local] |= bit << bit_position(group[k], n);
      }
    }
    return out;
  };
  const auto kept_at = offsets(keep);
  const auto traced_at = offsets(traced);

  const auto d = static_cast<Eigen::Index>(kept_at.size());
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      Amplitude sum = 0.0;
      for (std::size_t e : traced_at) sum += s[kept_at[r] | e] * std::conj(s[kept_at[c] | e]);
      rho(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(rho), std::move(keep));
}

double purity(const DensityMatrix& rho) {
  return (rho.entries() * rho.entries()).trace().real();
}

double purity_eq8(const PureState& s) {
  require_five_qubits(s);
  const auto a = s.amplitudes();

  // Block k holds a_{8k} .. a_{8k+7}: qubits 1,2 fixed to the bits of k.
  std::array<double, 4> block_norm{};
  for (int k = 0; k < 4; ++k) {
    for (int m = 0; m < 8; ++m) block_norm[k] += std::norm(a[8 * k + m]);
  }
  double total = 0.0;
  for (double v : block_norm) total += v * v;
  for (int k = 0; k < 4; ++k) {
    for (int l = k + 1; l < 4; ++l) {
      Amplitude overlap = 0.0;
      for (int m = 0; m < 8; ++m) overlap += a[8 * k + m] * std::conj(a[8 * l + m]);
      total += 2.0 * std::norm(overlap);
    }
  }
  return total;
}

MmesVerdict mmes_check(const PureState& s, double tol) {
  require_five_qubits(s);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  return verdict_from(pair_purities(s), tol);
}

PurityReport purity_table(const PureState& s, double tol) {
  require_five_qubits(s);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  PurityReport report;
  report.pair_purities = pair_purities(s);
  for (int q = 1; q <= 5; ++q) report.single_purities[q] = purity(partial_trace(s, {q}));
  report.mmes = verdict_from(report.pair_purities, tol);
  return report;
}

}  // namespace cteleport
