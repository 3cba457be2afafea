#include "cteleport/partition_scan.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

#include "cteleport/entanglement.hpp"

namespace cteleport {

namespace {

constexpr double kPi = std::numbers::pi;
// Roots closer than this (in theta) are the same root.
constexpr double kRootMergeWidth = 1e-9;

double ordered_defect(const PureState& ordered, double theta) {
  return std::max(unitarity_defect(sigma_formula(ordered, 1, theta).transpose()),
                  unitarity_defect(sigma_formula(ordered, 2, theta).transpose()));
}

template <typename F>
double golden_section_min(F&& f, double lo, double hi, double width) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > width) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? x1 : x2;
}

double canonical_angle(double theta) {
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  if (kPi - t < kRootMergeWidth) t = 0.0;
  return t;
}

struct Candidate {
  double theta;
  double defect;
};

}  // namespace

std::string_view to_string(ThetaKind kind) {
  switch (kind) {
    case ThetaKind::all_theta: return "all_theta";
    case ThetaKind::discrete_theta: return "discrete_theta";
    case ThetaKind::none: return "none";
  }
  return "none";
}

std::vector<RoleAssignment> enumerate_assignments() {
  std::vector<RoleAssignment> out;
  for (int a1 = 1; a1 <= 5; ++a1) {
    for (int a2 = a1 + 1; a2 <= 5; ++a2) {
      std::vector<int> rest;
      for (int q = 1; q <= 5; ++q) {
        if (q != a1 && q != a2) rest.push_back(q);
      }
      // rest is ascending; each choice of the charlie slot fixes Bob's pair.
      for (int drop = 2; drop >= 0; --drop) {
        RoleAssignment r;
        r.alice = {a1, a2};
        r.charlie = rest[drop];
        int k = 0;
        for (int i = 0; i < 3; ++i) {
          if (i != drop) r.bob[k++] = rest[i];
        }
        out.push_back(r);
      }
    }
  }
  return out;
}

double combined_defect(const PureState& channel, const RoleAssignment& assign, double theta) {
  return ordered_defect(to_role_order(channel, assign), theta);
}

ThetaClassification classify_theta(const PureState& channel, const RoleAssignment& assign,
                                   double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const PureState ordered = to_role_order(channel, assign);
  const auto d = [&ordered](double theta) { return ordered_defect(ordered, theta); };
  const double step = kPi / kThetaGridPoints;

  std::vector<double> grid(kThetaGridPoints);
  for (int k = 0; k < kThetaGridPoints; ++k) grid[k] = d(k * step);

  ThetaClassification out;
  if (std::all_of(grid.begin(), grid.end(), [tol](double v) { return v <= tol; })) {
    out.kind = ThetaKind::all_theta;
    out.argmin_theta = 0.0;
    out.min_defect = grid[0];
    return out;
  }

  // d is pi-periodic, so neighbours wrap around the grid.
  std::vector<Candidate> candidates;
  for (int k = 0; k < kThetaGridPoints; ++k) {
    const double prev = grid[(k + kThetaGridPoints - 1) % kThetaGridPoints];
    const double next = grid[(k + 1) % kThetaGridPoints];
    if (grid[k] > prev || grid[k] > next) continue;
    const double center = k * step;
    const double refined = golden_section_min(d, center - step, center + step,
                                              kThetaRefineTolerance);
    Candidate best{center, grid[k]};
    if (const double v = d(refined); v < best.defect) best = {refined, v};
    best.theta = canonical_angle(best.theta);
    candidates.push_back(best);
  }

  const auto global = std::min_element(candidates.begin(), candidates.end(),
                                       [](const Candidate& a, const Candidate& b) {
                                         return a.defect < b.defect;
                                       });
  out.min_defect = global->defect;
  out.argmin_theta = global->theta;

  std::vector<Candidate> roots;
  for (const auto& c : candidates) {
    if (c.defect <= tol) roots.push_back(c);
  }
  if (roots.empty()) {
    out.kind = ThetaKind::none;
    return out;
  }

  std::sort(roots.begin(), roots.end(),
            [](const Candidate& a, const Candidate& b) { return a.theta < b.theta; });
  std::vector<Candidate> merged;
  for (const auto& r : roots) {
    if (!merged.empty() && r.theta - merged.back().theta < kRootMergeWidth) {
      if (r.defect < merged.back().defect) merged.back() = r;
    } else {
      merged.push_back(r);
    }
  }
  out.kind = ThetaKind::discrete_theta;
  for (const auto& r : merged) out.roots.push_back(r.theta);
  out.argmin_theta = merged.front().theta;
  out.min_defect = merged.front().defect;
  return out;
}

ScanReport scan(const PureState& channel, double tol) {
  if (channel.num_qubits() != 5) throw std::invalid_argument("scan needs a 5-qubit channel");
  const auto assignments = enumerate_assignments();
  std::vector<std::future<ScanEntry>> jobs;
  jobs.reserve(assignments.size());
  for (const auto& assign : assignments) {
    jobs.push_back(std::async(std::launch::async, [&channel, assign, tol] {
      ScanEntry e;
      e.assignment = assign;
      e.classification = classify_theta(channel, assign, tol);
      e.purity_alice = purity(partial_trace(channel, {assign.alice[0], assign.alice[1]}));
      e.purity_bob = purity(partial_trace(channel, {assign.bob[0], assign.bob[1]}));
      return e;
    }));
  }
  ScanReport report;
  for (auto& job : jobs) report.entries.push_back(job.get());

  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const ScanEntry& a, const ScanEntry& b) {
                     const auto ka = static_cast<int>(a.classification.kind);
                     const auto kb = static_cast<int>(b.classification.kind);
                     if (ka != kb) return ka < kb;
                     if (a.classification.kind != ThetaKind::none) return false;
                     return a.classification.min_defect < b.classification.min_defect;
                   });
  return report;
}

OptimalTheta optimal_theta(const PureState& channel, const RoleAssignment& assign, double tol) {
  const auto c = classify_theta(channel, assign, tol);
  return {c.argmin_theta, c.min_defect};
}

}  // namespace cteleport
