#pragma once

#include <string_view>
#include <vector>

#include "cteleport/state.hpp"
#include "cteleport/teleport.hpp"

namespace cteleport {

enum class ThetaKind { all_theta, discrete_theta, none };

std::string_view to_string(ThetaKind kind);

struct ThetaClassification {
  ThetaKind kind = ThetaKind::none;
  // Ascending, in [0, pi). Only filled for discrete_theta.
  std::vector<double> roots;
  double min_defect = 0.0;
  double argmin_theta = 0.0;
};

struct ScanEntry {
  RoleAssignment assignment;
  ThetaClassification classification;
  double purity_alice = 0.0;
  double purity_bob = 0.0;
};

struct ScanReport {
  std::vector<ScanEntry> entries;
};

inline constexpr int kThetaGridPoints = 720;
inline constexpr double kThetaRefineTolerance = 1e-12;

// The 30 assignments with ascending labels inside each role, ordered by
// Alice's pair then Bob's pair.
std::vector<RoleAssignment> enumerate_assignments();

// max(defect sigma^{111}(theta), defect sigma^{112}(theta))
double combined_defect(const PureState& channel, const RoleAssignment& assign, double theta);

// Samples the combined defect on a uniform 720-point grid over [0, pi).
// If every sample is within tol the assignment works for all theta.
// Otherwise each grid-local minimum is refined by golden-section search and
// kept as a root when its refined defect is within tol. For all_theta the
// argmin is theta = 0; for discrete_theta it is the smallest root.
ThetaClassification classify_theta(const PureState& channel, const RoleAssignment& assign,
                                   double tol = kDefaultTolerance);

// Classifies all 30 assignments. Sorted: all_theta, then discrete_theta,
// then none by ascending min_defect. Ties keep enumeration order.
ScanReport scan(const PureState& channel, double tol = kDefaultTolerance);

struct OptimalTheta {
  double theta = 0.0;
  double min_defect = 0.0;
};

// Defect-minimizing Charlie angle for one assignment.
OptimalTheta optimal_theta(const PureState& channel, const RoleAssignment& assign,
                           double tol = kDefaultTolerance);

}  // namespace cteleport
