#include "cteleport/entanglement.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace cteleport;
using testutil::amps;

TEST(entanglement, partial_trace_product_and_bell) {
  const auto rho = partial_trace(basis_state(2, 0), {1});
  EXPECT_EQ(rho.dim(), 2);
  EXPECT_EQ(rho.entries()(0, 0), Amplitude(1.0));
  EXPECT_EQ(rho.entries()(1, 1), Amplitude(0.0));
  EXPECT_DOUBLE_EQ(purity(rho), 1.0);

  const auto bell = partial_trace(named_state("bell_phi_plus"), {1});
  EXPECT_NEAR(bell.entries()(0, 0).real(), 0.5, 1e-15);
  EXPECT_NEAR(bell.entries()(1, 1).real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(bell.entries()(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(purity(bell), 0.5, 1e-15);
}

TEST(entanglement, partial_trace_man_13) {
  const auto rho = partial_trace(named_state("man_m5"), {1, 3});
  EXPECT_EQ(rho.dim(), 4);
  EXPECT_NEAR(purity(rho), 0.5, 1e-12);
  EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
}

TEST(entanglement, partial_trace_errors) {
  const auto s = named_state("brown");
  EXPECT_THROW(partial_trace(s, {}), std::invalid_argument);
  EXPECT_THROW(partial_trace(s, {0}), std::invalid_argument);
  EXPECT_THROW(partial_trace(s, {6}), std::invalid_argument);
  EXPECT_THROW(partial_trace(s, {2, 2}), std::invalid_argument);
}

TEST(entanglement, purity_of_diagonal_matrices) {
  EXPECT_DOUBLE_EQ(purity(DensityMatrix(Eigen::MatrixXcd::Identity(4, 4) / 4.0, {1, 2})), 0.25);
  Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(2, 2);
  pure(0, 0) = 1.0;
  EXPECT_DOUBLE_EQ(purity(DensityMatrix(pure, {1})), 1.0);
}

TEST(entanglement, man_m5_table) {
  const auto report = purity_table(named_state("man_m5"));
  for (const auto& [pair, value] : report.pair_purities) {
    const bool half = pair == QubitPair{1, 3} || pair == QubitPair{2, 4};
    EXPECT_NEAR(value, half ? 0.5 : 0.25, 1e-12) << pair.first << pair.second;
  }
  EXPECT_EQ(report.pair_purities.size(), 10u);
  EXPECT_EQ(report.single_purities.size(), 5u);
  EXPECT_FALSE(report.mmes.is_mmes);
  EXPECT_EQ(report.mmes.worst_pair, (QubitPair{1, 3}));
  EXPECT_NEAR(report.mmes.max_deviation, 0.25, 1e-12);
}

TEST(entanglement, brown_table_matches_definition_oracle) {
  const auto brown = named_state("brown");
  const auto report = purity_table(brown);
  for (const auto& [pair, value] : report.pair_purities) {
    EXPECT_NEAR(value, 0.25, 1e-12);
    EXPECT_NEAR(value, oracle::pair_purity(amps(brown), pair.first, pair.second), 1e-14);
  }
  for (const auto& [q, value] : report.single_purities) EXPECT_NEAR(value, 0.5, 1e-12);
  EXPECT_TRUE(report.mmes.is_mmes);
  EXPECT_TRUE(mmes_check(brown, 1e-10).is_mmes);
}

TEST(entanglement, product_state_table) {
  const auto report = purity_table(basis_state(5, 0));
  for (const auto& [pair, value] : report.pair_purities) EXPECT_DOUBLE_EQ(value, 1.0);
  for (const auto& [q, value] : report.single_purities) EXPECT_DOUBLE_EQ(value, 1.0);
  const auto v = mmes_check(basis_state(5, 0), 1e-10);
  EXPECT_FALSE(v.is_mmes);
  EXPECT_NEAR(v.max_deviation, 0.75, 1e-15);
}

TEST(entanglement, mmes_check_on_man) {
  const auto v = mmes_check(named_state("man_m5"), 1e-10);
  EXPECT_FALSE(v.is_mmes);
  EXPECT_EQ(v.worst_pair, (QubitPair{1, 3}));
  EXPECT_NEAR(v.max_deviation, 0.25, 1e-12);
}

TEST(entanglement, five_qubit_guards) {
  EXPECT_THROW(purity_table(basis_state(4, 0)), std::invalid_argument);
  EXPECT_THROW(purity_eq8(basis_state(4, 0)), std::invalid_argument);
  EXPECT_THROW(mmes_check(named_state("brown"), 0.0), std::invalid_argument);
}

TEST(entanglement, eq8_expansion_known_states) {
  EXPECT_NEAR(purity_eq8(named_state("man_m5")), 0.25, 1e-12);
  EXPECT_NEAR(purity_eq8(named_state("brown")), 0.25, 1e-12);
  EXPECT_DOUBLE_EQ(purity_eq8(basis_state(5, 0)), 1.0);
}

TEST(entanglement, eq8_expansion_equals_partial_trace_property) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 1000; ++t) {
    const auto s = random_state(5, rng);
    EXPECT_NEAR(purity_eq8(s), purity(partial_trace(s, {1, 2})), 1e-12);
  }
}

TEST(entanglement, complementarity_bounds_and_positivity) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 30; ++t) {
    const auto s = random_state(5, rng);
    for (unsigned mask = 1; mask < 31; ++mask) {
      std::vector<int> keep, rest;
      for (int q = 1; q <= 5; ++q) ((mask >> (q - 1)) & 1u ? keep : rest).push_back(q);
      const auto rho = partial_trace(s, keep);
      const double p = purity(rho);
      EXPECT_NEAR(p, purity(partial_trace(s, rest)), 1e-12);
      EXPECT_GE(p, 1.0 / rho.dim() - 1e-12);
      EXPECT_LE(p, 1.0 + 1e-12);
      EXPECT_LE(rho.hermiticity_defect(), 1e-12);
      EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, 1e-12);
      EXPECT_GE(rho.min_eigenvalue(), -1e-10);
    }
  }
}
