#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "emp/entropy.hpp"
#include "emp/random.hpp"
#include "test_util.hpp"

using namespace emp;

namespace {

// Independent evaluation straight from the definition, no shared helpers.
double shannon_of_squares(const Vec& x, double base) {
  const double total = x.squaredNorm();
  double h = 0.0;
  for (double v : x) {
    const double p = v * v / total;
    if (p > 0) h += p * std::log(1.0 / p);
  }
  return h / std::log(base);
}

Vec random_vec(Rng& rng, Index n) {
  std::normal_distribution<double> g;
  Vec v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

}  // namespace

TEST(RepEntropy, Anchors) {
  Vec one_hot = Vec::Zero(5);
  one_hot[3] = -2.0;
  for (double b : {2.0, std::numbers::e, 10.0}) EXPECT_EQ(rep_entropy(one_hot, b).value, 0.0);
  EXPECT_NEAR(rep_entropy(Vec::Constant(16, 0.25)).value, std::log(16.0), 1e-12);
  EXPECT_NEAR(rep_entropy(Vec{{std::sqrt(0.5), std::sqrt(0.5)}}, 2.0).value, 1.0, 1e-12);
}

TEST(RepEntropy, MatchesDefinitionOnRandomVectors) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    const Vec x = random_vec(rng, 2 + t % 30);
    EXPECT_NEAR(rep_entropy(x, 2.0).value, shannon_of_squares(x, 2.0), 1e-12);
  }
}

TEST(RepEntropy, Invariances) {
  Rng rng(2);
  std::uniform_real_distribution<double> scale(-50.0, 50.0);
  for (int t = 0; t < 200; ++t) {
    Vec x = random_vec(rng, 1 + t % 25);
    const double h = rep_entropy(x).value;
    const double alpha = scale(rng) + 0.01;
    EXPECT_NEAR(rep_entropy(Vec(alpha * x)).value, h, 1e-12);
    std::shuffle(x.begin(), x.end(), rng);
    EXPECT_NEAR(rep_entropy(x).value, h, 1e-12);
    EXPECT_GE(h, 0.0);
    EXPECT_LE(h, std::log(double(x.size())) + 1e-12);
    EXPECT_NEAR(rep_entropy(x, 2.0).value, h / std::numbers::ln2, 1e-12);
  }
}

TEST(RepEntropy, MajorizingPairIsLower) {
  // p = (0.7, 0.2, 0.1) majorizes q = (0.4, 0.35, 0.25).
  const Vec p{{std::sqrt(0.7), std::sqrt(0.2), std::sqrt(0.1)}};
  const Vec q{{std::sqrt(0.4), std::sqrt(0.35), std::sqrt(0.25)}};
  EXPECT_LT(rep_entropy(p).value, rep_entropy(q).value);
}

TEST(RepEntropy, Errors) {
  EXPECT_ERROR_CODE(rep_entropy(Vec::Zero(3)), ErrorCode::ZeroVector);
  EXPECT_ERROR_CODE(rep_entropy(Vec::Ones(3), 1.0), ErrorCode::BadParameter);
}

TEST(EnergyEntropy, NoRenormalization) {
  EXPECT_NEAR(energy_entropy(Vec::Constant(4, 0.5)), std::log(4.0), 1e-15);
  // Half the energy of a fair coin: 2 * 0.25 ln 4.
  EXPECT_NEAR(energy_entropy(Vec::Constant(2, 0.5)), 0.5 * std::log(4.0), 1e-15);
  EXPECT_EQ(energy_entropy(Vec::Zero(3)), 0.0);
}

TEST(WeightedConditionalEntropy, WeightCollapse) {
  const Vec e{{0.3, -0.4, 0.1}};
  Vec chat = Vec::Zero(6);
  chat[2] = 0.9;
  EXPECT_NEAR(weighted_conditional_entropy(e, chat, 1.0, 0.0), energy_entropy(e), 1e-15);
}

TEST(WeightedConditionalEntropy, ConvergedStateIsZero) {
  Vec chat = Vec::Zero(4);
  chat[1] = 1.0;
  EXPECT_EQ(weighted_conditional_entropy(Vec::Constant(3, 1e-14), chat, 0.7, 0.3), 0.0);
}

TEST(WeightedConditionalEntropy, UniformPair) {
  const Vec e = Vec::Constant(4, 0.5);
  const Vec chat{{std::sqrt(0.5), 0.0, -std::sqrt(0.5)}};
  const double oracle = 0.5 * std::log(4.0) + 0.5 * std::log(2.0);
  EXPECT_NEAR(weighted_conditional_entropy(e, chat, 0.5, 0.5), oracle, 1e-12);
  EXPECT_NEAR(weighted_conditional_entropy(e, chat, 0.5, 0.5, 2.0), oracle / std::numbers::ln2, 1e-12);
}

TEST(WeightedConditionalEntropy, NegativeWeight) {
  EXPECT_ERROR_CODE(weighted_conditional_entropy(Vec::Ones(2), Vec::Ones(2), -0.1, 1.0),
                    ErrorCode::NegativeWeight);
}

TEST(InformationPower, ClosedForms) {
  const double two_pi_e = 2.0 * std::numbers::pi * std::numbers::e;
  EXPECT_NEAR(information_power({0.0, 2.0}), 1.0 / two_pi_e, 1e-15);
  EXPECT_NEAR(information_power({0.0, 2.0}), 0.05855, 1e-5);
  EXPECT_NEAR(information_power({std::log(std::sqrt(two_pi_e)), std::numbers::e}), 1.0, 1e-12);
  // Gaussian with variance 4, entropy in bits, fed back.
  const double h_bits = std::log2(std::sqrt(two_pi_e * 4.0));
  EXPECT_NEAR(information_power({h_bits, 2.0}), 4.0, 1e-12);
  EXPECT_ERROR_CODE(information_power({-1.0, 2.0}), ErrorCode::BadParameter);
}

TEST(DeltaH, Ratios) {
  EXPECT_EQ(delta_h(2.0, 2.0), 1.0);
  EXPECT_EQ(delta_h(1.0, 2.0), 0.5);
  EXPECT_ERROR_CODE(delta_h(1.0, 0.0), ErrorCode::DegenerateHistory);
}
