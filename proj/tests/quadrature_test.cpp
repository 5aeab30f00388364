#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "kantorovich/error.hpp"
#include "kantorovich/quadrature.hpp"
#include "oracles.hpp"

namespace kantorovich {
namespace {

const RealFunction gauss = [](double x) { return std::exp(-x * x); };

// int_0^1 e^{-x^2} dx and 5 int_0^{0.2} e^{-x^2} dx, 30-digit quadrature.
constexpr double kGaussUnit = 0.746824132812427025399467436132;
constexpr double kGaussCellMeanN5K0 = 0.986825154631854453918592881327;

TEST(QuadratureTest, ConstantSimpson) {
    EXPECT_DOUBLE_EQ(integrate([](double) { return 1.0; }, 0.0, 1.0, {QuadratureScheme::Simpson, 4}), 1.0);
}

TEST(QuadratureTest, MidpointExactForLinear) {
    EXPECT_DOUBLE_EQ(integrate([](double x) { return x; }, 0.0, 1.0, {QuadratureScheme::Midpoint, 1}), 0.5);
}

TEST(QuadratureTest, SimpsonExactForCubics) {
    const RealFunction cubic = [](double x) { return 2 * x * x * x - x * x + 3 * x - 1; };
    // Antiderivative x^4/2 - x^3/3 + 3x^2/2 - x on [-1, 2].
    auto F = [](double x) { return x * x * x * x / 2 - x * x * x / 3 + 1.5 * x * x - x; };
    EXPECT_NEAR(integrate(cubic, -1.0, 2.0, {QuadratureScheme::Simpson, 1}), F(2.0) - F(-1.0), 1e-13);
}

TEST(QuadratureTest, GaussianAgainstRefinementOracle) {
    const double oracle_value = oracle::refine_integral(gauss, 0.0, 1.0);
    EXPECT_NEAR(oracle_value, kGaussUnit, 1e-12);
    EXPECT_NEAR(integrate(gauss, 0.0, 1.0, {QuadratureScheme::Simpson, 64}), oracle_value, 1e-8);
}

TEST(QuadratureTest, CellMean) {
    EXPECT_DOUBLE_EQ(cell_mean([](double) { return 3.25; }, -7, 4, {}), 3.25);
    EXPECT_NEAR(cell_mean([](double x) { return x; }, 0, 2, {}), 0.25, 1e-15);
    const double oracle_value = 5.0 * oracle::refine_integral(gauss, 0.0, 0.2);
    EXPECT_NEAR(oracle_value, kGaussCellMeanN5K0, 1e-12);
    EXPECT_NEAR(cell_mean(gauss, 0, 5, {}), oracle_value, 1e-8);
}

TEST(QuadratureTest, NonFiniteIntegrand) {
    const RealFunction bad = [](double x) { return x > 0.5 ? std::numeric_limits<double>::infinity() : 0.0; };
    EXPECT_THROW(integrate(bad, 0.0, 1.0, {}), NonFiniteIntegrand);
    const RealFunction nan = [](double) { return std::nan(""); };
    EXPECT_THROW(cell_mean(nan, 0, 1, {QuadratureScheme::Midpoint, 2}), NonFiniteIntegrand);
}

TEST(QuadratureTest, RejectsBadArguments) {
    EXPECT_THROW(integrate(gauss, 1.0, 1.0, {}), InvalidArgument);
    EXPECT_THROW(integrate(gauss, 0.0, 1.0, {QuadratureScheme::Simpson, 0}), InvalidArgument);
    EXPECT_THROW(cell_mean(gauss, 0, 0, {}), InvalidArgument);
    EXPECT_THROW(Quadrature::parse("gauss", 4), InvalidArgument);
}

class QuadraturePropertyTest : public ::testing::TestWithParam<Quadrature> {};

TEST_P(QuadraturePropertyTest, Linearity) {
    const auto q = GetParam();
    const RealFunction f = [](double x) { return std::sin(3 * x) + 0.2; };
    const RealFunction g = [](double x) { return std::cos(x * x); };
    for (double alpha : {-2.0, 0.5, 3.0})
        for (double beta : {-1.0, 0.25}) {
            const RealFunction h = [&](double x) { return alpha * f(x) + beta * g(x); };
            EXPECT_NEAR(integrate(h, -0.4, 1.1, q), alpha * integrate(f, -0.4, 1.1, q) + beta * integrate(g, -0.4, 1.1, q),
                        1e-12);
        }
}

TEST_P(QuadraturePropertyTest, MeanValueBound) {
    const auto q = GetParam();
    const RealFunction mono = [](double x) { return std::exp(x) - 2 * std::atan(-x); };
    for (int n : {1, 3, 10})
        for (long k = -4; k < 4; ++k) {
            const double m = cell_mean(mono, k, n, q);
            EXPECT_GE(m, mono(static_cast<double>(k) / n));
            EXPECT_LE(m, mono(static_cast<double>(k + 1) / n));
        }
}

TEST_P(QuadraturePropertyTest, AdditivityOnAlignedPanels) {
    const auto q = GetParam();
    // Both halves use the same panel width as the whole when the panel count doubles.
    const Quadrature whole{q.scheme, 2 * q.panels_per_cell};
    const double lhs = integrate(gauss, -1.0, 1.0, whole);
    const double rhs = integrate(gauss, -1.0, 0.0, q) + integrate(gauss, 0.0, 1.0, q);
    EXPECT_NEAR(lhs, rhs, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Schemes, QuadraturePropertyTest,
                         ::testing::Values(Quadrature{QuadratureScheme::Midpoint, 1},
                                           Quadrature{QuadratureScheme::Midpoint, 7},
                                           Quadrature{QuadratureScheme::Simpson, 1},
                                           Quadrature{QuadratureScheme::Simpson, 8}));

}  // namespace
}  // namespace kantorovich
