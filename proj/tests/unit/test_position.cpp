#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss.hpp>
#include <gtest/gtest.h>

#include "cvdj/measure.hpp"
#include "cvdj/position.hpp"
#include "mp_oracle.hpp"
#include "transform_oracle.hpp"

namespace cvdj {
namespace {

OracleString first_of(StringClass cls, int n) { return canonical(cls, n).first; }

TEST(WaveSpec, LengthMustMatch) {
  EXPECT_THROW(WaveSpec(OracleString::parse("0011"), EncodingParams(8, 1.0, 1.0)),
               std::domain_error);
}

TEST(ModulationTerm, ClosedFormsAtOrigin) {
  for (int i = 1; i <= 60; ++i) {
    const double s = 0.05 * i;
    for (double P : {0.5, 1.0, 2.0}) {
      const EncodingParams params(8, P, s);
      const double outer = 2.0 * std::erf(P * s / std::numbers::sqrt2);
      const double inner = 4.0 * std::erf(P * s / (2.0 * std::numbers::sqrt2));
      EXPECT_LE(std::abs(modulation_term({first_of(StringClass::AntisymBalanced, 8), params}, 0.0)),
                1e-12);
      for (const auto& z : {canonical(StringClass::Constant, 8).first,
                            canonical(StringClass::Constant, 8).second}) {
        const Complex m = modulation_term({z, params}, 0.0);
        EXPECT_NEAR(std::abs(m.real()), outer, 1e-12);
        EXPECT_NEAR(m.imag(), 0.0, 1e-12);
      }
      const Complex sb = modulation_term({first_of(StringClass::SymBalanced, 8), params}, 0.0);
      EXPECT_NEAR(std::abs(sb.real()), std::abs(outer - inner), 1e-12);
    }
  }
}

TEST(ModulationTerm, MatchesHighPrecisionSum) {
  std::mt19937_64 rng(2);
  std::bernoulli_distribution coin;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint8_t> bits(8);
    for (auto& b : bits) b = coin(rng) ? 1 : 0;
    const OracleString z(bits);
    const Complex got = modulation_term({z, EncodingParams(8, 1.0, 0.8)}, 0.7);
    const Complex want = test::modulation_oracle(z, 0.7, 0.8, 1.0);
    EXPECT_LE(std::abs(got - want), 1e-10 * std::max(1.0, std::abs(want))) << z.str();
  }
}

TEST(ModulationTerm, ScaledAndUnscaledAgree) {
  const WaveSpec spec(OracleString::parse("01101001"), EncodingParams(8, 1.0, 0.7));
  for (double x : {0.0, 0.5, 1.5, 3.0}) {
    const Complex unscaled = modulation_term(spec, x);
    const Complex scaled = scaled_modulation_term(spec, x);
    const double env = std::exp(-x * x / (2 * 0.49));
    EXPECT_LE(std::abs(unscaled * env - scaled), 1e-12 * std::max(1.0, std::abs(scaled)));
  }
  // The bare term overflows long before the scaled one does.
  const WaveSpec narrow(OracleString::parse("00001111"), EncodingParams(8, 1.0, 0.05));
  const Complex scaled = scaled_modulation_term(narrow, 3.0);
  EXPECT_TRUE(std::isfinite(std::abs(scaled)));
  EXPECT_TRUE(std::isinf(std::abs(modulation_term(narrow, 3.0))));
}

TEST(ModulationTerm, RejectsZeroWidth) {
  EXPECT_THROW(modulation_term({OracleString::parse("0011"), EncodingParams(4, 1.0, 0.0)}, 0.1),
               std::domain_error);
}

TEST(PositionWave, AntisymmetricVanishesAtOrigin) {
  const WaveSpec spec(first_of(StringClass::AntisymBalanced, 8), EncodingParams(8, 1.0, 1.3));
  EXPECT_LE(std::abs(position_wave(spec, 0.0)), 1e-15);
}

TEST(PositionWave, MatchesNumericInverseTransform) {
  const EncodingParams params(8, 1.0, 1.0);
  for (auto cls : {StringClass::Constant, StringClass::AntisymBalanced, StringClass::SymBalanced}) {
    const auto z = first_of(cls, 8);
    const WaveSpec spec(z, params);
    double sum = 0.0;
    constexpr int points = 2001;
    for (int i = 0; i < points; ++i) {
      const double x = -10.0 + 20.0 * i / (points - 1);
      sum += std::norm(position_wave(spec, x) - test::encoded_transform_oracle(z, x, params));
    }
    EXPECT_LE(std::sqrt(sum / points), 1e-8) << short_name(cls);
  }
}

TEST(PositionWave, ModulusEvenAndComplementFlipsSign) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ux(0.0, 8.0);
  const EncodingParams params(8, 1.0, 0.9);
  const auto strings = enumerate_balanced(8);
  for (int i = 0; i < 200; ++i) {
    const double x = ux(rng);
    const auto& z = strings[static_cast<std::size_t>(i) % strings.size()];
    const Complex plus = position_wave({z, params}, x);
    ASSERT_NEAR(std::abs(position_wave({z, params}, -x)), std::abs(plus), 1e-12);
    ASSERT_LE(std::abs(position_wave({z.complement(), params}, x) + plus), 1e-15);
  }
}

TEST(PositionWave, UnitNormForEveryString) {
  for (double s : {0.4, 1.0, 1.67}) {
    const EncodingParams params(8, 1.0, s);
    auto strings = enumerate_balanced(8);
    strings.push_back(canonical(StringClass::Constant, 8).first);
    strings.push_back(canonical(StringClass::Constant, 8).second);
    const auto norms = total_probabilities(params, strings);
    for (std::size_t i = 0; i < strings.size(); ++i) {
      ASSERT_NEAR(norms[i].value, 1.0, 1e-8) << strings[i].str() << " sigma=" << s;
    }
  }
}

TEST(AkTerms, RealAndDecreasingAtOrigin) {
  for (double s : {0.3, 0.6, 1.0, 2.0}) {
    const EncodingParams params(8, 1.0, s);
    double previous = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (int k = 1; k <= 4; ++k) {
      const Complex a = a_k(k, 0.0, params);
      EXPECT_LE(std::abs(a.imag()), 1e-14);
      EXPECT_GT(a.real(), 0.0);
      EXPECT_LT(a.real(), previous);
      previous = a.real();
      sum += a.real();
    }
    const Complex mc = modulation_term({first_of(StringClass::Constant, 8), params}, 0.0);
    EXPECT_NEAR(2.0 * sum, std::abs(mc), 1e-13);
  }
}

TEST(AkTerms, Errors) {
  const EncodingParams params(8, 1.0, 1.0);
  EXPECT_THROW(a_k(0, 0.1, params), std::domain_error);
  EXPECT_THROW(a_k(5, 0.1, params), std::domain_error);
  EXPECT_THROW(a_k(1, 0.1, EncodingParams(8, 1.0, 0.0)), std::domain_error);
}

TEST(AkTerms, MatchHighPrecisionErf) {
  const EncodingParams params(8, 1.0, 0.8);
  for (int k = 1; k <= 4; ++k) {
    const double x = 0.9;
    const auto hi = test::erf_oracle(Complex{2.0 * k / 8 * 0.64, -x} / (std::numbers::sqrt2 * 0.8));
    const auto lo =
        test::erf_oracle(Complex{2.0 * (k - 1) / 8 * 0.64, -x} / (std::numbers::sqrt2 * 0.8));
    EXPECT_LE(std::abs(a_k(k, x, params) - (hi - lo)), 1e-12);
  }
}

TEST(Phasor, OriginAndNarrowLimit) {
  const EncodingParams wide(8, 1.0, 0.7);
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(phasor(k, 0.0, wide).angle, 0.0);

  for (double P : {1.0, 2.0}) {
    const EncodingParams narrow(8, P, 1e-2);
    for (int k = 1; k <= 4; ++k) {
      for (int i = -10; i <= 10; ++i) {
        const double x = 0.1 * i;
        const auto ph = phasor(k, x, narrow);
        EXPECT_NEAR(ph.angle, (2 * k - 1) * P * x / 8, 1e-3) << k << " " << x;
        EXPECT_GT(ph.angle, -std::numbers::pi);
        EXPECT_LE(ph.angle, std::numbers::pi);
        if (i >= 1) {
          const double shape = std::sin(P * x / 8) / (std::sqrt(P * std::numbers::pi) * x);
          EXPECT_NEAR(ph.magnitude / shape, 1.0, 0.01) << k << " " << x;
        }
      }
    }
  }
}

TEST(OrthogonalWave, MatchesTransformOfTophat) {
  for (const auto& z : {OracleString::parse("00000000"), OracleString::parse("00001111"),
                        OracleString::parse("01101001")}) {
    for (double x : {-2.5, -0.3, 0.0, 0.8, 4.0}) {
      const auto want = test::inverse_transform([&](double p) { return tophat_momentum(z, p, 1.0); },
                                                x, -1.0, 1.0, 8);
      EXPECT_LE(std::abs(orthogonal_position_wave(z, x, 1.0) - want), 1e-13) << z.str() << x;
    }
  }
}

TEST(OrthogonalWave, ConstantFirstZeroAndAntisymmetricOrigin) {
  const auto c = OracleString::parse("00000000");
  for (double P : {1.0, 2.5}) {
    EXPECT_LE(std::abs(orthogonal_position_wave(c, std::numbers::pi / P, P)), 1e-15);
    for (int i = 0; i < 100; ++i) {
      const double x = (std::numbers::pi / P) * i / 100.0;
      EXPECT_GT(std::abs(orthogonal_position_wave(c, x, P)), 0.0);
    }
  }
  EXPECT_LE(std::abs(orthogonal_position_wave(OracleString::parse("00001111"), 0.0, 1.0)), 1e-16);
  EXPECT_THROW(orthogonal_position_wave(c, 0.0, 0.0), std::domain_error);
}

TEST(OrthogonalWave, UnitNorm) {
  // Tail mass beyond L is about 1 / (pi L) for the constant string.
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto c = OracleString::parse("00000000");
  const auto ab = OracleString::parse("00001111");
  const double L = 8.0 * std::numbers::pi * 400;
  const int panels = 40000;
  double norm_c = 0.0;
  double norm_ab = 0.0;
  for (int q = 0; q < panels; ++q) {
    const double a = L * q / panels;
    const double b = L * (q + 1) / panels;
    norm_c += Rule::integrate([&](double x) { return std::norm(orthogonal_position_wave(c, x, 1.0)); }, a, b);
    norm_ab += Rule::integrate([&](double x) { return std::norm(orthogonal_position_wave(ab, x, 1.0)); }, a, b);
  }
  EXPECT_NEAR(2.0 * norm_c, 1.0, 1e-4);
  EXPECT_NEAR(2.0 * norm_ab, 1.0, 1e-3);
}

}  // namespace
}  // namespace cvdj
