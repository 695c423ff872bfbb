#pragma once

#include <span>
#include <vector>

#include "cvdj/encoding.hpp"
#include "cvdj/position.hpp"

namespace cvdj {

struct ProbabilityResult {
  double value;
  double est_error;  ///< quadrature error estimate, absolute
};

/// (Delta_AB, Delta_SB): how far the constant string's detection
/// probability sits from each of the two dominant balanced strings.
struct SeparationPair {
  double delta_ab;
  double delta_sb;
};

/// d/d(delta) of Delta_AB and Delta_SB.
struct EdgeDerivative {
  double d_ab;
  double d_sb;
};

/// Probability of finding phi_z in the window [-delta, delta].
/// Adaptive Gauss-Kronrod, est_error <= 1e-9. Throws std::domain_error for
/// delta <= 0 or sigma <= 0.
ProbabilityResult detection_probability(const WaveSpec& spec, double delta);

/// Same window probability for the orthogonal (top-hat) encoding.
ProbabilityResult orthogonal_detection_probability(const OracleString& z, double half_width,
                                                   double delta);

/// Integral of |phi_z|^2 over the whole line.
///
/// The tails decay only like 1/x^2 (the momentum amplitude jumps at bin
/// edges), so the window integral is taken at whole periods L = n pi N / P,
/// n = 8, 16, 32, 64, of the asymptotic oscillation and extrapolated to
/// L -> inf in odd powers of 1/L.
ProbabilityResult total_probability(const WaveSpec& spec);

/// total_probability for many strings sharing one set of edge evaluations.
std::vector<ProbabilityResult> total_probabilities(const EncodingParams& params,
                                                   std::span<const OracleString> strings);

/// |Pr[C] - Pr[AB]| and |Pr[C] - Pr[SB]| with the canonical strings.
/// N must be divisible by 4.
SeparationPair separations(const EncodingParams& params, double delta);

/// min(Delta_AB, Delta_SB).
double success_probability_sharp(const EncodingParams& params, double delta);

/// Orthogonal baseline: |Pr[C] - Pr[AB]| at the window delta = pi / (2P).
double success_probability_orthogonal(double half_width, int n);

/// dDelta/d(delta) = 2 (|phi_C(delta)|^2 - |phi_z(delta)|^2) sign(Pr[C] - Pr[z])
/// for z in {AB, SB}; positive while the separation grows.
EdgeDerivative edge_density_derivative(const EncodingParams& params, double delta);

}  // namespace cvdj
