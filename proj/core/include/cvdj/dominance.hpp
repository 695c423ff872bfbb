#pragma once

#include <limits>
#include <vector>

#include "cvdj/encoding.hpp"
#include "cvdj/oracle_string.hpp"
#include "cvdj/position.hpp"

namespace cvdj {

/// Brute-force searches enumerate C(N, N/2) strings; N is capped here.
inline constexpr int kMaxBruteForceBits = 12;

struct DominantString {
  OracleString z;
  StringClass cls;
  /// |M_z(x)|; inf once exp(x^2 / 2 sigma^2) overflows.
  double magnitude;
  /// exp(-x^2 / (2 sigma^2)) |M_z(x)|, the quantity actually compared.
  double enveloped_magnitude;
};

/// argmax of |M_z(x)| over all balanced z. Ties go to the lexicographically
/// smallest string. Throws std::domain_error for N > 12 or sigma <= 0.
DominantString dominant_string(double x, const EncodingParams& params);

struct DominanceReport {
  std::vector<double> x_grid;
  std::vector<StringClass> argmax_class;
  /// Smallest root of |M_SB| - |M_AB| on the grid, refined by bisection;
  /// +inf when crossover_found is false.
  double x_c_numeric = std::numeric_limits<double>::infinity();
  /// P sigma^2 / (4 - P^2 sigma^2); +inf when P sigma >= 2.
  double x_c_approx = std::numeric_limits<double>::infinity();
  bool crossover_found = false;
  /// Every argmax is SymBalanced or AntisymBalanced.
  bool sb_ab_only = false;
  /// The argmax class changes exactly once along the grid, from SB to AB.
  bool single_crossover = false;
};

/// Uniform grid of n_points >= 2 on [0, x_max], x_max > 0.
DominanceReport verify_dominance(const EncodingParams& params, double x_max, int n_points);

/// x_c_approx alone.
double crossover_approx(const EncodingParams& params);

/// True iff A_k(0) is strictly decreasing in k and the brute-force argmax of
/// |M_z(0)| is a symmetric balanced string. False whenever N % 4 != 0.
bool lemma2_check(const EncodingParams& params);

struct Lemma3Result {
  /// 2 (sum_{k <= N/4} alpha_k - sum_{k > N/4} alpha_k), enveloped. NaN
  /// when sb_available is false.
  double max_real;
  /// 2 sum_k beta_k, enveloped.
  double max_imag;
  StringClass real_realized_by = StringClass::SymBalanced;
  StringClass imag_realized_by = StringClass::AntisymBalanced;
  bool sb_available;
  /// Enveloped brute-force max of |M_z(x)| over balanced z.
  double brute_force_max;
  /// |brute_force_max - max(|max_real|, |max_imag|)|.
  double mismatch;
};

/// alpha_k + i beta_k = exp(-x^2 / 2 sigma^2) A_k(x). Requires x > 0.
Lemma3Result lemma3_decomposition(double x, const EncodingParams& params);

/// RMS over |x| <= pi / P of |phi_3(x)| at sigma_small minus the modulus of
/// the orthogonal position wave. Requires 0 < sigma_small <= 0.05.
double sinc_limit_check(const OracleString& z, double half_width, double sigma_small);

}  // namespace cvdj
