#pragma once

#include <string>
#include <vector>

#include "metabelian/endomorphism.hpp"

namespace metabelian {

/// Formal linear expression sum coeffs[i] * gamma_{i+1} in the unknown
/// t-coefficients gamma_1..gamma_n of a would-be fixed point. The zero
/// form has all-zero coefficients.
struct LinearForm {
  std::vector<LaurentPoly> coeffs;

  bool is_zero() const;
  bool operator==(const LinearForm&) const = default;

  LinearForm operator-() const;
  /// this + c * other, coefficientwise.
  LinearForm plus_scaled(const LinearForm& other, const LaurentPoly& c) const;
};

/// Two forms describe the same equation when they agree up to an overall
/// sign (equations are normalized by moving everything to one side).
bool same_equation(const LinearForm& a, const LinearForm& b);

struct CertificateStep {
  std::string name;
  bool verified;
  std::string detail;
};

/// Machine-checked record of the fixed-point-freeness argument for
/// alpha_n. Each step is an exact polynomial identity (or an explicit
/// exact division) computed over Z[s_i^{±1}]; the conclusion is true only
/// if every step verified. Verification stops at the first failing step,
/// which is then the last entry.
struct Certificate {
  int rank = 0;
  std::vector<CertificateStep> steps;
  bool conclusion = false;
};

/// Runs the alpha_n proof script against an arbitrary endomorphism's bar
/// matrix. For alpha_n(rank) every step verifies; for anything else some
/// step fails, and the returned certificate names it. This is the
/// regression alarm: a false conclusion for alpha_n means the word or
/// polynomial machinery is broken.
///
/// The deduction chain, with gamma_1..gamma_n the t-coefficients of a
/// hypothetical fixed point and e_j := gamma_j - sum_i gamma_i*bar[i][j]
/// the equation "coefficient of t_j is unchanged":
///   1. closed_form      — bar matrix equals the closed-form action
///                         derived from the generator images.
///   2. middle_vanish    — for 3 <= j < n, e_j is exactly (1-s_n)*gamma_j;
///                         1-s_n is not a zero divisor, so gamma_j = 0.
///   3. reduced_system   — the t_n equation reads
///                         (1-s_1)gamma_1 + (1-s_2)gamma_2 = 0; eliminating
///                         it from the t_1, t_2 equations leaves
///                         (1-s_n)gamma_1 = (1-s_2)gamma_n and
///                         (1-s_n)gamma_2 = -(1-s_1)gamma_n.
///   4. parametrization  — since the elements 1-s_i are prime, the
///                         solutions are gamma_1 = (1-s_2)A,
///                         gamma_2 = -(1-s_1)A, gamma_n = (1-s_n)A; the
///                         factored shapes are re-proved by exact division
///                         and the family is checked against every
///                         original equation.
///   5. order_contradiction — the image identity forces
///                         1 - S = (1-s_n)^2 * A; the right side vanishes
///                         to order >= 2 at (1,...,1) while 1 - S for
///                         S != 1 vanishes to order exactly 1, so S = 1,
///                         A = 0 and the fixed point is trivial.
Certificate verify_alpha_certificate(const IAEndomorphism& e);

/// Certificate for alpha_n(rank); rank >= 3.
Certificate certify_no_fixed_points(int rank);

/// The closed-form bar matrix of alpha_n:
///   row i (i < n): s_n t_i + (1-s_i)((1-s_2)t_1 - (1-s_1)t_2 + t_n),
///   row n:         (1-s_2)t_1 - (1-s_1)t_2 + t_n.
std::vector<std::vector<LaurentPoly>> alpha_bar_closed_form(int rank);

}  // namespace metabelian
