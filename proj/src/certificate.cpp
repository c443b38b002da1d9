#include "metabelian/certificate.hpp"

#include <stdexcept>

namespace metabelian {

bool LinearForm::is_zero() const {
  for (const LaurentPoly& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

LinearForm LinearForm::operator-() const {
  LinearForm r;
  r.coeffs.reserve(coeffs.size());
  for (const LaurentPoly& c : coeffs) r.coeffs.push_back(-c);
  return r;
}

LinearForm LinearForm::plus_scaled(const LinearForm& other, const LaurentPoly& c) const {
  if (coeffs.size() != other.coeffs.size()) {
    throw std::invalid_argument("linear form arity mismatch");
  }
  LinearForm r;
  r.coeffs.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    r.coeffs.push_back(coeffs[i] + c * other.coeffs[i]);
  }
  return r;
}

bool same_equation(const LinearForm& a, const LinearForm& b) {
  return a == b || a == -b;
}

std::vector<std::vector<LaurentPoly>> alpha_bar_closed_form(int rank) {
  if (rank < 3) throw std::invalid_argument("alpha_n is defined for rank >= 3");
  const int n = rank;
  // Common row vector (1-s_2) t_1 - (1-s_1) t_2 + t_n.
  std::vector<LaurentPoly> tail(static_cast<std::size_t>(n), LaurentPoly(n));
  tail[0] = one_minus_s(n, 2);
  tail[1] = -one_minus_s(n, 1);
  tail[static_cast<std::size_t>(n - 1)] = LaurentPoly::constant(n, 1);

  std::vector<std::vector<LaurentPoly>> m;
  m.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    std::vector<LaurentPoly> row(static_cast<std::size_t>(n), LaurentPoly(n));
    LaurentPoly fi = one_minus_s(n, i);
    for (int j = 0; j < n; ++j) {
      row[static_cast<std::size_t>(j)] = fi * tail[static_cast<std::size_t>(j)];
    }
    row[static_cast<std::size_t>(i - 1)] += LaurentPoly::variable(n, n);
    m.push_back(std::move(row));
  }
  m.push_back(tail);
  return m;
}

namespace {

LaurentPoly poly_one(int rank) { return LaurentPoly::constant(rank, 1); }

/// Restriction of a full form to the coordinates gamma_1, gamma_2, gamma_n.
LinearForm restrict_to_ends(const LinearForm& form, int n) {
  LinearForm r;
  r.coeffs = {form.coeffs[0], form.coeffs[1], form.coeffs[static_cast<std::size_t>(n - 1)]};
  return r;
}

}  // namespace

Certificate verify_alpha_certificate(const IAEndomorphism& e) {
  const int n = e.rank();
  if (n < 3) throw std::invalid_argument("certificate needs rank >= 3");
  Certificate cert;
  cert.rank = n;

  auto fail = [&](const std::string& name, const std::string& detail) -> Certificate {
    cert.steps.push_back({name, false, detail});
    cert.conclusion = false;
    return cert;
  };
  auto pass = [&](const std::string& name, const std::string& detail) {
    cert.steps.push_back({name, true, detail});
  };

  const auto& bar = e.bar_matrix();

  // Step 1: the bar matrix, derived from phi of the generator images,
  // matches the closed-form action.
  if (bar != alpha_bar_closed_form(n)) {
    return fail("closed_form",
                "bar matrix differs from the closed-form action of alpha_n");
  }
  pass("closed_form",
       "bar matrix derived from the generator images equals the closed form "
       "s_n t_i + (1-s_i)((1-s_2)t_1 - (1-s_1)t_2 + t_n) for i < n, and "
       "(1-s_2)t_1 - (1-s_1)t_2 + t_n for i = n");

  // Fixed-point equations: e_j says the coefficient of t_j is unchanged,
  // i.e. 0 = gamma_j - sum_i gamma_i * bar[i][j].
  std::vector<LinearForm> eq(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    LinearForm f;
    f.coeffs.assign(static_cast<std::size_t>(n), LaurentPoly(n));
    for (int i = 0; i < n; ++i) {
      f.coeffs[static_cast<std::size_t>(i)] =
          -bar[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    f.coeffs[static_cast<std::size_t>(j)] += poly_one(n);
    eq[static_cast<std::size_t>(j)] = std::move(f);
  }

  // Step 2: for 3 <= j < n the equation collapses to (1-s_n) gamma_j = 0,
  // and 1-s_n is not a zero divisor, so gamma_j = 0.
  const LaurentPoly one_minus_sn = one_minus_s(n, n);
  for (int j = 3; j < n; ++j) {
    LinearForm expected;
    expected.coeffs.assign(static_cast<std::size_t>(n), LaurentPoly(n));
    expected.coeffs[static_cast<std::size_t>(j - 1)] = one_minus_sn;
    if (!same_equation(eq[static_cast<std::size_t>(j - 1)], expected)) {
      return fail("middle_vanish", "t_" + std::to_string(j) +
                                       " equation is not (1-s_n) gamma_" +
                                       std::to_string(j) + " = 0");
    }
  }
  pass("middle_vanish",
       n == 3 ? "no coefficients in the range 3 <= j < n at rank 3"
              : "equations t_3..t_" + std::to_string(n - 1) +
                    " read (1-s_n) gamma_j = 0; 1-s_n is not a zero divisor, "
                    "so gamma_j = 0");

  // With the middle coefficients gone, work over (gamma_1, gamma_2, gamma_n).
  LinearForm r1 = restrict_to_ends(eq[0], n);
  LinearForm r2 = restrict_to_ends(eq[1], n);
  LinearForm rn = restrict_to_ends(eq[static_cast<std::size_t>(n - 1)], n);

  // Step 3: the t_n equation is (1-s_1) gamma_1 + (1-s_2) gamma_2 = 0;
  // substituting it into the t_1 and t_2 equations leaves the two-equation
  // system below.
  LinearForm sum_form;
  sum_form.coeffs = {one_minus_s(n, 1), one_minus_s(n, 2), LaurentPoly(n)};
  if (!same_equation(rn, sum_form)) {
    return fail("reduced_system",
                "t_n equation is not (1-s_1) gamma_1 + (1-s_2) gamma_2 = 0");
  }
  if (!(rn == sum_form)) rn = -rn;  // normalize the sign before eliminating

  LinearForm f1 = r1.plus_scaled(rn, one_minus_s(n, 2));
  LinearForm f2 = r2.plus_scaled(rn, -one_minus_s(n, 1));
  LinearForm target1;
  target1.coeffs = {one_minus_sn, LaurentPoly(n), -one_minus_s(n, 2)};
  LinearForm target2;
  target2.coeffs = {LaurentPoly(n), one_minus_sn, one_minus_s(n, 1)};
  if (!same_equation(f1, target1) || !same_equation(f2, target2)) {
    return fail("reduced_system",
                "eliminating the t_n relation does not reduce t_1, t_2 to "
                "(1-s_n) gamma_1 = (1-s_2) gamma_n and "
                "(1-s_n) gamma_2 = -(1-s_1) gamma_n");
  }
  pass("reduced_system",
       "t_n equation is (1-s_1) gamma_1 + (1-s_2) gamma_2 = 0; eliminating it "
       "reduces t_1, t_2 to (1-s_n) gamma_1 = (1-s_2) gamma_n and "
       "(1-s_n) gamma_2 = -(1-s_1) gamma_n");
  if (!(f1 == target1)) f1 = -f1;
  if (!(f2 == target2)) f2 = -f2;

  // Step 4: the elements 1-s_i are prime, so the reduced system forces
  // gamma_1 = (1-s_2) A, gamma_2 = -(1-s_1) A, gamma_n = (1-s_n) A for a
  // single A. Re-prove the factored shapes by exact division and check
  // that the family satisfies every original equation.
  auto divides_to_one = [&](const LaurentPoly& p, int var) {
    auto q = p.divides_one_minus(var);
    return q.has_value() && *q == poly_one(n);
  };
  if (!divides_to_one(f1.coeffs[0], n) || !divides_to_one(-f1.coeffs[2], 2) ||
      !divides_to_one(f2.coeffs[1], n) || !divides_to_one(f2.coeffs[2], 1)) {
    return fail("parametrization",
                "reduced-system coefficients do not factor through 1-s_n, "
                "1-s_2, 1-s_1 as required");
  }
  std::vector<LaurentPoly> param(static_cast<std::size_t>(n), LaurentPoly(n));
  param[0] = one_minus_s(n, 2);
  param[1] = -one_minus_s(n, 1);
  param[static_cast<std::size_t>(n - 1)] = one_minus_sn;
  for (int j = 0; j < n; ++j) {
    LaurentPoly residual(n);
    for (int i = 0; i < n; ++i) {
      residual += param[static_cast<std::size_t>(i)] *
                  eq[static_cast<std::size_t>(j)].coeffs[static_cast<std::size_t>(i)];
    }
    if (!residual.is_zero()) {
      return fail("parametrization",
                  "the family gamma = ((1-s_2)A, -(1-s_1)A, ..., (1-s_n)A) "
                  "fails the t_" + std::to_string(j + 1) + " equation");
    }
  }
  pass("parametrization",
       "1-s_i are prime, so gamma_1 = (1-s_2)A, gamma_2 = -(1-s_1)A, "
       "gamma_n = (1-s_n)A; factored shapes re-proved by exact division and "
       "the family satisfies every coefficient equation");

  // Step 5: the image identity sum gamma_i (1-s_i) = 1 - S collapses to
  // 1 - S = (1-s_n)^2 A. The right side vanishes at (1,...,1) to order
  // >= 2 when A != 0 (orders add over an integral domain), while 1 - S
  // vanishes to order exactly 1 for any S != 1. Hence S = 1 and A = 0:
  // the fixed point has the identity Magnus matrix.
  LaurentPoly lhs_multiplier(n);
  for (int i = 1; i <= n; ++i) {
    lhs_multiplier += param[static_cast<std::size_t>(i - 1)] * one_minus_s(n, i);
  }
  LaurentPoly square = one_minus_sn * one_minus_sn;
  if (!(lhs_multiplier == square)) {
    return fail("order_contradiction",
                "image identity does not collapse to 1 - S = (1-s_n)^2 A");
  }
  auto order = square.vanishing_order_at_ones();
  if (!order.has_value() || *order != 2) {
    return fail("order_contradiction",
                "(1-s_n)^2 does not vanish to order exactly 2 at (1,...,1)");
  }
  pass("order_contradiction",
       "1 - S = (1-s_n)^2 A; the right side has order >= 2 at (1,...,1) "
       "(computed order of (1-s_n)^2 is 2) while 1 - S has order 1 for any "
       "S != 1, so S = 1, A = 0, and the fixed point is trivial");

  cert.conclusion = true;
  return cert;
}

Certificate certify_no_fixed_points(int rank) {
  return verify_alpha_certificate(alpha_n(rank));
}

}  // namespace metabelian
