#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace metabelian {

/// Exponent vector of a Laurent monomial s_1^{e_1} * ... * s_n^{e_n}.
/// Negative exponents are allowed; the vector length is the ring rank.
struct Monomial {
  std::vector<int> exp;

  Monomial() = default;
  explicit Monomial(int rank) : exp(static_cast<std::size_t>(rank), 0) {}
  explicit Monomial(std::vector<int> exponents) : exp(std::move(exponents)) {}

  /// e_i, the exponent vector of s_i (1-based index).
  static Monomial unit(int rank, int i);

  int rank() const { return static_cast<int>(exp.size()); }
  bool is_zero() const;

  Monomial operator+(const Monomial& other) const;
  Monomial operator-(const Monomial& other) const;
  Monomial operator-() const;

  // Term order: lexicographic on exponent vectors.
  auto operator<=>(const Monomial&) const = default;
};

/// Sparse multivariate Laurent polynomial over the integers,
/// an element of Z[s_1^{±1}, ..., s_n^{±1}].
///
/// Canonical form: no stored coefficient is zero, so two values are equal
/// iff their term maps are equal. All operations are pure; values are
/// immutable once built and safe to share across threads.
class LaurentPoly {
 public:
  LaurentPoly() : rank_(0) {}
  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly constant(int rank, mpz_class c);
  /// s_i (1-based).
  static LaurentPoly variable(int rank, int i);
  static LaurentPoly monomial(Monomial m, mpz_class c = 1);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, mpz_class>& terms() const { return terms_; }
  mpz_class coefficient(const Monomial& m) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const mpz_class& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const mpz_class& c, LaurentPoly p) { return p *= c; }

  bool operator==(const LaurentPoly& other) const {
    return rank_ == other.rank_ && terms_ == other.terms_;
  }

  /// Multiply by the unit monomial s^m (pure exponent shift).
  LaurentPoly shifted(const Monomial& m) const;

  /// Substitute s_i := 1 (1-based i); exponent i is zeroed and terms merged.
  LaurentPoly substitute_one(int i) const;

  /// Exact division by (1 - s_i). Returns the quotient q with
  /// p = (1 - s_i) * q, or nullopt when p is not divisible.
  ///
  /// Negative s_i-exponents are first cleared by a monomial unit; over the
  /// cleared polynomial, divisibility by (1 - s_i) is equivalent to
  /// vanishing at s_i = 1, and the quotient falls out of synthetic
  /// division (prefix sums of the s_i-coefficients).
  std::optional<LaurentPoly> divides_one_minus(int i) const;

  /// Order of vanishing at the point (1, ..., 1): the minimal total degree
  /// of p rewritten in the shifted variables u_i = s_i - 1, after clearing
  /// negative exponents by a monomial unit (units do not vanish there).
  /// nullopt encodes +infinity and is returned exactly when p = 0.
  std::optional<int> vanishing_order_at_ones() const;

  /// Canonical text form: terms in ascending lexicographic order, e.g.
  /// "1 - s1*s2^-1". The zero polynomial prints as "0".
  std::string to_string() const;

 private:
  void insert_term(const Monomial& m, const mpz_class& c);

  int rank_;
  std::map<Monomial, mpz_class> terms_;
};

/// Order of vanishing of 1 - s^j at (1, ..., 1): nullopt (+infinity) when
/// j is the zero vector, otherwise 1 (the linear term of
/// 1 - prod (1 + u_i)^{j_i} is -sum j_i u_i, which is nonzero).
std::optional<int> unit_monomial_order(const Monomial& j);

/// 1 - s_i, the pivot elements of all divisibility arguments here.
LaurentPoly one_minus_s(int rank, int i);

}  // namespace metabelian
