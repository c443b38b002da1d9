#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace metabelian {

/// Basis monomial of the free metabelian Lie algebra ML_n: the left-normed
/// bracket [x_{i_1}, x_{i_2}, ..., x_{i_d}] in normal form, meaning d = 1,
/// or d >= 2 with i_1 > i_2 <= i_3 <= ... <= i_d.
struct LieMonomial {
  std::vector<int> indices;

  int degree() const { return static_cast<int>(indices.size()); }
  auto operator<=>(const LieMonomial&) const = default;
};

bool is_normal_form(std::span<const int> indices);

/// Integer linear combination of normal-form monomials; canonical sparse
/// form (no zero coefficients). Degrees may mix.
class LieElement {
 public:
  explicit LieElement(int rank) : rank_(rank) {}

  static LieElement generator(int rank, int i);
  /// Single term c * m; m must already be in normal form.
  static LieElement term(int rank, LieMonomial m, mpz_class c = 1);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<LieMonomial, mpz_class>& terms() const { return terms_; }

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  LieElement& operator*=(const mpz_class& c);
  LieElement operator-() const;
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const mpz_class& c, LieElement a) { return a *= c; }

  bool operator==(const LieElement& other) const {
    return rank_ == other.rank_ && terms_ == other.terms_;
  }

  std::string to_string() const;

 private:
  friend LieElement normalize_left_normed(int, std::span<const int>);
  void insert_term(const LieMonomial& m, const mpz_class& c);

  int rank_;
  std::map<LieMonomial, mpz_class> terms_;
};

/// Rewrites the left-normed bracket [x_{i_1}, ..., x_{i_d}] (arbitrary
/// index sequence) into the normal-form basis. Uses antisymmetry on the
/// bottom pair, the freedom to reorder positions 3..d (a consequence of
/// the metabelian identity), and the Jacobi rewrite
/// [[a,b],c] = [[a,c],b] - [[b,c],a] when position 2 is too large.
LieElement normalize_left_normed(int rank, std::span<const int> indices);

/// The metabelian Lie bracket, extended bilinearly from monomials.
/// Brackets of two monomials of degree >= 2 vanish.
LieElement bracket(const LieElement& a, const LieElement& b);

/// The derivation determined by x_i -> [x_i, x_n] for i < n and
/// x_n -> [x_1, x_2], extended by the Leibniz rule. Defined for n >= 3;
/// raises degree by exactly one on homogeneous input.
LieElement derivation_dn(int n, const LieElement& a);

/// All normal-form monomials of the given degree, sorted.
std::vector<LieMonomial> graded_basis(int rank, int degree);

/// Exact rank over Q of an integer matrix (rows of equal length).
int integer_matrix_rank(const std::vector<std::vector<mpz_class>>& m);

struct KernelReport {
  struct DegreeRow {
    int degree = 0;
    int dim = 0;        // dimension of the degree-d component
    int image_dim = 0;  // dimension of the degree-(d+1) component
    int rank = 0;       // rank of the derivation restricted to degree d
  };

  int rank_n = 0;
  int max_degree = 0;
  std::vector<DegreeRow> rows;
  bool trivial = false;  // true iff full column rank at every checked degree
};

/// Checks injectivity of the derivation on each graded component
/// d = 1..max_degree by an exact rank computation over Q. A trivial
/// kernel on every component certifies that no nonzero element of degree
/// <= max_degree is annihilated.
KernelReport kernel_trivial_up_to(int n, int max_degree);

}  // namespace metabelian
