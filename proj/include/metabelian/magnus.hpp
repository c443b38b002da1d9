#pragma once

#include <string>
#include <vector>

#include "metabelian/laurent.hpp"
#include "metabelian/words.hpp"

namespace metabelian {

/// Canonical form of an element of the free metabelian group M_n, i.e. the
/// 2x2 matrix ( S  sum gamma_i t_i ; 0  1 ) of its image under the Magnus
/// representation. S is a unit monomial in s_1..s_n; gamma[i] is the
/// coefficient of t_{i+1} in the upper-right entry.
///
/// Every element produced by phi/mag_mul/mag_inv satisfies the image
/// identity  sum gamma_i (1 - s_i) = 1 - S  (see in_image).
struct MagnusElement {
  Monomial s;
  std::vector<LaurentPoly> gamma;

  static MagnusElement identity(int rank);

  int rank() const { return s.rank(); }
  bool is_identity() const;

  /// Deterministic serialization used as deduplication/golden key.
  std::string canonical_key() const;

  bool operator==(const MagnusElement&) const = default;
};

/// The Magnus representation: g_i maps to the matrix with S = s_i and
/// gamma_i = 1; an inverse letter maps to (s_i^-1, -s_i^-1 t_i; 0, 1).
/// The representation is faithful on M_n, which is what makes
/// words_equal_in_m below a decision procedure.
MagnusElement phi(const GroupWord& w);

/// Right-multiply by the image of a single letter (+i or -i). Cheap: one
/// exponent shift on S and one single-term update of gamma.
MagnusElement mag_mul_letter(MagnusElement m, int letter);

/// Matrix product restricted to the image shape:
/// S = S_a + S_b, gamma_i = S_a * gamma_{b,i} + gamma_{a,i}.
MagnusElement mag_mul(const MagnusElement& a, const MagnusElement& b);

MagnusElement mag_inv(const MagnusElement& a);

/// Image-membership test: sum gamma_i (1 - s_i) = 1 - S exactly.
bool in_image(const Monomial& s, const std::vector<LaurentPoly>& gamma);
bool in_image(const MagnusElement& m);

/// Equality in M_n = F_n / F''_n, decided through the faithful
/// representation: true iff phi(u) = phi(v).
bool words_equal_in_m(const GroupWord& u, const GroupWord& v);

}  // namespace metabelian
