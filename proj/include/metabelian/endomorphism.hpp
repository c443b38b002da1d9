#pragma once

#include <vector>

#include "metabelian/magnus.hpp"

namespace metabelian {

/// IA-endomorphism of the free metabelian group M_n: an endomorphism that
/// acts trivially on the abelianization. Carries both the generator images
/// (words) and the derived n x n matrix over Z[s_i^{±1}] describing the
/// induced action on the t-coefficients: bar_matrix()[i][j] is the
/// coefficient of t_{j+1} in the image of t_{i+1}, read off as the gamma
/// row of phi(images()[i]). The two views are linked by the intertwining
/// law phi(apply(w)) = apply_bar(phi(w)).
class IAEndomorphism {
 public:
  static IAEndomorphism identity(int rank);

  /// Builds the endomorphism g_i -> images[i]. Rejects image vectors that
  /// fail the IA condition (abelianization of images[i] must be the i-th
  /// standard basis vector); the error names the offending generator.
  static IAEndomorphism from_images(std::vector<GroupWord> images);

  int rank() const { return rank_; }
  const std::vector<GroupWord>& images() const { return images_; }
  const std::vector<std::vector<LaurentPoly>>& bar_matrix() const { return bar_; }

  /// Substitute the generator images into w and freely reduce.
  GroupWord apply(const GroupWord& w) const;

  /// Induced action on Magnus matrices: S is unchanged and
  /// gamma'_j = sum_i gamma_i * bar[i][j].
  MagnusElement apply_bar(const MagnusElement& m) const;

 private:
  IAEndomorphism(int rank, std::vector<GroupWord> images,
                 std::vector<std::vector<LaurentPoly>> bar)
      : rank_(rank), images_(std::move(images)), bar_(std::move(bar)) {}

  int rank_;
  std::vector<GroupWord> images_;
  std::vector<std::vector<LaurentPoly>> bar_;
};

/// compose(f, g): first g, then f (images are f.apply(g.images()[i])).
/// The composite's bar matrix is checked internally against the product
/// bar(g) * bar(f).
IAEndomorphism compose(const IAEndomorphism& f, const IAEndomorphism& g);

/// Conjugation g -> w g w^-1.
IAEndomorphism inner(const GroupWord& w);

/// Conjugation by g_n.
IAEndomorphism beta1(int rank);

/// g_n -> [g_1,g_2] g_n, all other generators fixed.
IAEndomorphism beta2(int rank);

/// The fixed-point-free automorphism, defined for rank n >= 3:
///   g_i -> [[g_1,g_2] g_n, g_i] g_i   for i < n,
///   g_n -> [g_1,g_2] g_n.
/// Equals compose(beta2, beta1).
IAEndomorphism alpha_n(int rank);

/// Explicit inverse of alpha_n, built as beta1^-1 then beta2^-1
/// (conjugation by g_n^-1 composed after g_n -> [g_1,g_2]^-1 g_n).
IAEndomorphism alpha_n_inverse(int rank);

}  // namespace metabelian
