#include "metabelian/endomorphism.hpp"

#include <stdexcept>

namespace metabelian {

IAEndomorphism IAEndomorphism::identity(int rank) {
  std::vector<GroupWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(GroupWord::generator(rank, i));
  return from_images(std::move(images));
}

IAEndomorphism IAEndomorphism::from_images(std::vector<GroupWord> images) {
  if (images.empty()) throw std::invalid_argument("empty image list");
  int rank = images.front().rank();
  if (static_cast<int>(images.size()) != rank) {
    throw std::invalid_argument("expected " + std::to_string(rank) +
                                " generator images, got " +
                                std::to_string(images.size()));
  }
  std::vector<std::vector<LaurentPoly>> bar;
  bar.reserve(images.size());
  for (int i = 1; i <= rank; ++i) {
    const GroupWord& image = images[static_cast<std::size_t>(i - 1)];
    if (image.rank() != rank) throw std::invalid_argument("image rank mismatch");
    std::vector<int> ab = image.abelianization();
    for (int j = 1; j <= rank; ++j) {
      if (ab[static_cast<std::size_t>(j - 1)] != (i == j ? 1 : 0)) {
        throw std::invalid_argument(
            "not an IA map: image of g" + std::to_string(i) +
            " has abelianization different from g" + std::to_string(i));
      }
    }
    bar.push_back(phi(image).gamma);
  }
  return IAEndomorphism(rank, std::move(images), std::move(bar));
}

GroupWord IAEndomorphism::apply(const GroupWord& w) const {
  if (w.rank() != rank_) throw std::invalid_argument("word rank mismatch");
  GroupWord out(rank_);
  for (int letter : w.letters()) {
    const GroupWord& image = images_[static_cast<std::size_t>((letter < 0 ? -letter : letter) - 1)];
    out = out * (letter < 0 ? image.inverse() : image);
  }
  return out;
}

MagnusElement IAEndomorphism::apply_bar(const MagnusElement& m) const {
  if (m.rank() != rank_) throw std::invalid_argument("element rank mismatch");
  MagnusElement out;
  out.s = m.s;
  out.gamma.assign(static_cast<std::size_t>(rank_), LaurentPoly(rank_));
  for (std::size_t i = 0; i < out.gamma.size(); ++i) {
    if (m.gamma[i].is_zero()) continue;
    for (std::size_t j = 0; j < out.gamma.size(); ++j) {
      if (bar_[i][j].is_zero()) continue;
      out.gamma[j] += m.gamma[i] * bar_[i][j];
    }
  }
  return out;
}

IAEndomorphism compose(const IAEndomorphism& f, const IAEndomorphism& g) {
  if (f.rank() != g.rank()) throw std::invalid_argument("rank mismatch in compose");
  int rank = f.rank();
  std::vector<GroupWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (const GroupWord& gi : g.images()) images.push_back(f.apply(gi));
  IAEndomorphism h = IAEndomorphism::from_images(std::move(images));

  // The bar matrix acts on gamma row vectors from the right, so the
  // composite matrix must be bar(g) * bar(f).
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      LaurentPoly expected(rank);
      for (int k = 0; k < rank; ++k) {
        expected += g.bar_matrix()[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    f.bar_matrix()[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      }
      if (!(expected == h.bar_matrix()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])) {
        throw std::logic_error("composite bar matrix disagrees with the matrix product");
      }
    }
  }
  return h;
}

IAEndomorphism inner(const GroupWord& w) {
  int rank = w.rank();
  std::vector<GroupWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) {
    images.push_back(w * GroupWord::generator(rank, i) * w.inverse());
  }
  return IAEndomorphism::from_images(std::move(images));
}

IAEndomorphism beta1(int rank) {
  if (rank < 2) throw std::invalid_argument("beta1 needs rank >= 2");
  return inner(GroupWord::generator(rank, rank));
}

IAEndomorphism beta2(int rank) {
  if (rank < 3) throw std::invalid_argument("beta2 needs rank >= 3");
  std::vector<GroupWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i < rank; ++i) images.push_back(GroupWord::generator(rank, i));
  GroupWord c = GroupWord::commutator(GroupWord::generator(rank, 1),
                                      GroupWord::generator(rank, 2));
  images.push_back(c * GroupWord::generator(rank, rank));
  return IAEndomorphism::from_images(std::move(images));
}

IAEndomorphism alpha_n(int rank) {
  if (rank < 3) throw std::invalid_argument("alpha_n is defined for rank >= 3");
  GroupWord c = GroupWord::commutator(GroupWord::generator(rank, 1),
                                      GroupWord::generator(rank, 2)) *
                GroupWord::generator(rank, rank);
  std::vector<GroupWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i < rank; ++i) {
    GroupWord gi = GroupWord::generator(rank, i);
    images.push_back(GroupWord::commutator(c, gi) * gi);
  }
  images.push_back(c);
  return IAEndomorphism::from_images(std::move(images));
}

IAEndomorphism alpha_n_inverse(int rank) {
  if (rank < 3) throw std::invalid_argument("alpha_n is defined for rank >= 3");
  IAEndomorphism beta1_inv = inner(GroupWord::generator(rank, rank).inverse());

  std::vector<GroupWord> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i < rank; ++i) images.push_back(GroupWord::generator(rank, i));
  GroupWord c = GroupWord::commutator(GroupWord::generator(rank, 1),
                                      GroupWord::generator(rank, 2));
  images.push_back(c.inverse() * GroupWord::generator(rank, rank));
  IAEndomorphism beta2_inv = IAEndomorphism::from_images(std::move(images));

  return compose(beta1_inv, beta2_inv);
}

}  // namespace metabelian
