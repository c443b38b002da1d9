#include <doctest.h>

#include <random>

#include "metabelian/endomorphism.hpp"
#include "test_support.hpp"

using metabelian::alpha_n;
using metabelian::alpha_n_inverse;
using metabelian::beta1;
using metabelian::beta2;
using metabelian::compose;
using metabelian::GroupWord;
using metabelian::IAEndomorphism;
using metabelian::inner;
using metabelian::LaurentPoly;
using metabelian::MagnusElement;
using metabelian::one_minus_s;
using metabelian::parse_word;
using metabelian::phi;
using metabelian::words_equal_in_m;
using test_support::random_word;

namespace {

LaurentPoly zero(int n) { return LaurentPoly(n); }
LaurentPoly one(int n) { return LaurentPoly::constant(n, 1); }
LaurentPoly var(int n, int i) { return LaurentPoly::variable(n, i); }

// A deterministic family of endomorphisms for property tests: the named
// constructions plus inner conjugations and a couple of compositions.
std::vector<IAEndomorphism> sample_endomorphisms(int n, std::mt19937& rng) {
  std::vector<IAEndomorphism> family;
  family.push_back(IAEndomorphism::identity(n));
  family.push_back(beta1(n));
  family.push_back(beta2(n));
  family.push_back(alpha_n(n));
  family.push_back(alpha_n_inverse(n));
  for (int k = 0; k < 3; ++k) family.push_back(inner(random_word(rng, n, 6)));
  family.push_back(compose(beta2(n), inner(random_word(rng, n, 4))));
  family.push_back(compose(alpha_n(n), alpha_n(n)));
  return family;
}

}  // namespace

TEST_CASE("from_images: identity and rejection of non-IA data") {
  const int n = 3;
  IAEndomorphism id = IAEndomorphism::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      CHECK(id.bar_matrix()[i][j] == (i == j ? one(n) : zero(n)));
    }
  }

  std::vector<GroupWord> bad{parse_word(n, "g2"), parse_word(n, "g2"), parse_word(n, "g3")};
  try {
    IAEndomorphism::from_images(bad);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("g1") != std::string::npos);
  }
}

TEST_CASE("beta1 bar matrix matches conjugation by g_n") {
  const int n = 3;
  IAEndomorphism b1 = beta1(n);
  for (int i = 1; i <= n; ++i) {
    // Image of g_i is [g_n, g_i] g_i; its gamma row is the matrix row.
    GroupWord expected_image =
        GroupWord::commutator(GroupWord::generator(n, n), GroupWord::generator(n, i)) *
        GroupWord::generator(n, i);
    CHECK(b1.images()[i - 1] == expected_image);
    CHECK(b1.bar_matrix()[i - 1] == phi(expected_image).gamma);
  }
  // Row i for i < n: alpha_{i,i} = s_n, alpha_{i,n} = 1 - s_i.
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      LaurentPoly expected = zero(n);
      if (j == i) expected += var(n, n);
      if (j == n) expected += one_minus_s(n, i);
      CHECK(b1.bar_matrix()[i - 1][j - 1] == expected);
    }
  }
}

TEST_CASE("beta2 bar matrix") {
  const int n = 4;
  IAEndomorphism b2 = beta2(n);
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j <= n; ++j) {
      CHECK(b2.bar_matrix()[i - 1][j - 1] == (i == j ? one(n) : zero(n)));
    }
  }
  CHECK(b2.bar_matrix()[n - 1][0] == one_minus_s(n, 2));
  CHECK(b2.bar_matrix()[n - 1][1] == -one_minus_s(n, 1));
  CHECK(b2.bar_matrix()[n - 1][2] == zero(n));
  CHECK(b2.bar_matrix()[n - 1][n - 1] == one(n));
}

TEST_CASE("apply substitutes images") {
  const int n = 3;
  IAEndomorphism a = alpha_n(n);
  CHECK(IAEndomorphism::identity(n).apply(parse_word(n, "g1 g2^-1 g3")) ==
        parse_word(n, "g1 g2^-1 g3"));
  CHECK(a.apply(parse_word(n, "g3")) == parse_word(n, "[g1,g2] g3"));
  CHECK(a.apply(GroupWord(n)).empty());
}

TEST_CASE("the representation law phi(apply(w)) = apply_bar(phi(w))") {
  std::mt19937 rng(101);
  for (int n : {3, 4}) {
    auto family = sample_endomorphisms(n, rng);
    for (int trial = 0; trial < 200; ++trial) {
      const IAEndomorphism& e = family[trial % family.size()];
      GroupWord w = random_word(rng, n, 10);
      CHECK(phi(e.apply(w)) == e.apply_bar(phi(w)));
    }
  }
}

TEST_CASE("apply_bar closed-form rows of alpha_n") {
  const int n = 3;
  IAEndomorphism a = alpha_n(n);

  // On phi(g_n): gamma' = ((1-s_2), -(1-s_1), 1).
  MagnusElement gn = a.apply_bar(phi(parse_word(n, "g3")));
  CHECK(gn.s == metabelian::Monomial::unit(n, 3));
  CHECK(gn.gamma[0] == one_minus_s(n, 2));
  CHECK(gn.gamma[1] == -one_minus_s(n, 1));
  CHECK(gn.gamma[2] == one(n));

  // On phi(g_1): gamma'_1 = s_n + (1-s_1)(1-s_2), gamma'_2 = -(1-s_1)^2,
  // gamma'_n = 1-s_1.
  MagnusElement g1 = a.apply_bar(phi(parse_word(n, "g1")));
  CHECK(g1.gamma[0] == var(n, 3) + one_minus_s(n, 1) * one_minus_s(n, 2));
  CHECK(g1.gamma[1] == -(one_minus_s(n, 1) * one_minus_s(n, 1)));
  CHECK(g1.gamma[2] == one_minus_s(n, 1));

  CHECK(IAEndomorphism::identity(n).apply_bar(gn) == gn);
}

TEST_CASE("apply_bar preserves the image condition for the automorphism family") {
  std::mt19937 rng(55);
  const int n = 3;
  auto family = sample_endomorphisms(n, rng);
  for (int trial = 0; trial < 100; ++trial) {
    const IAEndomorphism& e = family[trial % family.size()];
    MagnusElement m = phi(random_word(rng, n, 10));
    CHECK(metabelian::in_image(e.apply_bar(m)));
  }
}

TEST_CASE("compose") {
  const int n = 3;
  IAEndomorphism id = IAEndomorphism::identity(n);
  IAEndomorphism a = alpha_n(n);

  for (int i = 0; i < n; ++i) {
    CHECK(compose(id, a).images()[i] == a.images()[i]);
    CHECK(compose(a, id).images()[i] == a.images()[i]);
  }

  // alpha_n = beta2 after beta1, letter for letter.
  IAEndomorphism composite = compose(beta2(n), beta1(n));
  for (int i = 0; i < n; ++i) CHECK(composite.images()[i] == a.images()[i]);

  // The explicit inverse really inverts, with free reduction alone.
  IAEndomorphism round_trip = compose(alpha_n_inverse(n), alpha_n(n));
  for (int i = 1; i <= n; ++i) {
    CHECK(round_trip.images()[i - 1] == GroupWord::generator(n, i));
  }

  // Functoriality of apply_bar on a sample of pairs.
  std::mt19937 rng(303);
  auto family = sample_endomorphisms(n, rng);
  for (int trial = 0; trial < 40; ++trial) {
    const IAEndomorphism& f = family[trial % family.size()];
    const IAEndomorphism& g = family[(trial * 7 + 3) % family.size()];
    MagnusElement m = phi(random_word(rng, n, 8));
    CHECK(compose(f, g).apply_bar(m) == f.apply_bar(g.apply_bar(m)));
  }
}

TEST_CASE("alpha_n definition and preconditions") {
  CHECK_THROWS_AS(alpha_n(2), std::invalid_argument);
  CHECK_THROWS_AS(alpha_n_inverse(2), std::invalid_argument);

  IAEndomorphism a3 = alpha_n(3);
  CHECK(a3.images()[0] == parse_word(3, "[[g1,g2]g3,g1]g1"));
  CHECK(a3.images()[1] == parse_word(3, "[[g1,g2]g3,g2]g2"));
  CHECK(a3.images()[2] == parse_word(3, "[g1,g2]g3"));

  IAEndomorphism a4 = alpha_n(4);
  CHECK(a4.bar_matrix()[3][0] == one_minus_s(4, 2));
  CHECK(a4.bar_matrix()[3][1] == -one_minus_s(4, 1));
  CHECK(a4.bar_matrix()[3][2] == zero(4));
  CHECK(a4.bar_matrix()[3][3] == one(4));
}

TEST_CASE("alpha_n is an automorphism acting trivially on the abelianization") {
  std::mt19937 rng(17);
  for (int n : {3, 4, 5}) {
    IAEndomorphism a = alpha_n(n);
    IAEndomorphism ai = alpha_n_inverse(n);
    for (int i = 1; i <= n; ++i) {
      GroupWord gi = GroupWord::generator(n, i);
      CHECK(words_equal_in_m(compose(ai, a).apply(gi), gi));
      CHECK(words_equal_in_m(compose(a, ai).apply(gi), gi));
    }
    for (int trial = 0; trial < 30; ++trial) {
      GroupWord w = random_word(rng, n, 10);
      CHECK(a.apply(w).abelianization() == w.abelianization());
    }
  }
}

TEST_CASE("inner automorphisms") {
  const int n = 3;
  CHECK(inner(GroupWord(n)).images() == IAEndomorphism::identity(n).images());

  IAEndomorphism by_g3 = inner(parse_word(n, "g3"));
  for (int i = 0; i < n; ++i) {
    CHECK(by_g3.images()[i] == beta1(n).images()[i]);
    CHECK(by_g3.bar_matrix()[i] == beta1(n).bar_matrix()[i]);
  }

  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    GroupWord w = random_word(rng, n, 8);
    CHECK(words_equal_in_m(inner(w).apply(w), w));
  }
}

TEST_CASE("nontrivial word images are moved by alpha_n") {
  std::mt19937 rng(404);
  const int n = 3;
  IAEndomorphism a = alpha_n(n);
  int nontrivial = 0;
  for (int trial = 0; trial < 200; ++trial) {
    MagnusElement m = phi(random_word(rng, n, 10));
    if (m.is_identity()) continue;
    ++nontrivial;
    CHECK(a.apply_bar(m) != m);
  }
  CHECK(nontrivial > 150);
}
