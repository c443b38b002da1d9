#include "metabelian/magnus.hpp"

#include <stdexcept>

namespace metabelian {

namespace {

void require_same_rank(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

}  // namespace

MagnusElement MagnusElement::identity(int rank) {
  MagnusElement m;
  m.s = Monomial(rank);
  m.gamma.assign(static_cast<std::size_t>(rank), LaurentPoly(rank));
  return m;
}

bool MagnusElement::is_identity() const {
  if (!s.is_zero()) return false;
  for (const LaurentPoly& g : gamma) {
    if (!g.is_zero()) return false;
  }
  return true;
}

std::string MagnusElement::canonical_key() const {
  std::string key = "S";
  for (int e : s.exp) key += "," + std::to_string(e);
  for (const LaurentPoly& g : gamma) {
    key += "|";
    key += g.to_string();
  }
  return key;
}

MagnusElement mag_mul_letter(MagnusElement m, int letter) {
  int i = letter < 0 ? -letter : letter;
  std::size_t gi = static_cast<std::size_t>(i - 1);
  if (i < 1 || i > m.rank()) throw std::invalid_argument("letter out of range");
  if (letter > 0) {
    // gamma_i += S; then S *= s_i.
    m.gamma[gi] += LaurentPoly::monomial(m.s);
    m.s = m.s + Monomial::unit(m.rank(), i);
  } else {
    // S *= s_i^-1; then gamma_i -= S (the new one).
    m.s = m.s - Monomial::unit(m.rank(), i);
    m.gamma[gi] -= LaurentPoly::monomial(m.s);
  }
  return m;
}

MagnusElement phi(const GroupWord& w) {
  MagnusElement m = MagnusElement::identity(w.rank());
  for (int letter : w.letters()) m = mag_mul_letter(std::move(m), letter);
  return m;
}

MagnusElement mag_mul(const MagnusElement& a, const MagnusElement& b) {
  require_same_rank(a.rank(), b.rank());
  MagnusElement out;
  out.s = a.s + b.s;
  out.gamma.reserve(a.gamma.size());
  for (std::size_t i = 0; i < a.gamma.size(); ++i) {
    out.gamma.push_back(b.gamma[i].shifted(a.s) + a.gamma[i]);
  }
  return out;
}

MagnusElement mag_inv(const MagnusElement& a) {
  MagnusElement out;
  out.s = -a.s;
  out.gamma.reserve(a.gamma.size());
  for (const LaurentPoly& g : a.gamma) {
    out.gamma.push_back(-g.shifted(out.s));
  }
  return out;
}

bool in_image(const Monomial& s, const std::vector<LaurentPoly>& gamma) {
  int rank = s.rank();
  if (static_cast<int>(gamma.size()) != rank) {
    throw std::invalid_argument("gamma vector length must equal the rank");
  }
  LaurentPoly lhs(rank);
  for (int i = 1; i <= rank; ++i) {
    lhs += gamma[static_cast<std::size_t>(i - 1)] * one_minus_s(rank, i);
  }
  LaurentPoly rhs = LaurentPoly::constant(rank, 1) - LaurentPoly::monomial(s);
  return lhs == rhs;
}

bool in_image(const MagnusElement& m) { return in_image(m.s, m.gamma); }

bool words_equal_in_m(const GroupWord& u, const GroupWord& v) {
  require_same_rank(u.rank(), v.rank());
  return phi(u) == phi(v);
}

}  // namespace metabelian
