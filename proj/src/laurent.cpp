#include "metabelian/laurent.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace metabelian {

namespace {

void require_index(int rank, int i) {
  if (i < 1 || i > rank) {
    throw std::invalid_argument("generator index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(rank));
  }
}

void require_same_rank(int a, int b) {
  if (a != b) {
    throw std::invalid_argument("rank mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
  }
}

mpz_class binomial(int e, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(e),
               static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Monomial Monomial::unit(int rank, int i) {
  require_index(rank, i);
  Monomial m(rank);
  m.exp[static_cast<std::size_t>(i - 1)] = 1;
  return m;
}

bool Monomial::is_zero() const {
  return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator+(const Monomial& other) const {
  require_same_rank(rank(), other.rank());
  Monomial r = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += other.exp[i];
  return r;
}

Monomial Monomial::operator-(const Monomial& other) const {
  require_same_rank(rank(), other.rank());
  Monomial r = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= other.exp[i];
  return r;
}

Monomial Monomial::operator-() const {
  Monomial r = *this;
  for (int& e : r.exp) e = -e;
  return r;
}

LaurentPoly LaurentPoly::constant(int rank, mpz_class c) {
  LaurentPoly p(rank);
  p.insert_term(Monomial(rank), c);
  return p;
}

LaurentPoly LaurentPoly::variable(int rank, int i) {
  return monomial(Monomial::unit(rank, i));
}

LaurentPoly LaurentPoly::monomial(Monomial m, mpz_class c) {
  LaurentPoly p(m.rank());
  p.insert_term(m, c);
  return p;
}

mpz_class LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPoly::insert_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_rank(rank_, other.rank_);
  for (const auto& [m, c] : other.terms_) insert_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_rank(rank_, other.rank_);
  for (const auto& [m, c] : other.terms_) insert_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_rank(a.rank_, b.rank_);
  LaurentPoly out(a.rank_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.insert_term(ma + mb, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  require_same_rank(rank_, m.rank());
  LaurentPoly r(rank_);
  for (const auto& [mono, c] : terms_) {
    r.terms_.emplace_hint(r.terms_.end(), mono + m, c);
  }
  return r;
}

LaurentPoly LaurentPoly::substitute_one(int i) const {
  require_index(rank_, i);
  LaurentPoly r(rank_);
  for (const auto& [mono, c] : terms_) {
    Monomial m = mono;
    m.exp[static_cast<std::size_t>(i - 1)] = 0;
    r.insert_term(m, c);
  }
  return r;
}

std::optional<LaurentPoly> LaurentPoly::divides_one_minus(int i) const {
  require_index(rank_, i);
  const std::size_t vi = static_cast<std::size_t>(i - 1);
  if (terms_.empty()) return LaurentPoly(rank_);

  int min_exp = 0;
  for (const auto& [mono, c] : terms_) min_exp = std::min(min_exp, mono.exp[vi]);

  // Group the cleared polynomial by the monomial in the other variables;
  // per group, p = (1 - s_i) q means q_k = sum_{j<=k} p_j and the full sum
  // vanishes.
  std::map<Monomial, std::map<int, mpz_class>> by_rest;
  for (const auto& [mono, c] : terms_) {
    Monomial rest = mono;
    int k = rest.exp[vi] - min_exp;
    rest.exp[vi] = 0;
    by_rest[rest][k] = c;
  }

  LaurentPoly quotient(rank_);
  for (const auto& [rest, coeffs] : by_rest) {
    mpz_class prefix = 0;
    int prev_k = 0;
    for (const auto& [k, c] : coeffs) {
      // Between stored coefficients the prefix sum is constant; emit the
      // pending run of quotient terms if it is nonzero.
      if (prefix != 0) {
        for (int t = prev_k; t < k; ++t) {
          Monomial m = rest;
          m.exp[vi] = t + min_exp;
          quotient.insert_term(m, prefix);
        }
      }
      prefix += c;
      prev_k = k;
    }
    if (prefix != 0) return std::nullopt;  // remainder at s_i = 1
  }
  return quotient;
}

std::optional<int> LaurentPoly::vanishing_order_at_ones() const {
  if (terms_.empty()) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(rank_);

  // Clear negative exponents by a monomial unit; the unit does not vanish
  // at (1,...,1), so the order is unchanged.
  std::vector<int> shift(n, 0);
  for (const auto& [mono, c] : terms_) {
    for (std::size_t v = 0; v < n; ++v) shift[v] = std::min(shift[v], mono.exp[v]);
  }

  std::vector<int> max_exp(n, 0);
  int max_total = 0;
  for (const auto& [mono, c] : terms_) {
    int total = 0;
    for (std::size_t v = 0; v < n; ++v) {
      int e = mono.exp[v] - shift[v];
      max_exp[v] = std::max(max_exp[v], e);
      total += e;
    }
    max_total = std::max(max_total, total);
  }

  // Remaining capacity of variables v..n-1, for pruning.
  std::vector<long> suffix_cap(n + 1, 0);
  for (std::size_t v = n; v-- > 0;) suffix_cap[v] = suffix_cap[v + 1] + max_exp[v];

  // Coefficient of u^k in p(1+u) is sum over terms of c * prod binom(e_v, k_v).
  std::vector<int> k(n, 0);
  std::function<bool(std::size_t, int)> any_nonzero = [&](std::size_t v, int rem) -> bool {
    if (rem > suffix_cap[v]) return false;
    if (v == n) {
      mpz_class coeff = 0;
      for (const auto& [mono, c] : terms_) {
        mpz_class prod = c;
        for (std::size_t w = 0; w < n && prod != 0; ++w) {
          int e = mono.exp[w] - shift[w];
          if (k[w] > e) {
            prod = 0;
          } else if (k[w] > 0) {
            prod *= binomial(e, k[w]);
          }
        }
        coeff += prod;
      }
      return coeff != 0;
    }
    int cap = std::min<long>(max_exp[v], rem);
    for (int kv = 0; kv <= cap; ++kv) {
      k[v] = kv;
      if (any_nonzero(v + 1, rem - kv)) return true;
    }
    k[v] = 0;
    return false;
  };

  for (int d = 0; d <= max_total; ++d) {
    if (any_nonzero(0, d)) return d;
  }
  return std::nullopt;  // unreachable: a nonzero polynomial has finite order
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    mpz_class abs_c = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    std::string vars;
    for (int v = 0; v < rank_; ++v) {
      int e = mono.exp[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += "s" + std::to_string(v + 1);
      if (e != 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out << abs_c.get_str();
    } else if (abs_c == 1) {
      out << vars;
    } else {
      out << abs_c.get_str() << "*" << vars;
    }
  }
  return out.str();
}

std::optional<int> unit_monomial_order(const Monomial& j) {
  if (j.is_zero()) return std::nullopt;
  return 1;
}

LaurentPoly one_minus_s(int rank, int i) {
  return LaurentPoly::constant(rank, 1) - LaurentPoly::variable(rank, i);
}

}  // namespace metabelian
