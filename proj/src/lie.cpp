#include "metabelian/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace metabelian {

namespace {

void require_index(int rank, int i) {
  if (i < 1 || i > rank) {
    throw std::invalid_argument("generator index " + std::to_string(i) +
                                " out of range 1.." + std::to_string(rank));
  }
}

}  // namespace

bool is_normal_form(std::span<const int> indices) {
  if (indices.empty()) return false;
  if (indices.size() == 1) return true;
  if (indices[0] <= indices[1]) return false;
  for (std::size_t k = 1; k + 1 < indices.size(); ++k) {
    if (indices[k] > indices[k + 1]) return false;
  }
  return true;
}

LieElement LieElement::generator(int rank, int i) {
  require_index(rank, i);
  return term(rank, LieMonomial{{i}});
}

LieElement LieElement::term(int rank, LieMonomial m, mpz_class c) {
  for (int i : m.indices) require_index(rank, i);
  if (!is_normal_form(m.indices)) {
    throw std::invalid_argument("monomial is not in normal form");
  }
  LieElement e(rank);
  e.insert_term(m, c);
  return e;
}

void LieElement::insert_term(const LieMonomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& other) {
  if (rank_ != other.rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, c] : other.terms_) insert_term(m, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  if (rank_ != other.rank_) throw std::invalid_argument("rank mismatch");
  for (const auto& [m, c] : other.terms_) insert_term(m, -c);
  return *this;
}

LieElement& LieElement::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

LieElement LieElement::operator-() const {
  LieElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

std::string LieElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    mpz_class abs_c = abs(c);
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string body;
    if (m.degree() == 1) {
      body = "x" + std::to_string(m.indices[0]);
    } else {
      body = "[";
      for (std::size_t k = 0; k < m.indices.size(); ++k) {
        if (k > 0) body += ",";
        body += "x" + std::to_string(m.indices[k]);
      }
      body += "]";
    }
    if (abs_c != 1) {
      out += abs_c.get_str() + "*";
    }
    out += body;
  }
  return out;
}

LieElement normalize_left_normed(int rank, std::span<const int> indices) {
  if (indices.empty()) throw std::invalid_argument("empty bracket");
  for (int i : indices) require_index(rank, i);
  if (indices.size() == 1) return LieElement::generator(rank, indices[0]);

  std::vector<int> seq(indices.begin(), indices.end());
  int sign = 1;
  if (seq[0] == seq[1]) return LieElement(rank);
  if (seq[0] < seq[1]) {
    std::swap(seq[0], seq[1]);
    sign = -1;
  }
  // Positions 3..d commute: [u,z,w] = [u,w,z] once deg(u) >= 2, because
  // [u,[z,w]] is a bracket of two elements of degree >= 2.
  std::sort(seq.begin() + 2, seq.end());
  if (seq.size() == 2 || seq[1] <= seq[2]) {
    LieElement e(rank);
    e.insert_term(LieMonomial{std::move(seq)}, sign);
    return e;
  }
  // Position 2 too large: [[a,b],c] = [[a,c],b] - [[b,c],a] with c < b < a,
  // which strictly lowers the entry at position 2; recursion terminates.
  std::vector<int> left{seq[0], seq[2], seq[1]};
  std::vector<int> right{seq[1], seq[2], seq[0]};
  left.insert(left.end(), seq.begin() + 3, seq.end());
  right.insert(right.end(), seq.begin() + 3, seq.end());
  LieElement result = normalize_left_normed(rank, left);
  result -= normalize_left_normed(rank, right);
  if (sign < 0) result = -result;
  return result;
}

LieElement bracket(const LieElement& a, const LieElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  const int rank = a.rank();
  LieElement out(rank);
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.degree() >= 2 && mb.degree() >= 2) continue;  // metabelian law
      mpz_class c = ca * cb;
      if (mb.degree() == 1) {
        std::vector<int> seq = ma.indices;
        seq.push_back(mb.indices[0]);
        out += c * normalize_left_normed(rank, seq);
      } else {
        // [x_i, v] = -[v, x_i] for deg(v) >= 2.
        std::vector<int> seq = mb.indices;
        seq.push_back(ma.indices[0]);
        out -= c * normalize_left_normed(rank, seq);
      }
    }
  }
  return out;
}

namespace {

LieElement derive_generator(int n, int rank, int i) {
  if (i < n) return normalize_left_normed(rank, std::vector<int>{i, n});
  return normalize_left_normed(rank, std::vector<int>{1, 2});
}

LieElement derive_monomial(int n, int rank, const LieMonomial& m) {
  if (m.degree() == 1) return derive_generator(n, rank, m.indices[0]);
  // Leibniz on [prefix, x_last]; a prefix of a normal monomial is normal.
  LieMonomial prefix{std::vector<int>(m.indices.begin(), m.indices.end() - 1)};
  int last = m.indices.back();
  LieElement prefix_elem = LieElement::term(rank, prefix);
  return bracket(derive_monomial(n, rank, prefix), LieElement::generator(rank, last)) +
         bracket(prefix_elem, derive_generator(n, rank, last));
}

}  // namespace

LieElement derivation_dn(int n, const LieElement& a) {
  if (n < 3) throw std::invalid_argument("the derivation is defined for n >= 3");
  if (a.rank() != n) throw std::invalid_argument("element rank mismatch");
  LieElement out(n);
  for (const auto& [m, c] : a.terms()) {
    out += c * derive_monomial(n, n, m);
  }
  return out;
}

std::vector<LieMonomial> graded_basis(int rank, int degree) {
  if (rank < 1) throw std::invalid_argument("rank must be at least 1");
  if (degree < 1) throw std::invalid_argument("degree must be at least 1");
  std::vector<LieMonomial> basis;
  if (degree == 1) {
    for (int i = 1; i <= rank; ++i) basis.push_back(LieMonomial{{i}});
    return basis;
  }
  // Tails i_2 <= i_3 <= ... <= i_d, then heads i_1 > i_2.
  std::vector<int> tail(static_cast<std::size_t>(degree - 1), 0);
  auto emit = [&](auto&& self, std::size_t pos, int low) -> void {
    if (pos == tail.size()) {
      for (int head = tail[0] + 1; head <= rank; ++head) {
        std::vector<int> indices{head};
        indices.insert(indices.end(), tail.begin(), tail.end());
        basis.push_back(LieMonomial{std::move(indices)});
      }
      return;
    }
    for (int v = low; v <= rank; ++v) {
      tail[pos] = v;
      self(self, pos + 1, v);
    }
  };
  emit(emit, 0, 1);
  std::sort(basis.begin(), basis.end());
  return basis;
}

int integer_matrix_rank(const std::vector<std::vector<mpz_class>>& m) {
  if (m.empty() || m.front().empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    if (m[r].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c];
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      mpq_class factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] -= factor * a[rank][c];
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

KernelReport kernel_trivial_up_to(int n, int max_degree) {
  if (n < 3) throw std::invalid_argument("kernel check is defined for n >= 3");
  if (max_degree < 1) throw std::invalid_argument("max_degree must be at least 1");

  KernelReport report;
  report.rank_n = n;
  report.max_degree = max_degree;
  report.trivial = true;

  for (int d = 1; d <= max_degree; ++d) {
    std::vector<LieMonomial> domain = graded_basis(n, d);
    std::vector<LieMonomial> image = graded_basis(n, d + 1);
    std::map<LieMonomial, std::size_t> row_of;
    for (std::size_t r = 0; r < image.size(); ++r) row_of[image[r]] = r;

    std::vector<std::vector<mpz_class>> matrix(
        image.size(), std::vector<mpz_class>(domain.size(), 0));
    for (std::size_t c = 0; c < domain.size(); ++c) {
      LieElement d_of = derivation_dn(n, LieElement::term(n, domain[c]));
      for (const auto& [m, coeff] : d_of.terms()) {
        auto it = row_of.find(m);
        if (it == row_of.end()) {
          throw std::logic_error("derivation did not raise the degree by one");
        }
        matrix[it->second][c] = coeff;
      }
    }

    KernelReport::DegreeRow row;
    row.degree = d;
    row.dim = static_cast<int>(domain.size());
    row.image_dim = static_cast<int>(image.size());
    row.rank = integer_matrix_rank(matrix);
    if (row.rank != row.dim) report.trivial = false;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace metabelian
