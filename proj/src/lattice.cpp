#include "oppair/lattice.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace oppair::lattice {

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {
  if (n == 0) throw std::invalid_argument("IntMatrix: dimension must be at least 1");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : IntMatrix(from_rows(std::vector<std::vector<std::int64_t>>(rows.begin(), rows.end()))) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size())
      throw std::invalid_argument("IntMatrix: row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < rows.size(); ++j) m.a_[i * m.n_ + j] = rows[i][j];
  }
  for (std::size_t i = 0; i < m.n_; ++i)
    for (std::size_t j = i + 1; j < m.n_; ++j)
      if (m(i, j) != m(j, i))
        throw std::invalid_argument("IntMatrix: not symmetric at (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ")");
  return m;
}

void IntMatrix::set(std::size_t i, std::size_t j, std::int64_t value) {
  a_[i * n_ + j] = value;
  a_[j * n_ + i] = value;
}

IntMatrix IntMatrix::permuted(std::span<const std::size_t> p) const {
  if (p.size() != n_) throw std::invalid_argument("IntMatrix::permuted: size mismatch");
  IntMatrix r(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.a_[i * n_ + j] = (*this)(p[i], p[j]);
  return r;
}

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));

  // Bareiss: every division below is exact.
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Signature signature(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));

  auto sym_swap = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };

  Signature s;
  std::size_t k = 0;
  while (k < n) {
    std::size_t p = k;
    while (p < n && a[p][p] == 0) ++p;
    if (p < n) {
      sym_swap(k, p);
      const mpq_class d = a[k][k];
      (d > 0 ? s.positive : s.negative)++;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k] == 0) continue;
        const mpq_class f = a[i][k] / d;
        for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
      }
      ++k;
      continue;
    }

    // Zero diagonal on the trailing block: pair off a nonzero off-diagonal
    // entry as a hyperbolic 2x2 block.
    std::size_t bp = n, bq = n;
    for (std::size_t i = k; i < n && bp == n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a[i][j] != 0) {
          bp = i;
          bq = j;
          break;
        }
    if (bp == n) {
      s.zero += n - k;
      break;
    }
    sym_swap(k, bp);
    if (bq == k) bq = bp;
    sym_swap(k + 1, bq);
    const mpq_class b = a[k][k + 1];
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = k + 2; j < n; ++j)
        a[i][j] -= (a[i][k] * a[k + 1][j] + a[i][k + 1] * a[k][j]) / b;
    s.positive++;
    s.negative++;
    k += 2;
  }
  return s;
}

std::size_t rank(const IntMatrix& m) {
  const Signature s = signature(m);
  return s.positive + s.negative;
}

bool is_unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

std::vector<Integer> apply(const IntMatrix& m, const ClassVector& v) {
  if (v.size() != m.size())
    throw std::invalid_argument("class vector of length " + std::to_string(v.size()) +
                                " paired with matrix of dimension " + std::to_string(m.size()));
  std::vector<Integer> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      r[i] += Integer(static_cast<long>(m(i, j))) * static_cast<long>(v[j]);
  return r;
}

Integer pairing(const IntMatrix& m, const ClassVector& a, const ClassVector& b) {
  const auto mb = apply(m, b);
  if (a.size() != m.size()) throw std::invalid_argument("pairing: dimension mismatch");
  Integer r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += mb[i] * static_cast<long>(a[i]);
  return r;
}

bool radical_contains(const IntMatrix& m, const ClassVector& v) {
  for (const auto& x : apply(m, v))
    if (x != 0) return false;
  return true;
}

}  // namespace oppair::lattice
