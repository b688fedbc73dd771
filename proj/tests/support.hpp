#pragma once

// Shared helpers and independent oracles for the test binaries.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "oppair/classify.hpp"
#include "oppair/config.hpp"

namespace oppair::testing {

inline std::vector<classify::GoldenEntry> all_golden() {
  std::vector<classify::GoldenEntry> out;
  for (const auto& [tag, entries] : classify::golden_list()) out.insert(out.end(), entries.begin(), entries.end());
  return out;
}

// Determinant by Laplace expansion along the first rows, memoised over the
// set of columns still available.
inline mpz_class cofactor_determinant(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  std::map<std::uint32_t, mpz_class> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t cols) -> mpz_class {
    if (row == n) return 1;
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    mpz_class sum = 0;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols >> j & 1u)) continue;
      if (a[row][j] != 0) sum += sign * mpz_class(static_cast<long>(a[row][j])) * self(self, row + 1, cols & ~(1u << j));
      sign = -sign;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  return rec(rec, 0, n >= 32 ? ~0u : (1u << n) - 1);
}

struct Inertia {
  std::size_t positive = 0, zero = 0, negative = 0;
};

// Characteristic polynomial by Faddeev-LeVerrier; a symmetric matrix has a
// real-rooted characteristic polynomial, so Descartes' rule counts its
// positive and negative roots exactly.
inline Inertia characteristic_inertia(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  using Mat = std::vector<std::vector<mpq_class>>;
  Mat A(n, std::vector<mpq_class>(n)), M(n, std::vector<mpq_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = static_cast<long>(a[i][j]);
  std::vector<mpq_class> c(n + 1);  // c[k] is the coefficient of x^k
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) next[i][j] += A[i][l] * M[l][j];
        if (i == j) next[i][j] += c[n - k + 1];
      }
    M = std::move(next);
    mpq_class trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += A[i][l] * M[l][i];
    c[n - k] = -trace / static_cast<long>(k);
  }
  Inertia r;
  while (r.zero <= n && c[r.zero] == 0) ++r.zero;
  auto sign_changes = [&](bool negate_odd) {
    std::size_t changes = 0;
    int last = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      int s = sgn(c[k]);
      if (negate_odd && k % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  r.positive = sign_changes(false);
  r.negative = sign_changes(true);
  return r;
}

inline std::vector<std::vector<std::int64_t>> rows_of(const lattice::IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> r(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r[i][j] = m(i, j);
  return r;
}

// Same graph with shuffled component order and fresh ids.
inline Configuration relabelled(const Configuration& c, std::mt19937& rng) {
  std::vector<std::size_t> perm(c.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::string> id(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) id[perm[k]] = "v" + std::to_string(k);
  std::vector<Component> comps;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto& src = c[perm[k]];
    comps.push_back({id[perm[k]], src.self_int, src.mult});
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [a, b] : c.edges()) edges.emplace_back(id[b], id[a]);
  std::shuffle(edges.begin(), edges.end(), rng);
  return Configuration(std::move(comps), edges);
}

}  // namespace oppair::testing
