#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace oppair::lattice {

using Integer = mpz_class;

// Symmetric integer matrix. Entries are intersection numbers, which stay
// tiny, so they are stored as int64 and promoted to Integer for arithmetic.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const { return n_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  // Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, std::int64_t value);

  // Simultaneous row/column permutation: result(i, j) = this(p[i], p[j]).
  IntMatrix permuted(std::span<const std::size_t> p) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t n_;
  std::vector<std::int64_t> a_;
};

using ClassVector = std::vector<std::int64_t>;

struct Signature {
  std::size_t positive = 0;
  std::size_t zero = 0;
  std::size_t negative = 0;
  bool operator==(const Signature&) const = default;
};

Integer determinant(const IntMatrix& m);
Signature signature(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);

std::vector<Integer> apply(const IntMatrix& m, const ClassVector& v);
Integer pairing(const IntMatrix& m, const ClassVector& a, const ClassVector& b);
bool radical_contains(const IntMatrix& m, const ClassVector& v);

}  // namespace oppair::lattice
