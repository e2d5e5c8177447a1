#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fintop {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse integer matrix given as (row, col, value) triplets. Repeated
/// coordinates are summed.
struct IntMatrix {
  struct Entry {
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t value = 0;
  };

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Entry> entries;

  void add(std::size_t row, std::size_t col, std::int64_t value);
  /// Dense copy, mostly for tests and small matrices.
  std::vector<std::vector<std::int64_t>> dense() const;
  static IntMatrix from_dense(const std::vector<std::vector<std::int64_t>>& rows);
};

/// Diagonal of the Smith normal form: `unit_count` ones followed by
/// `torsion` (entries > 1, each dividing the next). rank = unit_count + |torsion|.
struct SmithForm {
  std::size_t rank = 0;
  std::size_t unit_count = 0;
  std::vector<BigInt> torsion;
  /// True if 64-bit arithmetic overflowed and the computation was redone
  /// with arbitrary precision.
  bool promoted = false;
};

/// Exact integer Smith normal form. Unit pivots are eliminated sparsely with
/// a minimal-fill choice; whatever remains (or the whole matrix when it has
/// fewer than `dense_threshold` columns) is reduced densely.
SmithForm smith_normal_form(const IntMatrix& matrix, std::size_t dense_threshold = 200);

/// Rank over the rationals, which equals the rank of the Smith form.
std::size_t integer_rank(const IntMatrix& matrix);

}  // namespace fintop
