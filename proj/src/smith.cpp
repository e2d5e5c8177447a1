#include "fintop/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fintop/errors.hpp"

namespace fintop {

void IntMatrix::add(std::size_t row, std::size_t col, std::int64_t value) {
  if (row >= rows || col >= cols) throw InvalidArgument("matrix entry out of range");
  entries.push_back({row, col, value});
}

std::vector<std::vector<std::int64_t>> IntMatrix::dense() const {
  std::vector<std::vector<std::int64_t>> out(rows, std::vector<std::int64_t>(cols, 0));
  for (const auto& e : entries) out[e.row][e.col] += e.value;
  return out;
}

IntMatrix IntMatrix::from_dense(const std::vector<std::vector<std::int64_t>>& rows) {
  IntMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols) throw InvalidArgument("ragged dense matrix");
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (rows[i][j] != 0) m.add(i, j, rows[i][j]);
    }
  }
  return m;
}

namespace {

struct Overflow {};

std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t product = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(f, b, &product) || __builtin_sub_overflow(a, product, &out)) throw Overflow{};
  return out;
}

BigInt sub_mul(const BigInt& a, const BigInt& f, const BigInt& b) { return a - f * b; }

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow{};
  return out;
}

BigInt add(const BigInt& a, const BigInt& b) { return a + b; }

std::int64_t magnitude(std::int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return a < 0 ? -a : a;
}

BigInt magnitude(const BigInt& a) { return boost::multiprecision::abs(a); }

template <typename T>
bool is_unit(const T& v) {
  return v == 1 || v == -1;
}

template <typename T>
class Reducer {
 public:
  Reducer(const IntMatrix& m, std::size_t dense_threshold) : dense_threshold_(dense_threshold) {
    rows_.resize(m.rows);
    cols_.resize(m.cols);
    for (const auto& e : m.entries) {
      auto& slot = rows_[e.row][e.col];
      slot = add(slot, T(e.value));
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      for (auto it = rows_[i].begin(); it != rows_[i].end();) {
        if (it->second == 0) {
          it = rows_[i].erase(it);
        } else {
          cols_[it->first].insert(i);
          ++it;
        }
      }
      if (!rows_[i].empty()) by_size_.insert({rows_[i].size(), i});
    }
  }

  void run(std::vector<T>& diagonal) {
    if (cols_.size() >= dense_threshold_) sparse_phase(diagonal);
    dense_phase(diagonal);
  }

 private:
  void set_entry(std::size_t i, std::size_t j, T value) {
    auto& row = rows_[i];
    auto it = row.find(j);
    by_size_.erase({row.size(), i});
    if (value == 0) {
      if (it != row.end()) {
        row.erase(it);
        cols_[j].erase(i);
      }
    } else if (it == row.end()) {
      row.emplace(j, std::move(value));
      cols_[j].insert(i);
    } else {
      it->second = std::move(value);
    }
    if (!row.empty()) by_size_.insert({row.size(), i});
  }

  void sparse_phase(std::vector<T>& diagonal) {
    while (true) {
      std::size_t p = SIZE_MAX;
      std::size_t q = SIZE_MAX;
      for (const auto& [size, i] : by_size_) {
        std::size_t best_fill = SIZE_MAX;
        for (const auto& [j, v] : rows_[i]) {
          if (is_unit(v) && cols_[j].size() < best_fill) {
            best_fill = cols_[j].size();
            q = j;
          }
        }
        if (q != SIZE_MAX) {
          p = i;
          break;
        }
      }
      if (p == SIZE_MAX) return;

      const T u = rows_[p].at(q);
      const std::map<std::size_t, T> pivot_row = rows_[p];
      std::vector<std::size_t> targets(cols_[q].begin(), cols_[q].end());
      for (auto i : targets) {
        if (i == p) continue;
        const T f = rows_[i].at(q) * u;
        for (const auto& [j, v] : pivot_row) {
          auto it = rows_[i].find(j);
          T current = it == rows_[i].end() ? T(0) : it->second;
          set_entry(i, j, sub_mul(current, f, v));
        }
      }
      // Column operations clear the rest of the pivot row without touching
      // other rows, so the pivot row and column can simply be dropped.
      by_size_.erase({rows_[p].size(), p});
      for (const auto& [j, v] : pivot_row) cols_[j].erase(p);
      rows_[p].clear();
      diagonal.push_back(T(1));
    }
  }

  void dense_phase(std::vector<T>& diagonal) {
    std::vector<std::size_t> live_rows;
    std::vector<std::size_t> live_cols;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (!rows_[i].empty()) live_rows.push_back(i);
    }
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (!cols_[j].empty()) live_cols.push_back(j);
    }
    const std::size_t m = live_rows.size();
    const std::size_t n = live_cols.size();
    if (m == 0 || n == 0) return;
    std::map<std::size_t, std::size_t> col_pos;
    for (std::size_t k = 0; k < n; ++k) col_pos[live_cols[k]] = k;
    std::vector<std::vector<T>> a(m, std::vector<T>(n, T(0)));
    for (std::size_t k = 0; k < m; ++k) {
      for (const auto& [j, v] : rows_[live_rows[k]]) a[k][col_pos[j]] = v;
    }

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      if (!move_smallest_to(a, t)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] == 0) continue;
          T f = a[i][t] / a[t][t];
          for (std::size_t j = t; j < n; ++j) a[i][j] = sub_mul(a[i][j], f, a[t][j]);
          if (a[i][t] != 0) {
            std::swap(a[i], a[t]);
            clean = false;
          }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] == 0) continue;
          T f = a[t][j] / a[t][t];
          for (std::size_t i = t; i < m; ++i) a[i][j] = sub_mul(a[i][j], f, a[i][t]);
          if (a[t][j] != 0) {
            for (std::size_t i = t; i < m; ++i) std::swap(a[i][j], a[i][t]);
            clean = false;
          }
        }
        if (!clean) continue;
        bool divides = true;
        for (std::size_t i = t + 1; i < m && divides; ++i) {
          for (std::size_t j = t + 1; j < n; ++j) {
            if (a[i][j] % a[t][t] != 0) {
              for (std::size_t k = t; k < n; ++k) a[t][k] = add(a[t][k], a[i][k]);
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      diagonal.push_back(magnitude(a[t][t]));
    }
  }

  static bool move_smallest_to(std::vector<std::vector<T>>& a, std::size_t t) {
    std::size_t bi = SIZE_MAX;
    std::size_t bj = SIZE_MAX;
    T best(0);
    for (std::size_t i = t; i < a.size(); ++i) {
      for (std::size_t j = t; j < a[i].size(); ++j) {
        if (a[i][j] == 0) continue;
        T mag = magnitude(a[i][j]);
        if (bi == SIZE_MAX || mag < best) {
          best = mag;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == SIZE_MAX) return false;
    std::swap(a[bi], a[t]);
    for (auto& row : a) std::swap(row[bj], row[t]);
    return true;
  }

  std::size_t dense_threshold_;
  std::vector<std::map<std::size_t, T>> rows_;
  std::vector<std::set<std::size_t>> cols_;
  std::set<std::pair<std::size_t, std::size_t>> by_size_;
};

template <typename T>
SmithForm finish(std::vector<T> diagonal) {
  SmithForm out;
  std::vector<BigInt> big;
  for (const auto& d : diagonal) big.emplace_back(d);
  std::sort(big.begin(), big.end());
  out.rank = big.size();
  for (auto& d : big) {
    if (d == 1) {
      ++out.unit_count;
    } else {
      out.torsion.push_back(std::move(d));
    }
  }
  return out;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& matrix, std::size_t dense_threshold) {
  try {
    std::vector<std::int64_t> diagonal;
    Reducer<std::int64_t>(matrix, dense_threshold).run(diagonal);
    return finish(std::move(diagonal));
  } catch (const Overflow&) {
    std::vector<BigInt> diagonal;
    Reducer<BigInt>(matrix, dense_threshold).run(diagonal);
    auto out = finish(std::move(diagonal));
    out.promoted = true;
    return out;
  }
}

std::size_t integer_rank(const IntMatrix& matrix) { return smith_normal_form(matrix).rank; }

}  // namespace fintop
