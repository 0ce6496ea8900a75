#include <algorithm>
#include <bit>
#include <exception>
#include <unordered_map>

#include "edloci/errors.hpp"
#include "edloci/ideals.hpp"

namespace edloci {

PolyMatrix::PolyMatrix(VarSet vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(vars_)) {}

PolyMatrix::PolyMatrix(VarSet vars, std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : vars_(std::move(vars)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw UsageError("matrix entry count does not match shape");
  for (const auto& e : entries_) {
    if (!(e.vars() == vars_)) throw UsageError("matrix entry outside the matrix ring");
  }
}

void PolyMatrix::set(std::size_t r, std::size_t c, Polynomial p) {
  if (r >= rows_ || c >= cols_) throw UsageError("matrix index out of range");
  if (!(p.vars() == vars_)) throw UsageError("matrix entry outside the matrix ring");
  entries_[r * cols_ + c] = std::move(p);
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix t(vars_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = at(r, c);
  }
  return t;
}

PolyMatrix PolyMatrix::stacked(const PolyMatrix& below) const {
  if (below.cols_ != cols_ && rows_ != 0 && below.rows_ != 0) throw UsageError("stacking matrices of different widths");
  if (!(below.vars_ == vars_)) throw UsageError("stacking matrices over different rings");
  std::size_t cols = rows_ == 0 ? below.cols_ : cols_;
  std::vector<Polynomial> all = entries_;
  all.insert(all.end(), below.entries_.begin(), below.entries_.end());
  return PolyMatrix(vars_, rows_ + below.rows_, cols, std::move(all));
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Determinants of rows[level..] against every column subset of matching
// size, filled bottom-up; memo maps a column bitmask to its minor.
class MinorTable {
 public:
  MinorTable(const PolyMatrix& m, std::vector<std::size_t> rows) : m_(m), rows_(std::move(rows)) {}

  const Polynomial& get(std::uint32_t cols) { return det(0, cols); }

 private:
  const Polynomial& det(std::size_t level, std::uint32_t cols) {
    auto& memo = memo_[level];
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t r = rows_[level];
    Polynomial acc(m_.vars());
    int sign = 1;
    for (std::uint32_t rest = cols; rest != 0; rest &= rest - 1) {
      const auto c = static_cast<std::size_t>(std::countr_zero(rest));
      const Polynomial& entry = m_.at(r, c);
      if (!entry.is_zero()) {
        if (level + 1 == rows_.size()) {
          acc = sign > 0 ? acc + entry : acc - entry;
        } else {
          const Polynomial& sub = det(level + 1, cols & ~(1U << c));
          if (!sub.is_zero()) acc = sign > 0 ? acc + entry * sub : acc - entry * sub;
        }
      }
      sign = -sign;
    }
    return memo.emplace(cols, std::move(acc)).first->second;
  }

  const PolyMatrix& m_;
  std::vector<std::size_t> rows_;
  std::unordered_map<std::uint32_t, Polynomial> memo_[kMaxVars];
};

}  // namespace

std::vector<Polynomial> minors(const PolyMatrix& m, std::size_t k, Execution exec) {
  if (k == 0 || k > std::min(m.rows(), m.cols())) throw UsageError("minor size out of range");
  if (m.cols() > 32 || k > kMaxVars) throw UsageError("matrix too large for minor enumeration");
  auto row_sets = combinations(m.rows(), k);
  auto col_sets = combinations(m.cols(), k);
  std::vector<std::vector<Polynomial>> per_row(row_sets.size());
  std::exception_ptr error;
  const auto n = static_cast<long>(row_sets.size());
#pragma omp parallel for schedule(dynamic, 1) if (exec == Execution::kParallel)
  for (long i = 0; i < n; ++i) {
    try {
      MinorTable table(m, row_sets[static_cast<std::size_t>(i)]);
      auto& out = per_row[static_cast<std::size_t>(i)];
      for (const auto& cs : col_sets) {
        std::uint32_t mask = 0;
        for (auto c : cs) mask |= 1U << c;
        const Polynomial& d = table.get(mask);
        if (!d.is_zero()) out.push_back(d);
      }
    } catch (...) {
#pragma omp critical(edloci_minor_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<Polynomial> all;
  for (auto& v : per_row) {
    for (auto& p : v) all.push_back(std::move(p));
  }
  return all;
}

Polynomial determinant(const PolyMatrix& m, std::size_t row) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  if (m.rows() == 0) return Polynomial::constant(m.vars(), 1);
  if (row >= m.rows()) throw UsageError("expansion row out of range");
  if (m.rows() == 1) return m.at(0, 0);
  Polynomial acc(m.vars());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (m.at(row, c).is_zero()) continue;
    std::vector<Polynomial> sub;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      for (std::size_t cc = 0; cc < m.cols(); ++cc) {
        if (cc != c) sub.push_back(m.at(r, cc));
      }
    }
    PolyMatrix minor(m.vars(), m.rows() - 1, m.cols() - 1, std::move(sub));
    Polynomial term = m.at(row, c) * determinant(minor, 0);
    acc = ((row + c) % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

PolyMatrix jacobian(const Ideal& ideal) {
  const auto& gens = ideal.generators();
  const std::size_t n = ideal.vars().size();
  PolyMatrix j(ideal.vars(), gens.size(), n);
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) j.set(r, c, gens[r].differentiate(c));
  }
  return j;
}

}  // namespace edloci
