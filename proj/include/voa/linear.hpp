#pragma once

// Exact sparse linear algebra over Q: linear combinations over an ordered key
// universe, reduced echelon bases with provenance certificates, and small
// dense matrices for Gram and action blocks.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "voa/errors.hpp"
#include "voa/scalar.hpp"

namespace voa {

/// Finite linear combination of keys with nonzero rational coefficients.
template <class K>
class LinearCombination {
 public:
  using Map = std::map<K, Scalar>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(const K& key, const Scalar& coeff = 1) {
    if (coeff != 0) terms_.emplace(key, coeff);
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  void add(const K& key, const Scalar& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void add_scaled(const LinearCombination& other, const Scalar& coeff) {
    if (coeff == 0) return;
    for (const auto& [k, c] : other.terms_) add(k, c * coeff);
  }

  Scalar coefficient(const K& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  bool contains(const K& key) const { return terms_.count(key) != 0; }

  /// Largest key in the key order; the combination must be nonzero.
  const K& leading_key() const { return terms_.rbegin()->first; }
  const Scalar& leading_coefficient() const { return terms_.rbegin()->second; }

  LinearCombination& operator+=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  LinearCombination& operator-=(const LinearCombination& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  LinearCombination& operator*=(const Scalar& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& kv : terms_) kv.second *= s;
    }
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(LinearCombination a, const Scalar& s) { return a *= s; }
  friend LinearCombination operator*(const Scalar& s, LinearCombination a) { return a *= s; }
  friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }

  bool operator==(const LinearCombination& o) const { return terms_ == o.terms_; }
  bool operator!=(const LinearCombination& o) const { return !(*this == o); }

 private:
  Map terms_;
};

/// Reduced echelon basis of a span. Row pivots are the leading (largest) keys;
/// every pivot is absent from every other row and each row is normalized to
/// leading coefficient 1. Rows are kept sorted by pivot, largest first, which
/// makes the basis a canonical function of the span.
template <class K>
class SubspaceBasis {
 public:
  struct Row {
    LinearCombination<K> vector;
    /// Combination of the inserted inputs (by insertion index) equal to `vector`.
    LinearCombination<std::size_t> provenance;
  };

  explicit SubspaceBasis(bool track_provenance = true) : track_(track_provenance) {}

  static SubspaceBasis reduce(const std::vector<LinearCombination<K>>& inputs, bool track = true) {
    SubspaceBasis basis(track);
    for (const auto& v : inputs) basis.insert(v);
    return basis;
  }

  /// Inserts the next input; returns true when the rank grew.
  bool insert(const LinearCombination<K>& input) {
    const std::size_t index = inputs_++;
    LinearCombination<K> v = input;
    LinearCombination<std::size_t> prov;
    if (track_) prov.add(index, 1);
    eliminate(v, track_ ? &prov : nullptr);
    if (v.is_zero()) return false;

    const Scalar inv = 1 / v.leading_coefficient();
    v *= inv;
    prov *= inv;
    const K pivot = v.leading_key();
    for (auto& row : rows_) {
      const Scalar c = row.vector.coefficient(pivot);
      if (c == 0) continue;
      row.vector.add_scaled(v, -c);
      if (track_) row.provenance.add_scaled(prov, -c);
    }
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                                [](const Row& r, const K& p) { return p < r.vector.leading_key(); });
    rows_.insert(pos, Row{std::move(v), std::move(prov)});
    pivots_.emplace(pivot, 0);
    reindex();
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t input_count() const { return inputs_; }
  const std::vector<Row>& rows() const { return rows_; }
  bool tracks_provenance() const { return track_; }

  std::vector<LinearCombination<K>> vectors() const {
    std::vector<LinearCombination<K>> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.vector);
    return out;
  }

  std::vector<K> pivots() const {
    std::vector<K> out;
    for (const auto& r : rows_) out.push_back(r.vector.leading_key());
    return out;
  }

  /// Coefficients c with target = sum_i c_i rows()[i], or nullopt if the
  /// target is not in the span.
  std::optional<std::vector<Scalar>> membership(const LinearCombination<K>& target) const {
    std::vector<Scalar> coeffs(rows_.size());
    LinearCombination<K> rest = target;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      coeffs[i] = target.coefficient(rows_[i].vector.leading_key());
      if (coeffs[i] != 0) rest.add_scaled(rows_[i].vector, -coeffs[i]);
    }
    if (!rest.is_zero()) return std::nullopt;
    return coeffs;
  }

  /// Combination of the original inputs equal to the target.
  std::optional<LinearCombination<std::size_t>> input_certificate(const LinearCombination<K>& target) const {
    if (!track_) return std::nullopt;
    auto coeffs = membership(target);
    if (!coeffs) return std::nullopt;
    LinearCombination<std::size_t> cert;
    for (std::size_t i = 0; i < rows_.size(); ++i) cert.add_scaled(rows_[i].provenance, (*coeffs)[i]);
    return cert;
  }

  bool contains(const LinearCombination<K>& target) const { return membership(target).has_value(); }

  /// Re-evaluates every row provenance against the inputs it was built from.
  bool verify_certificates(const std::vector<LinearCombination<K>>& inputs) const {
    if (!track_) return false;
    for (const auto& row : rows_) {
      LinearCombination<K> sum;
      for (const auto& [i, c] : row.provenance) sum.add_scaled(inputs.at(i), c);
      if (sum != row.vector) return false;
    }
    return true;
  }

  /// Rows whose pivot satisfies the predicate. With pivots ordered by weight
  /// first, selecting pivots of weight <= D gives span ∩ (weight <= D).
  template <class Pred>
  std::vector<LinearCombination<K>> rows_with_pivot(Pred pred) const {
    std::vector<LinearCombination<K>> out;
    for (const auto& r : rows_)
      if (pred(r.vector.leading_key())) out.push_back(r.vector);
    return out;
  }

  bool operator==(const SubspaceBasis& o) const {
    if (rows_.size() != o.rows_.size()) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      if (rows_[i].vector != o.rows_[i].vector) return false;
    return true;
  }

 private:
  void eliminate(LinearCombination<K>& v, LinearCombination<std::size_t>* prov) const {
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [k, c] : v) {
      auto it = pivots_.find(k);
      if (it != pivots_.end()) hits.emplace_back(it->second, c);
    }
    for (const auto& [i, c] : hits) {
      v.add_scaled(rows_[i].vector, -c);
      if (prov) prov->add_scaled(rows_[i].provenance, -c);
    }
  }

  void reindex() {
    for (std::size_t i = 0; i < rows_.size(); ++i) pivots_[rows_[i].vector.leading_key()] = i;
  }

  bool track_;
  std::size_t inputs_ = 0;
  std::vector<Row> rows_;
  std::map<K, std::size_t> pivots_;
};

/// Kernel of the matrix whose rows are `rows` and whose columns are indexed
/// by `columns`: all x with sum_c row[c] x[c] = 0 for every row. Keys of a row
/// outside `columns` are treated as additional columns.
template <class K>
SubspaceBasis<K> kernel(const std::vector<LinearCombination<K>>& rows, const std::vector<K>& columns) {
  SubspaceBasis<K> echelon = SubspaceBasis<K>::reduce(rows, false);
  std::vector<K> all = columns;
  for (const auto& r : rows)
    for (const auto& [k, c] : r) all.push_back(k);
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::map<K, bool> is_pivot;
  for (const auto& p : echelon.pivots()) is_pivot[p] = true;

  SubspaceBasis<K> out(false);
  for (const auto& col : all) {
    if (is_pivot.count(col)) continue;
    LinearCombination<K> x(col, 1);
    for (const auto& row : echelon.rows()) {
      const Scalar c = row.vector.coefficient(col);
      if (c != 0) x.add(row.vector.leading_key(), -c);
    }
    out.insert(x);
  }
  return out;
}

/// Dense exact matrix, used for Gram blocks and action matrices on small
/// graded pieces only.
class Matrix {
 public:
  static constexpr std::size_t kMaxDenseColumns = 10000;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Scalar& s) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  bool is_zero() const;
  Scalar trace() const;
  std::size_t rank() const;
  Scalar determinant() const;
  /// Inverse of a square matrix; InvalidSpec when singular.
  Matrix inverse() const;
  /// Basis of {x : M x = 0}, each vector of length cols().
  std::vector<std::vector<Scalar>> kernel() const;
  /// Row-major flattening as a sparse combination over entry indices.
  LinearCombination<std::size_t> flatten(std::size_t offset = 0) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace voa
