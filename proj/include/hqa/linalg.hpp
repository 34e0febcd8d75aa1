#ifndef HQA_LINALG_HPP
#define HQA_LINALG_HPP

#include "hqa/scalar.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace hqa {

/// Small dense matrix over a field; used for module actions.
class Matrix {
public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix identity(Field field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::size_t rank() const;
  bool invertible() const { return rows_ == cols_ && rank() == rows_; }
  std::string to_string() const;

private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

/// Sparse vector keyed by an ordered key type; never stores zeros.
template <class Key, class Compare = std::less<Key>>
using SparseVec = std::map<Key, Scalar, Compare>;

/// Adds c*src into dst, dropping cancelled entries.
template <class Key, class Compare>
void axpy(SparseVec<Key, Compare>& dst, const Scalar& c, const SparseVec<Key, Compare>& src) {
  if (c.is_zero())
    return;
  for (const auto& [k, v] : src) {
    auto [it, inserted] = dst.try_emplace(k, v * c);
    if (!inserted) {
      it->second += v * c;
      if (it->second.is_zero())
        dst.erase(it);
    }
  }
}

/// Incremental row echelon form. Every stored row is monic at its pivot,
/// which is its largest key under Compare. Reduction leaves a remainder
/// supported on non-pivot keys only, so remainders are canonical.
template <class Key, class Compare = std::less<Key>>
class SparseEchelon {
public:
  using Vec = SparseVec<Key, Compare>;

  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(const Key& k) const { return rows_.count(k) != 0; }
  const std::map<Key, Vec, Compare>& rows() const { return rows_; }

  /// Reduces v in place against the stored rows.
  void reduce(Vec& v) const {
    if (v.empty())
      return;
    std::optional<Key> cursor;
    while (true) {
      auto it = cursor ? v.lower_bound(*cursor) : v.end();
      if (it == v.begin())
        break;
      --it;
      cursor = it->first;
      auto row = rows_.find(it->first);
      if (row == rows_.end())
        continue;
      const Scalar c = -it->second;
      axpy(v, c, row->second);
    }
  }

  Vec reduced(Vec v) const {
    reduce(v);
    return v;
  }

  bool contains(const Vec& v) const { return reduced(v).empty(); }

  /// Adds v to the span. Returns the pivot key when v was independent.
  std::optional<Key> insert(Vec v) {
    reduce(v);
    if (v.empty())
      return std::nullopt;
    auto last = std::prev(v.end());
    const Key pivot = last->first;
    const Scalar inv = last->second.inv();
    for (auto& [k, c] : v)
      c *= inv;
    rows_.emplace(pivot, std::move(v));
    return pivot;
  }

  /// Fully reduced basis: each row vanishes at every other row's pivot.
  std::vector<Vec> rref_rows() const {
    std::vector<Vec> out;
    SparseEchelon<Key, Compare> done;
    // Ascending pivots: earlier rows are final when later ones reduce by them.
    for (const auto& [pivot, row] : rows_) {
      Vec r = row;
      Key cursor = pivot;
      while (true) {
        auto it = r.lower_bound(cursor);
        if (it == r.begin())
          break;
        --it;
        cursor = it->first;
        auto d = done.rows_.find(cursor);
        if (d == done.rows_.end())
          continue;
        const Scalar c = -it->second;
        axpy(r, c, d->second);
      }
      done.rows_.emplace(pivot, r);
    }
    for (auto& [pivot, row] : done.rows_)
      out.push_back(std::move(row));
    return out;
  }

private:
  std::map<Key, Vec, Compare> rows_;
};

/// Basis of the kernel of the linear map sending unknown j to images[j].
/// Kernel vectors are returned as (unknown index -> coefficient) maps.
template <class Key, class Compare>
std::vector<SparseVec<std::size_t>> kernel_of_columns(const std::vector<SparseVec<Key, Compare>>& images,
                                                      const Field& field) {
  struct Row {
    SparseVec<Key, Compare> image;
    SparseVec<std::size_t> combo;
  };
  std::map<Key, Row, Compare> pivots;
  std::vector<SparseVec<std::size_t>> kernel;
  for (std::size_t j = 0; j < images.size(); ++j) {
    Row r{images[j], {}};
    r.combo.emplace(j, field.one());
    std::optional<Key> cursor;
    while (true) {
      auto it = cursor ? r.image.lower_bound(*cursor) : r.image.end();
      if (it == r.image.begin())
        break;
      --it;
      cursor = it->first;
      auto p = pivots.find(it->first);
      if (p == pivots.end())
        continue;
      const Scalar c = -it->second;
      axpy(r.image, c, p->second.image);
      axpy(r.combo, c, p->second.combo);
    }
    if (r.image.empty()) {
      kernel.push_back(std::move(r.combo));
      continue;
    }
    auto last = std::prev(r.image.end());
    const Key pivot = last->first;
    const Scalar inv = last->second.inv();
    for (auto& [k, c] : r.image)
      c *= inv;
    for (auto& [k, c] : r.combo)
      c *= inv;
    pivots.emplace(pivot, std::move(r));
  }
  return kernel;
}

} // namespace hqa

#endif
