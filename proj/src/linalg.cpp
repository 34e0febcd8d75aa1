#include "hqa/linalg.hpp"

#include <sstream>

namespace hqa {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = field.one();
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero())
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t Matrix::rank() const {
  std::vector<std::vector<Scalar>> m(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    m[i].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t piv = r;
    while (piv < rows_ && m[piv][col].is_zero())
      ++piv;
    if (piv == rows_)
      continue;
    std::swap(m[piv], m[r]);
    const Scalar inv = m[r][col].inv();
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || m[i][col].is_zero())
        continue;
      const Scalar f = m[i][col] * inv;
      for (std::size_t j = col; j < cols_; ++j)
        m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

} // namespace hqa
