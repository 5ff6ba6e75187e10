#include "covlab/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace covlab::linalg {

Scalar& Scalar::operator+=(const Scalar& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  mpq_class norm = b.re * b.re + b.im * b.im;
  if (norm == 0) throw std::domain_error("division by zero");
  Scalar num = a * b.conj();
  return {num.re / norm, num.im / norm};
}

std::string Scalar::to_string() const {
  if (im == 0) return re.get_str();
  std::string imag;
  if (im == 1) imag = "i";
  else if (im == -1) imag = "-i";
  else imag = im.get_str() + "i";
  if (re == 0) return imag;
  return re.get_str() + (im > 0 ? "+" : "") + imag;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

Matrix Matrix::identity(int n) { return scalar(n, 1); }

Matrix Matrix::scalar(int n, const Scalar& s) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) m.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) m.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += x * b.at(k, j);
    }
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.a_) x = s * x;
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : a_)
    if (!x.is_real()) return false;
  return true;
}

Matrix Matrix::conj() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = x.conj();
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::pow(int n) const {
  Matrix r = identity(rows_);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

Matrix Matrix::block(int r0, int c0, int rows, int cols) const {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = at(r0 + i, c0 + j);
  return m;
}

namespace {

// In-place reduced row echelon form; returns pivot columns and accumulates
// the determinant factor of the row operations for square inputs.
std::vector<int> rref(Matrix& m, Scalar* det = nullptr) {
  std::vector<int> pivots;
  Scalar d = 1;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
      d = -d;
    }
    Scalar piv = m.at(row, col);
    d = d * piv;
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) / piv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Scalar f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  if (det) *det = static_cast<int>(pivots.size()) == m.rows() ? d : Scalar(0);
  return pivots;
}

}  // namespace

Scalar Matrix::det() const {
  if (!is_square()) throw std::invalid_argument("det of non-square matrix");
  if (rows_ == 0) return 1;
  Matrix m = *this;
  Scalar d;
  rref(m, &d);
  return d;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::optional<Matrix> Matrix::inverse() const {
  if (!is_square()) return std::nullopt;
  Matrix aug(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) < rows_ || (rows_ > 0 && pivots.back() >= cols_)) return std::nullopt;
  return aug.block(0, cols_, rows_, cols_);
}

std::vector<std::vector<Scalar>> Matrix::nullspace() const {
  Matrix m = *this;
  auto pivots = rref(m);
  std::vector<int> pivot_row(static_cast<std::size_t>(cols_), -1);
  for (std::size_t r = 0; r < pivots.size(); ++r) pivot_row[static_cast<std::size_t>(pivots[r])] = static_cast<int>(r);
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (pivot_row[static_cast<std::size_t>(free)] >= 0) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(cols_));
    v[static_cast<std::size_t>(free)] = 1;
    for (int c = 0; c < cols_; ++c) {
      int r = pivot_row[static_cast<std::size_t>(c)];
      if (r >= 0) v[static_cast<std::size_t>(c)] = -m.at(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).to_string();
  }
  os << "]";
  return os.str();
}

}  // namespace covlab::linalg
