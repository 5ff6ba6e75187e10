#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace covlab::linalg {

/// Gaussian rational re + im * i.
struct Scalar {
  mpq_class re = 0;
  mpq_class im = 0;

  Scalar() = default;
  Scalar(int r) : re(r) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {  // NOLINT
    re.canonicalize();
    im.canonicalize();
  }

  static Scalar i() { return {0, 1}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  Scalar conj() const { return {re, -im}; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  /// Throws std::domain_error on division by zero.
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const { return {-re, -im}; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }

  /// "3/2", "-i", "1+2i".
  std::string to_string() const;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
  /// Row-major nested initializer; all rows must have equal length.
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(int n);
  static Matrix scalar(int n, const Scalar& s);
  /// Block-diagonal sum.
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& a);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  bool is_zero() const;
  bool is_real() const;
  Matrix conj() const;
  Matrix transpose() const;
  Matrix pow(int n) const;
  Matrix block(int r0, int c0, int rows, int cols) const;

  Scalar det() const;
  int rank() const;
  std::optional<Matrix> inverse() const;
  /// Basis of {x : A x = 0} read off the reduced row echelon form: one vector
  /// per free column, in increasing column order, with a 1 in that column.
  std::vector<std::vector<Scalar>> nullspace() const;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> a_;
};

}  // namespace covlab::linalg
