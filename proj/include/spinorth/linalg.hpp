#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace spinorth {

using Complex = std::complex<double>;

/// Vector in C^4.
using Vec4 = std::array<Complex, 4>;

/// Dense complex 4x4 matrix, row major.
class Mat4 {
 public:
  Mat4() : e_{} {}

  static Mat4 identity();

  Complex& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * 4 + j]; }
  const Complex& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * 4 + j]; }

  Complex* data() { return e_.data(); }
  const Complex* data() const { return e_.data(); }

 private:
  std::array<Complex, 16> e_;
};

Mat4 operator*(const Mat4& a, const Mat4& b);
Mat4 operator+(const Mat4& a, const Mat4& b);
Mat4 operator-(const Mat4& a, const Mat4& b);
Vec4 operator*(const Mat4& a, const Vec4& v);

Mat4 adjoint(const Mat4& a);

/// Entrywise (Hadamard) product.
Mat4 hadamard(const Mat4& a, const Mat4& b);

/// <bra|ket> with the bra conjugated.
Complex inner(const Vec4& bra, const Vec4& ket);

double norm(const Vec4& v);
Vec4 normalized(const Vec4& v);

Complex trace(const Mat4& a);
double max_abs(const Mat4& a);

/// max_ij |a_ij - conj(a_ji)|
double hermiticity_defect(const Mat4& a);

/// Rotate the global phase so the first component of largest magnitude
/// (ties resolved toward the lowest index, within 1e-12) is real and >= 0.
Vec4 phase_fixed(const Vec4& v);

struct HermitianEigen {
  std::array<double, 4> values;   // sorted descending
  std::array<Vec4, 4> vectors;    // vectors[i] belongs to values[i], unit norm
};

/// Full eigendecomposition of a Hermitian 4x4 by cyclic Jacobi rotations.
/// Deterministic: fixed sweep order, no pivoting on magnitude.
HermitianEigen hermitian_eigensystem(const Mat4& a);

}  // namespace spinorth
