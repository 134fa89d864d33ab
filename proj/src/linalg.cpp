#include "spinorth/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace spinorth {

Mat4 Mat4::identity() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (int j = 0; j < 4; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Mat4 operator+(const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (int i = 0; i < 16; ++i) c.data()[i] = a.data()[i] + b.data()[i];
  return c;
}

Mat4 operator-(const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (int i = 0; i < 16; ++i) c.data()[i] = a.data()[i] - b.data()[i];
  return c;
}

Vec4 operator*(const Mat4& a, const Vec4& v) {
  Vec4 out{};
  for (int i = 0; i < 4; ++i) {
    Complex acc = 0;
    for (int j = 0; j < 4; ++j) acc += a(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

Mat4 adjoint(const Mat4& a) {
  Mat4 c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = std::conj(a(j, i));
  return c;
}

Mat4 hadamard(const Mat4& a, const Mat4& b) {
  Mat4 c;
  for (int i = 0; i < 16; ++i) c.data()[i] = a.data()[i] * b.data()[i];
  return c;
}

Complex inner(const Vec4& bra, const Vec4& ket) {
  Complex acc = 0;
  for (std::size_t i = 0; i < 4; ++i) acc += std::conj(bra[i]) * ket[i];
  return acc;
}

double norm(const Vec4& v) { return std::sqrt(inner(v, v).real()); }

Vec4 normalized(const Vec4& v) {
  const double n = norm(v);
  Vec4 out = v;
  if (n > 0) {
    for (auto& x : out) x /= n;
  }
  return out;
}

Complex trace(const Mat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

double max_abs(const Mat4& a) {
  double m = 0;
  for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(a.data()[i]));
  return m;
}

double hermiticity_defect(const Mat4& a) {
  double d = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
  return d;
}

Vec4 phase_fixed(const Vec4& v) {
  double m = 0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  if (m == 0) return v;
  std::size_t lead = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(v[i]) >= m - 1e-12) {
      lead = i;
      break;
    }
  }
  const Complex ph = v[lead] / std::abs(v[lead]);
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = v[i] * std::conj(ph);
  // scrub the leading component's rounding dust
  out[lead] = Complex(std::abs(v[lead]), 0.0);
  return out;
}

namespace {

double offdiag_sq(const Mat4& a) {
  double s = 0;
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) s += std::norm(a(p, q));
  return s;
}

}  // namespace

HermitianEigen hermitian_eigensystem(const Mat4& input) {
  Mat4 a = input;
  // work on the Hermitian average so tiny asymmetries cannot drift
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

  Mat4 v = Mat4::identity();
  const double scale = std::max(max_abs(a), 1e-300);
  const double tol = scale * scale * 1e-30;

  for (int sweep = 0; sweep < 64 && offdiag_sq(a) > tol; ++sweep) {
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= scale * 1e-18) continue;
        const Complex phase = apq / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // unitary 2x2 rotation on columns/rows p and q
        for (int i = 0; i < 4; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * phase * aip + c * aiq;
        }
        for (int j = 0; j < 4; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = c * apj - s * phase * aqj;
          a(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        a(p, q) = 0;
        a(q, p) = 0;
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);

        for (int i = 0; i < 4; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
      }
    }
  }

  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen out;
  for (int i = 0; i < 4; ++i) {
    const int src = order[static_cast<std::size_t>(i)];
    out.values[static_cast<std::size_t>(i)] = a(src, src).real();
    for (int r2 = 0; r2 < 4; ++r2)
      out.vectors[static_cast<std::size_t>(i)][static_cast<std::size_t>(r2)] = v(r2, src);
    out.vectors[static_cast<std::size_t>(i)] = normalized(out.vectors[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace spinorth
