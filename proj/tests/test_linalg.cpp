#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "spinorth/linalg.hpp"

using namespace spinorth;
using spinorth::testing::ParamGen;

namespace {

Mat4 random_hermitian(ParamGen& gen) {
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    m(i, i) = gen.uniform(-2, 2);
    for (int j = i + 1; j < 4; ++j) {
      m(i, j) = Complex{gen.uniform(-1, 1), gen.uniform(-1, 1)};
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("matrix basics") {
  const Mat4 id = Mat4::identity();
  CHECK(std::abs(trace(id) - Complex{4.0}) == 0.0);

  ParamGen gen(21);
  const Mat4 a = random_hermitian(gen);
  const Mat4 b = random_hermitian(gen);
  CHECK(hermiticity_defect(a) == 0.0);
  CHECK(max_abs((a * b) - (a * b)) == 0.0);
  CHECK(max_abs(adjoint(a) - a) == 0.0);

  const Vec4 v{Complex{1, 1}, Complex{0, 2}, Complex{-1, 0}, Complex{0.5, -0.5}};
  CHECK(norm(normalized(v)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(std::abs(inner(v, v) - Complex{norm(v) * norm(v)}) < 1e-12);
}

TEST_CASE("phase fixing") {
  const Vec4 v{Complex{0, 0.5}, Complex{0.5, 0.5}, Complex{0, 0}, Complex{-0.5, 0}};
  const Vec4 f = phase_fixed(v);
  // the leading (largest) component becomes real and nonnegative
  CHECK(f[1].imag() == 0.0);
  CHECK(f[1].real() > 0.0);
  // global phase only: pairwise ratios preserved in magnitude
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(f[i]) == doctest::Approx(std::abs(v[i])));

  // exact tie between components resolves to the first one
  const Vec4 tie{Complex{0, 1}, Complex{1, 0}, 0.0, 0.0};
  const Vec4 ft = phase_fixed(tie);
  CHECK(std::abs(ft[0] - Complex{1.0}) == 0.0);
}

TEST_CASE("jacobi eigensystem on random hermitian matrices") {
  ParamGen gen(22);
  for (int rep = 0; rep < 200; ++rep) {
    const Mat4 a = random_hermitian(gen);
    const HermitianEigen eig = hermitian_eigensystem(a);

    for (int i = 0; i < 3; ++i) CHECK(eig.values[i] >= eig.values[i + 1]);
    for (int i = 0; i < 4; ++i) {
      const Vec4& v = eig.vectors[i];
      CHECK(norm(v) == doctest::Approx(1.0).epsilon(1e-12));
      const Vec4 av = a * v;
      double resid = 0;
      for (std::size_t r = 0; r < 4; ++r) resid += std::abs(av[r] - eig.values[i] * v[r]);
      CHECK(resid < 1e-11);
      for (int j = i + 1; j < 4; ++j) CHECK(std::abs(inner(v, eig.vectors[j])) < 1e-11);
    }
    const double tr = (a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3)).real();
    CHECK(eig.values[0] + eig.values[1] + eig.values[2] + eig.values[3] ==
          doctest::Approx(tr).epsilon(1e-11));
  }
}

TEST_CASE("jacobi handles diagonal and degenerate input") {
  Mat4 d;
  d(0, 0) = 0.5;
  d(3, 3) = 0.5;
  const HermitianEigen eig = hermitian_eigensystem(d);
  CHECK(eig.values[0] == doctest::Approx(0.5));
  CHECK(eig.values[1] == doctest::Approx(0.5));
  CHECK(eig.values[2] == doctest::Approx(0.0));
  CHECK(eig.values[3] == doctest::Approx(0.0));
}
