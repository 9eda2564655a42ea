#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "elastiq/grid.hpp"
#include "elastiq/material.hpp"

using namespace elastiq;

namespace {

// 8th-order central difference of a scalar function of one variable.
template <class F>
double fd8(F f, double t, double d) {
  return (0.8 * (f(t + d) - f(t - d)) - 0.2 * (f(t + 2 * d) - f(t - 2 * d)) +
          (4.0 / 105.0) * (f(t + 3 * d) - f(t - 3 * d)) -
          (1.0 / 280.0) * (f(t + 4 * d) - f(t - 4 * d))) /
         d;
}

void check_dmap_vs_fd(const CurvilinearMapping& m) {
  const double d = 0.005;
  for (double r : {0.13, 0.5, 0.87}) {
    for (double s : {0.2, 0.55, 0.9}) {
      const Eigen::Matrix2d dm = m.dmap(r, s);
      for (int c = 0; c < 2; ++c) {
        const double fr = fd8([&](double t) { return m.map(t, s)[c]; }, r, d);
        const double fs = fd8([&](double t) { return m.map(r, t)[c]; }, s, d);
        CHECK(std::abs(dm(c, 0) - fr) < 1e-9 * (1.0 + std::abs(fr)));
        CHECK(std::abs(dm(c, 1) - fs) < 1e-9 * (1.0 + std::abs(fs)));
      }
    }
  }
}

}  // namespace

TEST_CASE("analytic mapping partials match high-order finite differences") {
  check_dmap_vs_fd(make_topography_mapping(Side::Coarse));
  check_dmap_vs_fd(make_topography_mapping(Side::Fine));
  check_dmap_vs_fd(make_halfplane_mapping(Side::Coarse));
  check_dmap_vs_fd(make_rectangle_mapping(-1.0, 2.0, 0.5, 3.5));
}

TEST_CASE("metric relations invert the mapping Jacobian exactly") {
  for (Side side : {Side::Coarse, Side::Fine}) {
    BlockGrid b(ReferenceGrid(31, 17), make_topography_mapping(side), side);
    for (int j = 0; j < 17; ++j) {
      for (int i = 0; i < 31; ++i) {
        const Eigen::Matrix2d dm = b.mapping.dmap(i * b.g.h1, j * b.g.h2);
        Eigen::Matrix2d xi;
        xi << b.met.xi11(i, j), b.met.xi21(i, j), b.met.xi12(i, j),
            b.met.xi22(i, j);
        // xi rows are (r_x, r_y), (s_x, s_y); xi * dmap = identity
        const Eigen::Matrix2d prod = xi * dm;
        CHECK((prod - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <
              1e-13);
        CHECK(b.met.J(i, j) > 0.0);
      }
    }
  }
}

TEST_CASE("negative Jacobian is rejected") {
  // reversed y-extent flips orientation
  CHECK_THROWS_AS(BlockGrid(ReferenceGrid(5, 5),
                            make_rectangle_mapping(0.0, 1.0, 1.0, 0.0),
                            Side::Coarse),
                  NonPositiveJacobian);
}

TEST_CASE("interface nodes coincide and normals are antiparallel") {
  const int n = 31;
  BlockGrid c(ReferenceGrid(n, (n + 1) / 2), make_topography_mapping(Side::Coarse),
              Side::Coarse);
  BlockGrid f(ReferenceGrid(2 * n - 1, n), make_topography_mapping(Side::Fine),
              Side::Fine);
  const int jc = c.interface_j();
  const int jf = f.interface_j();
  for (int i = 0; i < n; ++i) {
    CHECK(c.met.x(i, jc) == doctest::Approx(f.met.x(2 * i, jf)).epsilon(1e-14));
    CHECK(c.met.y(i, jc) == doctest::Approx(f.met.y(2 * i, jf)).epsilon(1e-14));
    const Eigen::Vector2d nc = outward_normal(c, i, jc);
    const Eigen::Vector2d nf = outward_normal(f, 2 * i, jf);
    CHECK(nc.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(nc.dot(nf) == doctest::Approx(-1.0).epsilon(1e-13));
  }
  CHECK_THROWS_AS(outward_normal(c, 0, 0), NotOnInterface);
}

TEST_CASE("identity map reproduces the isotropic stiffness blocks") {
  const double mu = 1.7, la = 2.9;
  MaterialField mat{[](double, double) { return 1.3; },
                    [=](double, double) { return mu; },
                    [=](double, double) { return la; }};
  BlockGrid b(ReferenceGrid(8, 9), make_rectangle_mapping(0, 1, 0, 1),
              Side::Coarse);
  MaterialTensors T = assemble_tensors(mat, b.met);
  for (int j = 0; j < 9; ++j)
    for (int i = 0; i < 8; ++i) {
      CHECK((T.N11.at(i, j) - iso_block(1, 1, mu, la)).cwiseAbs().maxCoeff() <
            1e-14);
      CHECK((T.N12.at(i, j) - iso_block(1, 2, mu, la)).cwiseAbs().maxCoeff() <
            1e-14);
      CHECK((T.N21.at(i, j) - iso_block(2, 1, mu, la)).cwiseAbs().maxCoeff() <
            1e-14);
      CHECK((T.N22.at(i, j) - iso_block(2, 2, mu, la)).cwiseAbs().maxCoeff() <
            1e-14);
    }
}

TEST_CASE("rectangle scaling of the transformed tensors") {
  // X = (a r, b s): J = ab, r_x = 1/a, s_y = 1/b
  const double a = 2.0, bb = 3.0, mu = 0.8, la = 1.1;
  MaterialField mat{[](double, double) { return 1.0; },
                    [=](double, double) { return mu; },
                    [=](double, double) { return la; }};
  BlockGrid b(ReferenceGrid(4, 4), make_rectangle_mapping(0, a, 0, bb),
              Side::Coarse);
  MaterialTensors T = assemble_tensors(mat, b.met);
  CHECK((T.N11.at(1, 1) - (bb / a) * iso_block(1, 1, mu, la))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  CHECK((T.N22.at(1, 1) - (a / bb) * iso_block(2, 2, mu, la))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  CHECK((T.N12.at(1, 1) - iso_block(1, 2, mu, la)).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("tensor symmetry on a curved grid with variable coefficients") {
  MaterialField mat{
      [](double x, double y) { return 2.0 + std::sin(x + 0.3) * std::sin(y - 0.2); },
      [](double x, double y) { return 3.0 + std::sin(3 * x + 0.1) * std::sin(y); },
      [](double x, double y) {
        const double s = std::sin(3 * y);
        return 21.0 + std::cos(x + 0.1) * s * s;
      }};
  for (Side side : {Side::Coarse, Side::Fine}) {
    BlockGrid b(ReferenceGrid(25, 13), make_topography_mapping(side), side);
    MaterialTensors T = assemble_tensors(mat, b.met);
    for (int j = 0; j < 13; ++j)
      for (int i = 0; i < 25; ++i) {
        const Eigen::Matrix2d n11 = T.N11.at(i, j);
        const Eigen::Matrix2d n22 = T.N22.at(i, j);
        const Eigen::Matrix2d n12 = T.N12.at(i, j);
        const Eigen::Matrix2d n21 = T.N21.at(i, j);
        CHECK((n11 - n11.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((n22 - n22.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((n12 - n21.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        // diagonal blocks are positive definite
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> e11(n11), e22(n22);
        CHECK(e11.eigenvalues().minCoeff() > 0.0);
        CHECK(e22.eigenvalues().minCoeff() > 0.0);
      }
  }
}

TEST_CASE("local wave-speed surrogate on the identity map") {
  const double mu = 1.5, la = 2.5, rho = 2.0;
  MaterialField mat{[=](double, double) { return rho; },
                    [=](double, double) { return mu; },
                    [=](double, double) { return la; }};
  BlockGrid b(ReferenceGrid(5, 5), make_rectangle_mapping(0, 1, 0, 1),
              Side::Coarse);
  MaterialTensors T = assemble_tensors(mat, b.met);
  // Tr N11 = Tr N22 = 3 mu + lambda, Tr N12 = Tr N21 = 0, J = 1
  CHECK(zeta_max(T, b.met) ==
        doctest::Approx((3.0 * mu + la) / rho).epsilon(1e-14));
}

TEST_CASE("material positivity is enforced") {
  MaterialField bad{[](double, double) { return -1.0; },
                    [](double, double) { return 1.0; },
                    [](double, double) { return 1.0; }};
  BlockGrid b(ReferenceGrid(3, 3), make_rectangle_mapping(0, 1, 0, 1),
              Side::Coarse);
  CHECK_THROWS_AS(assemble_tensors(bad, b.met), std::invalid_argument);
}
