#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "elastiq/disc.hpp"

using namespace elastiq;

namespace {

MaterialField const_mat(double rho, double mu, double la) {
  return {[=](double, double) { return rho; },
          [=](double, double) { return mu; },
          [=](double, double) { return la; }};
}

Field random_field(const BlockDisc& B, unsigned seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Field u = B.make_field();
  for (int j = 0; j < u.cols(); ++j)
    for (int i = 0; i < u.rows(); ++i) u(i, j) = d(gen);
  return u;
}

}  // namespace

TEST_CASE("single-row evaluation matches the full operator") {
  MaterialField mat{
      [](double x, double y) { return 2.0 + 0.3 * std::sin(x) * std::sin(y); },
      [](double x, double y) { return 3.0 + 0.2 * std::sin(3 * x + 0.1) * std::sin(y); },
      [](double x, double y) { return 11.0 + std::cos(x) * std::sin(y); }};
  for (int order : {4, 6}) {
    for (bool ghost : {false, true}) {
      BlockDisc B(order, BlockGrid(ReferenceGrid(31, 26),
                                   make_topography_mapping(Side::Coarse),
                                   Side::Coarse),
                  mat, ghost);
      const Field u = random_field(B, 42 + order);
      Field Lu;
      B.apply_L(u, Lu);
      for (int i : {0, 1, 7, 15, 29, 30})
        for (int j : {0, 1, 12, 24, 25}) {
          const Eigen::Vector2d r = B.L_row(u, i, j);
          CHECK(r[0] == doctest::Approx(Lu(2 * i, j)).epsilon(1e-11));
          CHECK(r[1] == doctest::Approx(Lu(2 * i + 1, j)).epsilon(1e-11));
        }
    }
  }
}

TEST_CASE("operator converges to the elastic divergence of stress") {
  // identity map, constant material: L u = mu lap(u) + (mu+la) grad(div u)
  const double mu = 1.3, la = 2.1;
  MaterialField mat = const_mat(1.0, mu, la);
  auto u1 = [](double x, double y) { return std::sin(x + 0.3) * std::cos(y); };
  auto u2 = [](double x, double y) { return std::cos(x) * std::sin(y + 0.2); };
  auto exact = [&](double x, double y) {
    // divergence of stress for the trig fields above
    const double u1xx = -std::sin(x + 0.3) * std::cos(y);
    const double u1yy = -std::sin(x + 0.3) * std::cos(y);
    const double u1xy = -std::cos(x + 0.3) * std::sin(y);
    const double u2xx = -std::cos(x) * std::sin(y + 0.2);
    const double u2yy = -std::cos(x) * std::sin(y + 0.2);
    const double u2xy = -std::sin(x) * std::cos(y + 0.2);
    return Eigen::Vector2d(mu * (u1xx + u1yy) + (mu + la) * (u1xx + u2xy),
                           mu * (u2xx + u2yy) + (mu + la) * (u1xy + u2yy));
  };
  for (int order : {4, 6}) {
    double prev = 0.0;
    for (int n : {33, 65}) {
      BlockDisc B(order, BlockGrid(ReferenceGrid(n, n),
                                   make_rectangle_mapping(0, 1, 0, 1),
                                   Side::Coarse),
                  mat, false);
      Field u = B.make_field();
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          const double x = B.grid.met.x(i, j), y = B.grid.met.y(i, j);
          u(2 * i, j) = u1(x, y);
          u(2 * i + 1, j) = u2(x, y);
        }
      Field Lu;
      B.apply_L(u, Lu);
      // interior error only (away from one-sided closures)
      double err = 0.0;
      for (int j = 8; j < n - 8; ++j)
        for (int i = 8; i < n - 8; ++i) {
          const Eigen::Vector2d e =
              exact(B.grid.met.x(i, j), B.grid.met.y(i, j));
          err = std::max(err, std::abs(Lu(2 * i, j) - e[0]));
          err = std::max(err, std::abs(Lu(2 * i + 1, j) - e[1]));
        }
      if (prev > 0.0) {
        const double rate = std::log2(prev / err);
        CHECK(rate > (order == 4 ? 3.7 : 5.5));
      }
      prev = err;
    }
  }
}

TEST_CASE("traction operators are exact on linear fields") {
  const double mu = 0.9, la = 1.7;
  MaterialField mat = const_mat(1.0, mu, la);
  const Eigen::Matrix2d Bx = (Eigen::Matrix2d() << 0.3, -0.7, 1.1, 0.4).finished();
  auto lin = [&](double x, double y) {
    return Eigen::Vector2d(1.0 + Bx(0, 0) * x + Bx(0, 1) * y,
                           -2.0 + Bx(1, 0) * x + Bx(1, 1) * y);
  };
  for (int order : {4, 6}) {
    for (bool ghost : {false, true}) {
      const int n1 = 26, n2 = 25;
      BlockDisc B(order, BlockGrid(ReferenceGrid(n1, n2),
                                   make_rectangle_mapping(0, 1, 0, 1),
                                   Side::Coarse),
                  mat, ghost);
      Field u = B.make_field();
      for (int j = 0; j < n2; ++j)
        for (int i = 0; i < n1; ++i) {
          const Eigen::Vector2d v = lin(B.grid.met.x(i, j), B.grid.met.y(i, j));
          u(2 * i, j) = v[0];
          u(2 * i + 1, j) = v[1];
        }
      if (ghost)  // ghost row continues the linear field beyond s = 1
        for (int i = 0; i < n1; ++i) {
          const Eigen::Vector2d v = lin(B.grid.met.x(i, n2 - 1),
                                        B.grid.met.y(i, n2 - 1) + B.h2());
          u(2 * i, n2) = v[0];
          u(2 * i + 1, n2) = v[1];
        }
      // A_2 u = N21 du/dr + N22 du/ds; identity map: du/dr = Bx col x etc.
      Eigen::Vector2d exp_top, exp_bot;
      for (int p = 0; p < 2; ++p) {
        const Eigen::Matrix2d n21 = iso_block(2, 1, mu, la);
        const Eigen::Matrix2d n22 = iso_block(2, 2, mu, la);
        exp_top[p] = n21(p, 0) * Bx(0, 0) + n21(p, 1) * Bx(1, 0) +
                     n22(p, 0) * Bx(0, 1) + n22(p, 1) * Bx(1, 1);
      }
      exp_bot = exp_top;  // constant-stress field
      for (int i : {0, 5, 13, 25}) {
        const Eigen::Vector2d tt = B.traction_s(u, i, true);
        const Eigen::Vector2d tb = B.traction_s(u, i, false);
        CHECK(tt[0] == doctest::Approx(exp_top[0]).epsilon(1e-12));
        CHECK(tt[1] == doctest::Approx(exp_top[1]).epsilon(1e-12));
        CHECK(tb[0] == doctest::Approx(exp_bot[0]).epsilon(1e-12));
        CHECK(tb[1] == doctest::Approx(exp_bot[1]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("traction boundary solve recovers the linear ghost extension") {
  const double mu = 1.1, la = 0.8;
  MaterialField mat = const_mat(1.0, mu, la);
  auto lin = [](double x, double y) {
    return Eigen::Vector2d(0.2 * x - 0.5 * y + 1.0, 0.7 * x + 0.9 * y);
  };
  for (int order : {4, 6}) {
    const int n1 = 26, n2 = 25;
    BlockDisc B(order, BlockGrid(ReferenceGrid(n1, n2),
                                 make_rectangle_mapping(0, 1, 0, 1),
                                 Side::Coarse),
                mat, true);
    Field u = B.make_field();
    for (int j = 0; j < n2; ++j)
      for (int i = 0; i < n1; ++i) {
        const Eigen::Vector2d v = lin(B.grid.met.x(i, j), B.grid.met.y(i, j));
        u(2 * i, j) = v[0];
        u(2 * i + 1, j) = v[1];
      }
    // physical traction of the linear field on the top boundary
    const Eigen::Matrix2d n21 = iso_block(2, 1, mu, la);
    const Eigen::Matrix2d n22 = iso_block(2, 2, mu, la);
    const Eigen::Vector2d dxu(0.2, 0.7), dyu(-0.5, 0.9);
    const Eigen::Vector2d tr = n21 * dxu + n22 * dyu;  // J = Lambda = 1
    solve_traction_top(B, u, 0.0,
                       [&](double, double, double) { return tr; });
    for (int i : {0, 9, 25}) {
      const Eigen::Vector2d v =
          lin(B.grid.met.x(i, n2 - 1), B.grid.met.y(i, n2 - 1) + B.h2());
      CHECK(u(2 * i, n2) == doctest::Approx(v[0]).epsilon(1e-11));
      CHECK(u(2 * i + 1, n2) == doctest::Approx(v[1]).epsilon(1e-11));
    }
  }
}

TEST_CASE("interface matrix columns agree with residual probing") {
  MaterialField mat{
      [](double x, double y) { return 1.5 + 0.2 * std::sin(x + y); },
      [](double x, double y) { return 2.0 + 0.3 * std::cos(x) * std::sin(y); },
      [](double x, double y) { return 7.0 + std::sin(x) * std::cos(y); }};
  for (int order : {4, 6}) {
    const int nc = 25;
    BlockDisc C(order, BlockGrid(ReferenceGrid(nc, 24),
                                 make_topography_mapping(Side::Coarse),
                                 Side::Coarse),
                mat, true);
    BlockDisc F(order, BlockGrid(ReferenceGrid(2 * nc - 1, 24),
                                 make_topography_mapping(Side::Fine),
                                 Side::Fine),
                mat, false);
    InterfaceSystem sys(C, F);
    Field uc = C.make_field();
    Field uf = F.make_field();
    for (int k : {0, 1, 2 * 7 + 1, 2 * 12, 2 * nc - 1}) {
      uc.col(C.n2()).setZero();
      uc(k, C.n2()) = 1.0;
      const Vec r = sys.residual(uc, uf);
      const Vec col = sys.matrix_column(k / 2, k % 2);
      CHECK((r - col).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("interface solve is exact for a conforming linear field") {
  // coarse [0,1]x[0,0.5], fine [0,1]x[0.5,1]; equal constant materials, so a
  // global linear displacement satisfies both interface conditions exactly.
  const double mu = 1.4, la = 2.3;
  MaterialField mat = const_mat(2.0, mu, la);
  auto lin = [](double x, double y) {
    return Eigen::Vector2d(0.4 * x + 0.7 * y - 0.3, -0.6 * x + 0.25 * y + 1.1);
  };
  for (int order : {4, 6}) {
    const int nc = 25, nc2 = 24;
    BlockDisc C(order, BlockGrid(ReferenceGrid(nc, nc2),
                                 make_rectangle_mapping(0, 1, 0, 0.5),
                                 Side::Coarse),
                mat, true);
    BlockDisc F(order, BlockGrid(ReferenceGrid(2 * nc - 1, 24),
                                 make_rectangle_mapping(0, 1, 0.5, 1),
                                 Side::Fine),
                mat, false);
    InterfaceSystem sys(C, F);
    Field uc = C.make_field();
    Field uf = F.make_field();
    for (int j = 0; j < C.n2(); ++j)
      for (int i = 0; i < C.n1(); ++i) {
        const Eigen::Vector2d v = lin(C.grid.met.x(i, j), C.grid.met.y(i, j));
        uc(2 * i, j) = v[0];
        uc(2 * i + 1, j) = v[1];
      }
    for (int j = 0; j < F.n2(); ++j)
      for (int i = 0; i < F.n1(); ++i) {
        const Eigen::Vector2d v = lin(F.grid.met.x(i, j), F.grid.met.y(i, j));
        uf(2 * i, j) = v[0];
        uf(2 * i + 1, j) = v[1];
      }
    // injection reproduces the fine interface values of the linear field
    const Vec inj = sys.interface_injection(uc);
    for (int i = 0; i < F.n1(); ++i) {
      const Eigen::Vector2d v = lin(F.grid.met.x(i, 0), F.grid.met.y(i, 0));
      CHECK(inj[2 * i] == doctest::Approx(v[0]).epsilon(1e-11));
      CHECK(inj[2 * i + 1] == doctest::Approx(v[1]).epsilon(1e-11));
    }
    sys.solve(uc, uf);
    // solved ghost values continue the linear field beyond the interface
    for (int i : {0, 7, 18, 24}) {
      const Eigen::Vector2d v =
          lin(C.grid.met.x(i, nc2 - 1), C.grid.met.y(i, nc2 - 1) + 0.5 * C.h2());
      CHECK(uc(2 * i, C.n2()) == doctest::Approx(v[0]).epsilon(1e-10));
      CHECK(uc(2 * i + 1, C.n2()) == doctest::Approx(v[1]).epsilon(1e-10));
    }
    // and the residual vanishes there
    CHECK(sys.residual(uc, uf).cwiseAbs().maxCoeff() < 1e-11);
  }
}
