#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "elastiq/sbp.hpp"

using namespace elastiq;

namespace {

Vec random_vec(int n, std::mt19937_64& rng, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = d(rng);
  return v;
}

std::vector<int> test_sizes(int order) {
  // the order-6 closure needs n >= 24 (disjoint 12-wide corner blocks)
  return order == 4 ? std::vector<int>{16, 31, 64}
                    : std::vector<int>{24, 31, 64};
}

}  // namespace

TEST_CASE("norm weights: boundary values and quadrature") {
  CHECK(make_norm(6, 24)[0] == doctest::Approx(13649.0 / 43200.0).epsilon(1e-15));
  for (int order : {4, 6}) {
    int n = 20 + 8 * (order == 6);
    double h = 1.0 / (n - 1);
    Vec w = make_norm(order, n);
    // exactness on constants: h * sum w = 1
    CHECK(std::abs(h * w.sum() - 1.0) < 1e-13);
    // quadrature order >= 1: h * sum w_i x_i = 1/2
    double s = 0;
    for (int i = 0; i < n; ++i) s += w[i] * i * h;
    CHECK(std::abs(h * s - 0.5) < 1e-13);
    for (int i = tables(order).nw; i < n - tables(order).nw; ++i)
      CHECK(w[i] == 1.0);
  }
}

TEST_CASE("first derivative: polynomial exactness") {
  for (int order : {4, 6}) {
    const int q = tables(order).q;
    const int n = 31;
    const double h = 1.0 / (n - 1);
    for (int deg = 0; deg <= q; ++deg) {
      Vec v(n), out(n);
      for (int i = 0; i < n; ++i) v[i] = std::pow(i * h, deg);
      apply_d1(order, h, v.data(), n, out.data());
      for (int i = 0; i < n; ++i) {
        double exact = deg == 0 ? 0.0 : deg * std::pow(i * h, deg - 1);
        CHECK(std::abs(out[i] - exact) < 1e-11);
      }
    }
    // interior rows exact to degree 2q
    for (int deg = q + 1; deg <= 2 * q; ++deg) {
      Vec v(n), out(n);
      for (int i = 0; i < n; ++i) v[i] = std::pow(i * h, deg);
      apply_d1(order, h, v.data(), n, out.data());
      const int br = tables(order).d1_rows;
      for (int i = br; i < n - br; ++i)
        CHECK(std::abs(out[i] - deg * std::pow(i * h, deg - 1)) < 1e-10);
    }
  }
}

TEST_CASE("first derivative: SBP identity") {
  std::mt19937_64 rng(7);
  for (int order : {4, 6})
    for (int n : test_sizes(order)) {
      const double h = 1.0 / (n - 1);
      Vec w = make_norm(order, n);
      for (int rep = 0; rep < 100; ++rep) {
        Vec u = random_vec(n, rng), v = random_vec(n, rng);
        Vec du(n), dv(n);
        apply_d1(order, h, u.data(), n, du.data());
        apply_d1(order, h, v.data(), n, dv.data());
        double lhs = h * (u.array() * w.array() * dv.array()).sum() +
                     h * (du.array() * w.array() * v.array()).sum();
        double rhs = u[n - 1] * v[n - 1] - u[0] * v[0];
        CHECK(std::abs(lhs - rhs) < 1e-12);
      }
    }
}

TEST_CASE("second derivative: SBP identities, ghost and non-ghost") {
  std::mt19937_64 rng(11);
  for (int order : {4, 6})
    for (int n : test_sizes(order)) {
      const double h = 1.0 / (n - 1);
      Vec w = make_norm(order, n);
      for (int rep = 0; rep < 100; ++rep) {
        Vec u = random_vec(n, rng), v = random_vec(n, rng);
        Vec g = random_vec(n, rng, 0.5, 2.0);
        Mat M = m_dense(order, n, g);
        // non-ghost: h u^T W G v = -u^T M v / h - g0 u0 b1 v + gn un bn v
        Vec Gv(n);
        apply_g(order, h, g.data(), v.data(), n, Gv.data());
        double lhs = h * (u.array() * w.array() * Gv.array()).sum();
        double rhs = -u.dot(M * v) / h -
                     g[0] * u[0] * bderiv_left(order, h, v.data()) +
                     g[n - 1] * u[n - 1] * bderiv_right(order, h, v.data(), n);
        CHECK(std::abs(lhs - rhs) < 1e-11);
        // ghost at the right end
        double vg = random_vec(1, rng)[0];
        apply_g(order, h, g.data(), v.data(), n, Gv.data(), true, vg);
        lhs = h * (u.array() * w.array() * Gv.array()).sum();
        rhs = -u.dot(M * v) / h -
              g[0] * u[0] * bderiv_left(order, h, v.data()) +
              g[n - 1] * u[n - 1] *
                  bderiv_right_ghost(order, h, vg, v.data(), n);
        CHECK(std::abs(lhs - rhs) < 1e-11);
      }
    }
}

TEST_CASE("bilinear form S: symmetric positive semidefinite") {
  std::mt19937_64 rng(13);
  for (int order : {4, 6}) {
    int n = order == 4 ? 31 : 31;
    double h = 1.0 / (n - 1);
    Vec g = random_vec(n, rng, 0.5, 2.0);
    Mat S = s_form_dense(order, n, h, g);
    CHECK((S - S.transpose()).cwiseAbs().maxCoeff() < 1e-13 * S.cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Mat> es(S);
    CHECK(es.eigenvalues().minCoeff() > -1e-12 * es.eigenvalues().maxCoeff());
  }
}

TEST_CASE("second derivative rows: polynomial exactness") {
  // boundary rows exact for gamma-degree + u-degree <= q + 1,
  // interior rows for total degree <= 2q + 1.
  for (int order : {4, 6}) {
    const ClosureTables& t = tables(order);
    const int q = t.q, n = 40;
    for (int gd = 0; gd <= q; ++gd)
      for (int ud = 0; ud <= 2 * q + 1 - gd; ++ud) {
        Vec g(n), v(n), out(n);
        for (int i = 0; i < n; ++i) {
          g[i] = std::pow(1.0 + 0.03 * i, gd);
          v[i] = std::pow(double(i), ud);
        }
        apply_g(order, 1.0, g.data(), v.data(), n, out.data());
        auto exact = [&](double x) {
          // (g v')' for g = (1+0.03x)^gd, v = x^ud
          double gp = gd == 0 ? 0.0 : 0.03 * gd * std::pow(1.0 + 0.03 * x, gd - 1);
          double gv = std::pow(1.0 + 0.03 * x, gd);
          double v1 = ud == 0 ? 0.0 : ud * std::pow(x, ud - 1);
          double v2 = ud <= 1 ? 0.0 : ud * (ud - 1) * std::pow(x, ud - 2);
          return gp * v1 + gv * v2;
        };
        const bool bnd_ok = gd + ud <= q + 1;
        for (int i = 0; i < n; ++i) {
          const bool interior = (i >= t.bs && i < n - t.bs);
          if (interior || bnd_ok)
            CHECK(std::abs(out[i] - exact(double(i))) <
                  1e-8 * std::max(1.0, std::pow(double(n), ud)));
        }
      }
  }
}

TEST_CASE("ghost conversion facts") {
  // order-6 ghost boundary derivative is exact on degree-4 polynomials
  {
    const int n = 31;
    const double h = 0.1;
    for (int deg = 0; deg <= 4; ++deg) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v[i] = std::pow(i * h, deg);
      double vg = std::pow(n * h, deg);  // ghost beyond right end
      double d = bderiv_right_ghost(6, h, vg, v.data(), n);
      double exact = deg == 0 ? 0.0 : deg * std::pow((n - 1) * h, deg - 1);
      CHECK(std::abs(d - exact) < 1e-10);
    }
    // order-4 ghost variant exact on degree-3
    for (int deg = 0; deg <= 3; ++deg) {
      Vec v(n);
      for (int i = 0; i < n; ++i) v[i] = std::pow(i * h, deg);
      double vg = std::pow(n * h, deg);
      double d = bderiv_right_ghost(4, h, vg, v.data(), n);
      double exact = deg == 0 ? 0.0 : deg * std::pow((n - 1) * h, deg - 1);
      CHECK(std::abs(d - exact) < 1e-11);
    }
  }
  // all rows except the ghost-end row are identical between ghost and
  // non-ghost operators
  for (int order : {4, 6}) {
    const int n = 31;
    const double h = 1.0 / (n - 1);
    std::mt19937_64 rng(3);
    Vec g = random_vec(n, rng, 0.5, 2.0), v = random_vec(n, rng);
    Vec a(n), b(n);
    apply_g(order, h, g.data(), v.data(), n, a.data());
    apply_g(order, h, g.data(), v.data(), n, b.data(), true, 0.77);
    for (int i = 0; i < n - 1; ++i) CHECK(a[i] == b[i]);
    CHECK(a[n - 1] != b[n - 1]);
  }
  // closed-form ghost coefficient in the modified row: beta * g / (w1 h^2)
  {
    const int n = 31;
    const double h = 0.05;
    Vec g = Vec::Constant(n, 1.7), z = Vec::Zero(n);
    Vec out0(n), out1(n);
    apply_g(6, h, g.data(), z.data(), n, out0.data(), true, 0.0);
    apply_g(6, h, g.data(), z.data(), n, out1.data(), true, 1.0);
    const double beta = 0.25, w1 = 13649.0 / 43200.0;
    CHECK(std::abs((out1[n - 1] - out0[n - 1]) - beta * 1.7 / (w1 * h * h)) <
          1e-9);
    for (int i = 0; i < n - 1; ++i) CHECK(out1[i] == out0[i]);
  }
}

TEST_CASE("second derivative: refinement convergence") {
  for (int order : {4, 6}) {
    const int q = tables(order).q;
    double prev_b = 0, prev_i = 0;
    std::vector<double> ns = {33, 65, 129};
    std::vector<double> eb, ei;
    for (double nn : ns) {
      const int n = int(nn);
      const double h = 1.0 / (n - 1);
      Vec g(n), v(n), out(n);
      for (int i = 0; i < n; ++i) {
        double x = i * h;
        g[i] = 2.0 + std::sin(3 * x);
        v[i] = std::sin(2 * x + 0.3);
      }
      apply_g(order, h, g.data(), v.data(), n, out.data());
      double mb = 0, mi = 0;
      for (int i = 0; i < n; ++i) {
        double x = i * h;
        double exact = 3 * std::cos(3 * x) * 2 * std::cos(2 * x + 0.3) -
                       (2 + std::sin(3 * x)) * 4 * std::sin(2 * x + 0.3);
        double e = std::abs(out[i] - exact);
        if (i < tables(order).bs || i >= n - tables(order).bs)
          mb = std::max(mb, e);
        else
          mi = std::max(mi, e);
      }
      eb.push_back(mb);
      ei.push_back(mi);
    }
    (void)prev_b;
    (void)prev_i;
    double rate_b = std::log2(eb[1] / eb[2]);
    double rate_i = std::log2(ei[1] / ei[2]);
    CHECK(rate_b >= q - 0.3);
    CHECK(rate_i >= 2 * q - 0.4);
  }
}

TEST_CASE("boundary derivative refinement rate (order-6 family)") {
  std::vector<double> errs;
  for (int n : {21, 41, 81}) {
    double h = 1.0 / (n - 1);
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = std::sin(i * h);
    errs.push_back(std::abs(bderiv_left(6, h, v.data()) - 1.0));
  }
  CHECK(std::log2(errs[1] / errs[2]) >= 4.0 - 0.3);
}

TEST_CASE("row evaluators agree with full applies") {
  std::mt19937_64 rng(5);
  for (int order : {4, 6}) {
    const int n = order == 4 ? 20 : 26;
    const double h = 1.0 / (n - 1);
    Vec g = random_vec(n, rng, 0.5, 2.0), v = random_vec(n, rng);
    Vec out(n), dv(n);
    double vg = 0.37;
    apply_g(order, h, g.data(), v.data(), n, out.data(), true, vg);
    const double scale = out.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(apply_g_row(order, h, g.data(), v.data(), n, i, true,
                                 vg) -
                     out[i]) < 1e-13 * scale);
    apply_d1(order, h, v.data(), n, dv.data());
    const double dscale = dv.cwiseAbs().maxCoeff();
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(apply_d1_row(order, h, v.data(), n, i) - dv[i]) <
            1e-13 * dscale);
  }
}
