#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "elastiq/interp.hpp"

using namespace elastiq;

namespace {
Eigen::VectorXd poly_nodes(int n, double spacing, int deg) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = std::pow(0.05 + i * spacing, deg);
  return v;
}
}  // namespace

TEST_CASE("prolongation rows sum to one") {
  for (int order : {4, 6})
    for (int nc : {31, 41}) {
      const Eigen::MatrixXd P = interp_P(order, nc);
      const Eigen::MatrixXd R = interp_R(order, nc);
      CHECK((P.rowwise().sum().array() - 1.0).abs().maxCoeff() < 1e-11);
      CHECK((R.rowwise().sum().array() - 1.0).abs().maxCoeff() < 1e-11);
    }
}

TEST_CASE("norm compatibility holds to roundoff") {
  for (int order : {4, 6})
    for (int nc : {31, 41, 81})
      CHECK(interp_compatibility_residual(order, nc) < 1e-12);
}

TEST_CASE("polynomial exactness of P and R") {
  // q = 2 for order 4, q = 3 for order 6; edge rows of P are exact to
  // degree q, interior rows to degree 2q-1; R edge rows to degree q-1,
  // interior to 2q-1.
  for (int order : {4, 6}) {
    const int q = (order == 4) ? 2 : 3;
    const int E = (order == 4) ? coeffs::kInterpE2 : coeffs::kInterpE3;
    const int S = (order == 4) ? coeffs::kInterpS2 : coeffs::kInterpS3;
    const int nc = 41, nf = 2 * nc - 1;
    const Eigen::MatrixXd P = interp_P(order, nc);
    const Eigen::MatrixXd R = interp_R(order, nc);
    for (int deg = 0; deg <= 2 * q - 1; ++deg) {
      const Eigen::VectorXd pc = poly_nodes(nc, 1.0, deg);
      const Eigen::VectorXd pf = poly_nodes(nf, 0.5, deg);
      const Eigen::VectorXd ep = (P * pc - pf).cwiseAbs();
      const Eigen::VectorXd er = (R * pf - pc).cwiseAbs();
      const double scale = std::pow(0.05 + nc, deg);
      if (deg <= q) CHECK(ep.head(E).maxCoeff() < 1e-9 * scale);
      CHECK(ep.segment(E, nf - 2 * E).maxCoeff() < 1e-9 * scale);
      if (deg <= q - 1) CHECK(er.head(S).maxCoeff() < 1e-9 * scale);
      CHECK(er.segment(S, nc - 2 * S).maxCoeff() < 1e-9 * scale);
    }
  }
}

TEST_CASE("interface matrix R*P eigenvalue extremes") {
  // reference extreme eigenvalues of the Cartesian constant-coefficient
  // interface matrix for the higher-order pair at nc = 41
  const int nc = 41;
  const Eigen::MatrixXd M1 = interp_R(6, nc) * interp_P(6, nc);
  Eigen::VectorXd ev =
      Eigen::EigenSolver<Eigen::MatrixXd>(M1).eigenvalues().real();
  CHECK(ev.minCoeff() == doctest::Approx(0.202175911164221).epsilon(5e-8));
  CHECK(ev.maxCoeff() == doctest::Approx(2.339317314764304).epsilon(5e-8));
}

TEST_CASE("scaled coupling is adjoint in the weighted interface products") {
  const int nc = 31, nf = 2 * nc - 1;
  // arbitrary positive J*Lambda profiles
  Vec jc(nc), jf(nf);
  for (int i = 0; i < nc; ++i) jc[i] = 1.5 + 0.5 * std::sin(0.3 * i);
  for (int i = 0; i < nf; ++i) jf[i] = 2.0 + 0.7 * std::cos(0.2 * i);
  for (int order : {4, 6}) {
    ScaledCoupling sc(order, jc, jf);
    const Vec wc = make_norm(order, nc);
    const Vec wf = make_norm(order, nf);
    Vec c(2 * nc), v(2 * nf);
    for (int i = 0; i < 2 * nc; ++i) c[i] = std::sin(1.0 + 0.47 * i);
    for (int i = 0; i < 2 * nf; ++i) v[i] = std::cos(0.31 * i);
    const Vec Pc = sc.apply_P(c);
    const Vec Rv = sc.apply_R(v);
    // <P c, v>_hw = h1 sum w_i (JL)_i (Pc)_i . v_i ; coarse product has 2 h1
    const double h1 = 0.01;
    double lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < nf; ++i)
      lhs += h1 * wf[i] * jf[i] *
             (Pc[2 * i] * v[2 * i] + Pc[2 * i + 1] * v[2 * i + 1]);
    for (int j = 0; j < nc; ++j)
      rhs += 2.0 * h1 * wc[j] * jc[j] *
             (c[2 * j] * Rv[2 * j] + c[2 * j + 1] * Rv[2 * j + 1]);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("unit scaling reduces the coupling to plain P and R") {
  const int nc = 25, nf = 2 * nc - 1;
  ScaledCoupling sc(4, Vec::Ones(nc), Vec::Ones(nf));
  Vec c(2 * nc);
  for (int i = 0; i < 2 * nc; ++i) c[i] = 0.2 * i - 1.0;
  const Vec out = sc.apply_P(c);
  const Eigen::MatrixXd P = interp_P(4, nc);
  for (int i = 0; i < nf; ++i) {
    double a = 0.0;
    for (int j = 0; j < nc; ++j) a += P(i, j) * c[2 * j];
    CHECK(out[2 * i] == doctest::Approx(a).epsilon(1e-14));
  }
}
