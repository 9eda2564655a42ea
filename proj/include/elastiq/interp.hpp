// Order-preserving interpolation (coarse -> fine) and restriction
// (fine -> coarse) across the 1:2 interface, plus the metric-scaled coupling
// operators acting on interleaved 2-vector interface traces.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "elastiq/coeffs.hpp"
#include "elastiq/sbp.hpp"

namespace elastiq {

// Dense prolongation P (nf x nc, nf = 2 nc - 1) for the given SBP order
// (4 -> degree-2 edge / degree-3 interior exactness, 6 -> 3/5).
inline Eigen::MatrixXd interp_P(int order, int nc) {
  const bool q2 = (order == 4);
  if (!q2 && order != 6) throw std::invalid_argument("order must be 4 or 6");
  const int E = q2 ? coeffs::kInterpE2 : coeffs::kInterpE3;
  const int S = q2 ? coeffs::kInterpS2 : coeffs::kInterpS3;
  const int we = q2 ? coeffs::kInterpWe2 : coeffs::kInterpWe3;
  const int wo = q2 ? coeffs::kInterpWo2 : coeffs::kInterpWo3;
  const int nf = 2 * nc - 1;
  if (nf < 2 * E || nc < S + wo + 2)
    throw std::invalid_argument("coarse interface too small for interpolation");
  Eigen::MatrixXd P = Eigen::MatrixXd::Zero(nf, nc);
  for (int i = E; i < nf - E; ++i) {
    if (i % 2 == 0) {
      const int j = i / 2;
      for (int k = 0; k <= 2 * we; ++k)
        P(i, j - we + k) = q2 ? coeffs::kInterpEv2[k] : coeffs::kInterpEv3[k];
    } else {
      const int j = (i - 1) / 2;
      for (int k = 0; k <= 2 * wo + 1; ++k)
        P(i, j - wo + k) = q2 ? coeffs::kInterpOd2[k] : coeffs::kInterpOd3[k];
    }
  }
  for (int i = 0; i < E; ++i)
    for (int j = 0; j < S; ++j) {
      const double v = q2 ? coeffs::kInterpEdge2[i][j] : coeffs::kInterpEdge3[i][j];
      P(i, j) = v;
      P(nf - 1 - i, nc - 1 - j) = v;
    }
  return P;
}

// Restriction by norm compatibility: R = (1/2) W_2h^{-1} P^T W_h, with the
// reference (unit-spacing) boundary-modified norm weights.
inline Eigen::MatrixXd interp_R(int order, int nc) {
  const int nf = 2 * nc - 1;
  const Eigen::MatrixXd P = interp_P(order, nc);
  const Vec wf = make_norm(order, nf);
  const Vec wc = make_norm(order, nc);
  return 0.5 * wc.cwiseInverse().asDiagonal() * P.transpose() *
         wf.asDiagonal();
}

// max |P^T W_h - 2 W_2h R|, zero (to roundoff) by construction.
inline double interp_compatibility_residual(int order, int nc) {
  const int nf = 2 * nc - 1;
  const Eigen::MatrixXd P = interp_P(order, nc);
  const Eigen::MatrixXd R = interp_R(order, nc);
  const Vec wf = make_norm(order, nf);
  const Vec wc = make_norm(order, nc);
  return (P.transpose() * wf.asDiagonal() -
          2.0 * wc.asDiagonal() * R.matrix())
      .cwiseAbs()
      .maxCoeff();
}

// Metric-scaled interface coupling.  With diagonal scalings built from the
// interface-row values of J*Lambda on each side,
//   P_s = (J L)_f^{-1/2} (P (x) I2) (J L)_c^{1/2},
//   R_s = (J L)_c^{-1/2} (R (x) I2) (J L)_f^{1/2},
// so that <P_s c, v>_hw = <c, R_s v>_2hw for the weighted interface products.
struct ScaledCoupling {
  Eigen::MatrixXd P, R;     // scalar operators
  Vec sc, sf;               // sqrt(J*Lambda) on coarse / fine interface rows

  ScaledCoupling() = default;
  ScaledCoupling(int order, const Vec& jlam_c, const Vec& jlam_f) {
    const int nc = static_cast<int>(jlam_c.size());
    const int nf = static_cast<int>(jlam_f.size());
    if (nf != 2 * nc - 1) throw std::invalid_argument("not a 1:2 interface");
    P = interp_P(order, nc);
    R = interp_R(order, nc);
    sc = jlam_c.cwiseSqrt();
    sf = jlam_f.cwiseSqrt();
  }

  // interleaved 2-vectors: u[2i + p], p = component
  Vec apply_P(const Vec& c) const {
    const int nc = static_cast<int>(P.cols());
    const int nf = static_cast<int>(P.rows());
    Vec out = Vec::Zero(2 * nf);
    for (int i = 0; i < nf; ++i) {
      double a0 = 0.0, a1 = 0.0;
      for (int j = 0; j < nc; ++j) {
        const double w = P(i, j) * sc[j];
        a0 += w * c[2 * j];
        a1 += w * c[2 * j + 1];
      }
      out[2 * i] = a0 / sf[i];
      out[2 * i + 1] = a1 / sf[i];
    }
    return out;
  }

  Vec apply_R(const Vec& f) const {
    const int nc = static_cast<int>(R.rows());
    const int nf = static_cast<int>(R.cols());
    Vec out = Vec::Zero(2 * nc);
    for (int j = 0; j < nc; ++j) {
      double a0 = 0.0, a1 = 0.0;
      for (int i = 0; i < nf; ++i) {
        const double w = R(j, i) * sf[i];
        a0 += w * f[2 * i];
        a1 += w * f[2 * i + 1];
      }
      out[2 * j] = a0 / sc[j];
      out[2 * j + 1] = a1 / sc[j];
    }
    return out;
  }
};

}  // namespace elastiq
