#pragma once
// 1D summation-by-parts building blocks: diagonal norm weights, first
// derivative, variable-coefficient second derivative with and without a
// ghost point, and boundary-derivative stencils.  Orders 4 and 6.
//
// All operators are defined on a line of n nodes with spacing h.  The
// second-derivative operator is assembled from frozen per-node symmetric
// blocks M^(j):  G(gamma) = W^-1 (-M(gamma) + g_{n-1} e_{n-1} b_n^T
//                                            - g_0 e_0 b_1^T) / h^2,
// where M(gamma) = sum_j gamma_j M^(j) and b is the boundary-derivative
// stencil.  The ghost variant replaces b at the ghost end by the
// ghost-inclusive stencil, which only changes the last row.

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

#include "elastiq/coeffs.hpp"

namespace elastiq {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

struct ClosureTables {
  int order = 0;
  int q = 0;       // boundary accuracy of the 2q-order family
  int min_n = 0;   // smallest admissible line length
  int nw = 0;      // number of boundary-modified norm weights per end
  const double* w = nullptr;
  int d1_rows = 0, d1_cols = 0, d1_len = 0;
  const double* d1_int = nullptr;  // centered stencil, offsets -q..q
  const double* d1_bnd = nullptr;  // row-major d1_rows x d1_cols
  int nb = 0;                      // length of b1
  const double* b1 = nullptr;      // boundary derivative, left end
  int nbt = 0;                     // length of ghost stencil
  const double* bt1 = nullptr;     // ghost boundary derivative (ghost,0,1,..)
  int jl = 0, jr = 0, bs = 0, ks = 0;
  const double* mleft = nullptr;   // jl x bs x bs
  const double* mright = nullptr;  // jr x bs x bs
  const double* mker = nullptr;    // ks x ks
};

inline const ClosureTables& tables(int order) {
  namespace c = coeffs;
  static const ClosureTables t4 = {
      4, 2, 14, 4, c::kW4,
      c::kD1BndRows4, c::kD1BndCols4, 5, c::kD1Int4, &c::kD1Bnd4[0][0],
      4, c::kB1_4, 4, c::kBt1_4,
      c::kJL4, c::kJR4, c::kBS4, c::kKS4,
      &c::kM4Left[0][0][0], &c::kM4Right[0][0][0], &c::kM4Kernel[0][0]};
  static const ClosureTables t6 = {
      6, 3, 24, 6, c::kW6,
      c::kD1BndRows6, c::kD1BndCols6, 7, c::kD1Int6, &c::kD1Bnd6[0][0],
      5, c::kB1_6, 5, c::kBt1_6,
      c::kJL6, c::kJR6, c::kBS6, c::kKS6,
      &c::kM6Left[0][0][0], &c::kM6Right[0][0][0], &c::kM6Kernel[0][0]};
  if (order == 4) return t4;
  if (order == 6) return t6;
  throw std::invalid_argument("unsupported operator order " +
                              std::to_string(order));
}

// Norm weights on the reference unit-spacing line; the physical quadrature
// weight at node i is h * w_i.
inline Vec make_norm(int order, int n) {
  const ClosureTables& t = tables(order);
  if (n < t.min_n)
    throw std::invalid_argument("grid too small for order " +
                                std::to_string(order));
  Vec w = Vec::Ones(n);
  for (int i = 0; i < t.nw; ++i) {
    w[i] = t.w[i];
    w[n - 1 - i] = t.w[i];
  }
  return w;
}

// --- first derivative -------------------------------------------------

template <class S>
void apply_d1(int order, S h, const S* v, int n, S* out) {
  const ClosureTables& t = tables(order);
  const int q = t.q;
  const S ih = S(1) / h;
  for (int r = 0; r < t.d1_rows; ++r) {
    S accl = S(0), accr = S(0);
    for (int c = 0; c < t.d1_cols; ++c) {
      const double a = t.d1_bnd[r * t.d1_cols + c];
      accl += S(a) * v[c];
      accr -= S(a) * v[n - 1 - c];
    }
    out[r] = accl * ih;
    out[n - 1 - r] = accr * ih;
  }
  for (int i = t.d1_rows; i < n - t.d1_rows; ++i) {
    S acc = S(0);
    for (int k = 0; k < t.d1_len; ++k) acc += S(t.d1_int[k]) * v[i - q + k];
    out[i] = acc * ih;
  }
}

// Single output row of the first derivative (used for interface rows).
template <class S>
S apply_d1_row(int order, S h, const S* v, int n, int i) {
  const ClosureTables& t = tables(order);
  const int q = t.q;
  S acc = S(0);
  if (i < t.d1_rows) {
    for (int c = 0; c < t.d1_cols; ++c)
      acc += S(t.d1_bnd[i * t.d1_cols + c]) * v[c];
  } else if (i >= n - t.d1_rows) {
    const int r = n - 1 - i;
    for (int c = 0; c < t.d1_cols; ++c)
      acc -= S(t.d1_bnd[r * t.d1_cols + c]) * v[n - 1 - c];
  } else {
    for (int k = 0; k < t.d1_len; ++k) acc += S(t.d1_int[k]) * v[i - q + k];
  }
  return acc / h;
}

// --- boundary derivatives ----------------------------------------------

template <class S>
S bderiv_left(int order, S h, const S* v) {
  const ClosureTables& t = tables(order);
  S acc = S(0);
  for (int k = 0; k < t.nb; ++k) acc += S(t.b1[k]) * v[k];
  return acc / h;
}

template <class S>
S bderiv_right(int order, S h, const S* v, int n) {
  const ClosureTables& t = tables(order);
  S acc = S(0);
  for (int k = 0; k < t.nb; ++k) acc += S(t.b1[k]) * v[n - 1 - k];
  return -acc / h;
}

// Ghost variants: vg is the ghost value one spacing outside the boundary.
template <class S>
S bderiv_left_ghost(int order, S h, S vg, const S* v) {
  const ClosureTables& t = tables(order);
  S acc = S(t.bt1[0]) * vg;
  for (int k = 1; k < t.nbt; ++k) acc += S(t.bt1[k]) * v[k - 1];
  return acc / h;
}

template <class S>
S bderiv_right_ghost(int order, S h, S vg, const S* v, int n) {
  const ClosureTables& t = tables(order);
  S acc = S(t.bt1[0]) * vg;
  for (int k = 1; k < t.nbt; ++k) acc += S(t.bt1[k]) * v[n - k];
  return -acc / h;
}

// --- variable-coefficient second derivative -----------------------------

// out = G(gamma) v (length n).  If ghost_right, the right-end boundary term
// uses the ghost stencil with ghost value vg (only row n-1 differs from the
// non-ghost operator).
template <class S>
void apply_g(int order, S h, const S* gamma, const S* v, int n, S* out,
             bool ghost_right = false, S vg = S(0)) {
  const ClosureTables& t = tables(order);
  if (n < t.min_n) throw std::invalid_argument("apply_g: line too short");
  const int bs = t.bs, ks = t.ks, c = ks / 2;
  for (int i = 0; i < n; ++i) out[i] = S(0);
  // -M(gamma) v, left corner blocks
  for (int j = 0; j < t.jl; ++j) {
    const double* B = t.mleft + j * bs * bs;
    const S gj = gamma[j];
    for (int i = 0; i < bs; ++i) {
      S acc = S(0);
      for (int k = 0; k < bs; ++k) acc += S(B[i * bs + k]) * v[k];
      out[i] -= gj * acc;
    }
  }
  // interior kernel
  for (int j = t.jl; j < n - t.jr; ++j) {
    const S gj = gamma[j];
    for (int i = 0; i < ks; ++i) {
      S acc = S(0);
      for (int k = 0; k < ks; ++k) acc += S(t.mker[i * ks + k]) * v[j - c + k];
      out[j - c + i] -= gj * acc;
    }
  }
  // right corner blocks
  for (int j = 0; j < t.jr; ++j) {
    const double* B = t.mright + j * bs * bs;
    const S gj = gamma[n - t.jr + j];
    for (int i = 0; i < bs; ++i) {
      S acc = S(0);
      for (int k = 0; k < bs; ++k) acc += S(B[i * bs + k]) * v[n - bs + k];
      out[n - bs + i] -= gj * acc;
    }
  }
  // boundary-derivative terms (unit spacing inside; global 1/h^2 below)
  S bl = S(0);
  for (int k = 0; k < t.nb; ++k) bl += S(t.b1[k]) * v[k];
  out[0] -= gamma[0] * bl;
  S br;
  if (ghost_right) {
    br = S(t.bt1[0]) * vg;
    for (int k = 1; k < t.nbt; ++k) br += S(t.bt1[k]) * v[n - k];
    br = -br;
  } else {
    br = S(0);
    for (int k = 0; k < t.nb; ++k) br += S(t.b1[k]) * v[n - 1 - k];
    br = -br;
  }
  out[n - 1] += gamma[n - 1] * br;
  // norm and mesh scaling
  const S ih2 = S(1) / (h * h);
  for (int i = 0; i < t.nw; ++i) {
    out[i] *= ih2 / S(t.w[i]);
    out[n - 1 - i] *= ih2 / S(t.w[i]);
  }
  for (int i = t.nw; i < n - t.nw; ++i) out[i] *= ih2;
}

// Single output row i of G(gamma) v -- used when only the interface row of a
// 2D operator is needed.
template <class S>
S apply_g_row(int order, S h, const S* gamma, const S* v, int n, int i,
              bool ghost_right = false, S vg = S(0)) {
  const ClosureTables& t = tables(order);
  const int bs = t.bs, ks = t.ks, c = ks / 2;
  S acc = S(0);
  if (i < bs) {
    for (int j = 0; j < t.jl; ++j) {
      const double* B = t.mleft + j * bs * bs;
      S dot = S(0);
      for (int k = 0; k < bs; ++k) dot += S(B[i * bs + k]) * v[k];
      acc -= gamma[j] * dot;
    }
  }
  if (i >= n - bs) {
    const int il = i - (n - bs);
    for (int j = 0; j < t.jr; ++j) {
      const double* B = t.mright + j * bs * bs;
      S dot = S(0);
      for (int k = 0; k < bs; ++k) dot += S(B[il * bs + k]) * v[n - bs + k];
      acc -= gamma[n - t.jr + j] * dot;
    }
  }
  const int j0 = std::max(t.jl, i - c), j1 = std::min(n - t.jr - 1, i + c);
  for (int j = j0; j <= j1; ++j) {
    const int ik = i - (j - c);
    S dot = S(0);
    for (int k = 0; k < ks; ++k) dot += S(t.mker[ik * ks + k]) * v[j - c + k];
    acc -= gamma[j] * dot;
  }
  if (i == 0) {
    S bl = S(0);
    for (int k = 0; k < t.nb; ++k) bl += S(t.b1[k]) * v[k];
    acc -= gamma[0] * bl;
  }
  if (i == n - 1) {
    S br;
    if (ghost_right) {
      br = S(t.bt1[0]) * vg;
      for (int k = 1; k < t.nbt; ++k) br += S(t.bt1[k]) * v[n - k];
      br = -br;
    } else {
      br = S(0);
      for (int k = 0; k < t.nb; ++k) br += S(t.b1[k]) * v[n - 1 - k];
      br = -br;
    }
    acc += gamma[n - 1] * br;
  }
  const double wi = (i < t.nw) ? t.w[i] : (i >= n - t.nw ? t.w[n - 1 - i] : 1.0);
  return acc / (S(wi) * h * h);
}

// --- dense assemblies (test/diagnostic paths) ----------------------------

inline Mat d1_dense(int order, int n, double h) {
  Mat D = Mat::Zero(n, n);
  Vec e = Vec::Zero(n), col(n);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    apply_d1(order, h, e.data(), n, col.data());
    D.col(j) = col;
    e[j] = 0.0;
  }
  return D;
}

// Symmetric part M(gamma) on the unit-spacing line (no norm or h scaling).
inline Mat m_dense(int order, int n, const Vec& gamma) {
  const ClosureTables& t = tables(order);
  const int bs = t.bs, ks = t.ks, c = ks / 2;
  Mat M = Mat::Zero(n, n);
  for (int j = 0; j < t.jl; ++j) {
    const double* B = t.mleft + j * bs * bs;
    for (int i = 0; i < bs; ++i)
      for (int k = 0; k < bs; ++k) M(i, k) += gamma[j] * B[i * bs + k];
  }
  for (int j = t.jl; j < n - t.jr; ++j)
    for (int i = 0; i < ks; ++i)
      for (int k = 0; k < ks; ++k)
        M(j - c + i, j - c + k) += gamma[j] * t.mker[i * ks + k];
  for (int j = 0; j < t.jr; ++j) {
    const double* B = t.mright + j * bs * bs;
    for (int i = 0; i < bs; ++i)
      for (int k = 0; k < bs; ++k)
        M(n - bs + i, n - bs + k) += gamma[n - t.jr + j] * B[i * bs + k];
  }
  return M;
}

// Dense non-ghost operator G(gamma), n x n.
inline Mat g_dense(int order, int n, double h, const Vec& gamma) {
  Mat G = Mat::Zero(n, n);
  Vec e = Vec::Zero(n), col(n);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    apply_g(order, h, gamma.data(), e.data(), n, col.data());
    G.col(j) = col;
    e[j] = 0.0;
  }
  return G;
}

// Dense ghost operator: n x (n+1); column n is the ghost value beyond the
// right end.
inline Mat g_ghost_dense(int order, int n, double h, const Vec& gamma) {
  Mat G = Mat::Zero(n, n + 1);
  Vec e = Vec::Zero(n), col(n);
  for (int j = 0; j < n; ++j) {
    e[j] = 1.0;
    apply_g(order, h, gamma.data(), e.data(), n, col.data(), true, 0.0);
    G.col(j) = col;
    e[j] = 0.0;
  }
  Vec z = Vec::Zero(n);
  apply_g(order, h, gamma.data(), z.data(), n, col.data(), true, 1.0);
  G.col(n) = col;
  return G;
}

// Dense bilinear form S_gamma for the non-ghost (or ghost) operator, defined
// exactly by the SBP identity:
//   h W G = (-M + g_{n-1} e_{n-1} b_n^T - g_0 e_0 b_1^T)/h
//   => S(u,v) = u^T (M/h) v  on the non-ghost part, ghost column following
// the same identity.  Returns M/h (symmetric positive semidefinite).
inline Mat s_form_dense(int order, int n, double h, const Vec& gamma) {
  return m_dense(order, n, gamma) / h;
}

}  // namespace elastiq
