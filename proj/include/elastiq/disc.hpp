// Two-dimensional semi-discretization on one curvilinear block and the
// ghost-point interface system coupling a coarse and a fine block across a
// 1:2 nonconforming interface.
//
// A displacement field on a block with n1 x n2 nodes is stored as a
// (2 n1) x (n2 [+1]) matrix: entry (2 i + p, j) is component p at node
// (i, j).  Blocks with a ghost line carry one extra column at j = n2
// holding the ghost values one spacing beyond s = 1.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "elastiq/grid.hpp"
#include "elastiq/interp.hpp"
#include "elastiq/material.hpp"
#include "elastiq/sbp.hpp"

namespace elastiq {

using Field = Eigen::MatrixXd;

struct BlockDisc {
  int order = 4;
  BlockGrid grid;
  MaterialTensors mat;
  bool ghost = false;  // ghost column beyond s = 1 (coarse interface or
                       // fine traction top)
  Vec wr, ws;          // reference norm weights per direction

  BlockDisc() = default;
  BlockDisc(int order_, BlockGrid g, const MaterialField& m, bool ghost_)
      : order(order_), grid(std::move(g)), ghost(ghost_) {
    mat = assemble_tensors(m, grid.met);
    wr = make_norm(order, grid.g.n1);
    ws = make_norm(order, grid.g.n2);
  }

  int n1() const { return grid.g.n1; }
  int n2() const { return grid.g.n2; }
  double h1() const { return grid.g.h1; }
  double h2() const { return grid.g.h2; }

  Field make_field() const {
    return Field::Zero(2 * n1(), n2() + (ghost ? 1 : 0));
  }

  // --- full operator application -----------------------------------------
  // out = L u (no 1/(J rho) factor), out is (2 n1) x n2.
  void apply_L(const Field& u, Field& out) const {
    const int N1 = n1(), N2 = n2();
    out.setZero(2 * N1, N2);
    const double hr = h1(), hs = h2();
    std::vector<double> l0(std::max(N1, N2)), l1v(std::max(N1, N2)),
        g00(std::max(N1, N2)), g01(std::max(N1, N2)), g10(std::max(N1, N2)),
        g11(std::max(N1, N2)), tmp(std::max(N1, N2));

    // G1(N11) along r
    for (int j = 0; j < N2; ++j) {
      for (int i = 0; i < N1; ++i) {
        l0[i] = u(2 * i, j);
        l1v[i] = u(2 * i + 1, j);
        g00[i] = mat.N11.a11(i, j);
        g01[i] = mat.N11.a12(i, j);
        g10[i] = mat.N11.a21(i, j);
        g11[i] = mat.N11.a22(i, j);
      }
      auto add = [&](const std::vector<double>& g, const std::vector<double>& v,
                     int p) {
        apply_g(order, hr, g.data(), v.data(), N1, tmp.data());
        for (int i = 0; i < N1; ++i) out(2 * i + p, j) += tmp[i];
      };
      add(g00, l0, 0);
      add(g01, l1v, 0);
      add(g10, l0, 1);
      add(g11, l1v, 1);
    }

    // G2(N22) along s (ghost variant on blocks with a ghost line)
    for (int i = 0; i < N1; ++i) {
      for (int j = 0; j < N2; ++j) {
        l0[j] = u(2 * i, j);
        l1v[j] = u(2 * i + 1, j);
        g00[j] = mat.N22.a11(i, j);
        g01[j] = mat.N22.a12(i, j);
        g10[j] = mat.N22.a21(i, j);
        g11[j] = mat.N22.a22(i, j);
      }
      const double vg0 = ghost ? u(2 * i, N2) : 0.0;
      const double vg1 = ghost ? u(2 * i + 1, N2) : 0.0;
      auto add = [&](const std::vector<double>& g, const std::vector<double>& v,
                     double vg, int p) {
        apply_g(order, hs, g.data(), v.data(), N2, tmp.data(), ghost, vg);
        for (int j = 0; j < N2; ++j) out(2 * i + p, j) += tmp[j];
      };
      add(g00, l0, vg0, 0);
      add(g01, l1v, vg1, 0);
      add(g10, l0, vg0, 1);
      add(g11, l1v, vg1, 1);
    }

    // D1(N12 D2 u): w_q = D2 u_q, z_p = N12(p,:) . w, out += D1 z_p
    Arr w0(N1, N2), w1(N1, N2), z0(N1, N2), z1(N1, N2);
    for (int i = 0; i < N1; ++i) {
      for (int j = 0; j < N2; ++j) {
        l0[j] = u(2 * i, j);
        l1v[j] = u(2 * i + 1, j);
      }
      apply_d1(order, hs, l0.data(), N2, tmp.data());
      for (int j = 0; j < N2; ++j) w0(i, j) = tmp[j];
      apply_d1(order, hs, l1v.data(), N2, tmp.data());
      for (int j = 0; j < N2; ++j) w1(i, j) = tmp[j];
    }
    z0 = mat.N12.a11 * w0 + mat.N12.a12 * w1;
    z1 = mat.N12.a21 * w0 + mat.N12.a22 * w1;
    for (int j = 0; j < N2; ++j) {
      for (int i = 0; i < N1; ++i) {
        l0[i] = z0(i, j);
        l1v[i] = z1(i, j);
      }
      apply_d1(order, hr, l0.data(), N1, tmp.data());
      for (int i = 0; i < N1; ++i) out(2 * i, j) += tmp[i];
      apply_d1(order, hr, l1v.data(), N1, tmp.data());
      for (int i = 0; i < N1; ++i) out(2 * i + 1, j) += tmp[i];
    }

    // D2(N21 D1 u)
    for (int j = 0; j < N2; ++j) {
      for (int i = 0; i < N1; ++i) {
        l0[i] = u(2 * i, j);
        l1v[i] = u(2 * i + 1, j);
      }
      apply_d1(order, hr, l0.data(), N1, tmp.data());
      for (int i = 0; i < N1; ++i) w0(i, j) = tmp[i];
      apply_d1(order, hr, l1v.data(), N1, tmp.data());
      for (int i = 0; i < N1; ++i) w1(i, j) = tmp[i];
    }
    z0 = mat.N21.a11 * w0 + mat.N21.a12 * w1;
    z1 = mat.N21.a21 * w0 + mat.N21.a22 * w1;
    for (int i = 0; i < N1; ++i) {
      for (int j = 0; j < N2; ++j) {
        l0[j] = z0(i, j);
        l1v[j] = z1(i, j);
      }
      apply_d1(order, hs, l0.data(), N2, tmp.data());
      for (int j = 0; j < N2; ++j) out(2 * i, j) += tmp[j];
      apply_d1(order, hs, l1v.data(), N2, tmp.data());
      for (int j = 0; j < N2; ++j) out(2 * i + 1, j) += tmp[j];
    }
  }

  // --- single-node evaluation (interface rows) ----------------------------
  Eigen::Vector2d L_row(const Field& u, int i, int j) const {
    const int N1 = n1(), N2 = n2();
    const double hr = h1(), hs = h2();
    const ClosureTables& t = tables(order);
    Eigen::Vector2d res = Eigen::Vector2d::Zero();
    std::vector<double> l0(std::max(N1, N2)), l1v(std::max(N1, N2)),
        gl(std::max(N1, N2));

    // G1(N11) along the r-line j
    for (int k = 0; k < N1; ++k) {
      l0[k] = u(2 * k, j);
      l1v[k] = u(2 * k + 1, j);
    }
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        const Arr& a = (p == 0) ? (q == 0 ? mat.N11.a11 : mat.N11.a12)
                                : (q == 0 ? mat.N11.a21 : mat.N11.a22);
        for (int k = 0; k < N1; ++k) gl[k] = a(k, j);
        res[p] += apply_g_row(order, hr, gl.data(),
                              (q == 0 ? l0 : l1v).data(), N1, i);
      }

    // G2(N22) along the s-line i
    for (int k = 0; k < N2; ++k) {
      l0[k] = u(2 * i, k);
      l1v[k] = u(2 * i + 1, k);
    }
    const double vg0 = ghost ? u(2 * i, N2) : 0.0;
    const double vg1 = ghost ? u(2 * i + 1, N2) : 0.0;
    for (int p = 0; p < 2; ++p)
      for (int q = 0; q < 2; ++q) {
        const Arr& a = (p == 0) ? (q == 0 ? mat.N22.a11 : mat.N22.a12)
                                : (q == 0 ? mat.N22.a21 : mat.N22.a22);
        for (int k = 0; k < N2; ++k) gl[k] = a(i, k);
        res[p] += apply_g_row(order, hs, gl.data(),
                              (q == 0 ? l0 : l1v).data(), N2, j, ghost,
                              q == 0 ? vg0 : vg1);
      }

    // D1(N12 D2 u) at (i, j): needs z = N12 (D2 u) on the r-support of i
    std::vector<int> isup;
    if (i < t.d1_rows)
      for (int k = 0; k < t.d1_cols; ++k) isup.push_back(k);
    else if (i >= N1 - t.d1_rows)
      for (int k = 0; k < t.d1_cols; ++k) isup.push_back(N1 - 1 - k);
    else
      for (int k = -t.q; k <= t.q; ++k) isup.push_back(i + k);
    {
      std::vector<double> zr0(N1, 0.0), zr1(N1, 0.0);
      for (int ip : isup) {
        for (int k = 0; k < N2; ++k) {
          l0[k] = u(2 * ip, k);
          l1v[k] = u(2 * ip + 1, k);
        }
        const double d0 = apply_d1_row(order, hs, l0.data(), N2, j);
        const double d1 = apply_d1_row(order, hs, l1v.data(), N2, j);
        zr0[ip] = mat.N12.a11(ip, j) * d0 + mat.N12.a12(ip, j) * d1;
        zr1[ip] = mat.N12.a21(ip, j) * d0 + mat.N12.a22(ip, j) * d1;
      }
      res[0] += apply_d1_row(order, hr, zr0.data(), N1, i);
      res[1] += apply_d1_row(order, hr, zr1.data(), N1, i);
    }

    // D2(N21 D1 u) at (i, j): needs y = N21 (D1 u) on the s-support of j
    std::vector<int> jsup;
    if (j < t.d1_rows)
      for (int k = 0; k < t.d1_cols; ++k) jsup.push_back(k);
    else if (j >= N2 - t.d1_rows)
      for (int k = 0; k < t.d1_cols; ++k) jsup.push_back(N2 - 1 - k);
    else
      for (int k = -t.q; k <= t.q; ++k) jsup.push_back(j + k);
    {
      std::vector<double> ys0(N2, 0.0), ys1(N2, 0.0);
      for (int jp : jsup) {
        for (int k = 0; k < N1; ++k) {
          l0[k] = u(2 * k, jp);
          l1v[k] = u(2 * k + 1, jp);
        }
        const double d0 = apply_d1_row(order, hr, l0.data(), N1, i);
        const double d1 = apply_d1_row(order, hr, l1v.data(), N1, i);
        ys0[jp] = mat.N21.a11(i, jp) * d0 + mat.N21.a12(i, jp) * d1;
        ys1[jp] = mat.N21.a21(i, jp) * d0 + mat.N21.a22(i, jp) * d1;
      }
      res[0] += apply_d1_row(order, hs, ys0.data(), N2, j);
      res[1] += apply_d1_row(order, hs, ys1.data(), N2, j);
    }
    return res;
  }

  // --- traction operators at an s-extreme row -----------------------------
  // A_2 u = N21 D1 u + N22 (boundary s-derivative) at node i of row j_end.
  // At s = 1 with a ghost line the ghost-inclusive stencil is used; at
  // s = 0 (or s = 1 without ghost) the one-sided stencil of the non-ghost
  // operator applies.
  Eigen::Vector2d traction_s(const Field& u, int i, bool at_top) const {
    const int N1 = n1(), N2 = n2();
    const int j = at_top ? N2 - 1 : 0;
    const double hr = h1(), hs = h2();
    std::vector<double> l0(std::max(N1, N2)), l1v(std::max(N1, N2));
    for (int k = 0; k < N1; ++k) {
      l0[k] = u(2 * k, j);
      l1v[k] = u(2 * k + 1, j);
    }
    const double d1r0 = apply_d1_row(order, hr, l0.data(), N1, i);
    const double d1r1 = apply_d1_row(order, hr, l1v.data(), N1, i);
    for (int k = 0; k < N2; ++k) {
      l0[k] = u(2 * i, k);
      l1v[k] = u(2 * i + 1, k);
    }
    double ds0, ds1;
    if (at_top && ghost) {
      ds0 = bderiv_right_ghost(order, hs, u(2 * i, N2), l0.data(), N2);
      ds1 = bderiv_right_ghost(order, hs, u(2 * i + 1, N2), l1v.data(), N2);
    } else if (at_top) {
      ds0 = bderiv_right(order, hs, l0.data(), N2);
      ds1 = bderiv_right(order, hs, l1v.data(), N2);
    } else {
      ds0 = bderiv_left(order, hs, l0.data());
      ds1 = bderiv_left(order, hs, l1v.data());
    }
    Eigen::Vector2d res;
    res[0] = mat.N21.a11(i, j) * d1r0 + mat.N21.a12(i, j) * d1r1 +
             mat.N22.a11(i, j) * ds0 + mat.N22.a12(i, j) * ds1;
    res[1] = mat.N21.a21(i, j) * d1r0 + mat.N21.a22(i, j) * d1r1 +
             mat.N22.a21(i, j) * ds0 + mat.N22.a22(i, j) * ds1;
    return res;
  }

  // J * Lambda on a given s-row, as a length-n1 vector.
  Vec jlam_row(int j) const {
    Vec v(n1());
    for (int i = 0; i < n1(); ++i) v[i] = grid.met.J(i, j) * grid.met.lam(i, j);
    return v;
  }
  // J * rho on a given s-row.
  Vec jrho_row(int j) const {
    Vec v(n1());
    for (int i = 0; i < n1(); ++i) v[i] = grid.met.J(i, j) * mat.rho(i, j);
    return v;
  }
};

// Dirichlet data g(x, y, t) -> 2-vector, applied by injection on the
// requested sides.
template <class G>
void apply_dirichlet(const BlockDisc& B, Field& u, double t, G g,
                     bool bottom, bool top) {
  const int N1 = B.n1(), N2 = B.n2();
  auto set = [&](int i, int j) {
    const Eigen::Vector2d v = g(B.grid.met.x(i, j), B.grid.met.y(i, j), t);
    u(2 * i, j) = v[0];
    u(2 * i + 1, j) = v[1];
  };
  for (int j = 0; j < N2; ++j) {
    set(0, j);
    set(N1 - 1, j);
  }
  if (bottom)
    for (int i = 1; i < N1 - 1; ++i) set(i, 0);
  if (top)
    for (int i = 1; i < N1 - 1; ++i) set(i, N2 - 1);
}

// Traction (free-surface-type) boundary condition at the top row of a block
// with a ghost line: solves the 2x2 system per node for the ghost values so
// that (1/(J Lambda)) A_2 u equals the prescribed traction tau(x, y, t).
template <class G>
void solve_traction_top(const BlockDisc& B, Field& u, double t, G tau) {
  if (!B.ghost) throw std::logic_error("traction top requires a ghost line");
  const int N1 = B.n1(), N2 = B.n2();
  const ClosureTables& tb = tables(B.order);
  // coefficient of the ghost value in the ghost boundary derivative:
  // bderiv_right_ghost = -(bt1[0] vg + known)/h
  const double cg = -tb.bt1[0] / B.h2();
  for (int i = 0; i < N1; ++i) {
    const double jl = B.grid.met.J(i, N2 - 1) * B.grid.met.lam(i, N2 - 1);
    const Eigen::Vector2d data =
        tau(B.grid.met.x(i, N2 - 1), B.grid.met.y(i, N2 - 1), t);
    // residual with zero ghost
    u(2 * i, N2) = 0.0;
    u(2 * i + 1, N2) = 0.0;
    const Eigen::Vector2d r0 = B.traction_s(u, i, true);
    const Eigen::Matrix2d A = cg * B.mat.N22.at(i, N2 - 1);
    const Eigen::Vector2d gvals = A.lu().solve(jl * data - r0);
    u(2 * i, N2) = gvals[0];
    u(2 * i + 1, N2) = gvals[1];
  }
}

// --- interface system -----------------------------------------------------

// Couples a coarse block (interface at its top, s = 1, with ghost line) to a
// fine block (interface at its bottom, s = 0) with twice the resolution.
struct InterfaceSystem {
  const BlockDisc* cb = nullptr;
  const BlockDisc* fb = nullptr;
  ScaledCoupling cpl;
  Vec jlam_c, jlam_f;    // J*Lambda on the interface rows
  Vec jrho_ci, jrho_fi;  // J*rho on the interface rows
  double pen = 0.0;      // h2 * omega_1 on the fine side
  Eigen::MatrixXd M;     // row-scaled interface matrix
  Vec dscale;            // original diagonal of the unscaled matrix
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;

  InterfaceSystem() = default;
  InterfaceSystem(const BlockDisc& c, const BlockDisc& f) : cb(&c), fb(&f) {
    if (f.n1() != 2 * c.n1() - 1)
      throw std::invalid_argument("interface is not 1:2");
    if (!c.ghost) throw std::invalid_argument("coarse block needs ghost line");
    jlam_c = c.jlam_row(c.n2() - 1);
    jlam_f = f.jlam_row(0);
    jrho_ci = c.jrho_row(c.n2() - 1);
    jrho_fi = f.jrho_row(0);
    cpl = ScaledCoupling(c.order, jlam_c, jlam_f);
    pen = f.h2() * tables(f.order).w[0];
    assemble();
  }

  // interpolated coarse trace, used for the fine interface injection
  Vec interface_injection(const Field& uc) const {
    const int nc = cb->n1();
    Vec ctr(2 * nc);
    const int jc = cb->n2() - 1;
    for (int i = 0; i < 2 * nc; ++i) ctr[i] = uc(i, jc);
    return cpl.apply_P(ctr);
  }

  void inject(const Field& uc, Field& uf) const {
    const Vec v = interface_injection(uc);
    for (int i = 0; i < 2 * fb->n1(); ++i) uf(i, 0) = v[i];
  }

  // eta = (J rho)_f P((J rho)_c^-1 Lt c |_G) - L f |_G, length 2 nf
  Vec eta(const Field& uc, const Field& uf) const {
    const int nc = cb->n1(), nf = fb->n1();
    const int jc = cb->n2() - 1;
    Vec lc(2 * nc);
    for (int i = 0; i < nc; ++i) {
      const Eigen::Vector2d v = cb->L_row(uc, i, jc) / jrho_ci[i];
      lc[2 * i] = v[0];
      lc[2 * i + 1] = v[1];
    }
    Vec e = cpl.apply_P(lc);
    for (int i = 0; i < nf; ++i) {
      const Eigen::Vector2d v = fb->L_row(uf, i, 0);
      e[2 * i] = jrho_fi[i] * e[2 * i] - v[0];
      e[2 * i + 1] = jrho_fi[i] * e[2 * i + 1] - v[1];
    }
    return e;
  }

  // residual of the traction-continuity equation as a function of the
  // coarse ghost line stored in uc
  Vec residual(const Field& uc, const Field& uf) const {
    const int nc = cb->n1(), nf = fb->n1();
    Vec tc(2 * nc), af(2 * nf);
    for (int i = 0; i < nc; ++i) {
      const Eigen::Vector2d v = cb->traction_s(uc, i, true) / jlam_c[i];
      tc[2 * i] = v[0];
      tc[2 * i + 1] = v[1];
    }
    const Vec et = eta(uc, uf);
    for (int i = 0; i < nf; ++i) {
      const Eigen::Vector2d v = fb->traction_s(uf, i, false);
      af[2 * i] = (v[0] - pen * et[2 * i]) / jlam_f[i];
      af[2 * i + 1] = (v[1] - pen * et[2 * i + 1]) / jlam_f[i];
    }
    return tc - cpl.apply_R(af);
  }

  // Closed-form column of the unscaled interface matrix: effect of a unit
  // ghost value at coarse node i0, component p0.  With zero fields the ghost
  // enters only through the ghost boundary-derivative stencil (traction) and
  // the modified last row of the ghost operator (via eta).
  Vec matrix_column(int i0, int p0) const {
    const int nc = cb->n1(), nf = fb->n1();
    const ClosureTables& t = tables(cb->order);
    const int jc = cb->n2() - 1;
    const double h2c = cb->h2();
    const double bt0 = t.bt1[0];
    const Eigen::Matrix2d N22 = cb->mat.N22.at(i0, jc);
    // traction: bderiv_right_ghost contributes (-bt0/h) vg
    Vec tc = Vec::Zero(2 * nc);
    for (int p = 0; p < 2; ++p)
      tc[2 * i0 + p] = N22(p, p0) * (-bt0 / h2c) / jlam_c[i0];
    // ghost-operator last row contributes gamma_(n-1) (-bt0) / (w0 h^2)
    Vec lc = Vec::Zero(2 * nc);
    for (int p = 0; p < 2; ++p)
      lc[2 * i0 + p] =
          N22(p, p0) * (-bt0) / (t.w[0] * h2c * h2c) / jrho_ci[i0];
    Vec e = cpl.apply_P(lc);
    Vec af(2 * nf);
    for (int i = 0; i < nf; ++i)
      for (int p = 0; p < 2; ++p)
        af[2 * i + p] = -pen * jrho_fi[i] * e[2 * i + p] / jlam_f[i];
    return tc - cpl.apply_R(af);
  }

  void assemble() {
    const int nc = cb->n1();
    Eigen::MatrixXd M0(2 * nc, 2 * nc);
    for (int i = 0; i < nc; ++i)
      for (int p = 0; p < 2; ++p) M0.col(2 * i + p) = matrix_column(i, p);
    dscale = M0.diagonal();
    if (dscale.minCoeff() <= 0.0)
      throw std::runtime_error("interface matrix diagonal not positive");
    M = dscale.cwiseInverse().asDiagonal() * M0;
    lu.compute(M);
  }

  // Solve for the coarse ghost line so that residual(uc, uf) = 0, writing
  // the result into the ghost column of uc.
  void solve(Field& uc, const Field& uf) const {
    const int nc = cb->n1();
    uc.col(cb->n2()).setZero();
    const Vec r0 = residual(uc, uf);
    const Vec g = lu.solve(dscale.cwiseInverse().asDiagonal() * (-r0));
    for (int i = 0; i < 2 * nc; ++i) uc(i, cb->n2()) = g[i];
  }
};

}  // namespace elastiq
