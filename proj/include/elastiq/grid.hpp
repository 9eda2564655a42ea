// Block grids: reference-domain discretization, curvilinear mappings with
// analytic partials, metric data (inverse metric derivatives, Jacobian, and
// the interface scaling factor), and interface normals.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "elastiq/sbp.hpp"

namespace elastiq {

using Arr = Eigen::ArrayXXd;

struct NonPositiveJacobian : std::runtime_error {
  int i, j;
  NonPositiveJacobian(int i_, int j_, double val)
      : std::runtime_error("non-positive Jacobian " + std::to_string(val) +
                           " at node (" + std::to_string(i_) + "," +
                           std::to_string(j_) + ")"),
        i(i_), j(j_) {}
};

struct NotOnInterface : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReferenceGrid {
  int n1 = 0, n2 = 0;
  double h1 = 0.0, h2 = 0.0;  // per-block reference spacings, h = 1/(n-1)
  ReferenceGrid() = default;
  ReferenceGrid(int n1_, int n2_) : n1(n1_), n2(n2_) {
    if (n1 < 2 || n2 < 2) throw std::invalid_argument("grid too small");
    h1 = 1.0 / (n1 - 1);
    h2 = 1.0 / (n2 - 1);
  }
};

// (r,s) in [0,1]^2 -> (x,y), with analytic partials
// dmap = [[x_r, x_s], [y_r, y_s]].
struct CurvilinearMapping {
  std::function<Eigen::Vector2d(double, double)> map;
  std::function<Eigen::Matrix2d(double, double)> dmap;
};

// Per-node metric data.  All arrays are n1 x n2 (i = r index, j = s index).
struct MetricData {
  Arr x, y;                    // physical coordinates
  Arr xi11, xi12, xi21, xi22;  // r_x, s_x, r_y, s_y
  Arr J;                       // Jacobian x_r*y_s - x_s*y_r > 0
  Arr lam;                     // sqrt(s_x^2 + s_y^2), all nodes
};

enum class Side { Coarse, Fine };

inline MetricData build_metrics(const CurvilinearMapping& m,
                                const ReferenceGrid& g) {
  MetricData d;
  d.x.resize(g.n1, g.n2);
  d.y.resize(g.n1, g.n2);
  d.xi11.resize(g.n1, g.n2);
  d.xi12.resize(g.n1, g.n2);
  d.xi21.resize(g.n1, g.n2);
  d.xi22.resize(g.n1, g.n2);
  d.J.resize(g.n1, g.n2);
  d.lam.resize(g.n1, g.n2);
  for (int j = 0; j < g.n2; ++j) {
    const double s = j * g.h2;
    for (int i = 0; i < g.n1; ++i) {
      const double r = i * g.h1;
      const Eigen::Vector2d p = m.map(r, s);
      const Eigen::Matrix2d dm = m.dmap(r, s);
      const double xr = dm(0, 0), xs = dm(0, 1), yr = dm(1, 0), ys = dm(1, 1);
      const double J = xr * ys - xs * yr;
      if (!(J > 0.0)) throw NonPositiveJacobian(i, j, J);
      d.x(i, j) = p[0];
      d.y(i, j) = p[1];
      d.J(i, j) = J;
      // metric relations: J r_x = y_s, J r_y = -x_s, J s_x = -y_r, J s_y = x_r
      d.xi11(i, j) = ys / J;
      d.xi21(i, j) = -xs / J;
      d.xi12(i, j) = -yr / J;
      d.xi22(i, j) = xr / J;
      d.lam(i, j) = std::sqrt(d.xi12(i, j) * d.xi12(i, j) +
                              d.xi22(i, j) * d.xi22(i, j));
    }
  }
  return d;
}

struct BlockGrid {
  ReferenceGrid g;
  CurvilinearMapping mapping;
  MetricData met;
  Side side = Side::Coarse;

  BlockGrid() = default;
  BlockGrid(ReferenceGrid g_, CurvilinearMapping m_, Side side_)
      : g(g_), mapping(std::move(m_)), side(side_) {
    met = build_metrics(mapping, g);
  }

  // s index of the coupling interface row (top of coarse, bottom of fine).
  int interface_j() const { return side == Side::Coarse ? g.n2 - 1 : 0; }
};

inline Eigen::Vector2d outward_normal(const BlockGrid& b, int i, int j) {
  if (j != b.interface_j()) throw NotOnInterface("node not on interface row");
  const double sgn = (b.side == Side::Coarse) ? 1.0 : -1.0;
  const double lam = b.met.lam(i, j);
  return {sgn * b.met.xi12(i, j) / lam, sgn * b.met.xi22(i, j) / lam};
}

// --- built-in mappings ----------------------------------------------------

inline CurvilinearMapping make_rectangle_mapping(double x0, double x1,
                                                 double y0, double y1) {
  CurvilinearMapping m;
  m.map = [=](double r, double s) {
    return Eigen::Vector2d(x0 + (x1 - x0) * r, y0 + (y1 - y0) * s);
  };
  m.dmap = [=](double, double) {
    Eigen::Matrix2d d;
    d << (x1 - x0), 0.0, 0.0, (y1 - y0);
    return d;
  };
  return m;
}

namespace topo {
constexpr double kPi = 3.14159265358979323846;
inline double theta_i(double r) { return kPi + 0.2 * std::sin(4.0 * kPi * r); }
inline double theta_i_p(double r) {
  return 0.8 * kPi * std::cos(4.0 * kPi * r);
}
inline double theta_b(double r) {
  const double z = r - 0.6;
  return 0.2 * std::exp(-z * z / 0.04);
}
inline double theta_b_p(double r) {
  const double z = r - 0.6;
  return 0.2 * std::exp(-z * z / 0.04) * (-2.0 * z / 0.04);
}
inline double theta_t(double r) {
  const double z = r - 0.5;
  return 2.0 * kPi + 0.2 * std::exp(-z * z / 0.04);
}
inline double theta_t_p(double r) {
  const double z = r - 0.5;
  return 0.2 * std::exp(-z * z / 0.04) * (-2.0 * z / 0.04);
}
}  // namespace topo

// Curved-interface topography domain: coarse block between a Gaussian bottom
// surface and a sinusoidal interface, fine block between the interface and a
// Gaussian top surface.
inline CurvilinearMapping make_topography_mapping(Side side) {
  CurvilinearMapping m;
  if (side == Side::Coarse) {
    m.map = [](double r, double s) {
      return Eigen::Vector2d(2.0 * topo::kPi * r,
                             s * topo::theta_i(r) + (1.0 - s) * topo::theta_b(r));
    };
    m.dmap = [](double r, double s) {
      Eigen::Matrix2d d;
      d << 2.0 * topo::kPi, 0.0,
          s * topo::theta_i_p(r) + (1.0 - s) * topo::theta_b_p(r),
          topo::theta_i(r) - topo::theta_b(r);
      return d;
    };
  } else {
    m.map = [](double r, double s) {
      return Eigen::Vector2d(2.0 * topo::kPi * r,
                             s * topo::theta_t(r) + (1.0 - s) * topo::theta_i(r));
    };
    m.dmap = [](double r, double s) {
      Eigen::Matrix2d d;
      d << 2.0 * topo::kPi, 0.0,
          s * topo::theta_t_p(r) + (1.0 - s) * topo::theta_i_p(r),
          topo::theta_t(r) - topo::theta_i(r);
      return d;
    };
  }
  return m;
}

// Flat half-planes meeting at y = 0: coarse block [0,2pi] x [-4pi,0],
// fine block [0,2pi] x [0,4pi].
inline CurvilinearMapping make_halfplane_mapping(Side side) {
  const double pi = topo::kPi;
  return side == Side::Coarse
             ? make_rectangle_mapping(0.0, 2.0 * pi, -4.0 * pi, 0.0)
             : make_rectangle_mapping(0.0, 2.0 * pi, 0.0, 4.0 * pi);
}

}  // namespace elastiq
