// Isotropic material fields and the transformed coefficient tensors used by
// the curvilinear operator: N_kj = J * sum_{i,l} xi_{ij} M_{il} xi_{lk},
// where M_{il} are the 2x2 isotropic stiffness blocks.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <functional>
#include <stdexcept>

#include "elastiq/grid.hpp"

namespace elastiq {

struct MaterialField {
  std::function<double(double, double)> rho, mu, lam;
};

// One 2x2-matrix-valued nodal field stored as four scalar arrays.
struct Tensor2Field {
  Arr a11, a12, a21, a22;
  void resize(int n1, int n2) {
    a11.resize(n1, n2);
    a12.resize(n1, n2);
    a21.resize(n1, n2);
    a22.resize(n1, n2);
  }
  Eigen::Matrix2d at(int i, int j) const {
    Eigen::Matrix2d m;
    m << a11(i, j), a12(i, j), a21(i, j), a22(i, j);
    return m;
  }
  void set(int i, int j, const Eigen::Matrix2d& m) {
    a11(i, j) = m(0, 0);
    a12(i, j) = m(0, 1);
    a21(i, j) = m(1, 0);
    a22(i, j) = m(1, 1);
  }
};

struct MaterialTensors {
  Tensor2Field N11, N12, N21, N22;
  Arr rho, mu, lam;  // nodal physical-parameter values
};

// Isotropic stiffness blocks M_{il}.
inline Eigen::Matrix2d iso_block(int i, int l, double mu, double la) {
  Eigen::Matrix2d m;
  if (i == 1 && l == 1)
    m << 2.0 * mu + la, 0.0, 0.0, mu;
  else if (i == 1 && l == 2)
    m << 0.0, la, mu, 0.0;
  else if (i == 2 && l == 1)
    m << 0.0, mu, la, 0.0;
  else
    m << mu, 0.0, 0.0, 2.0 * mu + la;
  return m;
}

inline MaterialTensors assemble_tensors(const MaterialField& mat,
                                        const MetricData& met) {
  const int n1 = static_cast<int>(met.J.rows());
  const int n2 = static_cast<int>(met.J.cols());
  MaterialTensors T;
  T.N11.resize(n1, n2);
  T.N12.resize(n1, n2);
  T.N21.resize(n1, n2);
  T.N22.resize(n1, n2);
  T.rho.resize(n1, n2);
  T.mu.resize(n1, n2);
  T.lam.resize(n1, n2);
  for (int j = 0; j < n2; ++j) {
    for (int i = 0; i < n1; ++i) {
      const double x = met.x(i, j), y = met.y(i, j);
      const double rho = mat.rho(x, y);
      const double mu = mat.mu(x, y);
      const double la = mat.lam(x, y);
      if (!(rho > 0.0) || !(mu > 0.0) || !(2.0 * mu + la > 0.0))
        throw std::invalid_argument("material not positive definite");
      T.rho(i, j) = rho;
      T.mu(i, j) = mu;
      T.lam(i, j) = la;
      // xi[a][b] = d(curvilinear b) / d(Cartesian a); a,b in {1,2}
      const double xi[3][3] = {{0, 0, 0},
                               {0, met.xi11(i, j), met.xi12(i, j)},
                               {0, met.xi21(i, j), met.xi22(i, j)}};
      const double J = met.J(i, j);
      Eigen::Matrix2d N[3][3];
      for (int k = 1; k <= 2; ++k)
        for (int jj = 1; jj <= 2; ++jj) {
          Eigen::Matrix2d acc = Eigen::Matrix2d::Zero();
          // N_kj = J sum_{a,l} xi_{ak} M_{al} xi_{lj}: k is the outer
          // derivative direction, j the inner one, so the Cartesian limit
          // (xi = I) reduces N_kj to M_kj.
          for (int a = 1; a <= 2; ++a)
            for (int l = 1; l <= 2; ++l)
              acc += xi[a][k] * xi[l][jj] * iso_block(a, l, mu, la);
          N[k][jj] = J * acc;
        }
      T.N11.set(i, j, N[1][1]);
      T.N12.set(i, j, N[1][2]);
      T.N21.set(i, j, N[2][1]);
      T.N22.set(i, j, N[2][2]);
    }
  }
  return T;
}

// Local wave-speed surrogate T = (1/rho) [[tr N11, tr N12], [tr N21, tr N22]];
// zeta is its maximum eigenvalue (closed form for the symmetric 2x2).
inline double local_zeta(const MaterialTensors& T, const MetricData& met,
                         int i, int j) {
  const double inv = 1.0 / (T.rho(i, j) * met.J(i, j));
  const double t11 = inv * (T.N11.a11(i, j) + T.N11.a22(i, j));
  const double t12 = inv * (T.N12.a11(i, j) + T.N12.a22(i, j));
  const double t21 = inv * (T.N21.a11(i, j) + T.N21.a22(i, j));
  const double t22 = inv * (T.N22.a11(i, j) + T.N22.a22(i, j));
  const double mean = 0.5 * (t11 + t22);
  const double disc = std::sqrt(0.25 * (t11 - t22) * (t11 - t22) + t12 * t21);
  return mean + disc;
}

inline double zeta_max(const MaterialTensors& T, const MetricData& met) {
  const int n1 = static_cast<int>(met.J.rows());
  const int n2 = static_cast<int>(met.J.cols());
  double z = 0.0;
  for (int j = 0; j < n2; ++j)
    for (int i = 0; i < n1; ++i) z = std::max(z, local_zeta(T, met, i, j));
  return z;
}

}  // namespace elastiq
