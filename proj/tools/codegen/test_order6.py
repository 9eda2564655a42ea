"""Validate the order-6 variable-coefficient operator built from the
frozen boundary blocks + interior kernel."""
import numpy as np
import numpy.linalg as la
import sbp1d as S

d = np.load('order6_closure.npz')
blocks, K = d['blocks'], d['kernel']
J, B = blocks.shape[0], blocks.shape[1]
B1 = np.array([float(x) for x in S.B1_6])


def assemble_M(gam):
    n = len(gam)
    M = np.zeros((n, n))
    for j in range(J):
        M[:B, :B] += gam[j] * blocks[j]
        M[n - B:, n - B:] += gam[n - 1 - j] * blocks[j][::-1, ::-1]
    for j in range(J, n - J):
        M[j - 3:j + 4, j - 3:j + 4] += gam[j] * K
    return M


def build_G(gam, h):
    n = len(gam)
    M = assemble_M(gam) / h
    G = -M
    for k in range(len(B1)):
        G[0, k] -= gam[0] * B1[k] / h
        G[n - 1, n - 1 - k] -= gam[n - 1] * B1[k] / h
    w = np.array([float(x) for x in S.norm_weights(6, n)])
    return G / (w * h)[:, None]


def test_poly_exactness():
    n = 40
    h = 1.0 / (n - 1)
    x = np.linspace(0, 1, n)
    worst_b = worst_i = 0.0
    for m in range(8):
        for k in range(8 - m):
            gam = x ** m if m else np.ones(n)
            v = x ** k if k else np.ones(n)
            G = build_G(gam, h)
            exact = (k * (m + k - 1) * x ** (m + k - 2)
                     if m + k >= 2 else np.zeros(n))
            err = np.abs(G @ v - exact)
            if m + k <= 4:
                worst_b = max(worst_b, err[:6].max(), err[-6:].max())
            worst_i = max(worst_i, err[6:-6].max()) if m + k <= 7 else worst_i
    print(f"boundary exactness (m+k<=4): {worst_b:.3e}")
    print(f"interior exactness (m+k<=7): {worst_i:.3e}")


def test_sbp_identity():
    rng = np.random.default_rng(0)
    n = 48
    h = 1.0 / (n - 1)
    w = np.array([float(x) for x in S.norm_weights(6, n)])
    D1 = np.array([[float(v) for v in row] for row in
                   S.d1_matrix(6, n)]) / h
    worst = 0.0
    for _ in range(50):
        gam = rng.uniform(0.3, 3, n)
        u = rng.standard_normal(n)
        v = rng.standard_normal(n)
        G = build_G(gam, h)
        M = assemble_M(gam) / h
        lhs = h * np.sum(w * u * (G @ v))
        Sgv = u @ M @ v
        # right boundary derivative: mirrored stencil with sign flip
        bn_v = -(B1 @ v[:-len(B1) - 1:-1])
        rhs = (-Sgv - gam[0] * u[0] * (B1 @ v[:len(B1)]) / h
               + gam[-1] * u[-1] * bn_v / h)
        worst = max(worst, abs(lhs - rhs) / max(abs(lhs), 1.0))
    print(f"SBP identity residual: {worst:.3e}")


def test_constant_interior():
    n = 30
    G = build_G(np.ones(n), 1.0)
    target = np.array([1 / 90, -3 / 20, 3 / 2, -49 / 18, 3 / 2, -3 / 20, 1 / 90])
    row = G[15, 12:19]
    print("interior const row err:", np.abs(row - target).max())


def test_rates():
    for which in ('boundary', 'interior'):
        errs = []
        for n in (41, 81, 161, 321):
            h = 1.0 / (n - 1)
            x = np.linspace(0, 1, n)
            gam = 2 + np.sin(3 * x)
            v = np.cos(2 * x + 0.3)
            exact = (3 * np.cos(3 * x) * -2 * np.sin(2 * x + 0.3)
                     + (2 + np.sin(3 * x)) * -4 * np.cos(2 * x + 0.3))
            err = np.abs(build_G(gam, h) @ v - exact)
            errs.append(err[:8].max() if which == 'boundary'
                        else err[10:-10].max())
        rates = [np.log2(errs[i] / errs[i + 1]) for i in range(3)]
        print(which, "errs", ' '.join(f'{e:.2e}' for e in errs),
              "rates", ' '.join(f'{r:.2f}' for r in rates))


if __name__ == "__main__":
    test_poly_exactness()
    test_sbp_identity()
    test_constant_interior()
    test_rates()
