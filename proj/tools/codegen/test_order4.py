import numpy as np
from fractions import Fraction as Fr
import sbp1d as S


def G_scaled(n, h, gamma, order=4):
    blocks = S.m_blocks_order4(n)
    w = S.norm_weights(4, n)
    D1 = S.d1_matrix(4, n)
    b1 = D1[0]
    G = S.second_deriv_dense(4, n, gamma, blocks, b1, w)
    return G / h / h, blocks, w, b1


def main():
    rng = np.random.default_rng(0)
    n = 24
    x = np.arange(n)
    # polynomial exactness (reference grid h=1): gamma=x^m, v=x^k
    blocks = S.m_blocks_order4(n)
    w = S.norm_weights(4, n)
    D1 = S.d1_matrix(4, n)
    b1row = D1[0]
    for (m, k) in [(0, 0), (0, 1), (0, 2), (1, 1), (0, 3), (1, 2), (2, 1), (3, 0)]:
        g = (x.astype(float) + 2.0) ** m   # shift keeps gamma > 0
        v = x.astype(float) ** k
        G = S.second_deriv_dense(4, n, g, blocks, b1row, w)
        out = G @ v
        # exact (gamma v')' with gamma=(x+2)^m
        ex = m * (x + 2.0) ** (m - 1) * k * x ** (k - 1) if m >= 1 and k >= 1 else 0
        ex = ex + (x + 2.0) ** m * k * (k - 1) * x ** (k - 2) if k >= 2 else ex
        err = np.max(np.abs(out - ex)) if k >= 1 else np.max(np.abs(out))
        tag = 'bulk'
        print(f"m={m} k={k}  max|err| = {err:.3e}  [{tag}]")

    # SBP identity with random gamma>0, u, v
    h = 1.0
    g = rng.uniform(0.5, 2.0, n)
    u = rng.standard_normal(n)
    v = rng.standard_normal(n)
    G = S.second_deriv_dense(4, n, g, blocks, b1row, w)
    M = S.assemble_M(blocks, g)
    wv = np.array([float(t) for t in w])
    lhs = np.sum(wv * u * (G @ v))
    b1 = np.array([float(t) for t in b1row] + [0.0] * (n - len(b1row)))
    bn = -b1[::-1]
    rhs = -(u @ M @ v) - g[0] * u[0] * (b1 @ v) + g[-1] * u[-1] * (bn @ v)
    print("SBP identity residual:", abs(lhs - rhs))

    # PSD of M
    ev = np.linalg.eigvalsh(0.5 * (M + M.T))
    print("min eig M:", ev.min())

    # refinement study on [0,1]: gamma = 1+0.5 sin(3x), v = sin(2x+0.3)
    print("refinement (boundary + interior orders):")
    prev = None
    for n in [41, 81, 161, 321]:
        h = 1.0 / (n - 1)
        xx = np.linspace(0, 1, n)
        g = 1 + 0.5 * np.sin(3 * xx)
        v = np.sin(2 * xx + 0.3)
        exact = (1.5 * np.cos(3 * xx)) * (2 * np.cos(2 * xx + 0.3)) + \
                g * (-4 * np.sin(2 * xx + 0.3))
        blocks_n = S.m_blocks_order4(n)
        w_n = S.norm_weights(4, n)
        D1n = S.d1_matrix(4, n)
        G = S.second_deriv_dense(4, n, g, blocks_n, D1n[0], w_n) / h / h
        err = np.abs(G @ v - exact)
        eb = err[:6].max()
        ei = err[8:-8].max()
        line = f"  n={n:4d} bnd={eb:.3e} int={ei:.3e}"
        if prev:
            line += f"  rates: {np.log2(prev[0]/eb):.2f} {np.log2(prev[1]/ei):.2f}"
        print(line)
        prev = (eb, ei)

    # boundary derivative accuracy (b1 is D1 row 0 -> order 3)
    print("b1 refinement:")
    prev = None
    for n in [41, 81, 161]:
        h = 1.0 / (n - 1)
        xx = np.linspace(0, 1, n)
        v = np.sin(2 * xx + 0.3)
        b1 = np.array([float(t) for t in S.d1_matrix(4, n)[0]])
        val = (b1 @ v[:len(b1)]) / h
        err = abs(val - 2 * np.cos(0.3))
        line = f"  n={n} err={err:.3e}"
        if prev:
            line += f" rate={np.log2(prev/err):.2f}"
        print(line)
        prev = err


if __name__ == "__main__":
    main()
