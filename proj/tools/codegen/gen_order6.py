"""Derive the order-6 variable-coefficient second-derivative closure.

Form: M(g) = sum_j g_j M^(j); interior M^(j) are shifts of a fixed 7x7
PSD kernel (derived exactly; free parameters k23=-1/40, k33=1/180 put it
on the PSD boundary with nullity 3).  Boundary blocks M^(j), j=0..J-1,
are found by SDP: linear polynomial-exactness constraints + PSD, margin
maximized, then the equality constraints are polished by iterative
refinement in extended precision.

Writes order6_closure.npz with the boundary blocks and kernel.
"""
import numpy as np
import sympy as sp
from fractions import Fraction as Fr
import sbp1d as S

import os
J = int(os.environ.get("SBP6_J", 10))   # boundary gamma-nodes with free blocks
B = int(os.environ.get("SBP6_B", 14))   # support of boundary blocks: [0..B-1]^2
RB = 6    # rows 0..RB-1 at boundary order (m+k<=4); rows RB..B-1 interior (m+k<=7)


def interior_kernel():
    L = 3
    idx = [(a, b) for a in range(-L, L + 1) for b in range(a, L + 1) if b - a <= 3]
    syms = {p: sp.Symbol(f'k_{p[0]}_{p[1]}') for p in idx}

    def K(a, b):
        if abs(a) > L or abs(b) > L or abs(a - b) > 3:
            return sp.Integer(0)
        p = (a, b) if a <= b else (b, a)
        return syms.get(p, sp.Integer(0))

    eqs = []
    for m in range(0, 8):
        for k in range(0, 8 - m):
            expr = sp.Integer(0)
            for j in range(-6, 7):
                gj = sp.Integer(1) if m == 0 else (sp.Integer(j) ** m)
                for l in range(j - L, j + L + 1):
                    vl = sp.Integer(1) if k == 0 else sp.Integer(l) ** k
                    expr += gj * K(-j, l - j) * vl
            rhs = sp.Integer(k * (m + k - 1)) if m + k == 2 else sp.Integer(0)
            eqs.append(sp.Eq(-expr, rhs))
    for (a, b) in idx:
        eqs.append(sp.Eq(K(a, b) - K(-b, -a), 0))
    sol = sp.solve(eqs, list(syms.values()), dict=True)[0]
    free = sorted({f for v in sol.values() for f in v.free_symbols}
                  | {u for u in syms.values() if u not in sol}, key=lambda t: t.name)
    k23, k33 = free
    vals = {k33: sp.Rational(1, 180), k23: sp.Rational(-1, 40)}
    Km = [[Fr(0)] * 7 for _ in range(7)]
    for (a, b), v in syms.items():
        e = sp.nsimplify(sol.get(v, v).subs(vals))
        fr = Fr(int(sp.fraction(e)[0]), int(sp.fraction(e)[1]))
        Km[a + 3][b + 3] = fr
        Km[b + 3][a + 3] = fr
    return Km


def build_constraints(Km, L0=11.0):
    """Rows of A x = b over unknown upper-tri entries of M^(j).

    Monomials are scaled to p = l/L0 so A is well conditioned: with
    v_l = p_l^k, g_j = p_j^m the target is (1/L0^2) d/dp(g v')(p_i).
    """
    w = [float(x) for x in S.norm_weights(6, 40)]
    b1 = [float(x) for x in S.B1_6]
    nun = B * (B + 1) // 2
    tot = J * nun

    def uidx(j, a, b):
        if a > b:
            a, b = b, a
        return j * nun + (a * B - a * (a - 1) // 2 + (b - a))

    def pw(l, e):
        return 1.0 if e == 0 else (l / L0) ** e

    rows_A, rows_b = [], []

    def kernel_row_contrib(i, m, k):
        """sum over kernel nodes j>=J of p_j^m * K[i-j, l-j] * p_l^k."""
        tot = 0.0
        for j in range(J, i + 4):
            if abs(i - j) > 3:
                continue
            for l in range(j - 3, j + 4):
                if l < 0:
                    continue
                kv = float(Km[i - j + 3][l - j + 3])
                if kv != 0.0:
                    tot += pw(j, m) * kv * pw(l, k)
        return tot

    for i in range(B):
        lim = 4 if i < RB else 7
        for m in range(0, lim + 1):
            for k in range(0, lim + 1 - m):
                arow = np.zeros(tot)
                for j in range(J):
                    gj = pw(j, m)
                    if gj == 0.0:
                        continue
                    for l in range(B):
                        vl = pw(l, k)
                        if vl != 0.0:
                            arow[uidx(j, i, l)] += gj * vl
                const = kernel_row_contrib(i, m, k)
                # boundary derivative term (row 0 only): g_0 * b1.v
                bterm = 0.0
                if i == 0 and m == 0:
                    bterm = sum(b1[l] * pw(l, k) for l in range(len(b1)))
                d = m + k - 2
                target = 0.0
                if d >= 0:
                    target = k * (m + k - 1) * pw(i, d) / L0 ** 2
                # (Gv)_i = (1/w_i)(-(Mv)_i - bterm) = target
                # =>  (Mv)_i = -w_i*target - bterm
                rows_A.append(arow)
                rows_b.append(-w[i] * target - bterm - const)
    # constants annihilation: M^(j) . 1 = 0
    for j in range(J):
        for i in range(B):
            arow = np.zeros(tot)
            for l in range(B):
                arow[uidx(j, i, l)] += 1.0
            rows_A.append(arow)
            rows_b.append(0.0)
    return np.array(rows_A), np.array(rows_b)


def solve_sdp(A, b):
    import cvxpy as cp
    Ms = [cp.Variable((B, B), symmetric=True) for _ in range(J)]
    t = cp.Variable()
    x = cp.hstack([cp.vec(cp.upper_tri(M), order='C') for M in Ms])
    # upper_tri excludes diagonal in cvxpy; build x differently:
    entries = []
    for M in Ms:
        for a in range(B):
            for bb in range(a, B):
                entries.append(M[a, bb])
    x = cp.hstack(entries)
    ones = np.ones((B, 1))
    Pc = np.eye(B) - ones @ ones.T / B
    cons = [A @ x == b]
    for M in Ms:
        cons.append(M >> t * Pc)
        cons.append(cp.abs(M) <= 40)
    prob = cp.Problem(cp.Maximize(t), cons)
    if os.environ.get("SBP6_SOLVER", "cvxopt") == "cvxopt":
        prob.solve(solver=cp.CVXOPT, kktsolver='robust')
    else:
        prob.solve(solver=cp.SCS, eps=1e-9, max_iters=200000)
    print("status", prob.status, "margin t =", t.value)
    return [M.value for M in Ms]


def refine(A, b, xs):
    """Iterative refinement of A x = b in long double."""
    Al = A.astype(np.longdouble)
    bl = b.astype(np.longdouble)
    x = xs.astype(np.longdouble)
    # min-norm correction: x += A^T (A A^T)^+ (b - A x)
    import numpy.linalg as la
    U, s, Vt = la.svd(A, full_matrices=False)
    keep = s > s[0] * 1e-12
    for _ in range(3):
        r = bl - Al @ x
        y = (U.T.astype(np.longdouble) @ r)
        y = np.where(keep, y / s.astype(np.longdouble), 0)
        x = x + Vt.T.astype(np.longdouble) @ y
    print("refined residual:", float(np.max(np.abs(Al @ x - bl))))
    return x


def main():
    Km = interior_kernel()
    print("kernel:")
    for r in Km:
        print([str(v) for v in r])
    A, b = build_constraints(Km)
    print("constraints:", A.shape)
    Ms = solve_sdp(A, b)
    # pack to x, refine equalities, unpack
    xs = []
    for M in Ms:
        for a in range(B):
            for bb in range(a, B):
                xs.append(M[a, bb])
    xs = np.array(xs)
    x = refine(A, b, xs)
    blocks = np.zeros((J, B, B))
    p = 0
    for j in range(J):
        for a in range(B):
            for bb in range(a, B):
                blocks[j, a, bb] = float(x[p])
                blocks[j, bb, a] = float(x[p])
                p += 1
    for j in range(J):
        ev = np.linalg.eigvalsh(blocks[j])
        print(f"block {j}: min eig {ev[0]:.3e} max {ev[-1]:.3e}")
    Kf = np.array([[float(v) for v in r] for r in Km])
    np.savez("order6_closure.npz", blocks=blocks, kernel=Kf)
    print("saved order6_closure.npz")


if __name__ == "__main__":
    main()
