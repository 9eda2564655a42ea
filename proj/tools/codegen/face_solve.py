"""Facial reduction for the order-6 boundary blocks.

Freeze each block's numerical null space: M^(j) = Z_j S_j Z_j^T with Z_j
the eigenvectors of the near-feasible SDP solution whose eigenvalues
exceed a threshold.  The accuracy equations are linear in S_j; solve the
least-squares system in long double and report the residual and the
eigenvalue margin of each S_j.
"""
import sys
import numpy as np
import numpy.linalg as la
from gen_order6 import interior_kernel, build_constraints, J, B

nun = B * (B + 1) // 2


def uidx(j, a, b):
    if a > b:
        a, b = b, a
    return j * nun + (a * B - a * (a - 1) // 2 + (b - a))


def main(tau=1e-6):
    Km = interior_kernel()
    A, b = build_constraints(Km)
    data = np.load("order6_closure.npz")
    blocks = data["blocks"]

    Zs, ranks = [], []
    for j in range(J):
        ev, V = la.eigh(blocks[j])
        keep = ev > tau
        Zs.append(V[:, keep])
        ranks.append(int(keep.sum()))
    print("ranks:", ranks)

    # columns of reduced system: upper-tri entries of S_j
    cols = []
    colmap = []  # (j, p, q)
    for j in range(J):
        r = ranks[j]
        for p in range(r):
            for q in range(p, r):
                colmap.append((j, p, q))
    ncols = len(colmap)
    Ar = np.zeros((A.shape[0], ncols))
    for ci, (j, p, q) in enumerate(colmap):
        z1 = Zs[j][:, p]
        z2 = Zs[j][:, q]
        # M contribution: z1 z2^T + z2 z1^T (for p==q just z z^T)
        Mc = np.outer(z1, z2)
        Mc = Mc + Mc.T if p != q else np.outer(z1, z1)
        xcol = np.zeros(J * nun)
        for a in range(B):
            for bb in range(a, B):
                xcol[uidx(j, a, bb)] = Mc[a, bb]
        Ar[:, ci] = A @ xcol
    # SDP on the face: maximize the uniform eigenvalue margin of the S_j
    import cvxpy as cp
    Svars = [cp.Variable((ranks[j], ranks[j]), symmetric=True)
             for j in range(J)]
    t = cp.Variable()
    entries = []
    for j, p, q in colmap:
        entries.append(Svars[j][p, q])
    xv = cp.hstack(entries)
    cons = [Ar @ xv == b]
    for j in range(J):
        cons.append(Svars[j] >> t * np.eye(ranks[j]))
        cons.append(cp.abs(Svars[j]) <= 60)
    prob = cp.Problem(cp.Maximize(t), cons)
    try:
        prob.solve(solver=cp.CVXOPT, kktsolver='robust')
    except Exception as e:
        print('cvxopt failed:', e)
        prob.solve(solver=cp.SCS, eps=1e-10, max_iters=200000)
    print("face SDP status", prob.status, "margin", t.value)
    sol = np.array([Svars[j].value[p, q] for (j, p, q) in colmap])
    # longdouble refinement
    Arl = Ar.astype(np.longdouble)
    bl = b.astype(np.longdouble)
    U, s, Vt = la.svd(Ar, full_matrices=False)
    keep = s > s[0] * 1e-12
    x = sol.astype(np.longdouble)
    for _ in range(4):
        r = bl - Arl @ x
        y = U.T.astype(np.longdouble) @ r
        y = np.where(keep, y / s.astype(np.longdouble), 0)
        x = x + Vt.T.astype(np.longdouble) @ y
    res = float(np.max(np.abs(Arl @ x - bl)))
    print(f"face residual: {res:.3e}  (rank used {int(keep.sum())}/{ncols})")

    # rebuild blocks, check margins
    out = np.zeros((J, B, B))
    Ss = [np.zeros((ranks[j], ranks[j])) for j in range(J)]
    for ci, (j, p, q) in enumerate(colmap):
        Ss[j][p, q] = float(x[ci])
        Ss[j][q, p] = float(x[ci])
    worst = 1e9
    for j in range(J):
        evS = la.eigvalsh(Ss[j])
        worst = min(worst, evS[0])
        out[j] = Zs[j] @ Ss[j] @ Zs[j].T
        out[j] = 0.5 * (out[j] + out[j].T)
    print(f"min S-eigenvalue across blocks: {worst:.3e}")
    if res < 1e-13 and worst > 0:
        # exact PSD: rebuild via eigen-clip of S (all positive already)
        ev_all = [la.eigvalsh(out[j])[0] for j in range(J)]
        print("block min eigs:", ' '.join(f'{e:.2e}' for e in ev_all))
        np.savez("order6_closure.npz", blocks=out, kernel=data["kernel"])
        print("saved face solution")
    else:
        print("face not acceptable")


if __name__ == "__main__":
    tau = float(sys.argv[1]) if len(sys.argv) > 1 else 1e-6
    main(tau)
