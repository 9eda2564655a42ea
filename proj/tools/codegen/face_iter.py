"""Iterative facial reduction for the order-6 boundary blocks.

Repeatedly: restrict each block to the span of its significant
eigenvectors, solve the margin-maximizing SDP on that face, and shrink
the face using near-null directions of the result, until the margin is
strictly positive.  Then refine the equalities in long double and save.
"""
import numpy as np
import numpy.linalg as la
import cvxpy as cp
from gen_order6 import interior_kernel, build_constraints, J, B

nun = B * (B + 1) // 2


def uidx(j, a, b):
    if a > b:
        a, b = b, a
    return j * nun + (a * B - a * (a - 1) // 2 + (b - a))


def face_matrix(A, Zs, colmap):
    Ar = np.zeros((A.shape[0], len(colmap)))
    for ci, (j, p, q) in enumerate(colmap):
        z1, z2 = Zs[j][:, p], Zs[j][:, q]
        Mc = np.outer(z1, z2)
        Mc = Mc + Mc.T if p != q else np.outer(z1, z1)
        xcol = np.zeros(J * nun)
        for a in range(B):
            for bb in range(a, B):
                xcol[uidx(j, a, bb)] = Mc[a, bb]
        Ar[:, ci] = A @ xcol
    return Ar


def main():
    Km = interior_kernel()
    A, b = build_constraints(Km)
    data = np.load("order6_closure.npz")
    blocks = data["blocks"]

    Zs = []
    for j in range(J):
        ev, V = la.eigh(blocks[j])
        Zs.append(V[:, ev > 1e-6])

    for outer in range(8):
        ranks = [Z.shape[1] for Z in Zs]
        colmap = [(j, p, q) for j in range(J)
                  for p in range(ranks[j]) for q in range(p, ranks[j])]
        Ar = face_matrix(A, Zs, colmap)
        Svars = [cp.Variable((r, r), symmetric=True) for r in ranks]
        t = cp.Variable()
        xv = cp.hstack([Svars[j][p, q] for (j, p, q) in colmap])
        cons = [Ar @ xv == b]
        for j in range(J):
            cons.append(Svars[j] >> t * np.eye(ranks[j]))
            cons.append(cp.trace(Svars[j]) <= 120)
        prob = cp.Problem(cp.Maximize(t), cons)
        try:
            prob.solve(solver=cp.CVXOPT, kktsolver='robust')
        except Exception as e:
            print('cvxopt failed:', e)
            prob.solve(solver=cp.SCS, eps=1e-10, max_iters=200000)
        print(f"outer {outer}: ranks {ranks}, status {prob.status}, "
              f"margin {t.value:.3e}")
        if prob.status not in ('optimal', 'optimal_inaccurate'):
            print("SDP failed; aborting")
            return
        if t.value is not None and t.value > 1e-5:
            break
        # shrink faces using near-null directions of S_j
        newZs = []
        shrunk = False
        for j in range(J):
            S = 0.5 * (Svars[j].value + Svars[j].value.T)
            ev, V = la.eigh(S)
            keep = ev > max(1e-4, 10 * abs(t.value))
            if keep.sum() < ranks[j]:
                shrunk = True
            newZs.append(Zs[j] @ V[:, keep])
        if not shrunk:
            print("no shrink possible but margin still ~0; aborting")
            return
        Zs = newZs
    else:
        print("did not reach positive margin")
        return

    # feasibility check of the face: min-norm LS residual
    xf, *_ = la.lstsq(Ar, b, rcond=1e-10)
    print("face LS residual:", float(np.max(np.abs(Ar @ xf - b))))

    # long-double refinement of equalities on the final face
    x = np.array([0.5 * (Svars[j].value + Svars[j].value.T)[p, q]
                  for (j, p, q) in colmap])
    U, s, Vt = la.svd(Ar, full_matrices=False)
    print("sv tail:", s[-6:] / s[0])
    keep = s > s[0] * 1e-10
    Arl = Ar.astype(np.longdouble)
    bl = b.astype(np.longdouble)
    xl = x.astype(np.longdouble)
    for _ in range(4):
        r = bl - Arl @ xl
        y = U.T.astype(np.longdouble) @ r
        y = np.where(keep, y / s.astype(np.longdouble), 0)
        xl = xl + Vt.T.astype(np.longdouble) @ y
    res = float(np.max(np.abs(Arl @ xl - bl)))
    corr = float(np.max(np.abs(xl - x.astype(np.longdouble))))
    print(f"refined: residual {res:.3e}, correction {corr:.3e}")

    ranks = [Z.shape[1] for Z in Zs]
    Ss = [np.zeros((r, r)) for r in ranks]
    for ci, (j, p, q) in enumerate(colmap):
        Ss[j][p, q] = float(xl[ci])
        Ss[j][q, p] = float(xl[ci])
    out = np.zeros((J, B, B))
    worstS = 1e9
    for j in range(J):
        worstS = min(worstS, la.eigvalsh(Ss[j])[0])
        out[j] = Zs[j] @ Ss[j] @ Zs[j].T
        out[j] = 0.5 * (out[j] + out[j].T)
    worstM = min(la.eigvalsh(out[j])[0] for j in range(J))
    print(f"final: min S eig {worstS:.3e}, min M eig {worstM:.3e}")
    if res < 1e-13 and worstS > 0 and worstM > -1e-14:
        np.savez("order6_closure.npz", blocks=out, kernel=data["kernel"])
        print("saved")
    else:
        print("NOT saved")


if __name__ == "__main__":
    main()
