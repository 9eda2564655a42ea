"""Final polish: write each boundary block as M = F^T F with reduced-rank
factors F (PSD by construction) and solve the accuracy equations for F by
damped Gauss-Newton.  The factor rank per block is set by the spectral
gap of the near-feasible SDP solution."""
import numpy as np
import numpy.linalg as la
from gen_order6 import interior_kernel, build_constraints, J, B

nun = B * (B + 1) // 2


def uidx(j, a, b):
    if a > b:
        a, b = b, a
    return j * nun + (a * B - a * (a - 1) // 2 + (b - a))


def blocks_to_x(Ml):
    x = np.zeros(J * nun, dtype=Ml[0].dtype)
    for j in range(J):
        for a in range(B):
            for bb in range(a, B):
                x[uidx(j, a, bb)] = Ml[j][a, bb]
    return x


def main():
    Km = interior_kernel()
    A, b = build_constraints(Km)
    data = np.load("order6_closure.npz")
    blocks = data["blocks"]

    # initial reduced-rank factors from clipped eigendecomposition
    tau = 1e-5
    Fs = []
    for j in range(J):
        ev, V = la.eigh(blocks[j])
        keep = ev > tau
        Fs.append(np.diag(np.sqrt(ev[keep])) @ V[:, keep].T)
    ranks = [F.shape[0] for F in Fs]
    print("factor ranks:", ranks)
    offs = np.cumsum([0] + [r * B for r in ranks])

    Al = A.astype(np.longdouble)
    bl = b.astype(np.longdouble)

    def residual(Fs):
        Ml = [F.T @ F for F in Fs]
        return Al @ blocks_to_x(Ml) - bl

    for it in range(60):
        Fl = [F.astype(np.longdouble) for F in Fs]
        r = residual(Fl)
        rn = float(np.max(np.abs(r)))
        print(f"GN it {it}: residual {rn:.3e}")
        if rn < 5e-17:
            break
        Jm = np.zeros((A.shape[0], offs[-1]))
        for j in range(J):
            F64 = Fs[j].astype(np.float64)
            for a in range(B):
                for bb in range(a, B):
                    col = A[:, uidx(j, a, bb)]
                    if not col.any():
                        continue
                    for c in range(ranks[j]):
                        Jm[:, offs[j] + c * B + a] += col * F64[c, bb]
                        if bb != a:
                            Jm[:, offs[j] + c * B + bb] += col * F64[c, a]
        step, *_ = la.lstsq(Jm, -r.astype(np.float64), rcond=1e-12)
        best, bestF = None, None
        for alpha in (1.0, 0.5, 0.25, 0.1, 0.03):
            Ft = [Fl[j] + alpha * step[offs[j]:offs[j + 1]]
                  .reshape(ranks[j], B).astype(np.longdouble)
                  for j in range(J)]
            rm = float(np.max(np.abs(residual(Ft))))
            if best is None or rm < best:
                best, bestF = rm, Ft
        Fs = [F.astype(np.float64) for F in bestF]
        Fl = bestF

    Ml = [F.T @ F for F in Fl]
    out = np.zeros((J, B, B))
    for j in range(J):
        out[j] = Ml[j].astype(np.float64)
        out[j] = 0.5 * (out[j] + out[j].T)
    worst = min(la.eigvalsh(out[j])[0] for j in range(J))
    res = float(np.max(np.abs(
        Al @ blocks_to_x([o.astype(np.longdouble) for o in out]) - bl)))
    print(f"final float64 blocks: min eig {worst:.3e}, eq residual {res:.3e}")
    if res < 1e-13 and worst > -5e-14:
        np.savez("order6_closure.npz", blocks=out, kernel=data["kernel"])
        print("saved")
    else:
        print("NOT saved")


if __name__ == "__main__":
    main()
