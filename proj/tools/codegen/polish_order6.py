"""Polish order-6 boundary blocks: alternate PSD projection with
equality-constraint refinement until blocks are PSD to ~1e-14 while the
accuracy equations stay satisfied to extended precision."""
import numpy as np
import numpy.linalg as la
from gen_order6 import interior_kernel, build_constraints, J, B


def pack(blocks):
    xs = []
    for j in range(J):
        for a in range(B):
            for bb in range(a, B):
                xs.append(blocks[j, a, bb])
    return np.array(xs, dtype=np.longdouble)


def unpack(x):
    blocks = np.zeros((J, B, B), dtype=np.longdouble)
    p = 0
    for j in range(J):
        for a in range(B):
            for bb in range(a, B):
                blocks[j, a, bb] = x[p]
                blocks[j, bb, a] = x[p]
                p += 1
    return blocks


def main():
    Km = interior_kernel()
    A, b = build_constraints(Km)
    data = np.load("order6_closure.npz")
    blocks = data["blocks"].astype(np.longdouble)

    U, s, Vt = la.svd(A, full_matrices=False)
    keep = s > s[0] * 1e-12
    Al = A.astype(np.longdouble)
    bl = b.astype(np.longdouble)
    Ul = U.astype(np.longdouble)
    sl = s.astype(np.longdouble)
    Vl = Vt.astype(np.longdouble)

    def refine(x):
        for _ in range(3):
            r = bl - Al @ x
            y = Ul.T @ r
            y = np.where(keep, y / sl, 0)
            x = x + Vl.T @ y
        return x

    def psd_project(blocks, floor=0.0):
        out = blocks.copy()
        worst = 0.0
        for j in range(J):
            Bj = blocks[j].astype(np.float64)
            ev, V = la.eigh(0.5 * (Bj + Bj.T))
            worst = min(worst, ev[0])
            evc = np.maximum(ev, floor)
            out[j] = (V @ np.diag(evc) @ V.T).astype(np.longdouble)
            out[j] = 0.5 * (out[j] + out[j].T)
        return out, worst

    x = pack(blocks)
    for it in range(400):
        x = refine(x)
        blocks = unpack(x)
        blocks, worst = psd_project(blocks, floor=1e-13)
        x = pack(blocks)
        if it % 50 == 0 or worst > -1e-13:
            res = float(np.max(np.abs(Al @ x - bl)))
            print(f"it {it}: min eig {worst:.3e}, eq residual {res:.3e}")
        if worst > -1e-13:
            break
    x = refine(x)
    blocks = unpack(x)
    res = float(np.max(np.abs(Al @ x - bl)))
    worst = min(la.eigvalsh(blocks[j].astype(np.float64))[0] for j in range(J))
    print(f"final: min eig {worst:.3e}, eq residual {res:.3e}")
    np.savez("order6_closure.npz",
             blocks=blocks.astype(np.float64),
             kernel=data["kernel"])
    print("saved")


if __name__ == "__main__":
    main()
