#!/usr/bin/env python3
"""Freeze all finite-difference and interpolation coefficients into a C++ header.

Inputs:
  * sbp1d.py          exact rational norm weights, D1 closures, boundary stencils
  * order4_closure.npz / order6_closure.npz   per-node second-derivative blocks
  * interp_ops.npz    interpolation edge blocks + interior stencils

Output: include/elastiq/coeffs.hpp (all doubles printed with %.17g).
"""
import os
import numpy as np
import sbp1d

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, "..", "..", "include", "elastiq", "coeffs.hpp")


def fmt(x):
    return "%.17g" % float(x)


def arr1(name, v):
    body = ", ".join(fmt(x) for x in v)
    return f"inline constexpr double {name}[{len(v)}] = {{{body}}};\n"


def arr2(name, m):
    m = np.asarray(m, dtype=float)
    rows = []
    for r in m:
        rows.append("  {" + ", ".join(fmt(x) for x in r) + "}")
    return (f"inline constexpr double {name}[{m.shape[0]}][{m.shape[1]}] = {{\n"
            + ",\n".join(rows) + "\n};\n")


def arr3(name, t):
    t = np.asarray(t, dtype=float)
    blocks = []
    for b in t:
        rows = ["    {" + ", ".join(fmt(x) for x in r) + "}" for r in b]
        blocks.append("  {\n" + ",\n".join(rows) + "\n  }")
    return (f"inline constexpr double {name}[{t.shape[0]}][{t.shape[1]}][{t.shape[2]}] = {{\n"
            + ",\n".join(blocks) + "\n};\n")


def pad_rows(rows, width):
    out = np.zeros((len(rows), width))
    for i, r in enumerate(rows):
        out[i, :len(r)] = [float(x) for x in r]
    return out


def main():
    c4 = np.load(os.path.join(HERE, "order4_closure.npz"))
    c6 = np.load(os.path.join(HERE, "order6_closure.npz"))
    it = np.load(os.path.join(HERE, "interp_ops.npz"))

    parts = []
    parts.append("// Generated by tools/codegen/emit_headers.py -- do not edit by hand.\n")
    parts.append("#pragma once\n\nnamespace elastiq::coeffs {\n\n")

    # norm weights
    parts.append(arr1("kW4", sbp1d.W4))
    parts.append(arr1("kW6", sbp1d.W6))

    # first derivative
    parts.append(arr1("kD1Int4", sbp1d.D1_INT4))
    parts.append(arr1("kD1Int6", sbp1d.D1_INT6))
    bnd4 = pad_rows(sbp1d.D1_BND4, 6)
    bnd6 = pad_rows(sbp1d.D1_BND6, 9)
    parts.append(arr2("kD1Bnd4", bnd4))
    parts.append(arr2("kD1Bnd6", bnd6))
    parts.append("inline constexpr int kD1BndRows4 = 4, kD1BndCols4 = 6;\n")
    parts.append("inline constexpr int kD1BndRows6 = 6, kD1BndCols6 = 9;\n\n")

    # boundary derivative stencils (left end, unit spacing)
    parts.append(arr1("kB1_4", sbp1d.B1_4))
    parts.append(arr1("kB1_6", sbp1d.B1_6))
    # ghost variants on nodes (ghost, 0, 1, ...); ghost node at coordinate -1
    bt4 = [-1.0 / 3.0, -1.0 / 2.0, 1.0, -1.0 / 6.0]
    bt6 = [-1.0 / 4.0, -5.0 / 6.0, 3.0 / 2.0, -1.0 / 2.0, 1.0 / 12.0]
    parts.append(arr1("kBt1_4", bt4))
    parts.append(arr1("kBt1_6", bt6))
    parts.append("\n")

    # second-derivative per-node closure blocks, M(g) = sum_j g_j M^(j)
    parts.append("inline constexpr int kJL4 = 5, kJR4 = 5, kBS4 = 7, kKS4 = 5;\n")
    parts.append(arr3("kM4Left", c4["left"]))
    parts.append(arr3("kM4Right", c4["right"]))
    parts.append(arr2("kM4Kernel", c4["kernel"]))
    b6 = np.asarray(c6["blocks"], dtype=float)
    parts.append("inline constexpr int kJL6 = 9, kJR6 = 9, kBS6 = 12, kKS6 = 7;\n")
    parts.append(arr3("kM6Left", b6))
    # right-corner block for node n-1-j is blocks[j] flipped; our C++ loop
    # indexes right blocks by node n-jr+j, so reverse the block order too
    parts.append(arr3("kM6Right", b6[::-1, ::-1, ::-1]))
    parts.append(arr2("kM6Kernel", c6["kernel"]))
    parts.append("\n")

    # interpolation operators: edge block top-left, mirrored bottom-right,
    # palindromic interior stencils (even/odd fine-row parity)
    for q in (2, 3):
        E, S, we, wo = {2: (10, 7, 2, 2), 3: (12, 9, 4, 4)}[q]
        parts.append(f"inline constexpr int kInterpE{q} = {E}, kInterpS{q} = {S}, "
                     f"kInterpWe{q} = {we}, kInterpWo{q} = {wo};\n")
        parts.append(arr2(f"kInterpEdge{q}", it[f"edge{q}"]))
        parts.append(arr1(f"kInterpEv{q}", it[f"ev{q}"]))
        parts.append(arr1(f"kInterpOd{q}", it[f"od{q}"]))
        parts.append("\n")

    parts.append("} // namespace elastiq::coeffs\n")

    with open(OUT, "w") as f:
        f.write("".join(parts))
    print("wrote", os.path.normpath(OUT))


if __name__ == "__main__":
    main()
