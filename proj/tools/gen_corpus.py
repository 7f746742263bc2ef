#!/usr/bin/env python3
"""Regenerates the bundled corpus under corpus/.

Builds each group as explicit permutations (matrix groups act on the
projective points of their natural module), extracts the stabilizer
subgroups by filtering the fully enumerated element set, and writes
generator files in the line-based `degree/gen` format together with a
manifest carrying order assertions.  The checked-in files are the source
of truth; this script only exists to reproduce them.
"""

import os
import sys
from itertools import combinations

OUT = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "corpus")


# ---------- permutation helpers (0-based images) ----------

def compose(p, q):
    # apply p, then q
    return tuple(q[p[i]] for i in range(len(p)))


def inverse(p):
    inv = [0] * len(p)
    for i, img in enumerate(p):
        inv[img] = i
    return tuple(inv)


def identity(n):
    return tuple(range(n))


def closure(degree, gens):
    elems = {identity(degree)}
    frontier = [identity(degree)]
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                c = compose(e, g)
                if c not in elems:
                    elems.add(c)
                    nxt.append(c)
        frontier = nxt
    return sorted(elems)


def from_cycles(degree, cycles):
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return tuple(images)


def to_cycles(p):
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i] or p[i] == i:
            seen[i] = True
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = p[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


def greedy_generators(degree, elems):
    """Small generating set: repeatedly add the least element not yet generated."""
    elem_set = set(elems)
    gens = []
    gen_closure = {identity(degree)}
    for e in sorted(elem_set):
        if e in gen_closure:
            continue
        gens.append(e)
        gen_closure = set(closure(degree, gens))
        if gen_closure == elem_set:
            break
    assert gen_closure == elem_set
    return gens


# ---------- matrix groups over GF(p) acting on projective points ----------

def mat_mul(A, B, p):
    n = len(A)
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(n)) % p for j in range(n))
        for i in range(n)
    )


def row_vec_mul(v, M, p):
    n = len(v)
    return tuple(sum(v[k] * M[k][j] for k in range(n)) % p for j in range(n))


def normalize_proj(v, p):
    for c in v:
        if c:
            # scale so the first nonzero coordinate is 1
            inv = pow(c, p - 2, p)
            return tuple((x * inv) % p for x in v)
    raise ValueError("zero vector")


def proj_points(n, p):
    pts = set()
    for idx in range(1, p ** n):
        v = []
        k = idx
        for _ in range(n):
            v.append(k % p)
            k //= p
        pts.add(normalize_proj(tuple(v), p))
    return sorted(pts)


def matrix_to_perm(M, points, point_index, p):
    return tuple(point_index[normalize_proj(row_vec_mul(v, M, p), p)] for v in points)


# ---------- file output ----------

def write_group(name, degree, gens, comment):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        f.write(f"# {comment}\n")
        f.write(f"degree {degree}\n")
        for g in gens:
            f.write(f"gen {to_cycles(g)}\n")
    print(f"  wrote {name}: degree {degree}, {len(gens)} generators")


def main():
    os.makedirs(OUT, exist_ok=True)
    manifest = []
    orders = []

    def case(name, group, subgroup, pi, order, suborder):
        pi_s = ",".join(map(str, pi))
        manifest.append(f"case {name} group={group} subgroup={subgroup} pi={pi_s}")
        orders.append(f"{name} {order} {suborder}")

    # --- Sym(3) on 3 points ---
    s3_gens = [from_cycles(3, [[1, 2]]), from_cycles(3, [[1, 2, 3]])]
    s3 = closure(3, s3_gens)
    assert len(s3) == 6
    write_group("sym3.grp", 3, s3_gens, "Sym(3) on 3 points")
    write_group("sym3_c2.grp", 3, [from_cycles(3, [[1, 2]])], "order-2 point stabilizer in Sym(3)")
    write_group("sym3_c3.grp", 3, [from_cycles(3, [[1, 2, 3]])], "cyclic Sylow 3-subgroup of Sym(3)")
    case("sym3_c2", "sym3.grp", "sym3_c2.grp", [2], 6, 2)
    case("sym3_c3", "sym3.grp", "sym3_c3.grp", [3], 6, 3)

    # --- Sym(4) on 4 points ---
    s4_gens = [from_cycles(4, [[1, 2]]), from_cycles(4, [[1, 2, 3, 4]])]
    s4 = closure(4, s4_gens)
    assert len(s4) == 24
    write_group("sym4.grp", 4, s4_gens, "Sym(4) on 4 points")
    d8_gens = [from_cycles(4, [[1, 2, 3, 4]]), from_cycles(4, [[1, 3]])]
    d8 = closure(4, d8_gens)
    assert len(d8) == 8
    write_group("sym4_d8.grp", 4, d8_gens, "dihedral Sylow 2-subgroup of Sym(4)")
    write_group("sym4_c3.grp", 4, [from_cycles(4, [[1, 2, 3]])], "cyclic Sylow 3-subgroup of Sym(4)")
    case("sym4_d8", "sym4.grp", "sym4_d8.grp", [2], 24, 8)
    case("sym4_c3", "sym4.grp", "sym4_c3.grp", [3], 24, 3)

    # --- Dih(8) on 4 points (symmetries of a square 1-2-3-4) ---
    write_group("dih8.grp", 4, d8_gens, "dihedral group of order 8 on 4 points")
    write_group("dih8_c2.grp", 4, [from_cycles(4, [[1, 3]])], "non-central reflection in Dih(8)")
    v4_gens = [from_cycles(4, [[1, 2], [3, 4]]), from_cycles(4, [[1, 3], [2, 4]])]
    assert len(closure(4, v4_gens)) == 4
    write_group("dih8_v4.grp", 4, v4_gens, "normal Klein four-subgroup of Dih(8)")
    case("dih8_c2", "dih8.grp", "dih8_c2.grp", [], 8, 2)
    case("dih8_v4", "dih8.grp", "dih8_v4.grp", [], 8, 4)
    case("dih8_full", "dih8.grp", "dih8.grp", [2], 8, 8)

    # --- SL(3,2) on the 7 points of PG(2,2) ---
    sl32_gens = [from_cycles(7, [[1, 2, 3, 4, 5, 6, 7]]), from_cycles(7, [[2, 3], [4, 7]])]
    sl32 = closure(7, sl32_gens)
    assert len(sl32) == 168, len(sl32)
    write_group("sl32.grp", 7, sl32_gens, "SL(3,2) acting on the 7 points of PG(2,2)")

    # stabilizer of a 1-space = stabilizer of point 1
    pt_stab = [g for g in sl32 if g[0] == 0]
    assert len(pt_stab) == 24
    write_group("sl32_line.grp", 7, greedy_generators(7, pt_stab),
                "SL(3,2): stabilizer of a 1-space (point 1 of PG(2,2))")

    # stabilizer of a 2-space = setwise stabilizer of a triple in the 7-orbit of triples
    def set_orbit(degree, elems, s):
        orb = {s}
        frontier = [s]
        while frontier:
            nxt = []
            for t in frontier:
                for g in sl32_gens:
                    u = frozenset(g[i] for i in t)
                    if u not in orb:
                        orb.add(u)
                        nxt.append(u)
            frontier = nxt
        return orb

    fano_line = None
    for trip in combinations(range(7), 3):
        if len(set_orbit(7, sl32, frozenset(trip))) == 7:
            fano_line = frozenset(trip)
            break
    assert fano_line is not None
    line_stab = [g for g in sl32 if frozenset(g[i] for i in fano_line) == fano_line]
    assert len(line_stab) == 24
    # the 2-space stabilizer fixes no point, so it is not conjugate to a 1-space stabilizer
    assert all(any(g[i] != i for g in line_stab) for i in range(7))
    write_group("sl32_plane.grp", 7, greedy_generators(7, line_stab),
                "SL(3,2): stabilizer of a 2-space (the triple {%s} of PG(2,2))"
                % ",".join(str(i + 1) for i in sorted(fano_line)))
    case("sl32_line", "sl32.grp", "sl32_line.grp", [2, 3], 168, 24)
    case("sl32_plane", "sl32.grp", "sl32_plane.grp", [2, 3], 168, 24)

    # --- SL(3,3) on the 13 points of PG(2,3) ---
    p = 3
    pts13 = proj_points(3, p)
    assert len(pts13) == 13
    idx13 = {v: i for i, v in enumerate(pts13)}
    A = ((0, 1, 0), (0, 0, 1), (1, 0, 0))
    B = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    sl33_gens = [matrix_to_perm(M, pts13, idx13, p) for M in (A, B)]
    sl33 = closure(13, sl33_gens)
    assert len(sl33) == 5616, len(sl33)
    write_group("sl33.grp", 13, sl33_gens, "SL(3,3) acting on the 13 points of PG(2,3)")

    pt_stab33 = [g for g in sl33 if g[0] == 0]
    assert len(pt_stab33) == 432
    write_group("sl33_line.grp", 13, greedy_generators(13, pt_stab33),
                "SL(3,3): stabilizer of a 1-space (point 1 of PG(2,3))")

    # the projective line through points[0] and points[1]
    u, v = pts13[0], pts13[1]
    line_pts = set()
    for a in range(p):
        for b in range(p):
            if a == 0 and b == 0:
                continue
            w = tuple((a * u[i] + b * v[i]) % p for i in range(3))
            line_pts.add(idx13[normalize_proj(w, p)])
    assert len(line_pts) == 4
    pl_stab33 = [g for g in sl33 if {g[i] for i in line_pts} == line_pts]
    assert len(pl_stab33) == 432
    write_group("sl33_plane.grp", 13, greedy_generators(13, pl_stab33),
                "SL(3,3): stabilizer of a 2-space (projective line {%s} of PG(2,3))"
                % ",".join(str(i + 1) for i in sorted(line_pts)))

    borel33 = [g for g in pt_stab33 if {g[i] for i in line_pts} == line_pts]
    assert len(borel33) == 108, len(borel33)
    write_group("sl33_borel.grp", 13, greedy_generators(13, borel33),
                "SL(3,3): Borel subgroup (stabilizer of an incident point-line flag)")
    case("sl33_borel", "sl33.grp", "sl33_borel.grp", [], 5616, 108)
    case("sl33_line", "sl33.grp", "sl33_line.grp", [2, 3], 5616, 432)
    case("sl33_plane", "sl33.grp", "sl33_plane.grp", [2, 3], 5616, 432)

    # --- SL(4,2) on the 15 points of PG(3,2) ---
    p = 2
    pts15 = proj_points(4, p)
    assert len(pts15) == 15
    idx15 = {v: i for i, v in enumerate(pts15)}
    A4 = ((0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0))
    B4 = ((1, 1, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    sl42_gens = [matrix_to_perm(M, pts15, idx15, p) for M in (A4, B4)]
    sl42 = closure(15, sl42_gens)
    assert len(sl42) == 20160, len(sl42)
    write_group("sl42.grp", 15, sl42_gens, "SL(4,2) acting on the 15 points of PG(3,2)")

    e1 = normalize_proj((1, 0, 0, 0), p)
    e2 = normalize_proj((0, 1, 0, 0), p)
    e12 = normalize_proj((1, 1, 0, 0), p)
    plane2 = {idx15[e1], idx15[e2], idx15[e12]}
    st42 = [g for g in sl42 if {g[i] for i in plane2} == plane2]
    assert len(st42) == 576, len(st42)
    write_group("sl42_2space.grp", 15, greedy_generators(15, st42),
                "SL(4,2): stabilizer of a 2-space (the triple {%s} of PG(3,2))"
                % ",".join(str(i + 1) for i in sorted(plane2)))
    case("sl42_2space", "sl42.grp", "sl42_2space.grp", [2, 3], 20160, 576)

    with open(os.path.join(OUT, "manifest.txt"), "w") as f:
        f.write("# bundled corpus: one case per line\n")
        f.write("# case <name> group=<file> subgroup=<file> pi=<p1,p2,...>\n")
        f.write("# empty pi means the pair carries no Hall claim\n")
        for line in manifest:
            f.write(line + "\n")
    print(f"  wrote manifest.txt with {len(manifest)} cases")

    with open(os.path.join(OUT, "orders.txt"), "w") as f:
        f.write("# expected orders per case: <case> <group order> <subgroup order>\n")
        for line in orders:
            f.write(line + "\n")
    print(f"  wrote orders.txt with {len(orders)} assertions")


if __name__ == "__main__":
    sys.exit(main())
