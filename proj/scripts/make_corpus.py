#!/usr/bin/env python3
"""Generate and validate the bundled group corpus.

Each entry is checked with sympy: the achieved order must match the declared
order, and class counts must stay at desk scale (<= 60).
"""
import os
import sys
from sympy.combinatorics import Permutation, PermutationGroup

OUT = os.path.join(os.path.dirname(__file__), "..", "corpus")


def cycles_to_perm(degree, cycles):
    p = list(range(degree))
    for cyc in cycles:
        for i, a in enumerate(cyc):
            b = cyc[(i + 1) % len(cyc)]
            p[a - 1] = b - 1
    return Permutation(p)


def cyc_str(cycles):
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def sl23_gens():
    vecs = [(1, 0), (2, 0), (0, 1), (0, 2), (1, 1), (2, 2), (1, 2), (2, 1)]
    index = {v: i + 1 for i, v in enumerate(vecs)}

    def act(mat):
        images = {}
        for v, i in index.items():
            w = ((mat[0][0] * v[0] + mat[0][1] * v[1]) % 3,
                 (mat[1][0] * v[0] + mat[1][1] * v[1]) % 3)
            images[i] = index[w]
        return perm_to_cycles(images, 8)

    s = act([[0, 2], [1, 0]])
    t = act([[1, 1], [0, 1]])
    return s, t


def ut33_gens():
    vecs = [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    index = {v: i + 1 for i, v in enumerate(vecs)}

    def act(mat):
        images = {}
        for v, i in index.items():
            w = tuple(sum(mat[r][c] * v[c] for c in range(3)) % 3 for r in range(3))
            images[i] = index[w]
        return perm_to_cycles(images, 27)

    x = act([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    y = act([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    return x, y


def perm_to_cycles(images, degree):
    seen = set()
    cycles = []
    for start in range(1, degree + 1):
        if start in seen or images[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        nxt = images[start]
        while nxt != start:
            cyc.append(nxt)
            seen.add(nxt)
            nxt = images[nxt]
        cycles.append(cyc)
    return cycles


SL_S, SL_T = sl23_gens()
UT_X, UT_Y = ut33_gens()

# (file, name, degree, [generator cycle lists], expected order)
ENTRIES = [
    ("001_C1", "C1", 1, [], 1),
    ("002_C2", "C2", 2, [[[1, 2]]], 2),
    ("003_C3", "C3", 3, [[[1, 2, 3]]], 3),
    ("004_C4", "C4", 4, [[[1, 2, 3, 4]]], 4),
    ("005_C5", "C5", 5, [[[1, 2, 3, 4, 5]]], 5),
    ("006_C6", "C6", 6, [[[1, 2, 3, 4, 5, 6]]], 6),
    ("007_C7", "C7", 7, [[[1, 2, 3, 4, 5, 6, 7]]], 7),
    ("008_C8", "C8", 8, [[[1, 2, 3, 4, 5, 6, 7, 8]]], 8),
    ("009_C9", "C9", 9, [[[1, 2, 3, 4, 5, 6, 7, 8, 9]]], 9),
    ("010_C10", "C10", 10, [[[1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]], 10),
    ("011_C11", "C11", 11, [[[1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]]], 11),
    ("012_C12", "C12", 7, [[[1, 2, 3, 4], [5, 6, 7]]], 12),
    ("013_C14", "C14", 9, [[[1, 2], [3, 4, 5, 6, 7, 8, 9]]], 14),
    ("014_C15", "C15", 8, [[[1, 2, 3], [4, 5, 6, 7, 8]]], 15),
    ("015_C20", "C20", 9, [[[1, 2, 3, 4], [5, 6, 7, 8, 9]]], 20),
    ("016_C30", "C30", 10, [[[1, 2], [3, 4, 5], [6, 7, 8, 9, 10]]], 30),
    ("017_C60", "C60", 12, [[[1, 2, 3, 4], [5, 6, 7], [8, 9, 10, 11, 12]]], 60),
    ("018_C2xC2", "C2xC2", 4, [[[1, 2]], [[3, 4]]], 4),
    ("019_C2xC2xC2", "C2xC2xC2", 6, [[[1, 2]], [[3, 4]], [[5, 6]]], 8),
    ("020_C4xC2", "C4xC2", 6, [[[1, 2, 3, 4]], [[5, 6]]], 8),
    ("021_C6xC2", "C6xC2", 8, [[[1, 2, 3, 4, 5, 6]], [[7, 8]]], 12),
    ("022_C3xC3", "C3xC3", 6, [[[1, 2, 3]], [[4, 5, 6]]], 9),
    ("023_S3", "S3", 3, [[[1, 2]], [[1, 2, 3]]], 6),
    ("024_S4", "S4", 4, [[[1, 2]], [[1, 2, 3, 4]]], 24),
    ("025_A4", "A4", 4, [[[1, 2, 3]], [[2, 3, 4]]], 12),
    ("026_D8", "D8", 4, [[[1, 2, 3, 4]], [[1, 3]]], 8),
    ("027_D10", "D10", 5, [[[1, 2, 3, 4, 5]], [[2, 5], [3, 4]]], 10),
    ("028_D12", "D12", 6, [[[1, 2, 3, 4, 5, 6]], [[2, 6], [3, 5]]], 12),
    ("029_D14", "D14", 7, [[[1, 2, 3, 4, 5, 6, 7]], [[2, 7], [3, 6], [4, 5]]], 14),
    ("030_Q8", "Q8", 8,
     [[[1, 2, 3, 4], [5, 6, 7, 8]], [[1, 5, 3, 7], [2, 8, 4, 6]]], 8),
    ("031_Dic3", "Dic3", 7, [[[1, 2, 3]], [[1, 2], [4, 5, 6, 7]]], 12),
    ("032_SL23", "SL23", 8, [SL_S, SL_T], 24),
    ("033_C9sC3", "C9sC3", 9,
     [[[1, 2, 3, 4, 5, 6, 7, 8, 9]], [[2, 5, 8], [3, 9, 6]]], 27),
    ("034_UT33", "UT33", 27, [UT_X, UT_Y], 27),
    ("035_F20", "F20", 5, [[[1, 2, 3, 4, 5]], [[2, 3, 5, 4]]], 20),
    ("036_F21", "F21", 7,
     [[[1, 2, 3, 4, 5, 6, 7]], [[2, 3, 5], [4, 7, 6]]], 21),
    ("037_F42", "F42", 7,
     [[[1, 2, 3, 4, 5, 6, 7]], [[2, 4, 3, 7, 5, 6]]], 42),
    ("038_C2xS3", "C2xS3", 5, [[[1, 2]], [[1, 2, 3]], [[4, 5]]], 12),
    ("039_C3xS3", "C3xS3", 6, [[[1, 2, 3]], [[4, 5]], [[4, 5, 6]]], 18),
    ("040_C5xS3", "C5xS3", 8, [[[1, 2, 3, 4, 5]], [[6, 7]], [[6, 7, 8]]], 30),
    ("041_C7xS3", "C7xS3", 10,
     [[[1, 2, 3, 4, 5, 6, 7]], [[8, 9]], [[8, 9, 10]]], 42),
    ("042_S3xS3", "S3xS3", 6, [[[1, 2]], [[1, 2, 3]], [[4, 5]], [[4, 5, 6]]], 36),
    ("043_C2xA4", "C2xA4", 6, [[[1, 2]], [[3, 4, 5]], [[4, 5, 6]]], 24),
    ("044_C3xD8", "C3xD8", 7, [[[1, 2, 3]], [[4, 5, 6, 7]], [[4, 6]]], 24),
    ("045_C5xD8", "C5xD8", 9, [[[1, 2, 3, 4, 5]], [[6, 7, 8, 9]], [[6, 8]]], 40),
    ("046_C3xQ8", "C3xQ8", 11,
     [[[1, 2, 3]], [[4, 5, 6, 7], [8, 9, 10, 11]], [[4, 8, 6, 10], [5, 11, 7, 9]]], 24),
    ("047_C3xF20", "C3xF20", 8,
     [[[1, 2, 3, 4, 5]], [[2, 3, 5, 4]], [[6, 7, 8]]], 60),
    ("048_C2xD10", "C2xD10", 7,
     [[[1, 2]], [[3, 4, 5, 6, 7]], [[4, 7], [5, 6]]], 20),
    ("049_C2xF21", "C2xF21", 9,
     [[[1, 2]], [[3, 4, 5, 6, 7, 8, 9]], [[4, 5, 7], [6, 9, 8]]], 42),
    ("051_D8xD10", "D8xD10", 9,
     [[[1, 2, 3, 4]], [[1, 3]], [[5, 6, 7, 8, 9]], [[6, 9], [7, 8]]], 80),
    ("052_C3xSL23", "C3xSL23", 11,
     [[[9, 10, 11]], SL_S, SL_T], 72),
    ("053_S4xC5", "S4xC5", 9,
     [[[1, 2]], [[1, 2, 3, 4]], [[5, 6, 7, 8, 9]]], 120),
    ("050_A5", "A5", 5, [[[1, 2, 3]], [[1, 2, 3, 4, 5]]], 60),
]


def main():
    os.makedirs(OUT, exist_ok=True)
    problems = []
    for fname, name, degree, gens, order in ENTRIES:
        perms = [cycles_to_perm(degree, g) for g in gens]
        group = PermutationGroup(perms) if perms else PermutationGroup(Permutation(degree - 1))
        got = group.order()
        classes = len(group.conjugacy_classes()) if got <= 200 else -1
        status = "ok"
        if got != order:
            status = f"ORDER MISMATCH got {got}"
            problems.append((name, status))
        if classes > 60:
            status = f"TOO MANY CLASSES {classes}"
            problems.append((name, status))
        print(f"{name:10s} degree={degree:3d} order={got:4d} classes={classes:3d} {status}")
        lines = [f"name {name}", f"degree {degree}"]
        for g in gens:
            lines.append("gen " + cyc_str(g))
        lines.append(f"order {order}")
        with open(os.path.join(OUT, fname + ".grp"), "w") as fh:
            fh.write("\n".join(lines) + "\n")
    if problems:
        print("PROBLEMS:", problems)
        sys.exit(1)
    print(f"wrote {len(ENTRIES)} entries")


if __name__ == "__main__":
    main()
