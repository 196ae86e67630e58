#!/usr/bin/env python3
"""One-shot resolver for the 14-block extension layout frozen in
zcpair.sequences._EXTENSION_LAYOUT.

The shorthand concatenation notation for the (14L, 12L) extension is
ambiguous (its separator-and-sign token stream does not parse to 14
blocks), but the blocks are known to fall into four equality classes.  This
script enumerates every assignment of the classes to {A, -A, C, -C}, keeps
the assignments whose output verifies exactly as a (14L, 12L)-ZCP for both
an L=2 binary GCP and an L=4 quaternary GCP, and ranks the survivors by
longest-common-subsequence agreement with the reference token stream.  The
unique best-ranked assignment is the one frozen in the source.
"""

import itertools

from zcpair import gdj_pair, lift, max_zcz, mate_of
from zcpair.sequences import RootVector

CLASSES = [(0, 2, 3, 5, 7), (1, 10, 11), (4, 12), (6, 8, 9, 13)]
VALUES = [("A", 0), ("A", 1), ("C", 0), ("C", 1)]
REFERENCE_TOKENS = ["A", "C", "A", "A", "A", "-A", "A", "A", "-C", "A", "A",
                    "-C", "C", "C", "-A", "C", "-C"]


def layout_of(assignment):
    slots = [None] * 14
    for cls, val in zip(CLASSES, assignment):
        for pos in cls:
            slots[pos] = val
    return slots


def build(first, mate, layout):
    M = first.modulus
    half = M // 2
    exps = []
    for name, neg in layout:
        block = first if name == "A" else mate
        exps.extend((e + half) % M if neg else e for e in block.exponents)
    return RootVector(M, tuple(exps))


def verifies(A, B, layout):
    C, D = mate_of(A, B)
    S = build(A, C, layout)
    T = build(B, D, layout)
    return max_zcz(S, T).width >= 12 * len(A)


def lcs(a, b):
    dp = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
    for i in range(len(a)):
        for j in range(len(b)):
            dp[i + 1][j + 1] = dp[i][j] + 1 if a[i] == b[j] else \
                max(dp[i][j + 1], dp[i + 1][j])
    return dp[-1][-1]


def main():
    g2 = (RootVector(2, (0, 0)), RootVector(2, (0, 1)))
    a4, b4 = gdj_pair(4, 2, pi=(1, 2), v=(0, 1, 0))
    g4 = (lift(a4), lift(b4))

    survivors = []
    for assignment in itertools.product(VALUES, repeat=4):
        layout = layout_of(assignment)
        if verifies(*g2, layout) and verifies(*g4, layout):
            survivors.append(layout)
    print(f"{len(survivors)} of {4 ** 4} assignments verify as (14L, 12L)-ZCPs")

    def tokens(layout):
        return [("-" if neg else "") + name for name, neg in layout]

    ranked = sorted(survivors, key=lambda lay: -lcs(tokens(lay), REFERENCE_TOKENS))
    for layout in ranked:
        score = lcs(tokens(layout), REFERENCE_TOKENS)
        print(f"  agreement {score:2d}/14: {' '.join(tokens(layout))}")
    print("frozen layout =", ranked[0])


if __name__ == "__main__":
    main()
