"""Shared golden test vectors.

The 12-entry binary pair is a known (12, 8)-ZCP; combined with the
quaternary length-4 GCP it yields the known-good 12x4 array pair below
(stored transposed, 4 rows of 12, as quaternary exponents: 0, 1, 2, 3 map
to 1, j, -1, -j).
"""

from zcpair import ZqVector

ZCP12_A = ZqVector(2, (1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0))
ZCP12_B = ZqVector(2, (1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1))

GCP4_C = ZqVector(4, (0, 0, 1, 3))
GCP4_D = ZqVector(4, (0, 0, 3, 1))

COMBINED_S_T4x12 = [
    [2, 0, 1, 1, 0, 2, 3, 3, 0, 2, 3, 3],
    [2, 0, 3, 3, 0, 2, 1, 1, 0, 2, 1, 1],
    [3, 1, 2, 2, 1, 3, 0, 0, 1, 3, 0, 0],
    [1, 3, 2, 2, 3, 1, 0, 0, 3, 1, 0, 0],
]
COMBINED_T_T4x12 = [
    [2, 0, 1, 1, 0, 2, 3, 3, 0, 2, 3, 3],
    [2, 0, 3, 3, 0, 2, 1, 1, 0, 2, 1, 1],
    [1, 3, 0, 0, 3, 1, 2, 2, 3, 1, 2, 2],
    [3, 1, 0, 0, 1, 3, 2, 2, 1, 3, 2, 2],
]

# known-good 14x4 binary pair from the direct construction at
# q=2, m=2, n=0, identity permutation, zero affine part (stored transposed)
DIRECT_S_T4x14 = [
    [0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1],
    [0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1],
    [1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 1],
]
DIRECT_T_T4x14 = [
    [0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1],
    [0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0],
    [1, 1, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0],
]

# the 4x8 value table of "x1*x2 + x1*y1 + y3" over q=2, n=2, m=3
ANF_4x8 = [
    [0, 1, 0, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 1, 0, 1, 0],
    [1, 0, 1, 0, 0, 1, 0, 1],
]

# the binary (14, 12)-ZCP produced by truncating the fixed 4-variable pair
BASE14_A = (0, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 1, 1)
BASE14_B = (0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 0)


def transpose(matrix):
    return [list(row) for row in zip(*matrix)]
