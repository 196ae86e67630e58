"""Generative constructions: ZCP x ZCP -> ZCAP combiners, the parameterized
array family, the binary (14, 12) base pair, and the direct 2-D
Boolean-function construction with zone ratio 6/7.

Every constructor verifies its own postcondition with the exact correlation
engine and raises VerificationError on mismatch; pass verify=False to skip
(useful for large instances, or to inspect a failing candidate).
"""

from __future__ import annotations

from dataclasses import dataclass

from .arrays import RootArray, ZcapCertificate, lift2d, zcap_check
from .gbf import (Gbf, Gbf2D, ZqVector, Zq2DArray, bits_msb,
                  check_permutation, gbf_to_sequence, gdj_pair)
from .sequences import RootVector, VerificationError, lift, max_zcz


def _claimed_width(A: RootVector, B: RootVector, claimed: int | None,
                   what: str) -> int:
    """Measure a pair's zone and reconcile it with a claimed width."""
    cert = max_zcz(A, B)
    if claimed is None:
        return cert.width
    if not cert.covers(claimed):
        raise VerificationError(
            f"{what} is not a ({cert.length}, {claimed})-ZCP: "
            f"measured zone width {cert.width}")
    return claimed


def _verify_zcap(S: RootArray, T: RootArray, z1: int, z2: int,
                 what: str) -> ZcapCertificate:
    cert = zcap_check(S, T, z1, z2)
    if not cert.ok:
        raise VerificationError(
            f"{what} failed verification as a "
            f"(({cert.rows}, {cert.cols}), ({z1}, {z2}))-ZCAP")
    return cert


def theorem1_combine(A: RootVector, B: RootVector,
                     C: RootVector, D: RootVector,
                     z1: int | None = None, z2: int | None = None,
                     force: bool = False,
                     verify: bool = True) -> tuple[RootArray, RootArray]:
    """Combine a binary ZCP (A, B) with a ZCP (C, D) into an array pair.

    Row i of S is A_i * C when A_i = B_i and A_i * reverse-conj(D)
    otherwise; T uses D and the negated reverse-conj of C.  The output is an
    ((L1, L2), (Z1, Z2))-ZCAP, a GCAP when both inputs are GCPs.

    z1/z2 are the claimed input zone widths (measured when omitted);
    force=True skips the input precondition checks.
    """
    if A.modulus != 2 or B.modulus != 2:
        raise VerificationError("(A, B) must be binary (modulus 2)")
    if len(A) != len(B):
        raise ValueError(f"length mismatch: {len(A)} != {len(B)}")
    if C.modulus != D.modulus:
        raise ValueError(f"modulus mismatch: {C.modulus} != {D.modulus}")
    if len(C) != len(D):
        raise ValueError(f"length mismatch: {len(C)} != {len(D)}")
    if not force:
        z1 = _claimed_width(A, B, z1, "(A, B)")
        z2 = _claimed_width(C, D, z2, "(C, D)")
    else:
        z1 = z1 or 1
        z2 = z2 or 1
    M = C.modulus
    half = M // 2
    a2 = A.rescaled(M).exponents
    L1, L2 = len(A), len(C)
    ec, ed = C.exponents, D.exponents
    s_exps: list[int] = []
    t_exps: list[int] = []
    for i in range(L1):
        ai = a2[i]
        if A.exponents[i] == B.exponents[i]:
            s_exps.extend((ai + ec[g]) % M for g in range(L2))
            t_exps.extend((ai + ed[g]) % M for g in range(L2))
        else:
            s_exps.extend((ai - ed[L2 - 1 - g]) % M for g in range(L2))
            t_exps.extend((ai + half - ec[L2 - 1 - g]) % M for g in range(L2))
    S = RootArray(M, L1, L2, tuple(s_exps))
    T = RootArray(M, L1, L2, tuple(t_exps))
    if verify:
        _verify_zcap(S, T, z1, z2, "combined pair")
    return S, T


def corollary1_combine(a: ZqVector, b: ZqVector,
                       c: ZqVector, d: ZqVector,
                       z1: int | None = None, z2: int | None = None,
                       force: bool = False,
                       verify: bool = True) -> tuple[Zq2DArray, Zq2DArray]:
    """Z_q form of the combiner: s_ig = c_g - (rev(d)_g + c_g)(a_i xor b_i)
    + (q/2) a_i, and t likewise with d leading.

    (a, b) must be binary; (c, d) is q-ary with q even.  Lifting the outputs
    to root form reproduces theorem1_combine on the lifted inputs.
    """
    if a.q != 2 or b.q != 2:
        raise VerificationError("(a, b) must be binary (q = 2)")
    if c.q != d.q:
        raise ValueError(f"q mismatch: {c.q} != {d.q}")
    if len(a) != len(b) or len(c) != len(d):
        raise ValueError("paired sequences must have equal lengths")
    if not force:
        z1 = _claimed_width(lift(a), lift(b), z1, "(a, b)")
        z2 = _claimed_width(lift(c), lift(d), z2, "(c, d)")
    else:
        z1 = z1 or 1
        z2 = z2 or 1
    q = c.q
    half = q // 2
    L1, L2 = len(a), len(c)
    rev_d = d.values[::-1]
    s_vals: list[int] = []
    t_vals: list[int] = []
    for i in range(L1):
        e = (a.values[i] + b.values[i]) % 2
        shift = half * a.values[i]
        for g in range(L2):
            mix = (rev_d[g] + c.values[g]) * e
            s_vals.append((c.values[g] - mix + shift) % q)
            t_vals.append((d.values[g] - mix + shift) % q)
    s = Zq2DArray(q, L1, L2, tuple(s_vals))
    t = Zq2DArray(q, L1, L2, tuple(t_vals))
    if verify:
        _verify_zcap(lift2d(s), lift2d(t), z1, z2, "combined pair")
    return s, t


def lemma5_default_permutation(m: int, tprime: int, v: int) -> tuple[int, ...]:
    """A chain permutation for which the truncated pair meets its zone claim.

    The quadratic chain must run over the last tprime variables (the ones
    whose index bits survive both the leading half and the final 2^v
    sliver), rotated to start at variable m-v+1 and end at m-v; the unused
    variables fill the tail of the permutation.  Found by exhaustive search
    over all permutations for m <= 5 and spot-checked beyond; arbitrary
    permutations generally fail the claim (the identity included).
    """
    block = list(range(m - tprime + 1, m + 1))
    rot = block.index(m - v + 1) if v > 0 else 0
    chain = block[rot:] + block[:rot]
    return tuple(chain + [j for j in range(1, m + 1) if j not in chain])


def lemma5_construct(q: int, n: int, m: int, tprime: int, v: int,
                     pi1=None, pi2=None, p=None, vcoef=None, d=None,
                     verify: bool = True) -> tuple[Zq2DArray, Zq2DArray]:
    """Parameterized q-ary ZCAP of size 2^n x (2^(m-1) + sum d_a 2^(a-1) + 2^v)
    with zero rectangle (2^n, 2^(tprime-1) + 2^v).

    The column direction comes from a truncated binary chain pair over m
    variables along pi1 with linear part p; the row direction is a GDJ pair
    over n variables along pi2 with affine part vcoef; they are combined and
    transposed.  The truncated pair's zone claim is checked exactly and a
    VerificationError is raised if the chosen parameters do not satisfy it;
    pi1 defaults to lemma5_default_permutation, which always does.
    """
    if not 0 <= v < tprime < m:
        raise ValueError(f"need 0 <= v < tprime < m, got v={v}, "
                         f"tprime={tprime}, m={m}")
    if n < 1:
        raise ValueError("need n >= 1")
    if pi1 is None:
        pi1 = lemma5_default_permutation(m, tprime, v)
    pi1 = check_permutation(pi1, m)
    pi2 = tuple(pi2 if pi2 is not None else range(1, n + 1))
    p = tuple(p if p is not None else (0,) * (m + 1))
    vcoef = tuple(vcoef if vcoef is not None else (0,) * (n + 1))
    d = tuple(d if d is not None else (0,) * (m - 1 - tprime))
    if len(p) != m + 1:
        raise ValueError(f"need m+1 = {m + 1} bits p_0..p_m")
    if any(bit not in (0, 1) for bit in p):
        raise ValueError("p coefficients must be bits")
    if len(d) != m - 1 - tprime:
        raise ValueError(
            f"need {m - 1 - tprime} bits d_alpha for alpha in "
            f"[{tprime + 1}, {m - 1}]")
    if any(bit not in (0, 1) for bit in d):
        raise ValueError("d coefficients must be bits")

    length = 2 ** (m - 1) + 2 ** v
    for k, bit in enumerate(d):
        length += bit * 2 ** (tprime + k)   # alpha = tprime + 1 + k
    width = 2 ** (tprime - 1) + 2 ** v

    terms = {frozenset({pi1[k], pi1[k + 1]}): 1 for k in range(tprime - 1)}
    for k in range(1, m + 1):
        terms[frozenset({k})] = terms.get(frozenset({k}), 0) + p[k]
    terms[frozenset()] = p[0]
    a_fun = Gbf(2, m, terms)
    b_fun = a_fun + Gbf(2, m, {frozenset({pi1[0]}): 1})
    a_seq = gbf_to_sequence(a_fun, length)
    b_seq = gbf_to_sequence(b_fun, length)
    if verify:
        _claimed_width(lift(a_seq), lift(b_seq), width, "truncated chain pair")

    c_seq, d_seq = gdj_pair(q, n, pi2, vcoef)
    s, t = corollary1_combine(a_seq, b_seq, c_seq, d_seq,
                              z1=width, z2=2 ** n, force=True, verify=False)
    s, t = s.transpose(), t.transpose()
    if verify:
        _verify_zcap(lift2d(s), lift2d(t), 2 ** n, width, "array pair")
    return s, t


# x-polynomials of the direct construction, as monomial index sets over
# x1..x4: the base quadratic polynomial and the pair-offset polynomial.
_BASE_MONOMIALS = ({1}, {2}, {1, 2}, {1, 3}, {2, 4}, {1, 2, 4})
_OFFSET_MONOMIALS = ({1}, {4}, {1, 2}, {2, 3}, {2, 4}, {3, 4}, {1, 4},
                     {1, 2, 3}, {1, 3, 4})


def _parity_int_anf(monomials, nvars: int) -> dict:
    """Integer-valued ANF of the parity of a sum of mod-2 monomials.

    The returned polynomial evaluates to exactly 0 or 1 on binary inputs,
    so it can gate a Z_q coefficient by multiplication (the raw monomial
    sum takes values > 1 and would leak multiples of the coefficient).
    """
    def value(mask: int) -> int:
        return sum(all(mask >> (j - 1) & 1 for j in mono)
                   for mono in monomials) % 2

    coeffs = {}
    for smask in range(2 ** nvars):
        c = 0
        tmask = smask
        while True:   # all submasks of smask
            sign = -1 if (bin(smask ^ tmask).count("1") % 2) else 1
            c += sign * value(tmask)
            if tmask == 0:
                break
            tmask = (tmask - 1) & smask
        if c:
            coeffs[frozenset(j for j in range(1, nvars + 1)
                             if smask >> (j - 1) & 1)] = c
    return coeffs


_OFFSET_PARITY_ANF = _parity_int_anf(_OFFSET_MONOMIALS, 4)


def lemma6_base(verify: bool = True) -> tuple[ZqVector, ZqVector]:
    """The binary (14, 12)-ZCP obtained by truncating two fixed 4-variable
    Boolean functions to length 14."""
    a_fun = Gbf(2, 4, {frozenset(mono): 1 for mono in _BASE_MONOMIALS})
    offset = Gbf(2, 4, {frozenset(mono): 1 for mono in _OFFSET_MONOMIALS})
    b_fun = a_fun + offset
    a = gbf_to_sequence(a_fun, 14)
    b = gbf_to_sequence(b_fun, 14)
    if verify:
        cert = max_zcz(lift(a), lift(b))
        if not cert.covers(12):
            raise AssertionError(
                f"base pair zone width {cert.width}, expected >= 12")
    return a, b


@dataclass(frozen=True)
class Theorem2Params:
    """Parameters of the direct 2-D construction.

    q even; m >= 1 y-variables; n in [0, m] of them folded into the row
    index; pi a permutation of {1..m}; v the affine coefficients v_0..v_m.
    """

    q: int
    m: int
    n: int = 0
    pi: tuple[int, ...] | None = None
    v: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.q < 2 or self.q % 2 != 0:
            raise ValueError(f"q must be even >= 2, got {self.q}")
        if self.m < 1:
            raise ValueError("need m >= 1")
        if not 0 <= self.n <= self.m:
            raise ValueError(f"need 0 <= n <= m, got n={self.n}, m={self.m}")
        pi = self.pi if self.pi is not None else range(1, self.m + 1)
        object.__setattr__(self, "pi", check_permutation(pi, self.m))
        v = tuple(self.v) if self.v is not None else (0,) * (self.m + 1)
        if len(v) != self.m + 1:
            raise ValueError(f"need m+1 = {self.m + 1} coefficients v_0..v_m")
        object.__setattr__(self, "v", tuple(c % self.q for c in v))

    @property
    def dims(self) -> tuple[int, int]:
        return 14 * 2 ** self.n, 2 ** (self.m - self.n)

    @property
    def zone(self) -> tuple[int, int]:
        return 12 * 2 ** self.n, 2 ** (self.m - self.n)


def theorem2_gbf(params: Theorem2Params) -> Gbf2D:
    """The 4+m variable generating function of the direct construction.

    The y-part is a GDJ chain c(y); the x-part adds (q/2) times the base
    polynomial plus the bracket (q/2)m + (q/2)y_pi(m) - sum v_l - 2 v_0
    multiplied by the 0/1-valued form of the offset polynomial.  The bracket
    equals -(rev(d) + c)(y) for the GDJ pair (c, d), so rows where the
    offset polynomial is odd carry exactly the reverse-conjugate mate
    blocks.  Two pitfalls, both caught by the exact verifier on q > 2 with
    nonzero v: an extra -2 sum v_l y_l inside the bracket breaks the mate
    identity, and multiplying the bracket by the raw monomial sum (which
    takes values > 1) leaks multiples of the bracket.
    """
    q, m, pi, v = params.q, params.m, params.pi, params.v
    half = q // 2
    terms: dict = {}

    def add(xset, yset, coeff):
        key = frozenset([("x", i) for i in xset] + [("y", l) for l in yset])
        terms[key] = terms.get(key, 0) + coeff

    for l in range(m - 1):
        add((), {pi[l], pi[l + 1]}, half)
    for l in range(1, m + 1):
        add((), {l}, v[l])
    add((), (), v[0])
    for mono in _BASE_MONOMIALS:
        add(mono, (), half)
    const = half * m - sum(v[1:]) - 2 * v[0]
    for mono, gate in _OFFSET_PARITY_ANF.items():
        add(mono, (), gate * const)
        add(mono, {pi[m - 1]}, gate * half)
    return Gbf2D(q, 4, m, terms)


def theorem2_direct(params: Theorem2Params,
                    verify: bool = True) -> tuple[Zq2DArray, Zq2DArray]:
    """Direct q-ary ((14*2^n, 2^(m-n)), (12*2^n, 2^(m-n)))-ZCAP.

    Row r combines the truncated 4-bit x-index (r // 2^n, in [0, 14)) with
    the leading n y-bits (r mod 2^n, y_1 most significant); the column index
    carries y_(n+1)..y_m.  Equivalently the array is the row-major reshape
    of the flattened length-14*2^m sequence; at n = m the flattened pair is
    a (14*2^m, 12*2^m)-ZCP.

    Verification failure raises, since it would indicate a bug.
    """
    q, m, n = params.q, params.m, params.n
    s_fun = theorem2_gbf(params)
    t_fun = s_fun + Gbf2D(q, 4, m, {frozenset({("y", params.pi[0])}): q // 2})
    rows, cols = params.dims
    head = 2 ** n
    s_vals: list[int] = []
    t_vals: list[int] = []
    for r in range(rows):
        xbits = bits_msb(r // head, 4)
        headbits = bits_msb(r % head, n)
        for g in range(cols):
            ybits = headbits + bits_msb(g, m - n)
            s_vals.append(s_fun.evaluate(xbits, ybits))
            t_vals.append(t_fun.evaluate(xbits, ybits))
    s = Zq2DArray(q, rows, cols, tuple(s_vals))
    t = Zq2DArray(q, rows, cols, tuple(t_vals))
    if verify:
        z1, z2 = params.zone
        _verify_zcap(lift2d(s), lift2d(t), z1, z2, "direct construction")
    return s, t
