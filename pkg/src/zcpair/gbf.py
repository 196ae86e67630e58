"""Generalized Boolean functions in algebraic normal form.

A function maps binary variables to Z_q (q even).  The 1-D form uses
variables x1..xm; the 2-D form uses x1..xn for the row direction and
y1..ym for the column direction.  The value table of a function, read in
most-significant-bit index order (index i has bits i = sum_l i_l 2^(m-l),
i_1 first), is its associated sequence; keeping only the first L entries
gives the truncated sequence, which is how non-power-of-two lengths such
as 14 arise.

Also provides the standard quadratic-chain construction of Golay
complementary pairs (GDJ pairs) over Z_q.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field


def bits_msb(i: int, width: int) -> tuple[int, ...]:
    """Binary digits of i, most significant first, e.g. bits_msb(6, 4) = (0,1,1,0)."""
    return tuple((i >> (width - 1 - k)) & 1 for k in range(width))


def _check_even_q(q: int) -> None:
    if q < 2 or q % 2 != 0:
        raise ValueError(f"q must be an even integer >= 2, got {q}")


@dataclass(frozen=True)
class ZqVector:
    """1-D sequence over Z_q; the semantic entry k is zeta_q^values[k]."""

    q: int
    values: tuple[int, ...]

    def __post_init__(self):
        _check_even_q(self.q)
        if len(self.values) < 1:
            raise ValueError("sequence must be nonempty")
        if any(not 0 <= v < self.q for v in self.values):
            raise ValueError(f"entries must lie in [0, {self.q})")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class Zq2DArray:
    """L1 x L2 array over Z_q, stored row-major."""

    q: int
    rows: int
    cols: int
    values: tuple[int, ...]

    def __post_init__(self):
        _check_even_q(self.q)
        if self.rows < 1 or self.cols < 1:
            raise ValueError("dimensions must be >= 1")
        if len(self.values) != self.rows * self.cols:
            raise ValueError("value count does not match dimensions")
        if any(not 0 <= v < self.q for v in self.values):
            raise ValueError(f"entries must lie in [0, {self.q})")

    def entry(self, i: int, g: int) -> int:
        return self.values[i * self.cols + g]

    def row(self, i: int) -> tuple[int, ...]:
        return self.values[i * self.cols:(i + 1) * self.cols]

    def to_nested(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def flatten(self) -> ZqVector:
        """Row-major read-out as a 1-D sequence."""
        return ZqVector(self.q, self.values)

    def transpose(self) -> "Zq2DArray":
        vals = tuple(self.entry(i, g)
                     for g in range(self.cols) for i in range(self.rows))
        return Zq2DArray(self.q, self.cols, self.rows, vals)


def _normalize_terms(terms, q):
    out = {}
    for key, coeff in terms.items():
        c = coeff % q
        if c:
            out[frozenset(key)] = c
    return out


@dataclass(frozen=True)
class Gbf:
    """Z_q-valued Boolean function of m variables, in algebraic normal form.

    terms maps a frozenset of variable indices (subset of {1..m}; the empty
    set is the constant term) to a nonzero coefficient in [0, q).
    """

    q: int
    m: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        _check_even_q(self.q)
        if self.m < 0:
            raise ValueError("variable count must be >= 0")
        object.__setattr__(self, "terms", _normalize_terms(self.terms, self.q))
        for key in self.terms:
            if any(not 1 <= v <= self.m for v in key):
                raise ValueError(f"variable index out of range in {set(key)}")

    def __add__(self, other: "Gbf") -> "Gbf":
        if (self.q, self.m) != (other.q, other.m):
            raise ValueError("can only add functions over the same variables")
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, 0) + c
        return Gbf(self.q, self.m, merged)

    def evaluate(self, bits: tuple[int, ...]) -> int:
        """Value at a full assignment (i_1, ..., i_m), reduced mod q."""
        if len(bits) != self.m:
            raise ValueError(
                f"assignment covers {len(bits)} of {self.m} variables")
        total = 0
        for key, coeff in self.terms.items():
            if all(bits[v - 1] for v in key):
                total += coeff
        return total % self.q


@dataclass(frozen=True)
class Gbf2D:
    """Z_q-valued Boolean function of n x-variables and m y-variables.

    Term keys are frozensets of tagged variables ('x', i) or ('y', l).
    """

    q: int
    n: int
    m: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        _check_even_q(self.q)
        if self.n < 0 or self.m < 0:
            raise ValueError("variable counts must be >= 0")
        object.__setattr__(self, "terms", _normalize_terms(self.terms, self.q))
        for key in self.terms:
            for kind, idx in key:
                limit = self.n if kind == "x" else self.m
                if kind not in ("x", "y") or not 1 <= idx <= limit:
                    raise ValueError(f"variable {kind}{idx} out of range")

    def __add__(self, other: "Gbf2D") -> "Gbf2D":
        if (self.q, self.n, self.m) != (other.q, other.n, other.m):
            raise ValueError("can only add functions over the same variables")
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, 0) + c
        return Gbf2D(self.q, self.n, self.m, merged)

    def evaluate(self, xbits: tuple[int, ...], ybits: tuple[int, ...]) -> int:
        if len(xbits) != self.n or len(ybits) != self.m:
            raise ValueError(
                f"assignment covers {len(xbits)}+{len(ybits)} of "
                f"{self.n}+{self.m} variables")
        total = 0
        for key, coeff in self.terms.items():
            for kind, idx in key:
                bit = xbits[idx - 1] if kind == "x" else ybits[idx - 1]
                if not bit:
                    break
            else:
                total += coeff
        return total % self.q

    def as_gbf(self) -> Gbf:
        """The same function over n+m variables ordered x1..xn, y1..ym."""
        terms = {}
        for key, coeff in self.terms.items():
            new = frozenset(idx if kind == "x" else self.n + idx
                            for kind, idx in key)
            terms[new] = coeff
        return Gbf(self.q, self.n + self.m, terms)


_VAR_RE = re.compile(r"^([xy])([0-9]+)$")
_INT_RE = re.compile(r"^-?[0-9]+$")


def parse_anf(text: str, q: int, n: int, m: int) -> Gbf2D:
    """Parse an algebraic-normal-form expression into a Gbf2D.

    Grammar: a sum of terms; each term is an optional integer coefficient
    and '*'-separated variables from {x1..xn, y1..ym}; whitespace is
    ignored; '-' starts a negated term.  Coefficients are reduced mod q and
    duplicate monomials are summed.  n = 0 yields a function of y-variables
    only (a 1-D function).
    """
    _check_even_q(q)
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ValueError("empty expression")
    tokens = re.findall(r"[+-]?[^+-]+", compact)
    if "".join(tokens) != compact:
        raise ValueError(f"malformed expression {text!r}")
    terms: dict = {}
    for token in tokens:
        sign = -1 if token.startswith("-") else 1
        body = token.lstrip("+-")
        if not body:
            raise ValueError(f"malformed term {token!r}")
        coeff = sign
        variables = set()
        for factor in body.split("*"):
            if _INT_RE.match(factor):
                coeff *= int(factor)
                continue
            mt = _VAR_RE.match(factor)
            if not mt:
                raise ValueError(f"malformed token {factor!r}")
            kind, idx = mt.group(1), int(mt.group(2))
            limit = n if kind == "x" else m
            if not 1 <= idx <= limit:
                raise ValueError(f"unknown variable {factor!r}")
            variables.add((kind, idx))
        key = frozenset(variables)
        terms[key] = terms.get(key, 0) + coeff
    return Gbf2D(q, n, m, terms)


def gbf_to_sequence(f: Gbf, L: int) -> ZqVector:
    """First L values of f in MSB index order (the truncated sequence)."""
    if not 1 <= L <= 2 ** f.m:
        raise ValueError(f"L must lie in [1, {2 ** f.m}], got {L}")
    return ZqVector(f.q, tuple(f.evaluate(bits_msb(i, f.m))
                               for i in range(L)))


def gbf2d_to_array(f: Gbf2D, L1: int, L2: int) -> Zq2DArray:
    """The truncated L1 x L2 value array of f; rows use x-bits, columns y-bits."""
    if not 1 <= L1 <= 2 ** f.n:
        raise ValueError(f"L1 must lie in [1, {2 ** f.n}], got {L1}")
    if not 1 <= L2 <= 2 ** f.m:
        raise ValueError(f"L2 must lie in [1, {2 ** f.m}], got {L2}")
    vals = []
    for i in range(L1):
        xb = bits_msb(i, f.n)
        for g in range(L2):
            vals.append(f.evaluate(xb, bits_msb(g, f.m)))
    return Zq2DArray(f.q, L1, L2, tuple(vals))


def check_permutation(pi, m: int) -> tuple[int, ...]:
    pi = tuple(pi)
    if sorted(pi) != list(range(1, m + 1)):
        raise ValueError(f"{pi} is not a permutation of 1..{m}")
    return pi


def gdj_chain(q: int, m: int, pi, v) -> Gbf:
    """The quadratic-chain function (q/2)*sum x_pi(l) x_pi(l+1) + sum v_l x_l + v_0."""
    _check_even_q(q)
    if m < 1:
        raise ValueError("need at least one variable")
    pi = check_permutation(pi, m)
    v = tuple(v)
    if len(v) != m + 1:
        raise ValueError(f"need m+1 = {m + 1} coefficients v_0..v_m")
    half = q // 2
    terms = {frozenset({pi[l], pi[l + 1]}): half for l in range(m - 1)}
    for k in range(1, m + 1):
        terms[frozenset({k})] = terms.get(frozenset({k}), 0) + v[k]
    terms[frozenset()] = v[0]
    return Gbf(q, m, terms)


def gdj_pair(q: int, m: int, pi=None, v=None,
             companion: str = "first") -> tuple[ZqVector, ZqVector]:
    """A Golay complementary pair of length 2^m over Z_q.

    The first sequence comes from the quadratic chain along the permutation
    pi with affine part v; the second adds (q/2) times the first chain
    variable (companion="first") or the last one (companion="last").
    """
    if pi is None:
        pi = range(1, m + 1)
    if v is None:
        v = (0,) * (m + 1)
    f = gdj_chain(q, m, pi, v)
    pi = check_permutation(pi, m)
    if companion == "first":
        k = pi[0]
    elif companion == "last":
        k = pi[m - 1]
    else:
        raise ValueError(f"companion must be 'first' or 'last', got {companion!r}")
    g = f + Gbf(q, m, {frozenset({k}): q // 2})
    return gbf_to_sequence(f, 2 ** m), gbf_to_sequence(g, 2 ** m)
