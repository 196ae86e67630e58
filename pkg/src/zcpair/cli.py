"""Command-line front end: generate constructions, verify claimed zone
parameters, and export correlation surfaces.

Sequence files are JSON documents:

    1-D over Z_q:      {"q": int, "values": [int, ...]}
    2-D over Z_q:      {"q": int, "rows": R, "cols": C, "values": [[...], ...]}
    1-D root form:     {"modulus": M, "exponents": [int, ...]}
    2-D root form:     {"modulus": M, "rows": R, "cols": C, "exponents": [[...], ...]}

plus an optional "label".  A pair is two such documents, one per line;
`verify` and `surface` accept either two one-document files or a single
two-document stream ("-" reads standard input, so `gen ... | verify -`
works).  Exit codes: 0 success/verified, 1 claim falsified or
self-verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arrays import RootArray, lift2d, max_zcz_rect, surface
from .constructions import (Theorem2Params, corollary1_combine,
                            lemma5_construct, lemma6_base, theorem1_combine,
                            theorem2_direct)
from .gbf import ZqVector, Zq2DArray, gbf2d_to_array, gbf_to_sequence, gdj_pair, parse_anf
from .sequences import RootVector, VerificationError, lift, max_zcz


class UsageError(ValueError):
    """Bad input data or flags detected after argparse (exit code 2)."""


# ---------------------------------------------------------------------------
# sequence-file serialization

def value_to_doc(obj, label: str | None = None) -> dict:
    if isinstance(obj, ZqVector):
        doc = {"q": obj.q, "values": list(obj.values)}
    elif isinstance(obj, Zq2DArray):
        doc = {"q": obj.q, "rows": obj.rows, "cols": obj.cols,
               "values": obj.to_nested()}
    elif isinstance(obj, RootVector):
        doc = {"modulus": obj.modulus, "exponents": list(obj.exponents)}
    elif isinstance(obj, RootArray):
        doc = {"modulus": obj.modulus, "rows": obj.rows, "cols": obj.cols,
               "exponents": obj.to_nested()}
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    if label:
        doc["label"] = label
    return doc


def doc_to_value(doc: dict):
    if not isinstance(doc, dict):
        raise UsageError(f"expected a JSON object, got {type(doc).__name__}")
    try:
        if "values" in doc:
            q = doc["q"]
            if "rows" in doc or "cols" in doc:
                flat = [v for row in doc["values"] for v in row]
                return Zq2DArray(q, doc["rows"], doc["cols"], tuple(flat))
            return ZqVector(q, tuple(doc["values"]))
        if "exponents" in doc:
            M = doc["modulus"]
            if "rows" in doc or "cols" in doc:
                flat = [v for row in doc["exponents"] for v in row]
                return RootArray(M, doc["rows"], doc["cols"], tuple(flat))
            return RootVector(M, tuple(doc["exponents"]))
    except UsageError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"bad sequence document: {exc}") from exc
    raise UsageError("document has neither 'values' nor 'exponents'")


def load_documents(path: str) -> list[dict]:
    """All JSON documents concatenated in a file ('-' for stdin)."""
    text = sys.stdin.read() if path == "-" else open(path).read()
    decoder = json.JSONDecoder()
    docs = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        try:
            doc, pos = decoder.raw_decode(text, pos)
        except json.JSONDecodeError as exc:
            raise UsageError(f"{path}: invalid JSON: {exc}") from exc
        docs.append(doc)
    if not docs:
        raise UsageError(f"{path}: no JSON documents found")
    return docs


def load_pair(paths: list[str]):
    """Two sequence documents from one two-document stream or two files."""
    if len(paths) == 1:
        docs = load_documents(paths[0])
        if len(docs) != 2:
            raise UsageError(
                f"{paths[0]}: expected exactly 2 documents, found {len(docs)}")
    elif len(paths) == 2:
        docs = []
        for p in paths:
            got = load_documents(p)
            if len(got) != 1:
                raise UsageError(f"{p}: expected exactly 1 document")
            docs.append(got[0])
    else:
        raise UsageError("expected one pair file or two sequence files")
    names = [d.get("label") or p for d, p in
             zip(docs, paths if len(paths) == 2 else [paths[0]] * 2)]
    return [doc_to_value(d) for d in docs], names


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


def as_root_pair(x, y):
    """Lift a loaded pair to root form over a common modulus."""
    def modulus(v):
        return v.modulus if isinstance(v, (RootVector, RootArray)) else v.q

    M = _lcm(modulus(x), modulus(y))

    def to_root(v):
        if isinstance(v, ZqVector):
            return lift(v, M)
        if isinstance(v, Zq2DArray):
            return lift2d(v, M)
        return v.rescaled(M) if isinstance(v, RootVector) else \
            RootArray(M, v.rows, v.cols,
                      tuple(e * (M // v.modulus) for e in v.exponents))

    rx, ry = to_root(x), to_root(y)
    if isinstance(rx, RootVector) != isinstance(ry, RootVector):
        raise UsageError("cannot pair a 1-D sequence with a 2-D array")
    if isinstance(rx, RootVector):
        if len(rx) != len(ry):
            raise UsageError(f"length mismatch: {len(rx)} != {len(ry)}")
    elif (rx.rows, rx.cols) != (ry.rows, ry.cols):
        raise UsageError(
            f"dimension mismatch: {(rx.rows, rx.cols)} != {(ry.rows, ry.cols)}")
    return rx, ry


def emit_documents(docs: list[dict], out: str | None) -> None:
    text = "\n".join(json.dumps(d) for d in docs) + "\n"
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# flag parsing helpers

def int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _gen_parser(sub, name, help_text):
    p = sub.add_parser(name, help=help_text)
    p.add_argument("--out", help="write the generated documents to this path")
    p.add_argument("--label", help="label prefix for the emitted documents")
    return p


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="zcpair",
        description="Generate, verify, and export Z-complementary pairs and "
                    "2-D Z-complementary array pairs.")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a construction")
    gsub = gen.add_subparsers(dest="construction", required=True)

    p = _gen_parser(gsub, "gdj", "quadratic-chain GCP of length 2^m over Z_q")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pi", type=int_list, help="permutation of 1..m (default identity)")
    p.add_argument("--v", type=int_list, help="coefficients v0..vm (default zero)")
    p.add_argument("--companion", choices=("first", "last"), default="first")

    p = _gen_parser(gsub, "lemma4", "extend a GCP pair to a (14L, 12L)-ZCP")
    p.add_argument("--a", required=True, help="first input sequence file")
    p.add_argument("--b", required=True, help="second input sequence file")
    p.add_argument("--force", action="store_true",
                   help="skip the input GCP precondition check")

    _gen_parser(gsub, "lemma6", "the binary (14, 12)-ZCP base pair")

    for name, help_text in (
            ("theorem1", "combine binary ZCP x ZCP into a root-form ZCAP"),
            ("corollary1", "combine binary ZCP x q-ary ZCP into a q-ary ZCAP")):
        p = _gen_parser(gsub, name, help_text)
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
        p.add_argument("--c", required=True)
        p.add_argument("--d", required=True)
        p.add_argument("--z1", type=int, help="claimed zone width of (a, b)")
        p.add_argument("--z2", type=int, help="claimed zone width of (c, d)")
        p.add_argument("--force", action="store_true",
                       help="skip the input precondition checks")
        p.add_argument("--no-verify", action="store_true",
                       help="skip output verification")

    p = _gen_parser(gsub, "lemma5", "parameterized q-ary 2^n x L ZCAP")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--tprime", type=int, required=True)
    p.add_argument("--vexp", type=int, required=True,
                   help="the exponent v with 0 <= v < tprime")
    p.add_argument("--pi1", type=int_list,
                   help="chain permutation of 1..m (default: a verified one)")
    p.add_argument("--pi2", type=int_list, help="permutation of 1..n")
    p.add_argument("--p", type=int_list, help="bits p0..pm")
    p.add_argument("--vcoef", type=int_list, help="coefficients v0..vn in Z_q")
    p.add_argument("--d", type=int_list,
                   help="bits d_alpha for alpha in [tprime+1, m-1]")
    p.add_argument("--no-verify", action="store_true")

    p = _gen_parser(gsub, "theorem2", "direct (14*2^n x 2^(m-n)) q-ary ZCAP")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--pi", type=int_list)
    p.add_argument("--v", type=int_list)
    p.add_argument("--no-verify", action="store_true")

    p = _gen_parser(gsub, "anf", "evaluate an algebraic-normal-form expression")
    p.add_argument("--anf", required=True, help='e.g. "x1*x2 + x1*y1 + y3"')
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, default=0, help="number of x-variables")
    p.add_argument("--m", type=int, required=True, help="number of y-variables")
    p.add_argument("--l1", type=int, help="row truncation (default 2^n)")
    p.add_argument("--l2", type=int, help="column truncation (default 2^m)")

    p = sub.add_parser("verify", help="verify claimed zone parameters of a pair")
    p.add_argument("files", nargs="+",
                   help="two sequence files, or one two-document file ('-' = stdin)")
    p.add_argument("--z", type=int, help="claimed 1-D zone width")
    p.add_argument("--z1", type=int, help="claimed zone rows (2-D)")
    p.add_argument("--z2", type=int, help="claimed zone columns (2-D)")
    p.add_argument("--max", action="store_true",
                   help="report the measured maximum only (default when no claim)")

    p = sub.add_parser("surface", help="export |autocorrelation sum| over all shifts")
    p.add_argument("files", nargs="+")
    p.add_argument("--out", required=True, help="CSV output path")
    p.add_argument("--plot", help="also render the surface to this image file")

    return ap


# ---------------------------------------------------------------------------
# command implementations

def cmd_gen(args) -> int:
    label = args.label
    con = args.construction

    def tag(name):
        return f"{label} {name}" if label else name

    if con == "gdj":
        a, b = gdj_pair(args.q, args.m, args.pi, args.v, args.companion)
        base = f"gdj q={args.q} m={args.m}"
        docs = [value_to_doc(a, tag(f"{base} a")), value_to_doc(b, tag(f"{base} b"))]
    elif con == "lemma6":
        a, b = lemma6_base()
        docs = [value_to_doc(a, tag("lemma6 a")), value_to_doc(b, tag("lemma6 b"))]
    elif con == "lemma4":
        (va, vb), _ = load_pair([args.a, args.b])
        A, B = as_root_pair(va, vb)
        if not isinstance(A, RootVector):
            raise UsageError("lemma4 needs 1-D inputs")
        from .sequences import lemma4_extend
        S, T = lemma4_extend(A, B, check=not args.force)
        docs = [value_to_doc(S, tag("lemma4 s")), value_to_doc(T, tag("lemma4 t"))]
    elif con in ("theorem1", "corollary1"):
        (va, vb), _ = load_pair([args.a, args.b])
        (vc, vd), _ = load_pair([args.c, args.d])
        kw = dict(z1=args.z1, z2=args.z2, force=args.force,
                  verify=not args.no_verify)
        if con == "theorem1":
            A, B = as_root_pair(va, vb)
            C, D = as_root_pair(vc, vd)
            if not isinstance(A, RootVector) or not isinstance(C, RootVector):
                raise UsageError("theorem1 needs 1-D inputs")
            S, T = theorem1_combine(A, B, C, D, **kw)
        else:
            if not (isinstance(va, ZqVector) and isinstance(vb, ZqVector)
                    and isinstance(vc, ZqVector) and isinstance(vd, ZqVector)):
                raise UsageError("corollary1 needs 1-D Z_q inputs")
            S, T = corollary1_combine(va, vb, vc, vd, **kw)
        docs = [value_to_doc(S, tag(f"{con} s")), value_to_doc(T, tag(f"{con} t"))]
    elif con == "lemma5":
        s, t = lemma5_construct(args.q, args.n, args.m, args.tprime, args.vexp,
                                pi1=args.pi1, pi2=args.pi2, p=args.p,
                                vcoef=args.vcoef, d=args.d,
                                verify=not args.no_verify)
        base = f"lemma5 q={args.q} n={args.n} m={args.m} t'={args.tprime} v={args.vexp}"
        docs = [value_to_doc(s, tag(f"{base} s")), value_to_doc(t, tag(f"{base} t"))]
    elif con == "theorem2":
        params = Theorem2Params(q=args.q, m=args.m, n=args.n,
                                pi=args.pi, v=args.v)
        s, t = theorem2_direct(params, verify=not args.no_verify)
        base = f"theorem2 q={args.q} m={args.m} n={args.n}"
        docs = [value_to_doc(s, tag(f"{base} s")), value_to_doc(t, tag(f"{base} t"))]
    elif con == "anf":
        f = parse_anf(args.anf, args.q, args.n, args.m)
        if args.n == 0:
            seq = gbf_to_sequence(f.as_gbf(), args.l2 or 2 ** args.m)
            docs = [value_to_doc(seq, tag(f"anf {args.anf}"))]
        else:
            arr = gbf2d_to_array(f, args.l1 or 2 ** args.n, args.l2 or 2 ** args.m)
            docs = [value_to_doc(arr, tag(f"anf {args.anf}"))]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown construction {con}")

    emit_documents(docs, args.out)
    return 0


def _ratio_str(num: int, den: int) -> str:
    from fractions import Fraction
    f = Fraction(num, den)
    return f"{f.numerator}/{f.denominator}"


def cmd_verify(args) -> int:
    if args.z is not None and (args.z1 is not None or args.z2 is not None):
        raise UsageError("give either --z or --z1/--z2, not both")
    if (args.z1 is None) != (args.z2 is None):
        raise UsageError("--z1 and --z2 must be given together")
    (x, y), names = load_pair(args.files)
    X, Y = as_root_pair(x, y)
    report: dict = {"inputs": names}
    verified = None
    if isinstance(X, RootVector):
        cert = max_zcz(X, Y)
        report.update(kind="pair", length=cert.length, peak=cert.peak,
                      max_width=cert.width, is_gcp=cert.is_gcp,
                      zcz_ratio=_ratio_str(cert.width, cert.length))
        if args.z is not None:
            report["claimed"] = {"z": args.z}
            verified = cert.covers(args.z)
        elif args.z1 is not None:
            raise UsageError("--z1/--z2 apply to 2-D inputs; use --z")
    else:
        fr = max_zcz_rect(X, Y)
        report.update(kind="array_pair", dims=[fr.rows, fr.cols], peak=fr.peak,
                      frontier=[list(r) for r in fr.rectangles],
                      zcz_ratio=_ratio_str(fr.best_ratio.numerator,
                                           fr.best_ratio.denominator))
        if args.z is not None:
            raise UsageError("--z applies to 1-D inputs; use --z1/--z2")
        if args.z1 is not None:
            report["claimed"] = {"z1": args.z1, "z2": args.z2}
            verified = fr.covers(args.z1, args.z2)
    if verified is not None:
        report["verified"] = verified
    print(json.dumps(report))
    return 0 if verified in (True, None) else 1


def cmd_surface(args) -> int:
    (x, y), names = load_pair(args.files)
    X, Y = as_root_pair(x, y)
    if isinstance(X, RootVector):
        X = RootArray(X.modulus, 1, len(X), X.exponents)
        Y = RootArray(Y.modulus, 1, len(Y), Y.exponents)
    grid = surface(X, Y)
    L1, L2 = X.rows, X.cols
    with open(args.out, "w") as fh:
        fh.write("u1,u2,magnitude\n")
        for a, row in enumerate(grid):
            for b, mag in enumerate(row):
                fh.write(f"{a - L1 + 1},{b - L2 + 1},{mag:.12g}\n")
    if args.plot:
        _render_surface(grid, L1, L2, names, args.plot)
    return 0


def _render_surface(grid, L1, L2, names, path) -> None:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    data = np.asarray(grid)
    fig, ax = plt.subplots(figsize=(7, 5))
    im = ax.imshow(data, origin="lower", aspect="auto", cmap="viridis",
                   extent=(-L2 + 0.5, L2 - 0.5, -L1 + 0.5, L1 - 0.5))
    ax.set_xlabel("column shift u2")
    ax.set_ylabel("row shift u1")
    ax.set_title(f"|autocorrelation sum| of ({names[0]}, {names[1]})")
    fig.colorbar(im, ax=ax, label="magnitude")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "surface":
            return cmd_surface(args)
    except VerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
