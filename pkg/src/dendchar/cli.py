"""Command-line verification harness.

Exit status: 0 when every check passes (a failed conjecture still exits 0,
with status CONJECTURE-FAIL), 1 on any FAIL, 2 on usage or resource errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import arith, characters, series, spectra, symfunc
from .poly import IntPolynomial, format_cyclotomic
from .report import (
    CONJECTURE_FAIL,
    CONJECTURE_PASS,
    FAIL,
    PASS,
    Check,
    Report,
)
from .tamari import SizeLimit, build_lattice, order_matrix

__all__ = ["main", "build_parser", "run", "ResourceLimit"]


class ResourceLimit(RuntimeError):
    """Request exceeds --max-dim or the Berkowitz dimension bound."""


# --- helpers ---------------------------------------------------------------


def _dim_guard(n_leaves: int, args) -> int:
    dim = arith.catalan(n_leaves - 1)
    if dim > args.max_dim:
        raise ResourceLimit(f"lattice on {n_leaves} leaves has dimension {dim} > --max-dim {args.max_dim}")
    return dim


def _leaves_cap(args) -> int:
    n = 2
    while arith.catalan(n) <= args.max_dim:
        n += 1
    return n


def _range(args, lo: int = 2) -> list[int]:
    if getattr(args, "n", None) is not None:
        return [args.n]
    return list(range(lo, args.upto + 1))


def _map(fn, items, workers: int):
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _figures_dir(args) -> str | None:
    return getattr(args, "figures", None)


# --- subcommands -----------------------------------------------------------


def cmd_seq(args, report: Report) -> None:
    values = arith.sequence(args.kind, args.upto)
    report.payload["kind"] = args.kind
    report.payload["values"] = values
    report.add(Check(f"seq {args.kind}", PASS, ",".join(map(str, values))))
    if args.kind == "b":
        mismatched = [
            k for k in range(2, args.upto + 1)
            if (arith.b_val(k) > 0) != (arith.lambda_val(k) > 0) or arith.b_val(k) == 0
        ]
        status = CONJECTURE_PASS if not mismatched else CONJECTURE_FAIL
        detail = "sign(b_n) = sign(lambda(n)) for 2 <= n <= %d" % args.upto
        if mismatched:
            detail += f"; differs at n = {mismatched}"
        report.add(Check("b sign pattern", status, detail, {"mismatched": mismatched}))
    fig = _figures_dir(args)
    if fig:
        from .plotting import plot_sequences

        report.payload.setdefault("figures", []).append(
            plot_sequences({args.kind: values}, fig, f"seq_{args.kind}.png")
        )


def cmd_tamari(args, report: Report) -> None:
    n = args.leaves
    _dim_guard(n, args)
    lat = build_lattice(n)
    c = order_matrix(lat)
    size_ok = len(lat) == arith.catalan(n - 1)
    report.add(Check.of("element count", size_ok, f"{len(lat)} trees (catalan({n - 1}) = {arith.catalan(n - 1)})"))
    tri = c.is_upper_unitriangular()
    report.add(Check.of("order matrix unit upper triangular", tri, "det C = 1" if tri else ""))
    mins, maxs = lat.minimum(), lat.maximum()
    ok = len(mins) == 1 and len(maxs) == 1
    detail = f"min {lat.words[mins[0]]!r}, max {lat.words[maxs[0]]!r}" if ok else f"minima {mins}, maxima {maxs}"
    report.add(Check.of("unique extremes", ok, detail))
    if n <= 7:
        report.add(Check.of("lattice property", lat.is_lattice(), "every pair has a meet and a join"))
    report.payload.update({"leaves": n, "size": len(lat), "covers": len(lat.covers), "relations": int(lat.leq.sum())})
    if args.export == "json":
        report.payload["lattice"] = lat.to_json()
    if args.export_path:
        with open(args.export_path, "w") as fh:
            fh.write(lat.dumps())
        report.payload["export_path"] = args.export_path
    fig = _figures_dir(args)
    if fig and n <= 7:
        from .plotting import plot_hasse

        rank = [0] * len(lat)
        for i, j in lat.covers:
            rank[j] = max(rank[j], rank[i] + 1)
        report.payload.setdefault("figures", []).append(
            plot_hasse(lat.words, lat.covers, rank, fig, f"tamari_hasse_{n}.png")
        )


def cmd_charpoly(args, report: Report) -> None:
    n = args.leaves
    dim = _dim_guard(n, args)
    if args.method == "direct" and dim > args.berkowitz_max:
        raise ResourceLimit(f"Berkowitz refused at dimension {dim} > --berkowitz-max {args.berkowitz_max}")
    m = spectra.theta_matrix(n) if args.matrix == "theta" else spectra.tau_matrix(n)
    bound = 2 * n if args.matrix == "theta" else n
    results: dict[str, IntPolynomial] = {}
    timings = {}
    methods = [args.method] if args.method != "both" else (["traces", "direct"] if dim <= args.berkowitz_max else ["traces"])
    for name in methods:
        t0 = time.perf_counter()
        results[name] = spectra.charpoly_direct(m) if name == "direct" else spectra.charpoly_finite_order(m, bound)
        timings[name] = round((time.perf_counter() - t0) * 1000, 3)
    polys = list(results.values())
    agree = all(p == polys[0] for p in polys)
    mult, _ = spectra.finite_order_multiplicities(m, bound)
    detail = f"{args.matrix} n={n} dim={dim}: {polys[0]}  =  {format_cyclotomic(mult)}"
    report.add(Check.of(f"charpoly {args.matrix}", agree, detail))
    order = spectra.multiplicative_order(m, bound)
    report.payload.update({
        "leaves": n,
        "matrix": args.matrix,
        "dimension": dim,
        "polynomial": list(polys[0].coeffs),
        "cyclotomic": {str(d): k for d, k in mult.items()},
        "methods": {k: list(v.coeffs) for k, v in results.items()},
        "order": order,
    })
    if args.timings:
        report.payload["timings_ms"] = timings
    if args.show_matrix:
        report.payload["entries"] = spectra.matrix_to_lists(m)
    fig = _figures_dir(args)
    if fig:
        from .plotting import plot_eigenvalues

        report.payload.setdefault("figures", []).append(
            plot_eigenvalues([(f"{args.matrix}, n={n}", mult)], fig, f"eigenvalues_{args.matrix}_{n}.png")
        )


def _verify_spectral(args, report: Report, kind: str) -> None:
    ns = _range(args)
    for n in ns:
        if n < 2:
            raise ResourceLimit("n must be >= 2")
        dim = _dim_guard(n, args)
        if args.method == "direct" and dim > args.berkowitz_max:
            raise ResourceLimit(f"Berkowitz refused at dimension {dim} > --berkowitz-max {args.berkowitz_max}")
    fn = spectra.verify_theorem if kind == "theorem" else spectra.verify_conjecture

    def one(n):
        return fn(n, method=args.method, berkowitz_max=args.berkowitz_max)

    results = _map(one, ns, args.workers)
    rows = []
    for r in results:
        d = r.to_dict()
        if not args.timings:
            d.pop("timings_ms")
        rows.append(d)
        detail = f"n={r.n} dim={r.dimension} methods={'+'.join(r.methods)}: {format_cyclotomic(r.cyclotomic)}"
        if r.matrix_order is not None:
            detail += f"; ord(theta)={r.matrix_order}"
        if r.mismatch:
            detail += f"; first mismatch {r.mismatch}"
        report.add(Check(f"{kind} n={r.n}", r.status, detail, {"mismatch": r.mismatch}))
    report.payload["results"] = rows
    fig = _figures_dir(args)
    if fig:
        from .plotting import plot_eigenvalues

        panels = [(f"{'tau' if kind == 'theorem' else 'theta'}, n={r.n}", r.cyclotomic) for r in results]
        report.payload.setdefault("figures", []).append(plot_eigenvalues(panels, fig, f"eigenvalues_{kind}.png"))


def cmd_verify_theorem(args, report):
    _verify_spectral(args, report, "theorem")


def cmd_verify_conjecture(args, report):
    _verify_spectral(args, report, "conjecture")


def cmd_verify_crux(args, report: Report) -> None:
    for d in range(1, args.upto + 1):
        ok = arith.check_crux(d)
        case = "odd" if d % 2 else ("0 mod 4" if d % 4 == 0 else "2 mod 4")
        report.add(Check.of(f"crux d={d}", ok, f"a_{d} = {arith.a_val(d)} ({case})"))


def cmd_verify_compat(args, report: Report) -> None:
    for n in range(2, args.upto + 1):
        got = spectra.tau_form_from_conjecture(n)
        want = spectra.theorem_form(n)
        ok = got == want
        detail = f"{got}" if ok else f"{got} != {want}"
        report.add(Check.of(f"square{'+negate' if n % 2 == 0 else ''} n={n}", ok, detail))


def cmd_verify_dend(args, report: Report) -> None:
    cap = min(_leaves_cap(args), spectra.DEFAULT_MAX_LEAVES if args.traces_upto is None else args.traces_upto)
    for n in range(1, args.upto + 1):
        r = characters.dend_consistency_report(n, spectra_cap=cap)
        detail = f"character {r['character'][:12]}" + ("..." if n > 12 else "")
        if r["traces_ok"] is not None:
            detail += " = traces of tau^k"
        report.add(Check(f"dend n={n}", PASS if r["passed"] else FAIL, detail, r))


def cmd_symcheck(args, report: Report) -> None:
    N = args.degree
    lie = symfunc.lie_series(N)
    lb = symfunc.plethysm(lie, symfunc.brace_series(N))
    lb_closed = symfunc.lie_brace_closed(N)
    report.add(Check.of("Lie o Brace = closed form", lb == lb_closed, f"to degree {N}"))
    lz = symfunc.plethysm(lie, symfunc.z_series(N))
    lz_closed = symfunc.lie_z_closed(N)
    report.add(Check.of("Lie o Z = closed form", lz == lz_closed, f"to degree {N}"))
    one = symfunc.PowerSumPoly.constant(1, N)
    inv = symfunc.plethysm(one + symfunc.com_series(N), lie)
    report.add(Check.of("(1 + Com) o Lie = 1/(1 - p1)", inv == symfunc.geometric_p1_series(N), f"to degree {N}"))

    a_ok = all(symfunc.invariants_dim(lb_closed, k) == arith.a_val(k) for k in range(1, N + 1))
    b_ok = all(symfunc.invariants_dim(lz_closed, k) == arith.b_val(k) for k in range(1, N + 1))
    report.add(Check.of("invariants of Lie o Brace = a_n", a_ok, f"n <= {N}"))
    report.add(Check.of("invariants of Lie o Z = b_n", b_ok, f"n <= {N}"))

    mod_ok = [n for n in range(1, N + 1) if not characters.verify_module_identity(n)]
    report.add(Check.of("sum a_d chi'_{n,d} identity", not mod_ok, f"n <= {N}" + (f"; fails at {mod_ok}" if mod_ok else "")))
    inj_bad = [n for n in range(1, 2 * N + 1) if not characters.injectivity_check(n)]
    report.add(Check.of("induction injective", not inj_bad, f"n <= {2 * N}" + (f"; fails at {inj_bad}" if inj_bad else "")))

    schur_n = min(N, symfunc.SCHUR_MAX_DEGREE)
    pos_counts, neg_counts, lz_pos, lz_neg = [], [], [], []
    bad_lb = []
    signs = {}
    for k in range(1, schur_n + 1):
        s = symfunc.to_schur(lb_closed, k)
        if not (s.is_integral() and s.is_nonnegative()):
            bad_lb.append(k)
        pos_counts.append(sum(1 for c in s.coeffs.values() if c > 0))
        neg_counts.append(sum(1 for c in s.coeffs.values() if c < 0))
        t = symfunc.to_schur(lz_closed, k)
        signs[k] = t.sign() if t.is_integral() else None
        lz_pos.append(sum(1 for c in t.coeffs.values() if c > 0))
        lz_neg.append(sum(1 for c in t.coeffs.values() if c < 0))
    report.add(Check.of("Lie o Brace Schur-nonnegative integral", not bad_lb,
                        f"n <= {schur_n}" + (f"; fails at {bad_lb}" if bad_lb else "")))
    expected = {k: (1 if k % 4 in (0, 1) else -1) for k in signs}
    sign_ok = signs == expected
    sign_text = "".join({1: "+", -1: "-", 0: "0", None: "?"}[signs[k]] for k in sorted(signs))
    report.add(Check("Lie o Z single-signed by n mod 4", CONJECTURE_PASS if sign_ok else CONJECTURE_FAIL,
                     f"signs n=1..{schur_n}: {sign_text}", {"signs": {str(k): v for k, v in signs.items()}}))
    dias_bad = [n for n in range(1, schur_n + 1) if not characters.dias_schur_check(n)]
    report.add(Check.of("chi'_{n,n} - chi'_{n,1} Schur-nonnegative", not dias_bad, f"n <= {schur_n}"))
    report.payload["lie_z_signs"] = {str(k): v for k, v in signs.items()}
    fig = _figures_dir(args)
    if fig:
        from .plotting import plot_schur_signs

        report.payload.setdefault("figures", []).append(plot_schur_signs(
            [("Lie o Brace", pos_counts, neg_counts), ("Lie o Z", lz_pos, lz_neg)], fig))


def cmd_taylor(args, report: Report) -> None:
    for ident in series.TAYLOR_IDENTITIES:
        report.add(Check.of(ident, series.taylor_check(ident, args.order), f"to order {args.order}"))


def cmd_series(args, report: Report) -> None:
    N = args.order
    fa = series.product_form(arith.a_val, N)
    fb = series.product_form(arith.b_val, N)
    report.add(Check.of("F_a = (1 - sqrt(1 - 4x)) / 2x", fa == series.fa_closed(N), f"to order {N}"))
    report.add(Check.of("F_a = Catalan generating function", fa == series.catalan_series(N), f"to order {N}"))
    report.add(Check.of("F_b = (-1 + 2x + sqrt(1 + 4x^2)) / 2x", fb == series.fb_closed(N), f"to order {N}"))
    lhs, rhs = series.fa_fb_relation_sides(N)
    report.add(Check.of("F_a(-z^2) = F_b(z) F_b(-z)", lhs == rhs, f"to order {N}"))
    three = series.product_form(series.crux_exponents(N), N)
    report.add(Check.of("F_a = three-factor product in b", fa == three, f"to order {N}"))
    report.payload["fa"] = [str(c) for c in fa.coeffs]
    report.payload["fb"] = [str(c) for c in fb.coeffs]


# --- parser ----------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--max-dim", type=int, default=spectra.TRACE_MAX_DIM,
                        help="refuse lattices with more elements than this (default %(default)s)")
    common.add_argument("--berkowitz-max", type=int, default=spectra.BERKOWITZ_MAX_DIM,
                        help="largest dimension for the Berkowitz cross-check (default %(default)s)")
    common.add_argument("--seed", type=int, default=None, help="accepted for uniformity; every computation is deterministic")
    common.add_argument("--workers", type=int, default=1, help="threads for --upto ranges")
    common.add_argument("--figures", metavar="DIR", default=None, help="write matplotlib figures into DIR")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings in the payload")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="dendchar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("seq", parents=[common], help="print an integer sequence")
    p.add_argument("kind", choices=sorted(arith.SEQUENCE_KINDS))
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("tamari", parents=[common], help="build the Tamari lattice")
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--export", choices=["json"], default=None, help="include the lattice in the output")
    p.add_argument("--export-path", default=None, help="also write the lattice JSON to this file")
    p.set_defaults(func=cmd_tamari)

    p = sub.add_parser("charpoly", parents=[common], help="characteristic polynomial of theta or tau")
    p.add_argument("--leaves", type=int, required=True)
    p.add_argument("--matrix", choices=["theta", "tau"], default="theta")
    p.add_argument("--method", choices=["direct", "traces", "both"], default="both")
    p.add_argument("--show-matrix", action="store_true")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="verify the theorem, conjectures and supporting identities")
    vsub = p.add_subparsers(dest="target", required=True)
    for name, func, lo_help in [
        ("theorem", cmd_verify_theorem, "char poly of tau"),
        ("conjecture", cmd_verify_conjecture, "char poly of theta"),
    ]:
        q = vsub.add_parser(name, parents=[common], help=lo_help)
        g = q.add_mutually_exclusive_group(required=True)
        g.add_argument("--n", type=int)
        g.add_argument("--upto", type=int)
        q.add_argument("--method", choices=["direct", "traces", "both"], default="both")
        q.set_defaults(func=func)
    q = vsub.add_parser("crux", parents=[common], help="a_d against b for d <= D")
    q.add_argument("--upto", type=int, required=True)
    q.set_defaults(func=cmd_verify_crux)
    q = vsub.add_parser("compat", parents=[common], help="square/negate substitution maps conjecture to theorem")
    q.add_argument("--upto", type=int, required=True)
    q.set_defaults(func=cmd_verify_compat)
    q = vsub.add_parser("dend", parents=[common], help="cyclic character of Dend(n-1) against traces of tau^k")
    q.add_argument("--upto", type=int, required=True)
    q.add_argument("--traces-upto", type=int, default=None,
                   help=f"largest n compared with matrix traces (default {spectra.DEFAULT_MAX_LEAVES})")
    q.set_defaults(func=cmd_verify_dend)

    p = sub.add_parser("symcheck", parents=[common], help="plethysm, module identity and Schur checks")
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=cmd_symcheck)

    p = sub.add_parser("taylor", parents=[common], help="six Taylor expansions")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    p.set_defaults(func=cmd_taylor)

    p = sub.add_parser("series", parents=[common], help="product formulas for F_a and F_b")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    p.set_defaults(func=cmd_series)
    return parser


def _command_name(args) -> str:
    name = args.command
    if name == "verify":
        name += " " + args.target
    if name == "seq":
        name += " " + args.kind
    return name


def _parameters(args) -> dict:
    skip = {"func", "command", "target", "format", "timings"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def run(argv: list[str] | None = None) -> tuple[int, Report, argparse.Namespace]:
    args = build_parser().parse_args(argv)
    report = Report(command=_command_name(args), parameters=_parameters(args))
    try:
        args.func(args, report)
    except (ResourceLimit, SizeLimit, symfunc.DegreeTooLarge, ValueError) as exc:
        report.error = f"{type(exc).__name__}: {exc}"
    except ArithmeticError as exc:
        # a broken assumption inside the pipeline, not a usage problem
        report.add(Check(type(exc).__name__, FAIL, str(exc)))
    return report.exit_code(), report, args


def main(argv: list[str] | None = None) -> int:
    code, report, args = run(argv)
    if args.format == "json":
        print(report.to_json())
    elif report.command.startswith("seq ") and report.error is None:
        print(",".join(map(str, report.payload["values"])))
    else:
        print(report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
