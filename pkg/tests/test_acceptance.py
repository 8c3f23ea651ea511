"""Acceptance gate: nine criteria, each at its stated tolerance and time budget.

Every criterion prints one ``[PASS]``/``[FAIL]`` line.  Run directly with
``python3 tests/test_acceptance.py`` or through pytest, which also repeats
the lines in the terminal summary.
"""

from __future__ import annotations

import time
from math import comb

import pytest

from dendchar import cli, spectra
from dendchar.arith import a_val, b_val, bprime_val, catalan, check_crux, divisors, lambda_val
from dendchar.characters import dend_consistency, injectivity_check, verify_module_identity
from dendchar.series import (
    TAYLOR_IDENTITIES,
    catalan_series,
    fa_closed,
    fb_closed,
    product_form,
    taylor_check,
    verify_fa_fb_relation,
)
from dendchar.symfunc import (
    PowerSumPoly,
    brace_series,
    com_series,
    geometric_p1_series,
    lie_brace_closed,
    lie_series,
    lie_z_closed,
    plethysm,
    to_schur,
    z_series,
)
from dendchar.tamari import build_lattice, order_matrix


def _cli_stdout(argv: list[str]) -> tuple[int, str]:
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue().strip()


def c1_sequences():
    want = {
        "a": ("a", 10, "1,1,3,8,25,75,245,800,2700,9225"),
        "b": ("b", 14, "1,-1,-1,1,1,-1,-3,4,8,-13,-23,39,71,-121"),
        "bprime": ("bprime", 14, "1,0,-1,0,1,2,-3,-5,8,12,-23,-38,71,124"),
    }
    bad = []
    for kind, upto, expected in want.values():
        code, out = _cli_stdout(["seq", kind, "--upto", str(upto)])
        if code != 0 or out != expected:
            bad.append(f"{kind}: {out}")
    return not bad, "seq a/b/bprime exact" if not bad else "; ".join(bad)


def _clear_matrix_caches():
    spectra.theta_matrix.cache_clear()
    spectra.tau_matrix.cache_clear()


def c2_theorem():
    _clear_matrix_caches()
    bad = []
    for n in range(2, 9):
        r = spectra.verify_theorem(n, method="both")
        want_methods = ["traces", "direct"] if n <= 7 else ["traces"]
        if r.status != "PASS" or list(r.methods) != want_methods:
            bad.append((n, r.status, r.mismatch))
    return not bad, "char poly of tau, n = 2..8 (Berkowitz cross-check n <= 7)" if not bad else str(bad)


def c3_conjecture():
    _clear_matrix_caches()
    statuses = {n: spectra.verify_conjecture(n, method="both").status for n in range(2, 9)}
    ok = all(s == "CONJECTURE-PASS" for s in statuses.values())
    return ok, "char poly of theta, n = 2..8: " + ",".join(f"{n}:{s}" for n, s in statuses.items())


def c4_consistency():
    subs = [n for n in range(2, 13) if spectra.tau_form_from_conjecture(n) != spectra.theorem_form(n)]
    crux = [d for d in range(1, 33) if not check_crux(d)]
    ok = not subs and not crux
    return ok, "substitution n = 2..12, crux d <= 32" if ok else f"substitution fails {subs}, crux fails {crux}"


def c5_plethysm():
    lie = lie_series(12)
    checks = {
        "Lie o Brace": plethysm(lie, brace_series(12)) == lie_brace_closed(12),
        "Lie o Z": plethysm(lie, z_series(12)) == lie_z_closed(12),
        "(1+Com) o Lie": plethysm(PowerSumPoly.constant(1, 12) + com_series(12), lie) == geometric_p1_series(12),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, "degree 12" if not bad else f"fails: {bad}"


def c6_series():
    n = 30
    fa = product_form(a_val, n)
    checks = {
        "F_a": fa == fa_closed(n) and fa == catalan_series(n),
        "F_b": product_form(b_val, n) == fb_closed(n),
        "relation": verify_fa_fb_relation(n),
        **{ident: taylor_check(ident, n) for ident in TAYLOR_IDENTITIES},
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, "order 30: F_a, F_b, relation, A1-A6" if not bad else f"fails: {bad}"


def c7_characters():
    _clear_matrix_caches()
    mod = [n for n in range(1, 13) if not verify_module_identity(n)]
    inj = [n for n in range(1, 25) if not injectivity_check(n)]
    dend = [n for n in range(1, 9) if not dend_consistency(n, spectra_cap=8)]
    ok = not (mod or inj or dend)
    detail = "module identity n <= 12, injectivity n <= 24, traces n <= 8"
    return ok, detail if ok else f"module {mod}, injectivity {inj}, dend {dend}"


def c8_schur():
    lb = lie_brace_closed(10)
    lb_bad = [n for n in range(1, 11) if not (to_schur(lb, n).is_integral() and to_schur(lb, n).is_nonnegative())]
    lz = lie_z_closed(12)
    signs = {}
    for n in range(1, 13):
        s = to_schur(lz, n)
        signs[n] = s.sign() if s.is_integral() else None
    lz_ok = signs == {n: (1 if n % 4 in (0, 1) else -1) for n in range(1, 13)}
    pattern = "".join({1: "+", -1: "-"}.get(signs[n], "?") for n in range(1, 13))
    ok = not lb_bad and lz_ok
    return ok, f"Lie o Brace nonnegative n <= 10; Lie o Z signs {pattern}" + (f"; bad {lb_bad}" if lb_bad else "")


def c9_properties():
    bad = []
    for n in range(1, 65):
        if sum(2 * d * a_val(d) for d in divisors(n)) != comb(2 * n, n):
            bad.append(("a round trip", n))
        if sum(d * b_val(d) for d in divisors(n)) != lambda_val(n):
            bad.append(("b round trip", n))
    for n in range(2, 13):
        c = catalan(n - 1)
        seq = b_val if n % 2 == 0 else bprime_val
        if 2 * n * c - sum(d * a_val(d) for d in divisors(n)) != c:
            bad.append(("degree a", n))
        if 2 * n * c - sum(d * seq(d) for d in divisors(2 * n)) != c:
            bad.append(("degree b", n))
    for n in range(2, 9):
        theta, tau = spectra.theta_matrix(n), spectra.tau_matrix(n)
        if not (theta ** (2 * n)).is_identity():
            bad.append(("theta order", n))
        if not (tau ** n).is_identity():
            bad.append(("tau order", n))
        if not order_matrix(build_lattice(n)).is_upper_unitriangular():
            bad.append(("det C", n))
        if n <= 7:
            p_theta = spectra.charpoly_direct(theta)
            if p_theta != spectra.charpoly_direct(theta ** (2 * n - 1)):
                bad.append(("theta inverse", n))
            if p_theta != spectra.charpoly_finite_order(theta, 2 * n):
                bad.append(("two methods theta", n))
            if spectra.charpoly_direct(tau) != spectra.charpoly_finite_order(tau, n):
                bad.append(("two methods tau", n))
            if p_theta.degree != catalan(n - 1):
                bad.append(("degree", n))
    return not bad, "Mobius, orders, det C, theta^-1, degrees, two methods" if not bad else str(bad[:5])


CRITERIA = [
    (1, "sequence reproduction", c1_sequences, 1.0),
    (2, "theorem n = 2..8", c2_theorem, 120.0),
    (3, "conjectures n = 2..8", c3_conjecture, 120.0),
    (4, "substitution and crux", c4_consistency, 1.0),
    (5, "plethysm identities", c5_plethysm, 60.0),
    (6, "generating functions", c6_series, 10.0),
    (7, "character layer", c7_characters, 120.0),
    (8, "Schur checks", c8_schur, 120.0),
    (9, "property suite", c9_properties, 300.0),
]


def run_criterion(number: int, title: str, fn, budget: float) -> tuple[bool, str]:
    t0 = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - t0
    in_time = elapsed < budget
    tag = "PASS" if ok and in_time else "FAIL"
    line = f"[{tag}] criterion {number}: {title} ({detail}) [{elapsed:.2f}s / {budget:g}s]"
    if not in_time:
        line += " over time budget"
    return ok and in_time, line


@pytest.mark.parametrize("number, title, fn, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, budget, acceptance_line):
    ok, line = run_criterion(number, title, fn, budget)
    acceptance_line(line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    raise SystemExit(0 if all(ok for ok, _ in results) else 1)
