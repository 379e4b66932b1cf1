"""Mechanical verification of Hankel-transform identities for the families.

Each verifier expands the relevant reversion sequence far enough for a
depth-d Hankel triple, evaluates every claim in product form (no division,
so zero values need no special casing), and returns a report whose check
rows store both sides as exact decimal strings.  Claims that reference
index n+1 of a depth-d transform are checked for n = 0..d-1; claims fully
determined at index n run to n = d.

The built-in catalog:

* ``4``  - family A reversions: h* is a power of beta and the ratios
           h_{n+1}/h*_n and h**_n/h*_n reproduce the base coefficients
           up to sign.
* ``6``  - family B reversions: h* is a power of alpha*(alpha-beta) and
           the two ratios have closed forms in alpha and beta.
* ``8``  - family C reversions (scaled Catalan): all three transforms are
           signed monomials in alpha.
* ``alpha_shift`` - the binomial transform of the shifted family A
           reversion equals the same construction at alpha+1, and both
           ends have equal Hankel transforms.
* ``prop9``        - the scaled-Catalan Hankel matrix factors as T * T^t
           with T lower triangular, forcing det = alpha^(n(n+1)).
* ``anchors``      - classical sequences with known transforms, kept as a
           fixed regression bed.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from hankelrev.families import (
    FAMILY_A,
    FAMILY_B,
    FAMILY_C,
    FamilyParams,
    catalan,
    family_a_reversion_ogf,
    family_a_reversion_term,
    family_a_term,
    family_b_reversion_term,
    family_c_term,
)
from hankelrev.hankel import det_exact, hankel_transform, hankel_triple
from hankelrev.series import PowerSeries

# claim labels are stable strings: reports are regression artifacts and
# downstream tooling matches on them
CLAIM_C4_HSTAR = "h_star[n] == beta^binom(n+1,2)"
CLAIM_C4_H = "(-1)^(n+1) * h[n+1] == a[n+1] * h_star[n]"
CLAIM_C4_HSS = "(-1)^(n+1) * h_star_star[n] == a[n+2] * h_star[n]"
CLAIM_C6_HSTAR = "h_star[n] == (alpha*(alpha-beta))^binom(n+1,2)"
CLAIM_C6_H = "beta * h[n+1] == ((alpha-beta)^(n+1) - alpha^(n+1)) * h_star[n]"
CLAIM_C6_HSS = "h_star_star[n] == (alpha-beta)^(n+1) * h_star[n]"
CLAIM_C8_H = "h[n] == -n * alpha^(n^2-1)"
CLAIM_C8_HSTAR = "h_star[n] == alpha^(n*(n+1))"
CLAIM_C8_HSS = "h_star_star[n] == alpha^((n+1)^2)"
CLAIM_C8_H_RATIO = "h[n+1] == -(n+1) * alpha^n * h_star[n]"
CLAIM_C8_HSS_RATIO = "h_star_star[n] == alpha^(n+1) * h_star[n]"
CLAIM_SHIFT_COEFF = "binomial_ogf(u*)[n] == u*_at_alpha_plus_1[n]"
CLAIM_SHIFT_HANKEL = "hankel(u*)[n] == hankel(binomial(u*))[n]"
CLAIM_P9_PRODUCT = "H[{i},{j}] == (T*T^t)[{i},{j}]"
CLAIM_P9_DET = "det(H) == alpha^(n*(n+1))"
CLAIM_P9_DET_T = "det(T) == alpha^binom(n+1,2)"
CLAIM_ANCHOR_CATALAN = "hankel(catalan)[n] == 1"
CLAIM_ANCHOR_CATALAN_SHIFT = "hankel(shifted_catalan)[n] == 1"
CLAIM_ANCHOR_CENTRAL = "hankel(central_binomial)[n] == 2^n"
CLAIM_ANCHOR_CENTRAL_ZERO = "hankel(zero_prefixed_central_binomial)[n] == -n*2^(n-1)"
CLAIM_ANCHOR_CATALAN_ZERO = "hankel(zero_prefixed_catalan)[n] == -n"
CLAIM_ANCHOR_CATALAN_HEADLESS = "hankel(head_zeroed_catalan)[n] == -n"

CONJECTURE_IDS = ("4", "6", "8", "alpha_shift", "prop9", "anchors")


@dataclass(frozen=True)
class Check:
    """One verified equality; lhs and rhs are exact decimal strings."""

    index: int
    claim: str
    lhs: str
    rhs: str
    passed: bool


@dataclass(frozen=True)
class ConjectureReport:
    conjecture_id: str
    params: FamilyParams | None
    depth: int
    checks: tuple[Check, ...]
    all_pass: bool
    sequence: tuple[int, ...] | None = None
    notes: tuple[str, ...] = ()


def _check(index: int, claim: str, lhs: int, rhs: int) -> Check:
    return Check(index, claim, str(lhs), str(rhs), lhs == rhs)


def _report(
    conjecture_id: str,
    params: FamilyParams | None,
    depth: int,
    checks: list[Check],
    sequence: Sequence[int] | None = None,
    notes: tuple[str, ...] = (),
) -> ConjectureReport:
    return ConjectureReport(
        conjecture_id=conjecture_id,
        params=params,
        depth=depth,
        checks=tuple(checks),
        all_pass=all(c.passed for c in checks),
        sequence=None if sequence is None else tuple(sequence),
        notes=notes,
    )


def _require_depth(depth: int) -> None:
    if depth < 1:
        raise ValueError("depth must be at least 1")


# ----------------------------------------------------------------------
# conjecture verifiers


def verify_conjecture4(alpha: int, beta: int, depth: int) -> ConjectureReport:
    """Check the family A reversion claims to the given depth."""
    if beta == 0:
        raise ValueError("beta must be nonzero")
    _require_depth(depth)
    params = FamilyParams(alpha, beta, FAMILY_A)
    u = [family_a_reversion_term(params, n) for n in range(2 * depth + 3)]
    triple = hankel_triple(u, depth)
    base = [family_a_term(params, n) for n in range(depth + 2)]
    checks = []
    for n in range(depth + 1):
        checks.append(
            _check(n, CLAIM_C4_HSTAR, triple.h_star[n], beta ** math.comb(n + 1, 2))
        )
    for n in range(depth):
        sign = (-1) ** (n + 1)
        checks.append(
            _check(n, CLAIM_C4_H, sign * triple.h[n + 1], base[n + 1] * triple.h_star[n])
        )
        checks.append(
            _check(
                n,
                CLAIM_C4_HSS,
                sign * triple.h_star_star[n],
                base[n + 2] * triple.h_star[n],
            )
        )
    return _report("4", params, depth, checks, sequence=u)


def verify_conjecture6(alpha: int, beta: int, depth: int) -> ConjectureReport:
    """Check the family B reversion claims to the given depth."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if beta == 0:
        raise ValueError("beta must be nonzero")
    _require_depth(depth)
    params = FamilyParams(alpha, beta, FAMILY_B)
    u = [family_b_reversion_term(params, n) for n in range(2 * depth + 3)]
    triple = hankel_triple(u, depth)
    checks = []
    for n in range(depth + 1):
        checks.append(
            _check(
                n,
                CLAIM_C6_HSTAR,
                triple.h_star[n],
                (alpha * (alpha - beta)) ** math.comb(n + 1, 2),
            )
        )
    for n in range(depth):
        checks.append(
            _check(
                n,
                CLAIM_C6_H,
                beta * triple.h[n + 1],
                ((alpha - beta) ** (n + 1) - alpha ** (n + 1)) * triple.h_star[n],
            )
        )
        checks.append(
            _check(
                n,
                CLAIM_C6_HSS,
                triple.h_star_star[n],
                (alpha - beta) ** (n + 1) * triple.h_star[n],
            )
        )
    return _report("6", params, depth, checks, sequence=u)


def verify_conjecture8(alpha: int, depth: int) -> ConjectureReport:
    """Check the scaled-Catalan claims (family C) to the given depth."""
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    _require_depth(depth)
    params = FamilyParams(alpha, 0, FAMILY_C)
    u = [family_c_term(params, n) for n in range(2 * depth + 3)]
    triple = hankel_triple(u, depth)
    checks = []
    for n in range(depth + 1):
        # at n = 0 the monomial's exponent n^2 - 1 is negative, but the
        # factor -n kills the term; the expected value is 0
        expected_h = 0 if n == 0 else -n * alpha ** (n * n - 1)
        checks.append(_check(n, CLAIM_C8_H, triple.h[n], expected_h))
        checks.append(
            _check(n, CLAIM_C8_HSTAR, triple.h_star[n], alpha ** (n * (n + 1)))
        )
        checks.append(
            _check(n, CLAIM_C8_HSS, triple.h_star_star[n], alpha ** ((n + 1) ** 2))
        )
    for n in range(depth):
        checks.append(
            _check(
                n,
                CLAIM_C8_H_RATIO,
                triple.h[n + 1],
                -(n + 1) * alpha**n * triple.h_star[n],
            )
        )
        checks.append(
            _check(
                n,
                CLAIM_C8_HSS_RATIO,
                triple.h_star_star[n],
                alpha ** (n + 1) * triple.h_star[n],
            )
        )
    return _report("8", params, depth, checks, sequence=u)


def _shifted_reversion_terms(alpha: int, beta: int, order: int) -> list[int]:
    """u_{n+1} for the family A reversion, n = 0..order, via the o.g.f."""
    params = FamilyParams(alpha, beta, FAMILY_A)
    ogf = family_a_reversion_ogf(params, order + 1)
    return ogf.shift_down(1).integer_coefficients()


def verify_alpha_shift(alpha: int, beta: int, order: int) -> ConjectureReport:
    """Check that the binomial transform shifts alpha by one.

    The o.g.f.-level binomial transform of the shifted family A reversion
    (u_{n+1})_{n>=0} at (alpha, beta) must equal the same construction at
    (alpha + 1, beta), coefficient by coefficient; as a corollary both
    sequences must share their Hankel transform, which is re-derived here
    to depth (order - 1) // 2.
    """
    if beta == 0:
        raise ValueError("beta must be nonzero")
    if order < 1:
        raise ValueError("order must be at least 1")
    params = FamilyParams(alpha, beta, FAMILY_A)
    here = _shifted_reversion_terms(alpha, beta, order)
    shifted = _shifted_reversion_terms(alpha + 1, beta, order)
    here_series = PowerSeries(tuple(Fraction(t) for t in here))
    transformed = here_series.binomial_ogf().integer_coefficients()
    checks = []
    for n in range(order + 1):
        checks.append(_check(n, CLAIM_SHIFT_COEFF, transformed[n], shifted[n]))
    depth = (order - 1) // 2
    h_here = hankel_transform(here, depth)
    h_transformed = hankel_transform(transformed, depth)
    for n in range(depth + 1):
        checks.append(_check(n, CLAIM_SHIFT_HANKEL, h_here[n], h_transformed[n]))
    return _report("alpha_shift", params, order, checks, sequence=here)


# ----------------------------------------------------------------------
# the proved factorization


def prop9_T_matrix(alpha: int, n: int) -> list[list[Fraction]]:
    """Lower-triangular T with T[i][k] = C(2i, i+k) * (2k+1)/(i+k+1) * alpha^i.

    Every entry is an integer multiple of alpha^i; that integrality is
    asserted rather than assumed.
    """
    if n < 0:
        raise ValueError("matrix index must be non-negative")
    rows: list[list[Fraction]] = []
    for i in range(n + 1):
        row = []
        for k in range(n + 1):
            if k > i:
                row.append(Fraction(0))
                continue
            entry = Fraction(math.comb(2 * i, i + k) * (2 * k + 1), i + k + 1)
            assert entry.denominator == 1
            row.append(entry * alpha**i)
        rows.append(row)
    return rows


def prop9_verify(alpha: int, n: int) -> ConjectureReport:
    """Check H = T * T^t entrywise and both determinant consequences.

    H is the (n+1) x (n+1) Hankel matrix of catalan(k) * alpha^k.  The
    three checks are mutually consistent (the entrywise identity plus the
    triangular determinant force the Hankel determinant) but each is
    still evaluated independently against det_exact.
    """
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if n < 0:
        raise ValueError("matrix index must be non-negative")
    params = FamilyParams(alpha, 0, FAMILY_C)
    sequence = [catalan(k) * alpha**k for k in range(2 * n + 1)]
    H = [[sequence[i + j] for j in range(n + 1)] for i in range(n + 1)]
    T = prop9_T_matrix(alpha, n)
    checks = []
    for i in range(n + 1):
        for j in range(n + 1):
            product = sum(T[i][k] * T[j][k] for k in range(min(i, j) + 1))
            checks.append(
                Check(
                    i,
                    CLAIM_P9_PRODUCT.format(i=i, j=j),
                    str(H[i][j]),
                    str(product),
                    H[i][j] == product,
                )
            )
    det_h = det_exact(H)
    checks.append(_check(n, CLAIM_P9_DET, det_h, alpha ** (n * (n + 1))))
    det_t = Fraction(1)
    for i in range(n + 1):
        det_t *= T[i][i]
    checks.append(
        Check(
            n,
            CLAIM_P9_DET_T,
            str(det_t),
            str(alpha ** math.comb(n + 1, 2)),
            det_t == alpha ** math.comb(n + 1, 2),
        )
    )
    return _report("prop9", params, n, checks, sequence=sequence)


def _poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] += a * b
    return out


def _poly_coefficient(p: list[int], k: int) -> int:
    return p[k] if 0 <= k < len(p) else 0


def prop9_coeff_identity_1(i: int, j: int, alpha: int) -> bool:
    """Coefficient of x^(i+j+1) in (1-alpha*x)^2 * (1+alpha*x)^(2i+2j)
    equals -2 * catalan(i+j) * alpha^(i+j+1)."""
    if i < 0 or j < 0:
        raise ValueError("indices must be non-negative")
    poly = [1, -2 * alpha, alpha * alpha]
    for _ in range(2 * i + 2 * j):
        poly = _poly_mul(poly, [1, alpha])
    lhs = _poly_coefficient(poly, i + j + 1)
    rhs = -2 * catalan(i + j) * alpha ** (i + j + 1)
    return lhs == rhs


def prop9_coeff_identity_2(i: int, k: int, alpha: int) -> bool:
    """Coefficient of x^k in (1-alpha*x) * (1+alpha*x)^(2i)
    equals C(2i, k) * (2i-2k+1)/(2i-k+1) * alpha^k.

    At k = 2i+1 the stated ratio degenerates to 0/0; there the equivalent
    difference form C(2i, k) - C(2i, k-1) is used instead.
    """
    if i < 0 or k < 0:
        raise ValueError("indices must be non-negative")
    poly = [1, -alpha]
    for _ in range(2 * i):
        poly = _poly_mul(poly, [1, alpha])
    lhs = Fraction(_poly_coefficient(poly, k))
    if 2 * i - k + 1 != 0:
        rhs = (
            Fraction(math.comb(2 * i, k) * (2 * i - 2 * k + 1), 2 * i - k + 1)
            * alpha**k
        )
    else:
        def safe_comb(n: int, r: int) -> int:
            return math.comb(n, r) if 0 <= r <= n else 0

        rhs = Fraction(safe_comb(2 * i, k) - safe_comb(2 * i, k - 1)) * alpha**k
    return lhs == rhs


# ----------------------------------------------------------------------
# classical anchors


def verify_anchors(depth: int = 6) -> ConjectureReport:
    """Hankel transforms of classical sequences with known values.

    Includes the head-zeroed Catalan sequence 0, 1, 2, 5, 14, ... whose
    transform is commonly quoted with a positive sign; exact computation
    gives -n, and that computed value is what this report asserts.
    """
    _require_depth(depth)
    count = 2 * depth + 1
    cat = [catalan(k) for k in range(count + 1)]
    central = [math.comb(2 * k, k) for k in range(count)]
    anchors: list[tuple[str, list[int], Callable[[int], int]]] = [
        (CLAIM_ANCHOR_CATALAN, cat[:count], lambda n: 1),
        (CLAIM_ANCHOR_CATALAN_SHIFT, cat[1 : count + 1], lambda n: 1),
        (CLAIM_ANCHOR_CENTRAL, central, lambda n: 2**n),
        (
            CLAIM_ANCHOR_CENTRAL_ZERO,
            [0] + central[: count - 1],
            lambda n: 0 if n == 0 else -n * 2 ** (n - 1),
        ),
        (CLAIM_ANCHOR_CATALAN_ZERO, [0] + cat[: count - 1], lambda n: -n),
        (CLAIM_ANCHOR_CATALAN_HEADLESS, [0] + cat[1:count], lambda n: -n),
    ]
    checks = []
    for claim, sequence, expected in anchors:
        transform = hankel_transform(sequence, depth)
        for n in range(depth + 1):
            checks.append(_check(n, claim, transform[n], expected(n)))
    notes = (
        "the transform of the head-zeroed Catalan sequence 0, 1, 2, 5, 14, ..."
        " is commonly quoted as n; exact computation gives -n at every depth"
        " checked here, and -n is the value asserted.",
    )
    return _report("anchors", None, depth, checks, notes=notes)


# ----------------------------------------------------------------------
# parameter sweeps


@dataclass(frozen=True)
class SweepResult:
    conjecture_id: str
    depth: int
    grid: tuple[FamilyParams, ...]
    reports: tuple[ConjectureReport, ...]
    counterexamples: tuple[ConjectureReport, ...]
    skipped: tuple[FamilyParams, ...]


_SWEEP_FAMILY = {
    "4": FAMILY_A,
    "6": FAMILY_B,
    "8": FAMILY_C,
    "prop9": FAMILY_C,
    "alpha_shift": FAMILY_A,
}


def _expand_range(bounds: tuple[int, int]) -> list[int]:
    lo, hi = bounds
    if lo > hi:
        raise ValueError("range must be non-empty")
    return list(range(lo, hi + 1))


def sweep(
    conjecture_id: str | int,
    alpha_range: tuple[int, int],
    beta_range: tuple[int, int] | None = None,
    depth: int = 6,
) -> SweepResult:
    """Run one verifier over an integer parameter grid.

    Grid points violating the verifier's preconditions are recorded as
    skipped, never as failed.  Points are evaluated in grid order
    (alpha-major) and the aggregation is deterministic.
    """
    cid = str(conjecture_id)
    if cid not in _SWEEP_FAMILY:
        raise ValueError(f"cannot sweep conjecture {cid!r}")
    _require_depth(depth)
    needs_beta = cid in ("4", "6", "alpha_shift")
    alphas = _expand_range(alpha_range)
    if needs_beta:
        if beta_range is None:
            raise ValueError(f"conjecture {cid} needs a beta range")
        betas = _expand_range(beta_range)
    else:
        betas = [0]
    family = _SWEEP_FAMILY[cid]

    def admissible(a: int, b: int) -> bool:
        if cid == "4" or cid == "alpha_shift":
            return b != 0
        if cid == "6":
            return a != 0 and b != 0
        return a != 0  # 8, prop9

    def run(a: int, b: int) -> ConjectureReport:
        if cid == "4":
            return verify_conjecture4(a, b, depth)
        if cid == "6":
            return verify_conjecture6(a, b, depth)
        if cid == "8":
            return verify_conjecture8(a, depth)
        if cid == "prop9":
            return prop9_verify(a, depth)
        return verify_alpha_shift(a, b, 2 * depth + 1)

    grid: list[FamilyParams] = []
    skipped: list[FamilyParams] = []
    reports: list[ConjectureReport] = []
    for a in alphas:
        for b in betas:
            point = FamilyParams(a, b, family)
            grid.append(point)
            if not admissible(a, b):
                skipped.append(point)
                continue
            reports.append(run(a, b))
    counterexamples = tuple(r for r in reports if not r.all_pass)
    return SweepResult(
        conjecture_id=cid,
        depth=depth,
        grid=tuple(grid),
        reports=tuple(reports),
        counterexamples=counterexamples,
        skipped=tuple(skipped),
    )


# ----------------------------------------------------------------------
# serialization

def report_to_dict(report: ConjectureReport) -> dict:
    """JSON-ready form; integers render as decimal strings, never floats."""
    params = report.params
    return {
        "conjecture": report.conjecture_id,
        "alpha": None if params is None else str(params.alpha),
        "beta": None if params is None else str(params.beta),
        "depth": str(report.depth),
        "checks": [
            {
                "n": str(c.index),
                "claim": c.claim,
                "lhs": c.lhs,
                "rhs": c.rhs,
                "pass": c.passed,
            }
            for c in report.checks
        ],
        "all_pass": report.all_pass,
        "notes": list(report.notes),
    }


def report_to_json(report: ConjectureReport) -> str:
    return json.dumps(report_to_dict(report), indent=2)


def report_to_csv(report: ConjectureReport) -> str:
    params = report.params
    alpha = "" if params is None else str(params.alpha)
    beta = "" if params is None else str(params.beta)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["conjecture", "alpha", "beta", "depth", "n", "claim", "lhs", "rhs", "pass"])
    for c in report.checks:
        writer.writerow(
            [
                report.conjecture_id,
                alpha,
                beta,
                str(report.depth),
                str(c.index),
                c.claim,
                c.lhs,
                c.rhs,
                "true" if c.passed else "false",
            ]
        )
    return buffer.getvalue()


def sweep_to_dict(result: SweepResult, include_reports: bool = False) -> dict:
    payload = {
        "conjecture": result.conjecture_id,
        "depth": str(result.depth),
        "grid_points": str(len(result.grid)),
        "checked": str(len(result.reports)),
        "skipped": [
            {"alpha": str(p.alpha), "beta": str(p.beta)} for p in result.skipped
        ],
        "counterexamples": [report_to_dict(r) for r in result.counterexamples],
        "all_pass": not result.counterexamples,
    }
    if include_reports:
        payload["reports"] = [report_to_dict(r) for r in result.reports]
    return payload


def sweep_to_json(result: SweepResult, include_reports: bool = False) -> str:
    return json.dumps(sweep_to_dict(result, include_reports), indent=2)
