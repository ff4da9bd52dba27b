"""Randomized exact self-checks over the core identities.

All checks run over Fractions and assert bit-exact equality, so a single
failing case is a genuine counterexample, not noise. Numerators are drawn
from [-10^6, 10^6] and denominators from [1, 10^3]: big enough to catch
sign and overflow bugs, small enough to keep exact arithmetic quick.
"""

from __future__ import annotations

import random
from fractions import Fraction

from narydiff import difference, partial_fractions, vandermonde

NUMERATOR_BOUND = 10 ** 6
DENOMINATOR_BOUND = 10 ** 3


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(
        rng.randint(-NUMERATOR_BOUND, NUMERATOR_BOUND),
        rng.randint(1, DENOMINATOR_BOUND),
    )


def random_points(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(random_rational(rng) for _ in range(n))


def random_distinct_points(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    seen: set[Fraction] = set()
    while len(seen) < n:
        seen.add(random_rational(rng))
    out = list(seen)
    rng.shuffle(out)
    return tuple(out)


def _check(name, cases_run, failure):
    return {
        "name": name,
        "cases": cases_run,
        "holds": failure is None,
        "counterexample": failure,
    }


def check_decomposition(rng: random.Random, n_max: int, cases: int) -> dict:
    """Sum of pivot-substituted brackets equals the determinant, exactly."""
    run = 0
    for n in range(2, n_max + 1):
        for _ in range(cases):
            pts = random_points(rng, n)
            pivot = random_rational(rng)
            run += 1
            d = difference.decompose(pts, pivot)
            if d.total != d.reference:
                return _check(
                    "decomposition", run,
                    f"points={[str(p) for p in pts]} pivot={pivot} "
                    f"total={d.total} reference={d.reference}",
                )
    return _check("decomposition", run, None)


def check_doubled_matrix(rng: random.Random, n_max: int, cases: int) -> dict:
    """det of the entrywise-doubled matrix equals twice the determinant."""
    run = 0
    for n in range(2, n_max + 1):
        for _ in range(cases):
            pts = random_points(rng, n)
            pivot = random_rational(rng)
            run += 1
            rep = difference.doubled_determinant(pts, pivot)
            if rep.det_doubled != rep.expected:
                return _check(
                    "doubled-matrix", run,
                    f"points={[str(p) for p in pts]} pivot={pivot} "
                    f"det={rep.det_doubled} expected={rep.expected}",
                )
    return _check("doubled-matrix", run, None)


def check_recombination(rng: random.Random, n_max: int, cases: int) -> dict:
    """Partial-fraction expansion recombines to the constant polynomial 1."""
    run = 0
    for n in range(1, n_max + 1):
        for _ in range(cases):
            roots = random_distinct_points(rng, n)
            run += 1
            exp = partial_fractions.expand_reciprocal(roots)
            coeffs = partial_fractions.recombine(exp)
            expected = (Fraction(1),) + (Fraction(0),) * (n - 1)
            if tuple(coeffs) != expected:
                return _check(
                    "recombination", run,
                    f"roots={[str(r) for r in roots]} coeffs={[str(c) for c in coeffs]}",
                )
    return _check("recombination", run, None)


def check_oracle_agreement(rng: random.Random, n_max: int, cases: int) -> dict:
    """Product formula, cofactor expansion, and Bareiss elimination agree.

    Cofactor expansion only participates up to n=6 (factorial cost);
    one case in five forces a duplicate point so the zero path is hit.
    """
    run = 0
    for n in range(1, n_max + 1):
        for i in range(cases):
            pts = list(random_points(rng, n))
            if n >= 2 and i % 5 == 0:
                i1, i2 = rng.sample(range(n), 2)
                pts[i1] = pts[i2]
            run += 1
            m = vandermonde.build_matrix(pts)
            v_prod = vandermonde.det_product(pts)
            v_ff = vandermonde.det_fraction_free(m)
            ok = v_prod == v_ff
            if ok and n <= 6:
                ok = vandermonde.det_laplace(m) == v_prod
            if not ok:
                return _check(
                    "oracle-agreement", run,
                    f"points={[str(p) for p in pts]} product={v_prod} bareiss={v_ff}",
                )
    return _check("oracle-agreement", run, None)


def run_verify(n_max: int, cases: int, seed: int) -> dict:
    """Run every check family; deterministic for a fixed seed."""
    if not 2 <= n_max <= 8:
        raise ValueError(f"n_max must be in 2..8, got {n_max}")
    if cases < 1:
        raise ValueError(f"cases must be >= 1, got {cases}")
    rng = random.Random(seed)
    checks = [
        check_decomposition(rng, n_max, cases),
        check_doubled_matrix(rng, n_max, cases),
        check_recombination(rng, n_max, cases),
        check_oracle_agreement(rng, n_max, cases),
    ]
    return {
        "n_max": n_max,
        "cases_per_n": cases,
        "seed": seed,
        "checks": checks,
        "all_hold": all(c["holds"] for c in checks),
    }
