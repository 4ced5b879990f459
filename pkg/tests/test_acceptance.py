"""Acceptance gate.

One test per criterion, each at its full stated bounds with exact (integer)
comparisons throughout and a wall-clock ceiling. Every test prints a single
PASS/FAIL line; run with -s to see them as they complete.
"""

import os
import pathlib
import subprocess
import sys
import time
from fractions import Fraction

from lrlab import (
    LRElement,
    Partition,
    cone_generator,
    cone_generator_decomposition,
    dominated_partitions,
    gl_dimension,
    minimal_uniform_exponent,
    mul,
    mul_tableau,
    partitions_up_to,
    property_holds,
    single_column,
    theorem_bound,
    transfer_witness,
    verify_all,
)

SRC = str(pathlib.Path(__file__).resolve().parent.parent / "src")


def _report(number: int, label: str, ok: bool, elapsed: float, limit: float) -> None:
    status = "PASS" if ok and elapsed < limit else "FAIL"
    print(f"criterion {number}: {status} - {label} ({elapsed:.1f}s, limit {limit:.0f}s)")
    assert ok, label
    assert elapsed < limit, f"{label} took {elapsed:.1f}s, limit {limit}s"


def test_criterion_1_product_oracle_equivalence():
    start = time.perf_counter()
    pool = list(partitions_up_to(5, max_len=4))
    assert len(pool) == 18
    ok = all(mul(a, b) == mul_tableau(a, b) for a in pool for b in pool)
    _report(1, "column recursion = skew-filling oracle on 324 pairs", ok, time.perf_counter() - start, 60)


def test_criterion_2_column_product_closed_form():
    start = time.perf_counter()
    ok = True
    for s in range(1, 7):
        for r in range(1, s + 1):
            expected = LRElement.zero()
            for k in range(r + 1):
                expected = expected + LRElement.basis(
                    single_column(r - k).plus(single_column(s + k))
                )
            ok = ok and mul(single_column(r), single_column(s)) == expected
    _report(2, "two-column products match the closed form for r <= s <= 6", ok, time.perf_counter() - start, 1)


def test_criterion_3_dimension_identity():
    start = time.perf_counter()
    pool = list(partitions_up_to(5))
    ok = True
    for d in range(1, 5):
        dims = {p: gl_dimension(p, d) for p in pool}
        for a in pool:
            for b in pool:
                total = sum(m * gl_dimension(c, d) for c, m in mul(a, b).items())
                ok = ok and total == dims[a] * dims[b]
    _report(3, "products preserve dimensions for d <= 4, weights <= 5", ok, time.perf_counter() - start, 60)


def test_criterion_4_all_lemma_suites_pass_at_defaults():
    start = time.perf_counter()
    reports = verify_all()
    for rep in reports:
        print(f"  {rep.lemma_id}: {rep.status} (cases={rep.cases_checked})")
        for failure in rep.failures[:3]:
            print(f"    counterexample: {failure}")
    ok = all(rep.passed for rep in reports) and len(reports) == 14
    _report(4, "all 14 verification suites PASS at default bounds", ok, time.perf_counter() - start, 600)


def test_criterion_5_uniform_exponent_at_desk_scale():
    start = time.perf_counter()
    ok = True
    for l in (1, 2, 3):
        for a in partitions_up_to(5, max_len=l):
            if not a:
                continue
            for n in range(l, l + 3):
                held, _ = property_holds(a, n, l)
                ok = ok and held
    held, bad = property_holds(Partition([2]), 1, 2)
    ok = ok and not held and bad == Partition([1, 1])
    _report(5, "property holds for n in l..l+2 (l <= 3) and the n=1 failure is reproduced", ok, time.perf_counter() - start, 300)


def test_criterion_6_bound_dominates_empirical_threshold():
    start = time.perf_counter()
    ok = True
    for l in (1, 2, 3):
        for a in partitions_up_to(4, max_len=l):
            if not a:
                continue
            found = minimal_uniform_exponent(a, l, l + 3)
            ok = ok and found.threshold is not None and theorem_bound(a, l) >= found.threshold
    _report(6, "explicit bound >= empirical threshold for |A| <= 4, l <= 3", ok, time.perf_counter() - start, 300)


def test_criterion_7_cone_generation():
    start = time.perf_counter()
    ok = True
    members = 0
    for l in (1, 2, 3):
        for a in partitions_up_to(4, max_len=l):
            if not a:
                continue
            for n in range(4):
                for b in dominated_partitions(a.scaled(n), l):
                    # NoDecomposition here would falsify the generation claim
                    cert = cone_generator_decomposition(b, a, l)
                    members += 1
                    total = [Fraction(0)] * l
                    for sub, q in cert.decomposition:
                        g = cone_generator(a, sub).padded(l)
                        total = [t + q * x for t, x in zip(total, g)]
                    ok = ok and total == [Fraction(x) for x in b.padded(l)]
    _report(7, f"non-negative exact decomposition for all {members} cone members", ok, time.perf_counter() - start, 300)


def test_criterion_8_transfer_witnesses():
    start = time.perf_counter()
    w1 = transfer_witness(Partition([1]), Partition([1, 1]), 2)
    w2 = transfer_witness(Partition([2]), Partition([1, 1]), 2)
    w3 = transfer_witness(Partition([3]), Partition([1]), 3)
    w4 = transfer_witness(Partition([1]), Partition([3]), 3)
    ok = w1.t == 1 and w2.t == 2 and w3.t >= 1 and w4.t >= 1
    _report(8, "transfer witnesses found (t=1, t=2, and both symmetric-power directions)", ok, time.perf_counter() - start, 120)


def test_criterion_9_cli_determinism():
    start = time.perf_counter()
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")

    def run(*argv):
        proc = subprocess.run(
            [sys.executable, "-m", "lrlab", *argv], capture_output=True, env=env
        )
        return proc.returncode, proc.stdout

    ok = True
    for argv in (
        ["verify", "--lemma", "CHI", "--max-weight", "4", "--max-l", "2", "--json"],
        ["power", "[2,1]", "4", "--l", "3"],
        ["cone", "[2,2,2]", "[2,1]", "--l", "3", "--json"],
    ):
        single = run(*argv, "--threads", "1")
        wide = run(*argv, "--threads", "8")
        ok = ok and single == wide and single[0] == 0
    _report(9, "byte-identical output with --threads 1 and --threads 8", ok, time.perf_counter() - start, 120)
