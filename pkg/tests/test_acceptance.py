"""Acceptance suite: one test per criterion, one printed pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.  Every
tolerance is pinned here or in the library constants it exercises
(1e-9 operator norms, 1e-6 trace threshold, relative 1e-7 singular values);
set-algebra and parameter checks are exact integer comparisons.
"""

import random
import time
from fractions import Fraction

import pytest

import oracles
from oqecc.additive_code import (
    AdditiveCode,
    CodeVector,
    SYMPLECTIC,
    ambient_vectors,
    phi_map,
    symplectic_form,
    trace_alternating_form,
)
from oqecc.code_params import (
    BASIS,
    EXHAUSTIVE,
    UNBOUNDED,
    hamming_wt,
    min_distance_with_witness,
    subsystem_params,
    swt,
)
from oqecc.errors import ZeroCodeError
from oqecc.galois import gf_make
from oqecc.search import run_search
from oqecc.verifier import (
    build_projector,
    is_subsystem_detectable,
    pauli_matrix,
    restricted_logical_ops,
    verify_character_support,
    verify_detectability,
    verify_tensor_factorization,
)


def _report(number: int, name: str, passed: bool, detail: str = ""):
    status = "PASS" if passed else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[criterion {number}] {name}: {status}{suffix}")
    assert passed, f"criterion {number} ({name}) failed {suffix}"


def all_q2_n2_codes():
    """Every F_2-subspace of F_2^4 as a symplectic n=2 code (67 of them)."""
    ctx = gf_make(2, 1)
    return [
        AdditiveCode.from_digit_rows(ctx, 2, SYMPLECTIC, [list(r) for r in rows])
        for rows in oracles.echelon_bases(2, 4)
    ]


def random_family(seed: int, specs):
    """specs: list of (p, m, n_choices, count).  Nonzero random codes."""
    rng = random.Random(seed)
    out = []
    for p, m, n_choices, count in specs:
        ctx = gf_make(p, m)
        for _ in range(count):
            out.append(oracles.random_code(rng, ctx, rng.choice(n_choices)))
    return out


SEARCHED_4112_GENS = [
    (1, 0, 1, 0, 0, 0, 0, 0),
    (0, 1, 1, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 1, 1, 1),
]


def test_criterion_1_dimension_law():
    started = time.monotonic()
    family = all_q2_n2_codes()
    count_ok = len(family) == 67 and len(set(family)) == 67

    failures = []
    checked = 0
    for code in family:
        if code.is_zero():
            with pytest.raises(ZeroCodeError):
                build_projector(code)
            continue
        projector = build_projector(code)
        checked += 1
        if projector.rank != 4 // code.hull().size:
            failures.append(code)

    random_codes = random_family(
        2024, [(2, 1, range(1, 9), 100), (3, 1, range(1, 6), 100)]
    )
    for code in random_codes:
        projector = build_projector(code)
        checked += 1
        if projector.rank != code.ctx.q**code.n // code.hull().size:
            failures.append(code)

    elapsed = time.monotonic() - started
    _report(
        1,
        "dimension law rank(P) = q^n/|hull|",
        count_ok and not failures and elapsed < 60,
        f"{checked} codes, {elapsed:.1f}s",
    )


def test_criterion_2_detectability_equivalence():
    started = time.monotonic()
    family = [c for c in all_q2_n2_codes() if not c.is_zero()]
    family += random_family(77, [(2, 1, [3], 25)])
    mismatch_total = 0
    swept = 0
    for code in family:
        report = verify_detectability(code)
        mismatch_total += len(report.witnesses)
        swept += report.details["errors_swept"]
    elapsed = time.monotonic() - started
    _report(
        2,
        "detectability criterion matches the set predicate",
        mismatch_total == 0 and elapsed < 120,
        f"{len(family)} codes, {swept} errors, {elapsed:.1f}s",
    )


def test_criterion_3_distance_consistency():
    family = [c for c in all_q2_n2_codes() if not c.is_zero()]
    family += random_family(
        31, [(2, 1, [1, 2, 3], 25), (3, 1, [1, 2], 15), (2, 2, [1, 2], 10)]
    )
    method_failures = 0
    for code in family:
        assert code.ctx.p ** code.num_columns <= 1 << 20
        if min_distance_with_witness(code, EXHAUSTIVE) != min_distance_with_witness(code, BASIS):
            method_failures += 1

    # Numeric side on verifier-scale instances: everything lighter than d is
    # detectable and the weight-d witness is not.
    numeric_failures = 0
    numeric_family = [c for c in all_q2_n2_codes() if not c.is_zero()]
    numeric_family += random_family(32, [(2, 1, [3], 10), (3, 1, [1, 2], 10)])
    for code in numeric_family:
        d, witness = min_distance_with_witness(code, BASIS)
        projector = build_projector(code)
        logical = restricted_logical_ops(projector)
        for vec in ambient_vectors(code.ctx, code.n, SYMPLECTIC):
            if swt(vec) < d:
                error = pauli_matrix(code.ctx, vec.a_coords, vec.b_coords)
                if not is_subsystem_detectable(projector, error, logical):
                    numeric_failures += 1
        if d != UNBOUNDED:
            error = pauli_matrix(code.ctx, witness.a_coords, witness.b_coords)
            if is_subsystem_detectable(projector, error, logical):
                numeric_failures += 1
    _report(
        3,
        "distance methods agree; d bounds detectability exactly",
        method_failures == 0 and numeric_failures == 0,
        f"{len(family)} agreement codes, {len(numeric_family)} numeric codes",
    )


def test_criterion_4_duality_isometry_suite():
    ctx2 = gf_make(2, 1)
    failures = 0

    # Exhaustive code-level checks, q=2, n <= 3: dual involution and sizes.
    for n in (1, 2, 3):
        for rows in oracles.echelon_bases(2, 2 * n):
            code = AdditiveCode.from_digit_rows(ctx2, n, SYMPLECTIC, [list(r) for r in rows])
            dual = code.dual()
            if dual.dual() != code or code.size * dual.size != 2 ** (2 * n):
                failures += 1

    # Exhaustive vector-level checks, q=2, n <= 3.
    for n in (1, 2, 3):
        vectors = list(ambient_vectors(ctx2, n, SYMPLECTIC))
        for c in vectors:
            if swt(c) != hamming_wt(phi_map(c)):
                failures += 1
        for c in vectors:
            pc = phi_map(c)
            for d in vectors:
                if trace_alternating_form(pc, phi_map(d)) != symplectic_form(c, d):
                    failures += 1

    # 10^4 random vectors for q in {3, 4}, n <= 3 (exact, no tolerance).
    for p, m in ((3, 1), (2, 2)):
        ctx = gf_make(p, m)
        rng = random.Random(100 * p + m)
        for _ in range(5000):
            n = rng.randint(1, 3)
            c = CodeVector(ctx, SYMPLECTIC, tuple(rng.randrange(ctx.q) for _ in range(2 * n)))
            d = CodeVector(ctx, SYMPLECTIC, tuple(rng.randrange(ctx.q) for _ in range(2 * n)))
            if swt(c) != hamming_wt(phi_map(c)) or swt(d) != hamming_wt(phi_map(d)):
                failures += 1
            if trace_alternating_form(phi_map(c), phi_map(d)) != symplectic_form(c, d):
                failures += 1
        for _ in range(25):
            code = oracles.random_code(rng, ctx, rng.randint(1, 3))
            if code.dual().dual() != code:
                failures += 1
            if code.size * code.dual().size != p ** (2 * code.n * m):
                failures += 1
    _report(4, "duality involution, sizes, isometry, form transport", failures == 0)


def test_criterion_5_inertia_identity():
    family = all_q2_n2_codes()
    family += random_family(2024, [(2, 1, range(1, 9), 100), (3, 1, range(1, 6), 100)])
    failures = sum(
        1 for code in family if code.code_sum(code.dual()) != code.hull().dual()
    )
    _report(
        5,
        "sum with dual equals dual of hull (exact, structural)",
        failures == 0,
        f"{len(family)} codes",
    )


def test_criterion_6_tensor_factorization():
    ctx = gf_make(2, 1)
    running = AdditiveCode.from_generators(ctx, 2, SYMPLECTIC, [(1, 1, 0, 0)])
    whole = AdditiveCode.whole(ctx, 1, SYMPLECTIC)
    searched = AdditiveCode.from_generators(ctx, 4, SYMPLECTIC, SEARCHED_4112_GENS)
    assert subsystem_params(searched, distance_method=BASIS).quartet() == "[[4,1,1,2]]_2"

    expectations = {
        id(running): {"dim_a": 2, "dim_b": 1, "gauge_span": 1, "logical_span": 4},
        id(whole): {"dim_a": 1, "dim_b": 2, "gauge_span": 4, "logical_span": 1},
        id(searched): {"dim_a": 2, "dim_b": 2, "gauge_span": 4, "logical_span": 4},
    }
    failures = []
    for code in (running, whole, searched):
        report = verify_tensor_factorization(code)
        if not report.passed or report.details != expectations[id(code)]:
            failures.append((code, report.details))
    _report(6, "gauge/logical algebras commute with correct span dims", not failures)


def test_criterion_7_character_support():
    family = [c for c in all_q2_n2_codes() if not c.is_zero()]
    family += random_family(55, [(2, 1, [1, 3], 15), (3, 1, [1, 2], 15)])
    mismatches = 0
    swept = 0
    for code in family:
        report = verify_character_support(code)
        mismatches += len(report.witnesses)
        swept += report.details["errors_swept"]
        # exact support size: the hull itself
        if report.details["support_size"] != code.hull().size:
            mismatches += 1
    _report(
        7,
        "trace support is exactly the hull",
        mismatches == 0,
        f"{len(family)} codes, {swept} traces",
    )


def test_criterion_8_search_reproducibility_and_benchmark(tmp_path):
    started = time.monotonic()
    runs = {}
    for label, jobs in (("a", 1), ("b", 1), ("c", 2)):
        path = tmp_path / f"run_{label}.jsonl"
        run_search(2, 1, 3, count=250, seed=424242, out_path=str(path), jobs=jobs)
        runs[label] = path.read_bytes()
    deterministic = runs["a"] == runs["b"] == runs["c"]

    out = tmp_path / "n4.jsonl"
    records, pareto = run_search(2, 1, 4, count=10_000, seed=7, out_path=str(out))
    cell = pareto.get((Fraction(1), Fraction(1)))
    found = any(
        record["params"]["k"] == "1"
        and record["params"]["r"] == "1"
        and record["params"]["d"] == 2
        for record in records
    )
    elapsed = time.monotonic() - started
    _report(
        8,
        "seeded search is byte-deterministic and finds a (k=1, r=1, d=2) code",
        deterministic and found and cell is not None and cell >= 2 and elapsed < 600,
        f"{len(records)} records, best d at (1,1) = {cell}, {elapsed:.1f}s",
    )
