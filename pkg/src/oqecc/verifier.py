"""Desk-scale numeric certification on explicit q^n-dimensional matrices.

The error operators are X(a)|x> = |x+a> and Z(b)|x> = omega^tr(bx)|x> with
omega = exp(2*pi*i/p), tensored coordinate-wise; a vector (a|b) lifts to the
unitary X(a)Z(b) in that fixed order.  The code projector attached to a
nonzero symplectic-layout code X is the product of commuting eigenspace
projectors of the lifted hull generators, one chosen eigenvalue each.  The
checks certify, entirely numerically:

  * rank(P) = q^n / |hull(X)|,
  * an error is subsystem-detectable exactly when its vector is outside
    dual(hull(X)) - X,
  * restricted gauge and logical operators commute and span algebras of
    dimension (dim B)^2 and (dim A)^2,
  * Tr(e P) is nonzero exactly for vectors in the hull.

Dense matrices are capped at q^n <= 4096 by default; the OQECC_MAX_DIM
environment variable raises the cap for the patient.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .additive_code import AdditiveCode, CodeVector, SYMPLECTIC, ambient_vectors
from .code_params import BASIS, min_distance, subsystem_dimensions, swt
from .errors import (
    CapExceededError,
    DimensionMismatchError,
    LayoutMismatchError,
    NonCommutingLiftError,
    RankMismatchError,
    TheoryViolationError,
    ZeroCodeError,
)
from .galois import GfContext

DEFAULT_MAX_DIM = 4096
OPERATOR_TOL = 1e-9
TRACE_TOL = 1e-6
SPAN_SV_RTOL = 1e-7


def max_matrix_dim() -> int:
    """Current cap on dense matrix dimension (env OQECC_MAX_DIM overrides)."""
    raw = os.environ.get("OQECC_MAX_DIM")
    return int(raw) if raw else DEFAULT_MAX_DIM


def _check_dim(ctx: GfContext, n: int) -> int:
    dim = ctx.q**n
    cap = max_matrix_dim()
    if dim > cap:
        raise CapExceededError(f"q^n = {dim} exceeds the matrix cap {cap}")
    return dim


def _omega(p: int) -> complex:
    return np.exp(2j * np.pi / p)


def _single_x(ctx: GfContext, a: int) -> np.ndarray:
    mat = np.zeros((ctx.q, ctx.q), dtype=np.complex128)
    for x in range(ctx.q):
        mat[ctx.add(x, a), x] = 1.0
    return mat


def _single_z(ctx: GfContext, b: int) -> np.ndarray:
    omega = _omega(ctx.p)
    return np.diag([omega ** ctx.trace(ctx.mul(b, x)) for x in range(ctx.q)])


class ErrorOperator:
    """A phase exponent plus a vector (a|b), realizable as a q^n unitary.

    The phase exponent counts powers of a primitive 2p-th root of unity when
    p = 2 (lifts like X(1)Z(1) square to -I) and of a p-th root otherwise.
    """

    def __init__(self, ctx: GfContext, a: Sequence[int], b: Sequence[int], phase_exp: int = 0):
        if len(a) != len(b):
            raise DimensionMismatchError("a and b must have the same length")
        self.ctx = ctx
        self.a = tuple(ctx._check(x) for x in a)
        self.b = tuple(ctx._check(x) for x in b)
        self.phase_modulus = 2 * ctx.p if ctx.p == 2 else ctx.p
        self.phase_exp = phase_exp % self.phase_modulus
        _check_dim(ctx, self.n)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def vector(self) -> CodeVector:
        """The image (a|b) in F_q^(2n)."""
        return CodeVector(self.ctx, SYMPLECTIC, self.a + self.b)

    @cached_property
    def realization(self) -> np.ndarray:
        """Dense unitary, first coordinate as the leftmost tensor factor."""
        mat = np.eye(1, dtype=np.complex128)
        for ai, bi in zip(self.a, self.b):
            mat = np.kron(mat, _single_x(self.ctx, ai) @ _single_z(self.ctx, bi))
        if self.phase_exp:
            mat = mat * np.exp(2j * np.pi * self.phase_exp / self.phase_modulus)
        return mat

    def __repr__(self) -> str:
        return f"ErrorOperator(a={self.a}, b={self.b}, phase_exp={self.phase_exp})"


def pauli_matrix(ctx: GfContext, a: Sequence[int], b: Sequence[int], phase_exp: int = 0) -> ErrorOperator:
    """Lift of the vector (a|b): the operator X(a)Z(b) times a phase."""
    return ErrorOperator(ctx, a, b, phase_exp)


def _lift(v: CodeVector) -> ErrorOperator:
    return ErrorOperator(v.ctx, v.a_coords, v.b_coords, 0)


def _max_abs(mat: np.ndarray) -> float:
    return float(np.abs(mat).max()) if mat.size else 0.0


def _eigenvalue_candidates(ctx: GfContext, v: CodeVector) -> list[complex]:
    """Admissible eigenvalues of the phase-0 lift, smallest argument first.

    For odd p the lift has order p.  For p = 2 it squares to (-1)^tr(a.b) I,
    so the eigenvalues are +-1 or +-i depending on that sign.
    """
    p = ctx.p
    if p == 2:
        n = v.n
        acc = 0
        for i in range(n):
            acc = ctx.add(acc, ctx.mul(v.coords[i], v.coords[n + i]))
        if ctx.trace(acc):
            return [1j, -1j]
        return [1.0 + 0j, -1.0 + 0j]
    omega = _omega(p)
    return [omega**j for j in range(p)]


def _eigenspace_projector(op: np.ndarray, eigenvalue: complex, p: int) -> np.ndarray:
    """(1/p) * sum_j (eigenvalue^-1 op)^j, the projector onto the eigenspace."""
    scaled = op / eigenvalue
    term = np.eye(op.shape[0], dtype=np.complex128)
    total = term.copy()
    for _ in range(p - 1):
        term = term @ scaled
        total += term
    return total / p


@dataclass(frozen=True, eq=False)
class Projector:
    """The code projector with the data used to build it."""

    matrix: np.ndarray
    source_code: AdditiveCode
    hull_basis: tuple[CodeVector, ...]
    eigenvalue_choices: tuple[complex, ...]
    rank: int

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def _numeric_rank_projector(mat: np.ndarray) -> int:
    """Rank of a (numerically) Hermitian idempotent by eigenvalue counting."""
    eigenvalues = np.linalg.eigvalsh(mat)
    return int((eigenvalues > 0.5).sum())


def build_projector(
    code: AdditiveCode, eigenvalue_picks: Sequence[int] | None = None
) -> Projector:
    """Projector onto the joint chosen-eigenvalue space of the lifted hull.

    Default eigenvalues follow a fixed rule: per generator, the eigenvalue
    of largest multiplicity, ties broken by smallest complex argument (for
    phase-0 lifts all multiplicities tie at q^n/p, so the argument order
    decides).  Should a partial product ever vanish the choice backtracks
    to the generator's next eigenvalue.  eigenvalue_picks forces index
    choices instead, for checking that every realizable tuple gives the
    same rank.
    """
    if code.layout != SYMPLECTIC:
        raise LayoutMismatchError("the projector needs a symplectic-layout code")
    if code.is_zero():
        raise ZeroCodeError("the projector needs a nonzero code")
    ctx = code.ctx
    dim = _check_dim(ctx, code.n)
    hull = code.hull()
    generators = hull.basis_vectors()
    lifts = [_lift(v) for v in generators]
    mats = [op.realization for op in lifts]

    for i, j in itertools.combinations(range(len(mats)), 2):
        if _max_abs(mats[i] @ mats[j] - mats[j] @ mats[i]) > OPERATOR_TOL:
            raise NonCommutingLiftError(
                f"lifted hull generators {generators[i]!r} and {generators[j]!r} do not commute"
            )

    candidate_lists = [_eigenvalue_candidates(ctx, v) for v in generators]
    if eigenvalue_picks is not None:
        if len(eigenvalue_picks) != len(generators):
            raise DimensionMismatchError("one eigenvalue pick per hull generator required")
        candidate_lists = [[cands[i]] for cands, i in zip(candidate_lists, eigenvalue_picks)]

    matrix, choices = _projector_search(dim, mats, candidate_lists, ctx.p)
    if matrix is None:
        raise RankMismatchError("no realizable eigenvalue tuple was found")

    if _max_abs(matrix - matrix.conj().T) > OPERATOR_TOL:
        raise TheoryViolationError("projector is not Hermitian within tolerance")
    if _max_abs(matrix @ matrix - matrix) > OPERATOR_TOL:
        raise TheoryViolationError("projector is not idempotent within tolerance")
    rank = _numeric_rank_projector(matrix)
    expected = dim // (ctx.p**hull.rank)
    if rank != expected:
        raise RankMismatchError(
            f"projector rank {rank} but q^n/|hull| = {expected}; the theory was violated"
        )
    return Projector(
        matrix=matrix,
        source_code=code,
        hull_basis=generators,
        eigenvalue_choices=tuple(choices),
        rank=rank,
    )


def _projector_search(dim, mats, candidate_lists, p):
    """Depth-first search over eigenvalue tuples; prunes vanishing products."""

    def descend(i, current, chosen):
        if i == len(mats):
            return current, list(chosen)
        for eigenvalue in candidate_lists[i]:
            trial = current @ _eigenspace_projector(mats[i], eigenvalue, p)
            if _max_abs(trial) <= OPERATOR_TOL:
                continue
            found = descend(i + 1, trial, chosen + [eigenvalue])
            if found is not None:
                return found
        return None

    result = descend(0, np.eye(dim, dtype=np.complex128), [])
    if result is None:
        return None, None
    return result


def check_detectable(projector: Projector, error: ErrorOperator) -> tuple[bool, complex | None]:
    """Whether P e P = lambda P, with lambda = Tr(P e P)/rank(P) when it holds.

    This is the code-subspace criterion; gauge errors that merely act inside
    the co-subsystem fail it without harming the encoded information (see
    verify_detectability).
    """
    mat = error.realization
    if mat.shape != projector.matrix.shape:
        raise DimensionMismatchError("projector and error dimensions differ")
    sandwiched = projector.matrix @ mat @ projector.matrix
    lam = complex(np.trace(sandwiched) / projector.rank)
    if _max_abs(sandwiched - lam * projector.matrix) <= OPERATOR_TOL:
        return True, lam
    return False, None


@dataclass(frozen=True)
class VerifierReport:
    """Outcome of one certification check; failing reports carry witnesses."""

    check: str
    passed: bool
    witnesses: tuple = ()
    tolerances: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        assert self.passed or self.witnesses, "a failing report must carry a witness"


def _restricted(projector: Projector, vectors: Iterable[CodeVector]) -> list[np.ndarray]:
    P = projector.matrix
    return [P @ _lift(v).realization @ P for v in vectors]


def _commutes_with_all(mat: np.ndarray, ops: Sequence[np.ndarray]) -> bool:
    return all(_max_abs(mat @ other - other @ mat) <= OPERATOR_TOL for other in ops)


def restricted_logical_ops(projector: Projector) -> list[np.ndarray]:
    """P V P for lifts V of a basis of dual(X); they generate the restricted
    logical algebra, which acts only on the logical tensor factor."""
    return _restricted(projector, projector.source_code.dual().basis_vectors())


def is_subsystem_detectable(
    projector: Projector, error: ErrorOperator, logical_ops: Sequence[np.ndarray] | None = None
) -> bool:
    """Numeric subsystem-level detectability of an error.

    An error is harmless to the encoded information iff its restriction to
    the code space acts as a scalar on the logical factor, equivalently iff
    P e P commutes with the whole restricted logical algebra.  Scalar action
    on all of the code space (check_detectable) is the quick special case.
    """
    ok, _ = check_detectable(projector, error)
    if ok:
        return True
    if logical_ops is None:
        logical_ops = restricted_logical_ops(projector)
    sandwiched = projector.matrix @ error.realization @ projector.matrix
    return _commutes_with_all(sandwiched, logical_ops)


def verify_rank(code: AdditiveCode) -> VerifierReport:
    """Certify rank(P) = q^n/|hull| (build_projector aborts if violated)."""
    projector = build_projector(code)
    return VerifierReport(
        check="rank",
        passed=True,
        tolerances={"operator": OPERATOR_TOL, "eigenvalue_threshold": 0.5},
        details={
            "rank": projector.rank,
            "dim": projector.dim,
            "hull_size": code.hull().size,
            "eigenvalues": [str(v) for v in projector.eigenvalue_choices],
        },
    )


def verify_detectability(code: AdditiveCode) -> VerifierReport:
    """Sweep every error vector and compare numerics with the set predicate.

    An error is detectable by the logical subsystem iff its restriction
    P e P commutes with the whole restricted logical algebra (equivalently
    it acts as a scalar on the logical factor); scalar action on the full
    code space, the check_detectable criterion, is the special case that
    also covers every vector of the hull.  The predicate side says: the
    vector lies outside dual(hull(X)) - X.  The sweep also certifies that
    everything lighter than the minimum distance is detectable.
    """
    projector = build_projector(code)
    ctx = code.ctx
    hull_dual = code.hull().dual()
    logical_ops = restricted_logical_ops(projector)
    d = min_distance(code, method=BASIS)

    mismatches = []
    below_distance_failures = []
    total = 0
    detectable_count = 0
    for vec in ambient_vectors(ctx, code.n, SYMPLECTIC):
        total += 1
        error = _lift(vec)
        numeric = is_subsystem_detectable(projector, error, logical_ops)
        predicted = not (vec in hull_dual and vec not in code)
        if numeric != predicted:
            mismatches.append({"vector": vec.coords, "numeric": numeric, "predicted": predicted})
        if numeric:
            detectable_count += 1
        if swt(vec) < d and not numeric:
            below_distance_failures.append({"vector": vec.coords, "swt": swt(vec)})

    passed = not mismatches and not below_distance_failures
    return VerifierReport(
        check="detect",
        passed=passed,
        witnesses=tuple(mismatches + below_distance_failures),
        tolerances={"operator": OPERATOR_TOL},
        details={"errors_swept": total, "detectable": detectable_count, "distance": d},
    )


def _span_dimension(ops: Sequence[np.ndarray]) -> int:
    stack = np.stack([op.reshape(-1) for op in ops])
    singular_values = np.linalg.svd(stack, compute_uv=False)
    if singular_values.size == 0 or singular_values[0] == 0.0:
        return 0
    return int((singular_values > SPAN_SV_RTOL * singular_values[0]).sum())


def verify_tensor_factorization(code: AdditiveCode) -> VerifierReport:
    """Certify the gauge/logical split of the code space.

    Lifts of X restrict to operators acting only on the gauge factor, lifts
    of dual(X) only on the logical factor: all cross pairs must commute and
    the spans must have dimensions (dim B)^2 and (dim A)^2.
    """
    projector = build_projector(code)
    dim_a, dim_b = subsystem_dimensions(code)
    dual = code.dual()
    budget = max_matrix_dim()
    if code.size > budget or dual.size > budget:
        raise CapExceededError(
            f"enumerating {code.size} gauge and {dual.size} logical lifts exceeds the cap {budget}"
        )
    gauge_vectors = list(code.vectors())
    logical_vectors = list(dual.vectors())
    gauge_ops = _restricted(projector, gauge_vectors)
    logical_ops = _restricted(projector, logical_vectors)

    violations = []
    for gv, gop in zip(gauge_vectors, gauge_ops):
        for lv, lop in zip(logical_vectors, logical_ops):
            if _max_abs(gop @ lop - lop @ gop) > OPERATOR_TOL:
                violations.append({"gauge": gv.coords, "logical": lv.coords})

    gauge_span = _span_dimension(gauge_ops)
    logical_span = _span_dimension(logical_ops)
    span_ok = gauge_span == dim_b**2 and logical_span == dim_a**2
    if not span_ok:
        violations.append(
            {
                "gauge_span": gauge_span,
                "expected_gauge_span": dim_b**2,
                "logical_span": logical_span,
                "expected_logical_span": dim_a**2,
            }
        )
    return VerifierReport(
        check="tensor",
        passed=not violations,
        witnesses=tuple(violations),
        tolerances={"operator": OPERATOR_TOL, "singular_value_rtol": SPAN_SV_RTOL},
        details={
            "dim_a": dim_a,
            "dim_b": dim_b,
            "gauge_span": gauge_span,
            "logical_span": logical_span,
        },
    )


def verify_character_support(code: AdditiveCode) -> VerifierReport:
    """Certify that Tr(e P) is nonzero exactly on lifts of hull vectors.

    For a hull vector the magnitude is exactly q^n/|hull|, otherwise exactly
    zero, so the 1e-6 threshold has enormous margin.
    """
    projector = build_projector(code)
    ctx = code.ctx
    hull = code.hull()
    mismatches = []
    total = 0
    support = 0
    for vec in ambient_vectors(ctx, code.n, SYMPLECTIC):
        total += 1
        value = complex(np.einsum("ij,ji->", _lift(vec).realization, projector.matrix))
        nonzero = abs(value) > TRACE_TOL
        if nonzero:
            support += 1
        if nonzero != (vec in hull):
            mismatches.append({"vector": vec.coords, "trace": value, "in_hull": vec in hull})
    return VerifierReport(
        check="support",
        passed=not mismatches,
        witnesses=tuple(mismatches),
        tolerances={"trace": TRACE_TOL},
        details={"errors_swept": total, "support_size": support, "hull_size": hull.size},
    )


ALL_CHECKS = ("rank", "detect", "tensor", "support")

_CHECK_FUNCTIONS = {
    "rank": verify_rank,
    "detect": verify_detectability,
    "tensor": verify_tensor_factorization,
    "support": verify_character_support,
}


def run_checks(code: AdditiveCode, checks: Sequence[str] = ALL_CHECKS) -> list[VerifierReport]:
    """Run the named certification checks in a fixed order."""
    unknown = [c for c in checks if c not in _CHECK_FUNCTIONS]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; available: {list(ALL_CHECKS)}")
    return [_CHECK_FUNCTIONS[c](code) for c in ALL_CHECKS if c in checks]
