"""Mixed recurrence relations A*P = B*G +- (x-E)*Q and their checkers.

A relation is stored with all polynomials in rational mode so the identity
itself can be certified exactly (coefficientwise zero residual).  The
checkers then move to floats: they compute the zero sets, test the stated
hypotheses, and evaluate every conclusion clause of the matching
interlacing statement, producing a witness-carrying report.

Three relation shapes are supported, named by the degrees of G and Q
relative to deg P = n:

* ``pair_up``:  deg G = deg Q = n + 1, sign +
* ``down_one``: deg G = n, deg Q = n - 1, sign -
* ``up_one``:   deg G = n, deg Q = n + 1, sign -

Seed-deterministic random generators build synthetic instances of the first
two shapes from scratch (interlaced rational zero draws), giving a
constructive property-test oracle for the checkers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import families
from .families import (
    FamilySpec,
    InvalidParameterError,
    ORTHOGONAL_KINDS,
    jacobi_step_coeffs,
    monic_by_recurrence,
)
from .interlacing import (
    ADDED_OK_KINDS,
    ALTERNATE,
    DEFAULT_FLOOR,
    FAIL,
    INCONCLUSIVE,
    INTERLACE_DOWN,
    CommonPointError,
    Verdict,
    added_point_interlace,
    alternates,
    interlaces_down,
    locate_point,
)
from .poly import Polynomial, is_identically_zero, monic_linear
from .rootfind import METHOD_COMPANION, ZeroSet, zeros_general, zeros_orthogonal

PAIR_UP = "pair_up"
DOWN_ONE = "down_one"
UP_ONE = "up_one"

PASS = "pass"
FAIL_CLAUSE = "fail"
SKIPPED = "skipped"


class IdentityError(RuntimeError):
    """A transcribed relation failed its exact identity check (fatal)."""


class DegenerateDrawError(RuntimeError):
    """The random generator exhausted its retries without a valid instance."""


@dataclass
class MixedRelation:
    """One concrete relation A*P = B*G + sign*(x-E)*Q, all rational."""

    rel_id: str
    shape: str
    sign: int
    A: Polynomial
    B: Polynomial
    H: Polynomial
    E: Fraction
    P: Polynomial
    G: Polynomial
    Q: Polynomial
    specs: dict = field(default_factory=dict)
    support: tuple = (None, None)
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        n = self.P.degree
        want = {
            PAIR_UP: (n + 1, n + 1),
            DOWN_ONE: (n, n - 1),
            UP_ONE: (n, n + 1),
        }[self.shape]
        got = (self.G.degree, self.Q.degree)
        if got != want:
            raise IdentityError(
                f"{self.rel_id}: degrees {got} do not match shape {self.shape} "
                f"with deg P = {n} (expected {want})"
            )


def verify_identity(rel: MixedRelation) -> bool:
    """True iff A*P - B*G - sign*(x-E)*Q is exactly the zero polynomial."""
    residual = rel.A * rel.P - rel.B * rel.G - (rel.H * rel.Q).scale(rel.sign)
    return is_identically_zero(residual)


def _finish(rel: MixedRelation) -> MixedRelation:
    if not verify_identity(rel):
        raise IdentityError(f"{rel.rel_id}: exact identity failed for {rel.params}")
    return rel


# ---------------------------------------------------------------------------
# Relation builders, one per transcribed display
# ---------------------------------------------------------------------------


def _build_krawtchouk(n: int, p: Fraction, N: Fraction) -> MixedRelation:
    Ni = int(N)
    if N.denominator != 1 or Ni < 1:
        raise InvalidParameterError(f"krawtchouk relation needs integer N >= 1 (got N={N})")
    if n + 1 > Ni:
        raise InvalidParameterError(
            f"krawtchouk relation needs n + 1 <= N so both parameter columns exist "
            f"(got n={n}, N={Ni})"
        )
    p_spec = families.krawtchouk(p, Ni + 1, n)
    g_spec = families.krawtchouk(p, Ni, n + 1)
    q_spec = families.krawtchouk(p, Ni + 1, n + 1)
    E = Ni + 1 - p * (n + 1)
    rel = MixedRelation(
        rel_id="krawtchouk",
        shape=PAIR_UP,
        sign=1,
        A=Polynomial.constant(p * (1 - p) * (n + 1) * (Ni + 1 - n)),
        B=Polynomial([Ni + 1, -1]),
        H=monic_linear(E),
        E=E,
        P=monic_by_recurrence(p_spec),
        G=monic_by_recurrence(g_spec),
        Q=monic_by_recurrence(q_spec),
        specs={"P": p_spec, "G": g_spec, "Q": q_spec},
        support=(0.0, float(Ni + 1)),
        params={"n": n, "p": p, "N": Ni},
    )
    return _finish(rel)


def _build_meixner(n: int, t: Fraction, w: Fraction) -> MixedRelation:
    p_spec = families.meixner(t, w, n)
    g_spec = families.meixner(t + 1, w, n + 1)
    q_spec = families.meixner(t, w, n + 1)
    E = -t + w * (n + 1) / (1 - w)
    rel = MixedRelation(
        rel_id="meixner",
        shape=PAIR_UP,
        sign=1,
        A=Polynomial.constant(w * (n + 1) * (n + t) / (1 - w) ** 2),
        B=Polynomial([-t, -1]),
        H=monic_linear(E),
        E=E,
        P=monic_by_recurrence(p_spec),
        G=monic_by_recurrence(g_spec),
        Q=monic_by_recurrence(q_spec),
        specs={"P": p_spec, "G": g_spec, "Q": q_spec},
        support=(0.0, None),
        params={"n": n, "t": t, "w": w},
    )
    return _finish(rel)


def _build_laguerre(n: int, alpha: Fraction) -> MixedRelation:
    p_spec = families.laguerre(alpha, n)
    g_spec = families.laguerre(alpha + 1, n + 1)
    q_spec = families.laguerre(alpha, n + 1)
    E = Fraction(n + 1)
    rel = MixedRelation(
        rel_id="laguerre",
        shape=PAIR_UP,
        sign=1,
        A=Polynomial.constant((n + 1) * (n + alpha + 1)),
        B=Polynomial([0, -1]),
        H=monic_linear(E),
        E=E,
        P=monic_by_recurrence(p_spec),
        G=monic_by_recurrence(g_spec),
        Q=monic_by_recurrence(q_spec),
        specs={"P": p_spec, "G": g_spec, "Q": q_spec},
        support=(0.0, None),
        params={"n": n, "alpha": alpha},
    )
    return _finish(rel)


def _build_jacobi_beta(n: int, alpha: Fraction, beta: Fraction) -> MixedRelation:
    if n < 1:
        raise InvalidParameterError(f"jacobi-beta relation needs n >= 1 (got n={n})")
    if beta <= 0:
        raise InvalidParameterError(
            f"jacobi-beta relation needs beta > 0 so the lowered parameter stays valid "
            f"(got beta={beta})"
        )
    s = alpha + beta
    # Scalar normalizer for monic members; the added point E and the root
    # of A follow the usual display of this relation, whose own scalars
    # belong to a non-monic normalization and fail the exact residual here.
    M = 2 * (n + 1) * (n + alpha + 1) / ((2 * n + s + 1) * (2 * n + s + 2))
    E = -1 + 2 * (n + 1) * (n + alpha + 1) / ((2 * n + s + 2) * (2 * n + s + 3))
    p_spec = families.jacobi(alpha, beta, n)
    g_spec = families.jacobi(alpha, beta + 1, n + 1)
    q_spec = families.jacobi(alpha, beta - 1, n + 1)
    rel = MixedRelation(
        rel_id="jacobi-beta",
        shape=PAIR_UP,
        sign=1,
        A=Polynomial([M * (1 + 2 * beta / (2 * n + s + 3)), M]),
        B=Polynomial([-1, -1]),
        H=monic_linear(E),
        E=E,
        P=monic_by_recurrence(p_spec),
        G=monic_by_recurrence(g_spec),
        Q=monic_by_recurrence(q_spec),
        specs={"P": p_spec, "G": g_spec, "Q": q_spec},
        support=(-1.0, 1.0),
        params={"n": n, "alpha": alpha, "beta": beta},
    )
    return _finish(rel)


def _build_jacobi_shift(n: int, alpha: Fraction, beta: Fraction) -> MixedRelation:
    if n < 1:
        raise InvalidParameterError(f"jacobi-shift relation needs n >= 1 (got n={n})")
    s = alpha + beta
    E = (alpha - beta) / (2 * n + s + 2)
    p_spec = families.jacobi(alpha, beta, n)
    g_spec = families.jacobi(alpha + 1, beta + 1, n)
    q_spec = families.jacobi(alpha + 1, beta + 1, n - 1)
    rel = MixedRelation(
        rel_id="jacobi-shift",
        shape=DOWN_ONE,
        sign=-1,
        A=Polynomial.constant((n + s + 1) / Fraction(n)),
        B=Polynomial.constant((2 * n + s + 1) / Fraction(n)),
        H=monic_linear(E),
        E=E,
        P=monic_by_recurrence(p_spec),
        G=monic_by_recurrence(g_spec),
        Q=monic_by_recurrence(q_spec),
        specs={"P": p_spec, "G": g_spec, "Q": q_spec},
        support=(-1.0, 1.0),
        params={"n": n, "alpha": alpha, "beta": beta},
    )
    return _finish(rel)


def _build_jacobi_shift_up(n: int, alpha: Fraction, beta: Fraction) -> MixedRelation:
    """Equal-degree Jacobi pair against the one-degree-up neighbour.

    Obtained by eliminating the index n-1 member between the parameter-shift
    relation at two consecutive indices and the shifted family's recurrence.
    The elimination collapses A to the weight-ratio factor 1 - x^2, positive
    on the open support interval; the identity is certified exactly below.
    """
    if n < 1:
        raise InvalidParameterError(f"jacobi-shift-up relation needs n >= 1 (got n={n})")
    s = alpha + beta
    e_n = (alpha - beta) / (2 * n + s + 2)
    _, lp = jacobi_step_coeffs(alpha + 1, beta + 1, n)
    b0 = (2 * n + s + 3) * (n + s + 1) * lp / ((n + s + 2) * Fraction(n))
    p_spec = families.jacobi(alpha + 1, beta + 1, n)
    g_spec = families.jacobi(alpha, beta, n)
    q_spec = families.jacobi(alpha, beta, n + 1)
    rel = MixedRelation(
        rel_id="jacobi-shift-up",
        shape=UP_ONE,
        sign=-1,
        A=Polynomial([1, 0, -1]),
        B=Polynomial.constant(b0),
        H=monic_linear(e_n),
        E=e_n,
        P=monic_by_recurrence(p_spec),
        G=monic_by_recurrence(g_spec),
        Q=monic_by_recurrence(q_spec),
        specs={"P": p_spec, "G": g_spec, "Q": q_spec},
        support=(-1.0, 1.0),
        params={"n": n, "alpha": alpha, "beta": beta},
    )
    return _finish(rel)


def _build_narayana_christoffel(n: int) -> MixedRelation:
    if n < 2:
        raise InvalidParameterError(f"narayana-christoffel relation needs n >= 2 (got n={n})")
    E = Fraction(1)
    rel = MixedRelation(
        rel_id="narayana-christoffel",
        shape=DOWN_ONE,
        sign=-1,
        A=Polynomial.constant(Fraction(n + 2, n - 1)),
        B=Polynomial.constant(Fraction(2 * n + 1, n - 1)),
        H=monic_linear(E),
        E=E,
        P=families.narayana_christoffel(n),
        G=families.narayana_reduced(n),
        Q=families.narayana_reduced(n - 1),
        specs={
            "P": families.narayana_spec("narayana-christoffel", n),
            "G": families.narayana_spec("narayana-reduced", n),
            "Q": families.narayana_spec("narayana-reduced", n - 1),
        },
        support=(None, None),
        params={"n": n},
    )
    return _finish(rel)


def _build_narayana_perturbed(n: int) -> MixedRelation:
    if n < 2:
        raise InvalidParameterError(f"narayana-perturbed relation needs n >= 2 (got n={n})")
    E = Fraction(-1)
    rel = MixedRelation(
        rel_id="narayana-perturbed",
        shape=DOWN_ONE,
        sign=-1,
        A=Polynomial.constant(Fraction(1, n - 1)),
        B=Polynomial.constant(Fraction(n, n - 1)),
        H=monic_linear(E),
        E=E,
        P=families.narayana_perturbed(n),
        G=families.narayana_reduced(n),
        Q=families.narayana_reduced(n - 1),
        specs={
            "P": families.narayana_spec("narayana-perturbed", n),
            "G": families.narayana_spec("narayana-reduced", n),
            "Q": families.narayana_spec("narayana-reduced", n - 1),
        },
        support=(None, None),
        params={"n": n},
    )
    return _finish(rel)


#: pair id -> (builder, required parameter names)
PAIR_BUILDERS = {
    "krawtchouk": (_build_krawtchouk, ("p", "N")),
    "meixner": (_build_meixner, ("t", "w")),
    "laguerre": (_build_laguerre, ("alpha",)),
    "jacobi-beta": (_build_jacobi_beta, ("alpha", "beta")),
    "jacobi-shift": (_build_jacobi_shift, ("alpha", "beta")),
    "jacobi-shift-up": (_build_jacobi_shift_up, ("alpha", "beta")),
    "narayana-christoffel": (_build_narayana_christoffel, ()),
    "narayana-perturbed": (_build_narayana_perturbed, ()),
}


def build_relation(pair_id: str, n: int, params: dict | None = None) -> MixedRelation:
    """Construct and exactly verify the named relation at one grid point."""
    if pair_id not in PAIR_BUILDERS:
        raise InvalidParameterError(f"unknown relation pair {pair_id!r}")
    builder, names = PAIR_BUILDERS[pair_id]
    params = dict(params or {})
    if set(params) != set(names):
        raise InvalidParameterError(
            f"{pair_id} expects parameters {names}, got {tuple(sorted(params))}"
        )
    kwargs = {name: Fraction(params[name]) for name in names}
    return builder(n, **kwargs)


# ---------------------------------------------------------------------------
# Check reports
# ---------------------------------------------------------------------------


@dataclass
class CheckReport:
    """Machine-checkable outcome of one relation check."""

    check_id: str
    shape: str
    params: dict
    e_value: Fraction
    identity_ok: bool = False
    hypotheses: dict = field(default_factory=dict)
    premise_kind: str | None = None
    premise: Verdict | None = None
    e_position: str = "unknown"
    clauses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    @property
    def hypotheses_ok(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def passed(self) -> bool:
        """Every applicable clause holds.

        A violated hypothesis (say, a common zero of G and P in a symmetric
        degenerate case) puts the conclusions out of scope: the checker skips
        them and the violation is reported distinctly, but nothing the
        relation claims has been falsified.  A failed premise with intact
        hypotheses, or any failing clause, is a real failure.
        """
        if not self.identity_ok or FAIL_CLAUSE in self.clauses.values():
            return False
        if not self.hypotheses_ok:
            return True
        return self.premise_kind is not None

    def to_json(self) -> dict:
        return {
            "check": self.check_id,
            "shape": self.shape,
            "params": {k: str(v) for k, v in self.params.items()},
            "E": str(self.e_value),
            "E_float": float(self.e_value),
            "identity_ok": self.identity_ok,
            "hypotheses": dict(self.hypotheses),
            "premise": self.premise.to_json() if self.premise else None,
            "premise_kind": self.premise_kind,
            "e_position": self.e_position,
            "clauses": dict(self.clauses),
            "notes": list(self.notes),
            "passed": self.passed,
        }

    def csv_rows(self, extra: dict | None = None) -> list[dict]:
        """One flat row per clause, plus identity and premise pseudo-clauses.

        A violated hypothesis on an otherwise clean point is recorded as
        "degenerate" rather than "fail": the statement does not apply there.
        """
        base = dict(extra or {})
        base.update({k: str(v) for k, v in self.params.items()})
        if self.hypotheses_ok:
            hyp_result = PASS
        else:
            hyp_result = "degenerate" if self.passed else FAIL_CLAUSE
        if self.premise_kind is not None:
            prem_result = PASS
        else:
            prem_result = SKIPPED if not self.hypotheses_ok else FAIL_CLAUSE
        rows = [
            {**base, "clause": "identity", "result": PASS if self.identity_ok else FAIL_CLAUSE},
            {**base, "clause": "hypotheses", "result": hyp_result},
            {**base, "clause": "premise", "result": prem_result},
        ]
        for name, result in self.clauses.items():
            rows.append({**base, "clause": name, "result": result})
        return rows


def _zeros_for(rel: MixedRelation, which: str) -> ZeroSet:
    spec = rel.specs.get(which)
    if spec is not None and spec.kind in ORTHOGONAL_KINDS:
        return zeros_orthogonal(spec)
    poly = getattr(rel, which)
    if poly.degree == 0:
        return ZeroSet((), 0.0, METHOD_COMPANION, poly)
    return zeros_general(poly)


def _min_cross_gap(za: ZeroSet, zb: ZeroSet) -> float:
    if not za.zeros or not zb.zeros:
        return float("inf")
    return min(abs(a - b) for a in za.zeros for b in zb.zeros)


def _sample_interval(rel: MixedRelation, zg: ZeroSet) -> tuple[float, float]:
    lo, hi = rel.support
    anchors = list(zg.zeros) + [float(rel.E)]
    span_lo, span_hi = min(anchors), max(anchors)
    pad = 0.05 * (span_hi - span_lo) + 0.5
    if lo is None:
        lo = span_lo - pad
    if hi is None:
        hi = span_hi + pad
    return float(lo), float(hi)


def _a_positive(rel: MixedRelation, zg: ZeroSet, grid_points: int = 32) -> bool:
    """A > 0 at every zero of G plus a fixed grid over the working interval."""
    a_float = rel.A.to_float()
    for z in zg.zeros:
        if a_float.evaluate(z) <= 0:
            return False
    lo, hi = _sample_interval(rel, zg)
    margin = (hi - lo) / (4 * grid_points)
    lo, hi = lo + margin, hi - margin
    for i in range(grid_points):
        x = lo + (hi - lo) * i / (grid_points - 1)
        if a_float.evaluate(x) <= 0:
            return False
    return True


def _base_report(rel: MixedRelation, floor: float) -> tuple[CheckReport, ZeroSet, ZeroSet, ZeroSet]:
    report = CheckReport(
        check_id=rel.rel_id,
        shape=rel.shape,
        params=dict(rel.params),
        e_value=rel.E,
    )
    report.identity_ok = verify_identity(rel)
    zg = _zeros_for(rel, "G")
    zq = _zeros_for(rel, "Q")
    zp = _zeros_for(rel, "P")
    e_float = float(rel.E)
    report.hypotheses["b_at_e_nonzero"] = rel.B.evaluate(rel.E) != 0
    report.hypotheses["e_not_on_g_zero"] = all(abs(e_float - g) > floor for g in zg.zeros)
    report.hypotheses["no_common_zeros_g_p"] = _min_cross_gap(zg, zp) > floor
    report.hypotheses["a_positive"] = _a_positive(rel, zg)
    position, slot = locate_point(e_float, zg, floor)
    report.e_position = position if slot is None else f"{position}({slot})"
    if any(abs(e_float - q) <= floor for q in zq.zeros):
        report.notes.append("E sits on a zero of Q (permitted, logged)")
    if not report.hypotheses_ok:
        violated = sorted(k for k, v in report.hypotheses.items() if not v)
        report.notes.append(
            "hypotheses violated, conclusions out of scope: " + ", ".join(violated)
        )
    return report, zg, zq, zp


def _verdict_clause(verdict: Verdict, want_kind) -> str:
    if verdict.kind == INCONCLUSIVE:
        return SKIPPED
    kinds = want_kind if isinstance(want_kind, (set, frozenset)) else {want_kind}
    return PASS if verdict.kind in kinds else FAIL_CLAUSE


def check_pair_up(rel: MixedRelation, floor: float = DEFAULT_FLOOR) -> CheckReport:
    """Checker for the shape with G and Q one degree above P.

    The premise is alternation of Q and G in either orientation; the clauses
    are the E-position bound, the added-point interlacing statement, and the
    two-directional full-interlacing iff.
    """
    if rel.shape != PAIR_UP:
        raise InvalidParameterError(f"check_pair_up got shape {rel.shape}")
    report, zg, zq, zp = _base_report(rel, floor)
    e_float = float(rel.E)

    prem_qg = alternates(zq, zg, floor)
    if prem_qg.kind == ALTERNATE:
        report.premise_kind, report.premise = "q_below_g", prem_qg
    else:
        prem_gq = alternates(zg, zq, floor)
        if prem_gq.kind == ALTERNATE:
            report.premise_kind, report.premise = "g_below_q", prem_gq
        else:
            report.premise = prem_qg if prem_qg.kind == INCONCLUSIVE else prem_gq
            report.notes.append("premise failed: zero sets of Q and G do not alternate")
            for name in ("e_position", "added_point", "full_iff"):
                report.clauses[name] = SKIPPED
            return report

    case_low = report.premise_kind == "q_below_g"

    # E-position bound: below the largest zero of G (case 1) or above the
    # smallest (case 2).  Evaluated regardless of the other hypotheses; the
    # impossible-region property rests on this clause.
    bound = zg.max if case_low else zg.min
    delta = (bound - e_float) if case_low else (e_float - bound)
    if abs(delta) <= floor:
        report.clauses["e_position"] = SKIPPED
    else:
        report.clauses["e_position"] = PASS if delta > 0 else FAIL_CLAUSE
    report.notes.append(
        f"extreme zero of G {'above' if case_low else 'below'} E: "
        f"{bound:.9g} vs E = {e_float:.9g}"
    )

    if not report.hypotheses_ok:
        report.clauses.setdefault("added_point", SKIPPED)
        report.clauses.setdefault("full_iff", SKIPPED)
        return report

    try:
        ap = added_point_interlace(zp, rel.E, zg, floor)
    except CommonPointError:
        report.hypotheses["e_not_on_g_zero"] = False
        report.clauses["added_point"] = SKIPPED
        report.clauses["full_iff"] = SKIPPED
        return report
    want = "P_below_G" if case_low else "G_below_P"
    if ap.kind == INCONCLUSIVE:
        report.clauses["added_point"] = SKIPPED
    else:
        report.clauses["added_point"] = (
            PASS if ap.kind in ADDED_OK_KINDS and ap.orientation == want else FAIL_CLAUSE
        )

    # Full interlacing of G (degree n+1) onto P (degree n) holds iff E lies
    # outside the zero range of G on the case's side.
    side_bound = zg.min if case_low else zg.max
    side_gap = (side_bound - e_float) if case_low else (e_float - side_bound)
    full = interlaces_down(zg, zp, floor)
    if abs(side_gap) <= floor or full.kind == INCONCLUSIVE:
        report.clauses["full_iff"] = SKIPPED
    else:
        report.clauses["full_iff"] = (
            PASS if (side_gap > 0) == (full.kind == INTERLACE_DOWN) else FAIL_CLAUSE
        )
    return report


def check_down_one(rel: MixedRelation, floor: float = DEFAULT_FLOOR) -> CheckReport:
    """Checker for the shape with G at P's degree and Q one degree below."""
    if rel.shape != DOWN_ONE:
        raise InvalidParameterError(f"check_down_one got shape {rel.shape}")
    report, zg, zq, zp = _base_report(rel, floor)
    e_float = float(rel.E)

    premise = interlaces_down(zg, zq, floor)
    if premise.kind != INTERLACE_DOWN:
        report.premise = premise
        report.notes.append("premise failed: zeros of Q do not interlace below G")
        for name in ("added_point", "full_when_e_above", "full_when_e_below"):
            report.clauses[name] = SKIPPED
        return report
    report.premise_kind, report.premise = "g_then_q", premise

    if not report.hypotheses_ok:
        report.clauses["added_point"] = SKIPPED
        report.clauses["full_when_e_above"] = SKIPPED
        report.clauses["full_when_e_below"] = SKIPPED
        return report

    try:
        ap = added_point_interlace(zp, rel.E, zg, floor)
    except CommonPointError:
        report.hypotheses["e_not_on_g_zero"] = False
        return report
    report.clauses["added_point"] = _verdict_clause(ap, ADDED_OK_KINDS)

    if zg.zeros and e_float > zg.max + floor:
        report.clauses["full_when_e_above"] = _verdict_clause(
            alternates(zp, zg, floor), ALTERNATE
        )
    else:
        report.clauses["full_when_e_above"] = SKIPPED
    if zg.zeros and e_float < zg.min - floor:
        report.clauses["full_when_e_below"] = _verdict_clause(
            alternates(zg, zp, floor), ALTERNATE
        )
    else:
        report.clauses["full_when_e_below"] = SKIPPED
    return report


def _classify_regions(zp: ZeroSet, zg: ZeroSet, floor: float):
    """Counts of P zeros below G, inside each G gap, and above G."""
    below = above = 0
    gaps = [0] * max(len(zg.zeros) - 1, 0)
    ambiguous = False
    g = zg.zeros
    for z in zp.zeros:
        if any(abs(z - x) <= floor for x in g):
            ambiguous = True
            continue
        if z < g[0]:
            below += 1
        elif z > g[-1]:
            above += 1
        else:
            for i in range(len(g) - 1):
                if g[i] < z < g[i + 1]:
                    gaps[i] += 1
                    break
    return below, gaps, above, ambiguous


UP_ONE_CLAUSES = (
    "gap_occupancy",
    "config_enumerated",
    "straddle_added_point",
    "full_when_e_below",
    "full_when_e_above",
    "one_extreme_side",
)


def _enumerated_config(below, gaps, above, kprime) -> str | None:
    """Name of the zero layout if it is one the interior-E case analysis allows."""
    others_one = all(c == 1 for i, c in enumerate(gaps) if i != kprime)
    if below == 0 and above == 0 and gaps[kprime] == 2 and others_one:
        return "pair-in-e-gap"
    if below == 2 and above == 0 and gaps[kprime] == 0 and others_one:
        return "pair-below"
    if below == 0 and above == 2 and gaps[kprime] == 0 and others_one:
        return "pair-above"
    if below == 0 and above == 0 and gaps[kprime] == 0:
        triples = [i for i, c in enumerate(gaps) if c == 3 and i != kprime]
        rest_one = all(
            c == 1 for i, c in enumerate(gaps) if i != kprime and i not in triples
        )
        if len(triples) == 1 and rest_one:
            return "triple-in-one-gap"
    return None


def check_up_one(rel: MixedRelation, floor: float = DEFAULT_FLOOR) -> CheckReport:
    """Checker for the shape with G at P's degree and Q one degree above.

    Clause one (the merged added-point statement with E adjoined to G) is
    asserted only in the straddling configuration; otherwise the observed
    configuration is recorded and matched against the allowed layouts.
    """
    if rel.shape != UP_ONE:
        raise InvalidParameterError(f"check_up_one got shape {rel.shape}")
    report, zg, zq, zp = _base_report(rel, floor)
    e_float = float(rel.E)

    premise = interlaces_down(zq, zg, floor)
    if premise.kind != INTERLACE_DOWN:
        report.premise = premise
        report.notes.append("premise failed: zeros of Q do not interlace above G")
        for name in UP_ONE_CLAUSES:
            report.clauses[name] = SKIPPED
        return report
    report.premise_kind, report.premise = "q_then_g", premise

    if not report.hypotheses_ok:
        for name in UP_ONE_CLAUSES:
            report.clauses[name] = SKIPPED
        return report

    below, gaps, above, ambiguous = _classify_regions(zp, zg, floor)
    report.notes.append(f"zero layout: below={below}, gaps={gaps}, above={above}")
    position, slot = locate_point(e_float, zg, floor)

    occupied = sum(1 for c in gaps if c >= 1)
    n = len(zg.zeros)
    if ambiguous:
        report.clauses["gap_occupancy"] = SKIPPED
    else:
        report.clauses["gap_occupancy"] = PASS if occupied >= n - 2 else FAIL_CLAUSE

    straddle = False
    if ambiguous or position == "unknown":
        report.clauses["config_enumerated"] = SKIPPED
    elif position == "interior":
        kprime = slot - 1
        config = _enumerated_config(below, gaps, above, kprime)
        report.clauses["config_enumerated"] = PASS if config else FAIL_CLAUSE
        if config:
            report.notes.append(f"interior configuration: {config}")
        else:
            report.notes.append("configuration outside the allowed interior layouts")
        if gaps[kprime] == 2:
            g = zg.zeros
            in_gap = [z for z in zp.zeros if g[kprime] < z < g[kprime + 1]]
            left = [z for z in in_gap if z < e_float - floor]
            right = [z for z in in_gap if z > e_float + floor]
            straddle = len(left) == 1 and len(right) == 1
    else:
        expected = (
            below == 1 and above == 0 if position == "below" else below == 0 and above == 1
        )
        layout_ok = expected and all(c == 1 for c in gaps)
        report.clauses["config_enumerated"] = PASS if layout_ok else FAIL_CLAUSE

    if straddle:
        try:
            merged = added_point_interlace(zg, rel.E, zp, floor)
            report.clauses["straddle_added_point"] = _verdict_clause(
                merged, ADDED_OK_KINDS
            )
        except CommonPointError:
            report.clauses["straddle_added_point"] = SKIPPED
    else:
        report.clauses["straddle_added_point"] = SKIPPED

    if position == "below":
        report.clauses["full_when_e_below"] = _verdict_clause(
            alternates(zp, zg, floor), ALTERNATE
        )
    else:
        report.clauses["full_when_e_below"] = SKIPPED
    if position == "above":
        report.clauses["full_when_e_above"] = _verdict_clause(
            alternates(zg, zp, floor), ALTERNATE
        )
    else:
        report.clauses["full_when_e_above"] = SKIPPED

    if position in ("below", "above") and not ambiguous:
        sides = (below > 0, above > 0)
        report.clauses["one_extreme_side"] = PASS if sides.count(True) == 1 else FAIL_CLAUSE
    else:
        report.clauses["one_extreme_side"] = SKIPPED
    return report


SHAPE_CHECKERS = {
    PAIR_UP: check_pair_up,
    DOWN_ONE: check_down_one,
    UP_ONE: check_up_one,
}


def check_relation(rel: MixedRelation, floor: float = DEFAULT_FLOOR) -> CheckReport:
    return SHAPE_CHECKERS[rel.shape](rel, floor)


# ---------------------------------------------------------------------------
# Named checks (the CLI surface)
# ---------------------------------------------------------------------------


CHECK_TO_PAIR = {
    "krawtchouk-3.1": "krawtchouk",
    "meixner-3.2": "meixner",
    "narayana-3.3": "narayana-christoffel",
    "narayana-3.4": "narayana-perturbed",
    "jacobi-3.5": "jacobi-beta",
    "jacobi-3.6": "jacobi-shift",
    "laguerre-3.7": "laguerre",
}

CHECK_IDS = tuple(CHECK_TO_PAIR)


def check_narayana_even_quotient(n: int, floor: float = DEFAULT_FLOOR) -> CheckReport:
    """Even-index branch: P and G share the zero -1, so the reference set is
    the exact quotient of G by (x + 1) and the claim is plain interlacing."""
    rel = _build_narayana_perturbed(n)
    report = CheckReport(
        check_id="narayana-3.4",
        shape=rel.shape,
        params=dict(rel.params),
        e_value=rel.E,
    )
    report.identity_ok = verify_identity(rel)
    report.premise_kind = "even-quotient"
    shared = rel.P.evaluate(Fraction(-1)) == 0 and rel.G.evaluate(Fraction(-1)) == 0
    report.clauses["common_zero_at_minus_one"] = PASS if shared else FAIL_CLAUSE
    quotient, remainder = rel.G.divide_linear(Fraction(-1))
    if remainder != 0:
        report.clauses["quotient_interlace"] = FAIL_CLAUSE
        report.notes.append("reference polynomial not divisible by (x + 1)")
        return report
    zp = zeros_general(rel.P)
    zq = zeros_general(quotient) if quotient.degree >= 1 else ZeroSet(
        (), 0.0, METHOD_COMPANION, quotient
    )
    report.clauses["quotient_interlace"] = _verdict_clause(
        interlaces_down(zp, zq, floor), INTERLACE_DOWN
    )
    report.notes.append("even branch: zeros of P against zeros of G/(x+1)")
    return report


def run_check(
    check_id: str, n: int, params: dict | None = None, floor: float = DEFAULT_FLOOR
) -> CheckReport:
    """Build the relation behind a named check and run its shape checker."""
    if check_id not in CHECK_TO_PAIR:
        raise InvalidParameterError(f"unknown check id {check_id!r}")
    if check_id == "narayana-3.4" and n % 2 == 0:
        return check_narayana_even_quotient(n, floor)
    rel = build_relation(CHECK_TO_PAIR[check_id], n, params)
    report = check_relation(rel, floor)
    report.check_id = check_id
    return report


# ---------------------------------------------------------------------------
# Constructive random oracles
# ---------------------------------------------------------------------------


def _rational_uniform(rng: random.Random, lo: Fraction, hi: Fraction, denom: int = 4096) -> Fraction:
    return lo + (hi - lo) * Fraction(rng.randrange(denom + 1), denom)


def _draw_chain(rng: random.Random, total: int) -> list[Fraction]:
    """Strictly increasing rational points: uniform slots in (-1, 1), jittered."""
    lo, hi = Fraction(-1), Fraction(1)
    step = (hi - lo) / (total + 1)
    jitter = min(Fraction(1, 100), step / 4)
    return [
        lo + step * (i + 1) + _rational_uniform(rng, -jitter, jitter)
        for i in range(total)
    ]


def _support_hull(zero_groups, e: Fraction) -> tuple[float, float]:
    values = [float(z) for group in zero_groups for z in group] + [float(e)]
    return min(values) - 1.0, max(values) + 1.0


def assemble_pair_up(
    g_zeros, q_zeros, e: Fraction, require_positive_a: bool = True
) -> MixedRelation | None:
    """Build a pair-up relation from explicit zero sets and an added point.

    B is the monic-negative linear polynomial whose constant kills the top
    two coefficients of B*G + (x-E)*Q, leaving a degree-n combination; its
    leading coefficient becomes the constant A and P is the monic quotient.
    Returns None on a degenerate draw (degree collapse, A of the wrong sign
    when one is required, or B(E) = 0).
    """
    n = len(g_zeros) - 1
    G = Polynomial.from_roots(g_zeros)
    Q = Polynomial.from_roots(q_zeros)
    g1 = G.coeffs[n]
    q1 = Q.coeffs[n]
    b_const = g1 - q1 + e
    B = Polynomial([b_const, -1])
    if B.evaluate(e) == 0:
        return None
    H = monic_linear(e)
    combo = B * G + H * Q
    if combo.degree != n:
        return None
    a_const = combo.leading_coefficient
    if require_positive_a and a_const <= 0:
        return None
    P = combo.scale(1 / a_const)
    return MixedRelation(
        rel_id="oracle-pair-up",
        shape=PAIR_UP,
        sign=1,
        A=Polynomial.constant(a_const),
        B=B,
        H=H,
        E=e,
        P=P,
        G=G,
        Q=Q,
        support=_support_hull((g_zeros, q_zeros), e),
        params={"n": n},
    )


def oracle_pair_up(
    n: int,
    seed: int,
    orientation: str | None = None,
    force_e: str | None = None,
    max_tries: int = 64,
) -> MixedRelation:
    """Random verified pair-up instance; seed-deterministic.

    ``orientation`` pins which of the two alternation directions the G and Q
    draws satisfy ("q_below_g" or "g_below_q"); ``force_e="above_max"``
    places E above every zero of G and disables the positive-A resample,
    which is how the impossible-region property is exercised.
    """
    rng = random.Random(f"pair-up:{n}:{seed}:{orientation}:{force_e}")
    for _ in range(max_tries):
        orient = orientation or rng.choice(("q_below_g", "g_below_q"))
        pts = _draw_chain(rng, 2 * (n + 1))
        if orient == "q_below_g":
            q_zeros, g_zeros = pts[0::2], pts[1::2]
        else:
            g_zeros, q_zeros = pts[0::2], pts[1::2]
        if force_e == "above_max":
            e = g_zeros[-1] + _rational_uniform(rng, Fraction(1, 20), Fraction(1, 2))
        else:
            e = _rational_uniform(rng, Fraction(-6, 5), Fraction(6, 5))
            if min(abs(e - g) for g in g_zeros) < Fraction(1, 100):
                continue
        rel = assemble_pair_up(g_zeros, q_zeros, e, require_positive_a=force_e is None)
        if rel is not None:
            rel.params.update({"seed": seed, "orientation": orient, "forced": force_e})
            return rel
    raise DegenerateDrawError(f"pair-up oracle exhausted retries at n={n}, seed={seed}")


def assemble_down_one(g_zeros, q_zeros, e: Fraction, b_const: Fraction) -> MixedRelation | None:
    """Build a down-one relation with a constant B > 1 from explicit zeros."""
    n = len(g_zeros)
    G = Polynomial.from_roots(g_zeros)
    Q = Polynomial.from_roots(q_zeros)
    if b_const == 0:
        return None
    H = monic_linear(e)
    combo = G.scale(b_const) - H * Q
    if combo.degree != n:
        return None
    a_const = combo.leading_coefficient
    if a_const <= 0:
        return None
    P = combo.scale(1 / a_const)
    return MixedRelation(
        rel_id="oracle-down-one",
        shape=DOWN_ONE,
        sign=-1,
        A=Polynomial.constant(a_const),
        B=Polynomial.constant(b_const),
        H=H,
        E=e,
        P=P,
        G=G,
        Q=Q,
        support=_support_hull((g_zeros, q_zeros), e),
        params={"n": n},
    )


def _draw_e(rng: random.Random, g_zeros, e_region: str | None) -> Fraction | None:
    if e_region == "below":
        return g_zeros[0] - _rational_uniform(rng, Fraction(1, 20), Fraction(1, 2))
    if e_region == "above":
        return g_zeros[-1] + _rational_uniform(rng, Fraction(1, 20), Fraction(1, 2))
    if e_region == "interior":
        if len(g_zeros) < 2:
            return None
        k = rng.randrange(len(g_zeros) - 1)
        return g_zeros[k] + (g_zeros[k + 1] - g_zeros[k]) * _rational_uniform(
            rng, Fraction(1, 4), Fraction(3, 4)
        )
    e = _rational_uniform(rng, Fraction(-6, 5), Fraction(6, 5))
    if min(abs(e - g) for g in g_zeros) < Fraction(1, 100):
        return None
    return e


def oracle_down_one(
    n: int,
    seed: int,
    e_region: str | None = None,
    max_tries: int = 64,
) -> MixedRelation:
    """Random verified down-one instance; seed-deterministic.

    ``e_region`` pins E below all zeros of G, inside a gap, or above all.
    """
    if n < 1:
        raise InvalidParameterError("down-one oracle needs n >= 1")
    rng = random.Random(f"down-one:{n}:{seed}:{e_region}")
    for _ in range(max_tries):
        pts = _draw_chain(rng, 2 * n - 1)
        g_zeros, q_zeros = pts[0::2], pts[1::2]
        e = _draw_e(rng, g_zeros, e_region)
        if e is None:
            continue
        b_const = _rational_uniform(rng, Fraction(6, 5), Fraction(3))
        rel = assemble_down_one(g_zeros, q_zeros, e, b_const)
        if rel is not None:
            rel.params.update({"seed": seed, "e_region": e_region})
            return rel
    raise DegenerateDrawError(f"down-one oracle exhausted retries at n={n}, seed={seed}")


def assemble_up_one(g_zeros, q_zeros, e: Fraction) -> MixedRelation | None:
    """Build an up-one relation with constant A = 1 and monic quadratic B."""
    n = len(g_zeros)
    G = Polynomial.from_roots(g_zeros)
    Q = Polynomial.from_roots(q_zeros)

    def coeff(poly: Polynomial, k: int) -> Fraction:
        return poly.coeffs[k] if 0 <= k < len(poly.coeffs) else Fraction(0)

    g1, g2 = coeff(G, n - 1), coeff(G, n - 2)
    q1, q2 = coeff(Q, n), coeff(Q, n - 1)
    b1 = q1 - e - g1
    b0 = 1 - g2 - b1 * g1 + q2 - e * q1
    B = Polynomial([b0, b1, 1])
    if B.evaluate(e) == 0:
        return None
    H = monic_linear(e)
    combo = B * G - H * Q
    if combo.degree != n or combo.leading_coefficient != 1:
        return None
    return MixedRelation(
        rel_id="oracle-up-one",
        shape=UP_ONE,
        sign=-1,
        A=Polynomial.constant(Fraction(1)),
        B=B,
        H=H,
        E=e,
        P=combo,
        G=G,
        Q=Q,
        support=_support_hull((g_zeros, q_zeros), e),
        params={"n": n},
    )


def oracle_up_one(
    n: int,
    seed: int,
    e_region: str | None = None,
    max_tries: int = 64,
) -> MixedRelation:
    """Random verified up-one instance whose P is confirmed real rooted."""
    if n < 2:
        raise InvalidParameterError("up-one oracle needs n >= 2")
    rng = random.Random(f"up-one:{n}:{seed}:{e_region}")
    for _ in range(max_tries):
        pts = _draw_chain(rng, 2 * n + 1)
        q_zeros, g_zeros = pts[0::2], pts[1::2]
        e = _draw_e(rng, g_zeros, e_region)
        if e is None:
            continue
        rel = assemble_up_one(g_zeros, q_zeros, e)
        if rel is None:
            continue
        try:
            zeros_general(rel.P)
        except Exception:
            continue  # P picked up a complex pair; hypotheses unmet, redraw
        rel.params.update({"seed": seed, "e_region": e_region})
        return rel
    raise DegenerateDrawError(f"up-one oracle exhausted retries at n={n}, seed={seed}")
