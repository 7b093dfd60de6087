"""Closed-form upper bounds for |a2 a4 - a3^2| via a reduced quadratic.

For every class the bound comes out as T * max over t in [0, 4] of
P t^2 + Q t + R, where (P, Q, R, T) depend only on the target coefficients
and the class parameters.  The maximum splits into three regions:

  caseR        Q <= 0 and P <= -Q/4          -> R
  case16P4QR   Q >= 0, P >= -Q/8  or
               Q <= 0, P >= -Q/4             -> 16P + 4Q + R
  caseVertex   Q > 0 and P <= -Q/8           -> (4PR - Q^2) / (4P)

On region boundaries the values coincide and the first matching region in
the order above is reported.  ``robust_quad_max`` recomputes the same
maximum by endpoint/vertex enumeration with no region logic; the reported
bound always comes from the robust path, the branch logic is kept for
labelling and cross-validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .classes import ClassSpec

CASE_R = "caseR"
CASE_ENDPOINT = "case16P4QR"
CASE_VERTEX = "caseVertex"
BRANCHES = (CASE_R, CASE_ENDPOINT, CASE_VERTEX)


@dataclass(frozen=True)
class QuadraticProfile:
    """Reduced-quadratic data (P, Q, R, T) plus the intermediate weights."""

    P: float
    Q: float
    R: float
    T: float
    d1: float
    d2: float
    d3: float
    d4: float

    def __post_init__(self) -> None:
        if not self.R > 0:
            raise ValueError(f"R must be positive, got {self.R!r}")
        if not self.T > 0:
            raise ValueError(f"T must be positive, got {self.T!r}")


@dataclass(frozen=True)
class BoundResult:
    """The bound, which region produced it, and the backing data."""

    bound: float
    branch: str
    profile: QuadraticProfile
    closed_form_value: float
    spec: ClassSpec


def profile(spec: ClassSpec) -> QuadraticProfile:
    """Exact (P, Q, R, T, d1..d4) for the class; uses |B2|, |B3| where the
    closed forms do."""
    b1, b2, b3 = spec.phi.b1, spec.phi.b2, spec.phi.b3
    ab2, ab3 = abs(b2), abs(b3)
    if spec.kind == "starlike":
        d1 = 8.0 * b1
        d2 = 2.0 * (b2 - b1)
        d3 = -6.0 * b1
        d4 = -0.5 * b1**3 + 0.5 * b1 - b2 + 2.0 * b3 - 1.5 * b2 * b2 / b1
        T = b1 / 96.0
        P = 0.25 * (-2.0 * b1**3 + 8.0 * ab3 - 6.0 * b2 * b2 / b1 - ab2 - 0.5 * b1)
        Q = 4.0 * (ab2 - b1)
        R = 24.0 * b1
    elif spec.kind == "convex":
        d1 = 8.0 * b1
        d2 = (2.0 / 3.0) * (b1 * b1 - 4.0 * b1 + 4.0 * b2)
        d3 = -16.0 * b1 / 3.0
        d4 = (
            -(4.0 / 3.0) * b2
            + (2.0 / 3.0) * b1
            - (1.0 / 3.0) * b1**3
            - (1.0 / 3.0) * b1 * b1
            + (1.0 / 3.0) * b1 * b2
            + 2.0 * b3
            - (4.0 / 3.0) * b2 * b2 / b1
        )
        T = b1 / 768.0
        P = (1.0 / 3.0) * (
            -(b1**3) + b1 * ab2 + 6.0 * ab3 - 4.0 * b2 * b2 / b1 - b1 * b1 - 4.0 * ab2 - 2.0 * b1
        )
        Q = (4.0 / 3.0) * (b1 * b1 + 4.0 * ab2 - 2.0 * b1)
        R = 64.0 * b1 / 3.0
    elif spec.kind == "rgt":
        p = spec.p
        g = spec.gamma
        r = b2 / b1
        d1 = 4.0
        d2 = -4.0 * (1.0 - r + p * (r - 1.0))
        d3 = -4.0 * p
        d4 = 1.0 - 2.0 * r - p * (r - 1.0) ** 2 + b3 / b1
        T = abs(spec.tau) ** 2 * b1 * b1 / (128.0 * (1 + g) * (1 + 3 * g))
        P = abs(b3 / b1 - p * r * r) - (1.0 - p) * (2.0 * abs(r) + 1.0)
        Q = 4.0 * (2.0 * abs(r) * (1.0 - p) + 1.0 - 2.0 * p)
        R = 16.0 * p
    elif spec.kind == "galpha":
        p = spec.p
        a = spec.alpha
        d1 = 4.0 * (1 + a) * b1
        d2 = 2.0 * (
            -2.0 * (1 + a) * b1 + 3.0 * a * b1 * b1 + 2.0 * (1 + a) * b2 - 2.0 * p * (a * b1 * b1 - b1 + b2)
        )
        d3 = -4.0 * p * b1
        d4 = (
            -3.0 * a * b1 * b1
            + a * (2 * a - 1) * b1**3
            + b1 * (1 + a)
            + 3.0 * a * b1 * b2
            + (1 + a) * (b3 - 2.0 * b2)
            - p * (a * b1 * b1 - b1 + b2) ** 2 / b1
        )
        T = b1 / (128.0 * (1 + a) * (1 + 2 * a))
        P = (
            b1**3 * a * (2 * a - 1 - p * a)
            + a * b1 * ab2 * (3 - 2 * p)
            - b1 * b1 * a * (3 - 2 * p)
            + (a + 1) * ab3
            - (1 + a - p) * (2.0 * ab2 + b1)
            - p * b2 * b2 / b1
        )
        Q = 4.0 * (b1 * b1 * a * (3 - 2 * p) + 2.0 * ab2 * (1 + a - p) + b1 * (1 + a - 2 * p))
        R = 16.0 * p * b1
    else:  # pragma: no cover - ClassSpec already validates the kind
        raise ValueError(f"unknown class kind {spec.kind!r}")
    return QuadraticProfile(P=P, Q=Q, R=R, T=T, d1=d1, d2=d2, d3=d3, d4=d4)


def quad_max(P: float, Q: float, R: float) -> tuple[float, str]:
    """Maximum of P t^2 + Q t + R over t in [0, 4], with its region label."""
    if Q <= 0 and P <= -Q / 4:
        return R, CASE_R
    if (Q >= 0 and P >= -Q / 8) or (Q <= 0 and P >= -Q / 4):
        return 16.0 * P + 4.0 * Q + R, CASE_ENDPOINT
    # remaining region: Q > 0 and P <= -Q/8, hence P < 0 and 4P != 0
    assert Q > 0 and P < 0
    return (4.0 * P * R - Q * Q) / (4.0 * P), CASE_VERTEX


def robust_quad_max(P: float, Q: float, R: float) -> float:
    """The same maximum by candidate enumeration: endpoints plus an interior
    critical point when there is one."""
    best = max(R, 16.0 * P + 4.0 * Q + R)
    if P != 0:
        t = -Q / (2.0 * P)
        if 0.0 < t < 4.0:
            best = max(best, (P * t + Q) * t + R)
    return best


def _closed_form(spec: ClassSpec, branch: str) -> float:
    """The branch value written in closed form straight from the target data."""
    b1 = spec.phi.b1
    ab2, ab3 = abs(spec.phi.b2), abs(spec.phi.b3)
    b2sq = spec.phi.b2 ** 2
    if spec.kind == "starlike":
        if branch == CASE_R:
            return b1 * b1 / 4.0
        if branch == CASE_ENDPOINT:
            return (-4.0 * b1**4 + 16.0 * b1 * ab3 - 12.0 * b2sq + 6.0 * b1 * ab2 + 3.0 * b1 * b1) / 48.0
        num = 12.0 * b1**4 - 48.0 * b1 * ab3 + 40.0 * b2sq - 2.0 * b1 * ab2 + 7.0 * b1 * b1
        den = 4.0 * b1**4 - 16.0 * b1 * ab3 + 12.0 * b2sq + 2.0 * b1 * ab2 + b1 * b1
        return (b1 * b1 / 12.0) * num / den
    if spec.kind == "convex":
        if branch == CASE_R:
            return b1 * b1 / 36.0
        if branch == CASE_ENDPOINT:
            return (-(b1**4) + b1 * b1 * ab2 + 6.0 * b1 * ab3 - 4.0 * b2sq) / 144.0
        num = (
            17.0 * b1**4
            - 8.0 * b1 * b1 * ab2
            - 96.0 * b1 * ab3
            + 80.0 * b2sq
            + 12.0 * b1**3
            + 48.0 * b1 * ab2
            + 36.0 * b1 * b1
        )
        den = b1**4 - b1 * b1 * ab2 - 6.0 * b1 * ab3 + 4.0 * b2sq + b1**3 + 4.0 * b1 * ab2 + 2.0 * b1 * b1
        return (b1 * b1 / 576.0) * num / den
    if spec.kind == "rgt":
        p = spec.p
        g = spec.gamma
        t2 = abs(spec.tau) ** 2
        m = abs(b1 * spec.phi.b3 - p * b2sq)
        if branch == CASE_R:
            return t2 * b1 * b1 / (9.0 * (1 + 2 * g) ** 2)
        if branch == CASE_ENDPOINT:
            return t2 * m / (8.0 * (1 + g) * (1 + 3 * g))
        num = 4.0 * p * m - 4.0 * (1 - p) * b1 * (ab2 + p * b1) - 4.0 * b2sq * (1 - p) ** 2 - b1 * b1 * (1 - 2 * p) ** 2
        den = m - (1 - p) * b1 * (2.0 * ab2 + b1)
        return (t2 * b1 * b1 / (32.0 * (1 + g) * (1 + 3 * g))) * num / den
    # galpha
    p = spec.p
    a = spec.alpha
    if branch == CASE_R:
        return b1 * b1 / (9.0 * (1 + a) ** 2)
    if branch == CASE_ENDPOINT:
        return (
            b1**4 * a * (2 * a - 1 - p * a)
            + a * b1 * b1 * ab2 * (3 - 2 * p)
            + (a + 1) * b1 * ab3
            - p * b2sq
        ) / (8.0 * (1 + a) * (1 + 2 * a))
    qline = b1 * b1 * a * (3 - 2 * p) + 2.0 * ab2 * (1 + a - p) + b1 * (1 + a - 2 * p)
    den = (
        b1**4 * a * (2 * a - 1 - p * a)
        + a * b1 * b1 * ab2 * (3 - 2 * p)
        - b1**3 * a * (3 - 2 * p)
        + (a + 1) * b1 * ab3
        - (1 + a - p) * b1 * (2.0 * ab2 + b1)
        - p * b2sq
    )
    return (b1 * b1 / (32.0 * (1 + a) * (1 + 2 * a))) * (4.0 * p - qline * qline / den)


def second_hankel_bound(spec: ClassSpec) -> BoundResult:
    """The closed-form upper bound for |a2 a4 - a3^2| over the class."""
    prof = profile(spec)
    branch_value, branch = quad_max(prof.P, prof.Q, prof.R)
    bound = prof.T * robust_quad_max(prof.P, prof.Q, prof.R)
    closed = _closed_form(spec, branch)
    assert math.isclose(prof.T * branch_value, bound, rel_tol=1e-9, abs_tol=1e-15)
    assert math.isclose(closed, bound, rel_tol=1e-9, abs_tol=1e-12)
    return BoundResult(bound=bound, branch=branch, profile=prof, closed_form_value=closed, spec=spec)
