"""Independent brute-force verification of the closed-form bounds.

The coefficients (c1, c2, c3) of every positive-real-part function are
reachable as

    c1 = c in [0, 2]      (after rotation)
    2 c2 = c^2 + x (4 - c^2)
    4 c3 = c^3 + 2 (4-c^2) c x - c (4-c^2) x^2 + 2 (4-c^2) (1-|x|^2) z

with |x| <= 1 and |z| <= 1, so maximising |a2 a4 - a3^2| over a grid in
(c, x, z) gives a certified lower estimate of the true supremum, to be held
against the closed-form bound.  The functional is affine in z at fixed
(c, x), so z is sampled on the unit circle only; x is sampled on concentric
rings including |x| = 1, where the extremal configurations live.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bounds import second_hankel_bound
from .classes import ClassSpec, coefficient_arrays

DEFAULT_GRID = (64, 32, 64)
DEFAULT_MU_GRID = (64, 64)
DEFAULT_SEED = 1729
_MIN_GRID = 8


@dataclass(frozen=True)
class CaratheodoryPoint:
    """A point of the (c, x, z) parameter domain; mu tracks |x|."""

    c: float
    x: complex
    z: complex
    mu: float = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if not 0.0 <= self.c <= 2.0:
            raise ValueError(f"c must lie in [0, 2], got {self.c!r}")
        if abs(self.x) > 1.0 + 1e-12:
            raise ValueError(f"|x| must be at most 1, got {abs(self.x)!r}")
        if abs(self.z) > 1.0 + 1e-12:
            raise ValueError(f"|z| must be at most 1, got {abs(self.z)!r}")
        mu = abs(self.x) if self.mu is None else float(self.mu)
        if not 0.0 <= mu <= 1.0 + 1e-12:
            raise ValueError(f"mu must lie in [0, 1], got {mu!r}")
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(self, "x", complex(self.x))
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "mu", min(mu, 1.0))


@dataclass(frozen=True)
class VerificationReport:
    """Grid supremum versus closed-form bound, with the winning point."""

    empirical_sup: float
    bound: float
    argmax: CaratheodoryPoint
    margin: float
    grid_sizes: tuple[int, int, int]
    monotonicity_violations: int


def expand_arrays(c, x, z):
    """(c1, c2, c3) from grid arrays of c, x, z; broadcasts like numpy.

    The z weight is written (1 - |x|)(1 + |x|) so it vanishes exactly on the
    unit circle whenever |x| is exactly representable.
    """
    s = 4.0 - c * c
    ax = np.abs(x)
    c1 = c + 0j
    c2 = 0.5 * (c * c + x * s)
    c3 = 0.25 * (c * c * c + 2.0 * s * c * x - c * s * x * x + 2.0 * s * (1.0 - ax) * (1.0 + ax) * z)
    return c1, c2, c3


def caratheodory_expand(point: CaratheodoryPoint):
    """The coefficients (c1, c2, c3) encoded by a parameter point."""
    c1, c2, c3 = expand_arrays(point.c, point.x, point.z)
    return complex(c1), complex(c2), complex(c3)


def _affine_parts(spec: ClassSpec, c: float, x: np.ndarray):
    """h0 and hz with a2 a4 - a3^2 = h0 + hz * z along the z circle."""
    s = 4.0 - c * c
    ax = np.abs(x)
    c2 = 0.5 * (c * c + x * s)
    c3_base = 0.25 * (c**3 + 2.0 * s * c * x - c * s * x * x)
    c3_slope = 0.5 * s * (1.0 - ax) * (1.0 + ax)
    a2, a3, a4 = coefficient_arrays(spec, complex(c), c2, c3_base)
    h0 = a2 * a4 - a3 * a3
    b2, b3, b4 = coefficient_arrays(spec, complex(c), c2, c3_base + c3_slope)
    hz = (b2 * b4 - b3 * b3) - h0
    return h0, hz


def empirical_sup(spec: ClassSpec, grid: tuple[int, int, int] = DEFAULT_GRID) -> VerificationReport:
    """Maximum of |a2 a4 - a3^2| over the parameter grid, with its margin
    against the closed-form bound.

    ``grid`` is (n_c, n_r, n_theta): points along c in [0, 2], rings of the
    x disk, and angles both for the rings and for the z circle.
    """
    n_c, n_r, n_t = (int(v) for v in grid)
    if min(n_c, n_r, n_t) < _MIN_GRID:
        raise ValueError(f"grid too small: need at least {_MIN_GRID} points per axis")
    c_values = np.linspace(0.0, 2.0, n_c)
    radii = np.linspace(0.0, 1.0, n_r)
    angles = np.exp(2j * np.pi * np.arange(n_t) / n_t)
    x_points = (radii[:, None] * angles[None, :]).ravel()
    z_points = angles

    best_value = -1.0
    best = (0, 0, 0)
    for ic, c in enumerate(c_values):
        h0, hz = _affine_parts(spec, float(c), x_points)
        values = np.abs(h0[:, None] + hz[:, None] * z_points[None, :])
        ix, iz = np.unravel_index(int(np.argmax(values)), values.shape)
        if values[ix, iz] > best_value:
            best_value = float(values[ix, iz])
            best = (ic, int(ix), int(iz))
    argmax = CaratheodoryPoint(
        c=float(c_values[best[0]]), x=complex(x_points[best[1]]), z=complex(z_points[best[2]])
    )
    bound = second_hankel_bound(spec).bound
    violations = check_mu_monotone(spec)
    return VerificationReport(
        empirical_sup=best_value,
        bound=bound,
        argmax=argmax,
        margin=bound - best_value,
        grid_sizes=(n_c, n_r, n_t),
        monotonicity_violations=violations,
    )


def majorant_surface(spec: ClassSpec, c, mu):
    """The intermediate majorant F(c, mu) each bound is maximised through.

    For real parameters with aligned signs the signed functional never
    exceeds this surface, and for fixed c it is non-decreasing in mu, which
    is what pins the maximisation to mu = 1.  Broadcasts over numpy arrays.
    """
    b1, b2, b3 = spec.phi.b1, spec.phi.b2, spec.phi.b3
    ab2, ab3 = abs(b2), abs(b3)
    c = np.asarray(c, dtype=float)
    mu = np.asarray(mu, dtype=float)
    s = 4.0 - c * c
    c2 = c * c
    c4 = c2 * c2
    if spec.kind == "starlike":
        T = b1 / 96.0
        quartic = -2.0 * b1**3 + 8.0 * ab3 - 6.0 * b2 * b2 / b1
        return T * (
            0.25 * c4 * quartic
            + 4.0 * b1 * c * s
            + ab2 * s * mu * c2
            + 0.5 * b1 * mu * mu * s * (c - 6.0) * (c - 2.0)
        )
    if spec.kind == "convex":
        T = b1 / 768.0
        quartic = -(b1**3) + b1 * ab2 + 6.0 * ab3 - 4.0 * b2 * b2 / b1
        return T * (
            (c4 / 3.0) * quartic
            + 4.0 * b1 * c * s
            + (mu * c2 * s / 3.0) * (b1 * b1 + 4.0 * ab2)
            + (2.0 * b1 / 3.0) * mu * mu * s * (c - 4.0) * (c - 2.0)
        )
    if spec.kind == "rgt":
        p = spec.p
        g = spec.gamma
        T = abs(spec.tau) ** 2 * b1 * b1 / (128.0 * (1 + g) * (1 + 3 * g))
        r = b2 / b1
        return T * (
            c4 * abs(b3 / b1 - p * r * r)
            + 2.0 * c * s
            + 2.0 * mu * abs(r) * c2 * s * (1.0 - p)
            + mu * mu * s * (1.0 - p) * (c - 2.0) * (c - 2.0 * p / (1.0 - p))
        )
    # galpha
    p = spec.p
    a = spec.alpha
    T = b1 / (128.0 * (1 + a) * (1 + 2 * a))
    quartic = (
        b1**3 * a * (2 * a - 1 - p * a)
        + a * b1 * ab2 * (3 - 2 * p)
        + (a + 1) * ab3
        - p * b2 * b2 / b1
    )
    return T * (
        c4 * quartic
        + 2.0 * c * s * b1 * (1 + a)
        + mu * c2 * s * (b1 * b1 * a * (3 - 2 * p) + 2.0 * ab2 * (1 + a - p))
        + mu * mu * s * b1 * (1 + a - p) * (c - 2.0) * (c - 2.0 * p / (1 + a - p))
    )


def check_mu_monotone(spec: ClassSpec, grid: tuple[int, int] = DEFAULT_MU_GRID) -> int:
    """Count strict decreases of the majorant along mu at fixed c; expected 0.

    At c = 2 the surface is constant in mu (every 4 - c^2 factor vanishes),
    which is not a violation; the comparison is non-strict with a tiny slack.
    """
    n_c, n_mu = (int(v) for v in grid)
    c = np.linspace(0.0, 2.0, n_c)[:, None]
    mu = np.linspace(0.0, 1.0, n_mu)[None, :]
    surface = majorant_surface(spec, c, mu)
    scale = max(1.0, float(np.max(np.abs(surface))))
    drops = np.diff(surface, axis=1) < -1e-12 * scale
    return int(np.count_nonzero(drops))


def _disk_samples(rng: np.random.Generator, count: int) -> np.ndarray:
    radius = np.sqrt(rng.uniform(0.0, 1.0, count))
    angle = rng.uniform(0.0, 2.0 * np.pi, count)
    return radius * np.exp(1j * angle)


def check_caratheodory_bounds(samples: int, seed: int = DEFAULT_SEED) -> tuple[float, float]:
    """Max |c2| and |c3| over random parameter points; both must stay <= 2."""
    if samples < 1:
        raise ValueError("samples must be at least 1")
    rng = np.random.default_rng(seed)
    c = rng.uniform(0.0, 2.0, samples)
    x = _disk_samples(rng, samples)
    z = _disk_samples(rng, samples)
    # boundary configurations known to reach |c2| = |c3| = 2 ride along
    c = np.concatenate([c, [2.0, 0.0]])
    x = np.concatenate([x, [0.25 + 0.5j, 1.0 + 0j]])
    z = np.concatenate([z, [0.5j, -1.0 + 0j]])
    _, c2, c3 = expand_arrays(c, x, z)
    return float(np.max(np.abs(c2))), float(np.max(np.abs(c3)))
