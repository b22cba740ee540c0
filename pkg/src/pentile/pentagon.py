"""Spherical trigonometry of the almost equilateral pentagon.

The pentagon has corners alpha, beta, delta, epsilon, gamma in counterclockwise
order, four edges of length a, and the long edge b between delta and epsilon.
Its existence for prescribed angles reduces to three trigonometric identities;
the edge walk around the pentagon is a product of rotation matrices, which
both determines b and certifies closure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .angle import Angle, AngleLike, radians

TWO_PI = 2.0 * math.pi


class PentagonError(ValueError):
    pass


class Indeterminate(PentagonError):
    """The equation degenerates (symmetric pentagon) and fixes nothing."""


class NoPentagon(PentagonError):
    """The prescribed data admits no spherical pentagon."""


class NotClosed(PentagonError):
    """The edge-walk rotation product does not close up."""


def yrot(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])


def zrot(theta: float) -> np.ndarray:
    c, s = math.cos(theta), math.sin(theta)
    return np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])


@dataclass
class PentagonSpec:
    """Angles (radians or exact), edge lengths, and orientation sign."""

    alpha: AngleLike
    beta: AngleLike
    gamma: AngleLike
    delta: AngleLike
    epsilon: AngleLike
    a: float
    b: float | None = None
    orientation: int = +1

    @property
    def angles(self) -> tuple[float, float, float, float, float]:
        return (radians(self.alpha), radians(self.beta), radians(self.gamma),
                radians(self.delta), radians(self.epsilon))

    def angle(self, label: str) -> float:
        return radians(getattr(self, label))

    def to_json(self) -> dict:
        out = {}
        for name in ("alpha", "beta", "gamma", "delta", "epsilon"):
            val = getattr(self, name)
            out[name] = val.to_json() if isinstance(val, Angle) else radians(val)
        out["a"] = self.a
        if self.b is not None:
            out["b"] = self.b
        out["orientation"] = "+" if self.orientation >= 0 else "-"
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "PentagonSpec":
        def val(x):
            return Angle(x["num"], x["den"]) if isinstance(x, dict) else float(x)
        return cls(val(obj["alpha"]), val(obj["beta"]), val(obj["gamma"]),
                   val(obj["delta"]), val(obj["epsilon"]),
                   a=float(obj["a"]), b=float(obj["b"]) if "b" in obj else None,
                   orientation=+1 if obj.get("orientation", "+") == "+" else -1)


@dataclass
class Residuals3:
    """Left-hand sides of the three existence identities."""

    r1: float
    r2: float
    r3: float

    @property
    def max_abs(self) -> float:
        return max(abs(self.r1), abs(self.r2), abs(self.r3))


def eq1_bracket(alpha, beta, gamma, delta, epsilon) -> float:
    """The bracketed factor of the first identity (without the cosine factor)."""
    return (((1 - math.cos(beta)) * math.sin(delta - alpha / 2)
             - (1 - math.cos(gamma)) * math.sin(epsilon - alpha / 2))
            * math.sin((delta - epsilon) / 2)
            - (1 - math.cos(beta - gamma)) * math.sin(alpha / 2)
            * math.sin((delta + epsilon) / 2))


def eq1_residual(alpha, beta, gamma, delta, epsilon) -> float:
    return eq1_bracket(alpha, beta, gamma, delta, epsilon) \
        * math.cos((delta + epsilon - alpha) / 2)


def eq10_residual(alpha, beta, gamma, delta, epsilon) -> float:
    """Replacement identity when delta+epsilon-alpha is an odd multiple of pi."""
    return (math.cos(beta / 2) * math.cos(delta)
            * math.sin(gamma / 2) * math.sin(epsilon)
            - math.sin(beta / 2) * math.sin(delta)
            * math.cos(gamma / 2) * math.cos(epsilon))


def angle_equation_residual(alpha, beta, gamma, delta, epsilon,
                            branch_tol: float = 1e-9) -> float:
    """First identity, switching to the degenerate branch when its cosine
    factor vanishes (in which case the first identity holds trivially)."""
    if abs(math.cos((delta + epsilon - alpha) / 2)) < branch_tol:
        return eq10_residual(alpha, beta, gamma, delta, epsilon)
    return eq1_residual(alpha, beta, gamma, delta, epsilon)


def existence_residuals(angles, a: float) -> Residuals3:
    """Evaluate the three existence identities literally as stated."""
    alpha, beta, gamma, delta, epsilon = (radians(x) for x in angles)
    r1 = eq1_residual(alpha, beta, gamma, delta, epsilon)
    half = math.sin(alpha / 2) * math.sin((beta - gamma) / 2)
    cde = math.cos((delta + epsilon - alpha) / 2)
    r2 = (half * (math.sin(beta / 2) * math.sin(delta) * math.cos(a)
                  - math.cos(beta / 2) * math.cos(delta))
          + math.sin(gamma / 2) * math.sin((delta - epsilon) / 2) * cde)
    r3 = (half * (math.sin(gamma / 2) * math.sin(epsilon) * math.cos(a)
                  - math.cos(gamma / 2) * math.cos(epsilon))
          + math.sin(beta / 2) * math.sin((delta - epsilon) / 2) * cde)
    return Residuals3(r1, r2, r3)


def solve_a_from_eq2(angles, degenerate_tol: float = 1e-12) -> float:
    """Edge length a from the second identity.

    Raises Indeterminate when the equation vanishes identically (beta = gamma,
    or a degenerate sine factor) and NoPentagon when |cos a| >= 1.
    """
    alpha, beta, gamma, delta, epsilon = (radians(x) for x in angles)
    denom = (math.sin(alpha / 2) * math.sin((beta - gamma) / 2)
             * math.sin(beta / 2) * math.sin(delta))
    if abs(denom) < degenerate_tol:
        raise Indeterminate(
            "second identity degenerates (symmetric pentagon or angle in Z*pi)")
    numer = (math.cos(beta / 2) * math.cos(delta)
             * math.sin(alpha / 2) * math.sin((beta - gamma) / 2)
             - math.sin(gamma / 2) * math.sin((delta - epsilon) / 2)
             * math.cos((delta + epsilon - alpha) / 2))
    cos_a = numer / denom
    if abs(cos_a) >= 1.0:
        raise NoPentagon(f"|cos a| = {abs(cos_a):.6f} >= 1")
    return math.acos(cos_a)


def closure_matrix(angles, a: float) -> np.ndarray:
    """The product K whose middle entry is 1 exactly when the pentagon closes,
    in which case Y(b) = K^T for a unique length b mod 2*pi."""
    alpha, beta, gamma, delta, epsilon = (radians(x) for x in angles)
    return (zrot(math.pi - epsilon) @ yrot(a) @ zrot(math.pi - gamma)
            @ yrot(a) @ zrot(math.pi - alpha) @ yrot(a)
            @ zrot(math.pi - beta) @ yrot(a) @ zrot(math.pi - delta))


def solve_b_closure(angles, a: float, tol: float = 1e-9) -> float:
    """Edge length b mod 2*pi closing the four a-edges, or NotClosed."""
    k = closure_matrix(angles, a)
    if abs(k[1, 1] - 1.0) > tol:
        raise NotClosed(f"|K22 - 1| = {abs(k[1, 1] - 1.0):.3e} > {tol}")
    b = math.atan2(k[2, 0], k[0, 0]) % TWO_PI
    return b


def rotation_closure_residual(spec: PentagonSpec) -> float:
    """Frobenius distance of the five-edge rotation walk from the identity."""
    alpha, beta, gamma, delta, epsilon = spec.angles
    if spec.b is None:
        raise PentagonError("spec has no edge length b")
    prod = (yrot(spec.a) @ zrot(math.pi - alpha) @ yrot(spec.a)
            @ zrot(math.pi - beta) @ yrot(spec.a) @ zrot(math.pi - delta)
            @ yrot(spec.b) @ zrot(math.pi - epsilon) @ yrot(spec.a)
            @ zrot(math.pi - gamma))
    return float(np.linalg.norm(prod - np.eye(3)))


def isosceles_base_angle(apex: float, leg: float) -> float:
    """Base angle of the spherical isosceles triangle with given apex angle
    and leg length: cos(leg) = cot(apex/2) * cot(base)."""
    return math.atan2(1.0, math.cos(leg) * math.tan(apex / 2)) % math.pi


@dataclass
class SimplicityReport:
    simple: bool | None      # None = inconclusive (sufficient test only)
    base_abd: float | None = None
    base_ace: float | None = None
    reason: str = ""


def simplicity_check(spec: PentagonSpec) -> SimplicityReport:
    """Sufficient test for the pentagon boundary being simple.

    Uses the isosceles triangles spanned by the a-edge pairs at beta and at
    gamma: if alpha exceeds both base angles, alpha, beta, gamma are below pi,
    and (beta-gamma)(delta-epsilon) < 0, the boundary cannot self-intersect.
    """
    alpha, beta, gamma, delta, epsilon = spec.angles
    if not (alpha < math.pi and beta < math.pi and gamma < math.pi):
        return SimplicityReport(None, reason="needs alpha, beta, gamma < pi")
    if (beta - gamma) * (delta - epsilon) >= 0:
        return SimplicityReport(None, reason="(beta-gamma)(delta-epsilon) >= 0")
    theta = isosceles_base_angle(beta, spec.a)
    rho = isosceles_base_angle(gamma, spec.a)
    if alpha > theta and alpha > rho:
        return SimplicityReport(True, theta, rho)
    return SimplicityReport(None, theta, rho,
                            reason="alpha does not dominate the base angles")


def geometry1_consistency(spec: PentagonSpec) -> bool:
    """beta > gamma exactly when delta < epsilon (or both pairs equal)."""
    _, beta, gamma, delta, epsilon = spec.angles
    sb = (beta > gamma) - (beta < gamma)
    sd = (delta > epsilon) - (delta < epsilon)
    return sb == -sd or (sb == 0 and sd == 0)


def trig_quadratic_roots(g, check_points: int = 7, tol: float = 1e-9
                         ) -> list[float]:
    """Roots in (0, 2*pi) of g(x) = c0 + c1*cos(2x) + c2*sin(2x).

    The coefficients are recovered from three samples; extra samples assert
    that g really has this form (every angle equation handled here does, being
    a homogeneous quadratic in cos x, sin x).
    """
    g0, g1, g2 = g(0.0), g(math.pi / 2), g(math.pi / 4)
    c0 = (g0 + g1) / 2
    c1 = (g0 - g1) / 2
    c2 = g2 - c0
    scale = max(abs(c0), abs(c1), abs(c2), 1e-30)
    for k in range(check_points):
        x = math.e / 7 + k * 0.61
        model = c0 + c1 * math.cos(2 * x) + c2 * math.sin(2 * x)
        if abs(model - g(x)) > 1e-8 * max(scale, 1.0):
            raise PentagonError("equation is not a trigonometric quadratic")
    r = math.hypot(c1, c2)
    if r < 1e-15 * max(abs(c0), 1e-30):
        return []
    ratio = -c0 / r
    if abs(ratio) > 1.0:
        return []
    phi = math.atan2(c2, c1)
    psi = math.acos(max(-1.0, min(1.0, ratio)))
    roots = set()
    for base in (phi + psi, phi - psi):
        for k in range(-2, 3):
            x = (base / 2 + k * math.pi) % TWO_PI
            if tol < x < TWO_PI - tol:
                roots.add(round(x, 13))
    return sorted(roots)


@dataclass
class InfeasibilityCertificate:
    family: str
    grid_size: int
    min_abs: float
    value_at_equal: float | None = None
    sign_changes: int = 0
    infeasible: bool = False
    detail: dict = field(default_factory=dict)


def _b2dc2e_factorization(delta: float, epsilon: float) -> float:
    sd, se = math.sin(delta), math.sin(epsilon)
    return (sd - se) ** 2 * (sd * sd + se * se + 3 * sd * se)


def check_infeasible_family(family_id: str, f: int | None = None,
                            grid: int = 10_000) -> InfeasibilityCertificate:
    """Certify the two angle systems that admit no non-symmetric pentagon.

    B2D_C2E_ABC(f): with beta delta^2, gamma epsilon^2 and alpha beta gamma as
    vertices the first identity factors as
    (sin d - sin e)^2 (sin^2 d + sin^2 e + 3 sin d sin e), which vanishes only
    at delta = epsilon, forcing the symmetric pentagon.

    ADE_AC2_F20: the f=20 system with alpha delta epsilon and alpha gamma^2
    has no root with 0 < epsilon < 4/5 pi.
    """
    if family_id == "B2D_C2E_ABC":
        if f is None or f < 16 or f % 4 != 0:
            raise ValueError("B2D_C2E_ABC needs f >= 16 with f = 0 mod 4")
        s = (1 + 4 / f) * math.pi / 2          # common half-sum of delta, eps
        t_max = math.pi - s                     # keeps delta, epsilon below pi
        min_abs = math.inf
        for k in range(1, grid + 1):
            t = t_max * k / (grid + 1)
            val = abs(_b2dc2e_factorization(s + t, s - t))
            min_abs = min(min_abs, val)
        at_equal = _b2dc2e_factorization(s, s)
        return InfeasibilityCertificate(
            family_id, grid, min_abs, value_at_equal=at_equal,
            infeasible=min_abs > 1e-8 and at_equal == 0.0,
            detail={"f": f, "half_sum": s, "t_max": t_max})

    if family_id == "ADE_AC2_F20":
        c5 = math.sqrt(5.0)
        coef_sin = c5 * (c5 - 1)
        coef_cos = math.sqrt(50 - 22 * c5)
        hi = 0.8 * math.pi
        min_abs = math.inf
        signs = set()
        for k in range(1, grid + 1):
            eps = hi * k / (grid + 1)
            val = (coef_sin * math.sin(eps) + coef_cos * math.cos(eps)) \
                * math.sin(eps)
            min_abs = min(min_abs, abs(val))
            signs.add(val > 0)
        return InfeasibilityCertificate(
            family_id, grid, min_abs, sign_changes=len(signs) - 1,
            infeasible=len(signs) == 1 and min_abs > 0,
            detail={"interval": (0.0, hi)})

    raise ValueError(f"unknown infeasible family {family_id!r}")
