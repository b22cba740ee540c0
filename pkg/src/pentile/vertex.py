"""Vertex-type combinatorics: admissible angle multisets at tiling vertices.

A vertex type counts how many of each pentagon angle meet at a vertex.  The
counts are kept in the fixed label order (alpha, beta, gamma, delta, epsilon);
delta and epsilon are the two angles bounding the long edge b, so their total
at any vertex is even (every b-edge entering a vertex pairs two of them).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .angle import Angle, AngleLike, radians

LABELS = ("alpha", "beta", "gamma", "delta", "epsilon")
GREEK = {"alpha": "α", "beta": "β", "gamma": "γ",
         "delta": "δ", "epsilon": "ε"}
_SUPERSCRIPTS = {"0": "⁰", "1": "¹", "2": "²", "3": "³",
                 "4": "⁴", "5": "⁵", "6": "⁶", "7": "⁷",
                 "8": "⁸", "9": "⁹"}


def _sup(k: int) -> str:
    return "".join(_SUPERSCRIPTS[c] for c in str(k))


@dataclass(frozen=True)
class VertexType:
    """Multiset of pentagon angles meeting at one vertex."""

    counts: tuple[int, int, int, int, int]

    def __post_init__(self):
        if len(self.counts) != 5 or any(c < 0 for c in self.counts):
            raise ValueError(f"bad vertex counts {self.counts}")

    @classmethod
    def from_labels(cls, labels) -> "VertexType":
        counts = [0] * 5
        for lab in labels:
            counts[LABELS.index(lab)] += 1
        return cls(tuple(counts))

    @property
    def degree(self) -> int:
        return sum(self.counts)

    def count(self, label: str) -> int:
        return self.counts[LABELS.index(label)]

    @property
    def name(self) -> str:
        parts = []
        for label, c in zip(LABELS, self.counts):
            if c == 1:
                parts.append(GREEK[label])
            elif c > 1:
                parts.append(GREEK[label] + _sup(c))
        return "".join(parts) or "∅"

    def __str__(self) -> str:
        return self.name

    def to_json(self) -> list[int]:
        return list(self.counts)


def parity_check(v: VertexType) -> bool:
    """Total number of delta and epsilon at the vertex is even."""
    return (v.counts[3] + v.counts[4]) % 2 == 0


def canonicalize_symmetric(v: VertexType) -> VertexType:
    """Collapse gamma into beta and epsilon into delta (symmetric pentagon)."""
    a, b, g, d, e = v.counts
    return VertexType((a, b + g, 0, d + e, 0))


@dataclass(frozen=True)
class AngleAssignment:
    """Values for the five pentagon angles, exact or numeric."""

    alpha: AngleLike
    beta: AngleLike
    gamma: AngleLike
    delta: AngleLike
    epsilon: AngleLike
    f: int | None = None

    def value(self, label: str) -> AngleLike:
        return getattr(self, label)

    @property
    def values(self) -> tuple[AngleLike, ...]:
        return tuple(getattr(self, lab) for lab in LABELS)

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, Angle) for v in self.values)

    def numeric(self) -> tuple[float, ...]:
        return tuple(radians(v) for v in self.values)

    def check_pentagon_sum(self, tol: float = 1e-9) -> bool:
        if self.f is None:
            return True
        target = (3 + 4 / self.f) * math.pi
        return abs(sum(self.numeric()) - target) <= tol


def vertex_angle_sum(v: VertexType, assignment: AngleAssignment) -> float:
    """Numeric angle sum of the vertex; the caller compares against 2*pi."""
    return sum(c * x for c, x in zip(v.counts, assignment.numeric()))


def vertex_angle_sum_exact(v: VertexType, assignment: AngleAssignment) -> Angle:
    if not assignment.is_exact:
        raise ValueError("exact sum requires an exact assignment")
    total = Fraction(0)
    for c, val in zip(v.counts, assignment.values):
        total += c * val.fraction
    return Angle.from_fraction(total)


AVC = frozenset  # a set of VertexType


def enumerate_vertices(assignment: AngleAssignment, max_degree: int,
                       tol: float = 1e-9) -> frozenset[VertexType]:
    """All vertex types with admissible angle sum 2*pi, degree 3..max_degree.

    Counts of each angle are capped by floor(2*pi / angle); the degree bound
    is the larger of max_degree and ceil(2*pi / min angle), so the search
    space is finite.  tol=0 demands exact Angle arithmetic.
    """
    if max_degree < 3:
        raise ValueError(f"max_degree must be >= 3, got {max_degree}")
    numeric = assignment.numeric()
    if any(x <= 0 for x in numeric):
        raise ValueError("all five angle values must be positive")
    exact = tol == 0
    if exact and not assignment.is_exact:
        raise ValueError("tol=0 requires an exact (rational multiple of pi) "
                         "assignment")

    two_pi = 2 * math.pi
    caps = [min(int(two_pi / x + 1e-12), max_degree) for x in numeric]
    found = set()
    for counts in itertools.product(*(range(c + 1) for c in caps)):
        deg = sum(counts)
        if deg < 3 or deg > max_degree:
            continue
        if (counts[3] + counts[4]) % 2 != 0:
            continue
        if exact:
            total = sum((c * v.fraction for c, v in
                         zip(counts, assignment.values)), Fraction(0))
            if total != 2:
                continue
        else:
            total = sum(c * x for c, x in zip(counts, numeric))
            if abs(total - two_pi) > tol:
                continue
        found.add(VertexType(tuple(counts)))
    return frozenset(found)


def balance_check(avc) -> bool:
    """delta^2... occurs among the types iff epsilon^2... does."""
    has_d2 = any(v.counts[3] >= 2 for v in avc)
    has_e2 = any(v.counts[4] >= 2 for v in avc)
    return has_d2 == has_e2


@dataclass
class CountingReport:
    totals: dict[str, int]
    expected: dict[str, int]
    ok: bool
    failures: list[str] = field(default_factory=list)


def counting_check(multiplicities: dict[VertexType, int], f: int,
                   symmetric: bool = False) -> CountingReport:
    """Check per-label totals against the tile count.

    With five distinguished labels each label appears once per tile, so every
    total must equal f.  With collapsed symmetric labels beta and delta each
    appear twice per tile (expected totals 2f) and gamma/epsilon are unused.
    """
    totals = {lab: 0 for lab in LABELS}
    for v, mult in multiplicities.items():
        for lab, c in zip(LABELS, v.counts):
            totals[lab] += c * mult
    if symmetric:
        expected = {"alpha": f, "beta": 2 * f, "gamma": 0,
                    "delta": 2 * f, "epsilon": 0}
    else:
        expected = {lab: f for lab in LABELS}
    failures = [lab for lab in LABELS if totals[lab] != expected[lab]]
    return CountingReport(totals, expected, not failures, failures)


_DEGREE3_B_PAIRS = {
    frozenset([(0, 1, 0, 1, 1), (0, 0, 1, 0, 2)]),  # beta delta eps / gamma eps^2
    frozenset([(0, 0, 1, 1, 1), (0, 1, 0, 2, 0)]),  # gamma delta eps / beta delta^2
    frozenset([(0, 1, 0, 2, 0), (0, 0, 1, 0, 2)]),  # beta delta^2 / gamma eps^2
}


def degree3_b_vertex_pairs_allowed(p: VertexType, q: VertexType) -> bool:
    """Whether {p, q} is an admissible pair of degree-3 b-vertices without alpha.

    For a simple non-symmetric pentagon the only coexisting pairs are
    {beta delta epsilon, gamma epsilon^2}, {gamma delta epsilon, beta delta^2}
    and {beta delta^2, gamma epsilon^2}.
    """
    for v in (p, q):
        if v.degree != 3:
            raise ValueError(f"{v} is not a degree 3 vertex")
        if v.counts[3] + v.counts[4] < 1:
            raise ValueError(f"{v} is not a b-vertex")
        if v.counts[0] != 0:
            raise ValueError(f"{v} contains alpha")
    return frozenset([p.counts, q.counts]) in _DEGREE3_B_PAIRS
