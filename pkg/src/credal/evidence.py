"""Bodies of evidence over finite frames: mass, belief, and plausibility.

A mass function distributes unit weight over non-empty focal subsets. The
belief of a proposition is the total weight of focal elements entailing it
(a lower probability); its plausibility is the total weight of focal elements
consistent with it (an upper probability). When every focal element is a
singleton the two coincide and the body of evidence is an ordinary
probability measure.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import fsum
from typing import Iterable, Iterator, Mapping

from .errors import FrameMismatchError, ValidationError
from .frames import Frame, Subset

SUM_TOLERANCE = 1e-6
#: Tolerance for float comparisons on derived quantities (duality, region tests).
EQ_TOLERANCE = 1e-12


def _check_same_frame(frame: Frame, value: Subset) -> None:
    if value.frame != frame:
        raise FrameMismatchError(" ".join(frame.atoms), " ".join(value.frame.atoms))


class MassFunction:
    """A body of evidence: non-empty focal subsets with positive weights summing to 1.

    Construction merges duplicate focal subsets, drops exact zero weights,
    rejects negative weights and empty focal elements, checks the total
    against 1 within ``SUM_TOLERANCE``, and stores weights divided by their
    computed sum. Instances are immutable.
    """

    __slots__ = ("frame", "_weights")

    def __init__(self, frame: Frame, assignments: Mapping[Subset, float] | Iterable[tuple[Subset, float]]):
        if isinstance(assignments, Mapping):
            assignments = assignments.items()
        merged: dict[int, float] = {}
        for subset, weight in assignments:
            _check_same_frame(frame, subset)
            if subset.mask == 0:
                raise ValidationError("focal element is the contradiction (empty set)")
            if weight < 0.0:
                raise ValidationError(f"negative focal weight {weight!r}")
            if weight == 0.0:
                continue
            merged[subset.mask] = merged.get(subset.mask, 0.0) + weight
        total = fsum(merged.values())
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValidationError(f"focal weights sum to {total!r}, not 1 within {SUM_TOLERANCE}")
        self.frame = frame
        # canonical focal order: by cardinality, then by mask
        self._weights = {
            mask: merged[mask] / total
            for mask in sorted(merged, key=lambda m: (m.bit_count(), m))
        }

    @classmethod
    def vacuous(cls, frame: Frame) -> MassFunction:
        """Total ignorance: all weight on the full frame."""
        return cls(frame, [(frame.full, 1.0)])

    def focal_elements(self) -> Iterator[tuple[Subset, float]]:
        """Focal subsets with their weights, in canonical (cardinality, mask) order."""
        for mask, weight in self._weights.items():
            yield Subset(self.frame, mask), weight

    def __len__(self) -> int:
        return len(self._weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MassFunction):
            return NotImplemented
        return self.frame == other.frame and self._weights == other._weights

    def __repr__(self) -> str:
        inner = ", ".join(f"{Subset(self.frame, m)}: {w:g}" for m, w in self._weights.items())
        return f"MassFunction({inner})"

    def weight_of(self, subset: Subset) -> float:
        """The weight directly assigned to a subset (0 when not focal)."""
        _check_same_frame(self.frame, subset)
        return self._weights.get(subset.mask, 0.0)

    def belief(self, a: Subset) -> float:
        """Total weight of focal elements contained in `a` (lower probability)."""
        _check_same_frame(self.frame, a)
        return fsum(w for mask, w in self._weights.items() if mask & ~a.mask == 0)

    def plausibility(self, a: Subset) -> float:
        """Total weight of focal elements intersecting `a` (upper probability).

        Equals 1 minus the belief of the complement.
        """
        _check_same_frame(self.frame, a)
        return fsum(w for mask, w in self._weights.items() if mask & a.mask)

    def belief_table(self) -> list[float]:
        """Belief of every subset, indexed by mask, via a subset-sum zeta transform.

        O(n * 2^n); intended for exhaustive powerset scans on small frames.
        """
        n = len(self.frame)
        table = [0.0] * (1 << n)
        for mask, w in self._weights.items():
            table[mask] += w
        for bit in range(n):
            step = 1 << bit
            for m in range(1 << n):
                if m & step:
                    table[m] += table[m ^ step]
        return table

    def plausibility_table(self) -> list[float]:
        """Plausibility of every subset, indexed by mask (dual of `belief_table`)."""
        bel = self.belief_table()
        full = (1 << len(self.frame)) - 1
        total = bel[full]
        return [total - bel[full ^ m] for m in range(full + 1)]

    def expected_cardinality(self) -> float:
        """Weighted mean focal size: the imprecision of the body of evidence.

        Lies in [1, n]; 1 exactly for Bayesian masses, n exactly for the
        vacuous mass.
        """
        return fsum(w * mask.bit_count() for mask, w in self._weights.items())

    def classify(self) -> Classification:
        """Structural classification with deterministic label precedence."""
        masks = list(self._weights)
        n = len(self.frame)
        full = (1 << n) - 1
        labels = set()
        if masks == [full]:
            labels.add("vacuous")
        if all(m.bit_count() == 1 for m in masks):
            labels.add("bayesian")
        chain = sorted(masks, key=lambda m: m.bit_count())
        if all(a & ~b == 0 for a, b in zip(chain, chain[1:])):
            labels.add("consonant")
        for tag in ("vacuous", "bayesian", "consonant"):
            if tag in labels:
                return Classification(tag, frozenset(labels))
        return Classification("general", frozenset({"general"}))

    def triangle_point(self, a: Subset) -> TrianglePoint:
        """Locate a contingent proposition in the uncertainty triangle.

        The coordinates are (belief of `a`, belief of not-`a`); the region
        tag follows the triangle geometry with vertex labels taking
        precedence over edges and edges over the interior.
        """
        _check_same_frame(self.frame, a)
        if a.is_empty or a.is_full:
            raise ValidationError("triangle point requires a contingent proposition (not empty, not full)")
        x = self.belief(a)
        y = self.belief(a.complement())
        return TrianglePoint.locate(x, y)


@dataclass(frozen=True)
class Classification:
    """Most specific structure tag plus every applicable label."""

    tag: str
    labels: frozenset[str]

    def __str__(self) -> str:
        return self.tag


class TriangleRegion(Enum):
    """Regions of the uncertainty triangle; `code` is the serialized form."""

    CERTAIN = "A"
    CERTAIN_NOT = "B"
    IGNORANCE = "O"
    PROBABILISTIC_EDGE = "probabilistic-edge"
    POSSIBILISTIC_AXES = "possibilistic-axes"
    INTERIOR = "interior"

    @property
    def code(self) -> str:
        return self.value


@dataclass(frozen=True)
class TrianglePoint:
    """A state of knowledge about one proposition, as a point (Bel(a), Bel(not a)).

    `ignorance` is 1 - 2*Bel(a), defined only on the equal-support diagonal
    where Bel(a) = Bel(not a); it is None off the diagonal.
    """

    x: float
    y: float
    region: TriangleRegion
    ignorance: float | None

    @staticmethod
    def locate(x: float, y: float) -> TrianglePoint:
        if x + y > 1.0 + EQ_TOLERANCE:
            raise ValidationError(f"point ({x}, {y}) lies outside the triangle (x + y > 1)")

        def near(u: float, v: float) -> bool:
            return abs(u - v) <= EQ_TOLERANCE

        if near(x, 1.0) and near(y, 0.0):
            region = TriangleRegion.CERTAIN
        elif near(x, 0.0) and near(y, 1.0):
            region = TriangleRegion.CERTAIN_NOT
        elif near(x, 0.0) and near(y, 0.0):
            region = TriangleRegion.IGNORANCE
        elif near(x + y, 1.0):
            region = TriangleRegion.PROBABILISTIC_EDGE
        elif near(min(x, y), 0.0):
            region = TriangleRegion.POSSIBILISTIC_AXES
        else:
            region = TriangleRegion.INTERIOR
        ignorance = 1.0 - 2.0 * x if near(x, y) else None
        return TrianglePoint(x, y, region, ignorance)


class ProbabilityDistribution:
    """A per-atom probability assignment summing to 1 (stored renormalized)."""

    __slots__ = ("frame", "values")

    def __init__(self, frame: Frame, values: Iterable[float]):
        values = tuple(float(v) for v in values)
        if len(values) != len(frame):
            raise ValidationError(
                f"expected {len(frame)} probability values, got {len(values)}"
            )
        for v in values:
            if not 0.0 <= v <= 1.0:
                raise ValidationError(f"probability value {v!r} outside [0, 1]")
        total = fsum(values)
        if abs(total - 1.0) > SUM_TOLERANCE:
            raise ValidationError(f"probability values sum to {total!r}, not 1 within {SUM_TOLERANCE}")
        self.frame = frame
        self.values = tuple(v / total for v in values)

    @classmethod
    def uniform(cls, frame: Frame) -> ProbabilityDistribution:
        return cls(frame, [1.0 / len(frame)] * len(frame))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbabilityDistribution):
            return NotImplemented
        return self.frame == other.frame and self.values == other.values

    def __repr__(self) -> str:
        return f"ProbabilityDistribution({', '.join(f'{v:g}' for v in self.values)})"

    def probability_of(self, a: Subset) -> float:
        """P(A): the summed weight of the member atoms."""
        _check_same_frame(self.frame, a)
        return fsum(v for i, v in enumerate(self.values) if a.mask >> i & 1)

    def as_mass(self) -> MassFunction:
        """The Bayesian body of evidence with one singleton focal per atom.

        Atoms of probability zero are omitted; belief and plausibility of the
        result agree with this distribution on every subset.
        """
        return MassFunction(
            self.frame,
            [
                (self.frame.from_mask(1 << i), v)
                for i, v in enumerate(self.values)
                if v > 0.0
            ],
        )


def make_mass(frame: Frame, assignments: Iterable[tuple[Subset, float]]) -> MassFunction:
    """Validating constructor mirroring user input: rejects non-positive weights."""
    checked = []
    for subset, weight in assignments:
        if weight <= 0.0:
            raise ValidationError(f"non-positive focal weight {weight!r}")
        checked.append((subset, weight))
    return MassFunction(frame, checked)
