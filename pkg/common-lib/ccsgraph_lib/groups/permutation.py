"""
Permutations of {1..degree} in one-line form.

Composition convention: (p * q)(i) = p(q(i)), so q is applied first.
"""

import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import List, Tuple

from ..exceptions import PermutationError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")
_TOKEN_SPLIT_RE = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class Permutation:
    """A bijection on {1..degree}; images[i - 1] is the image of point i."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.images:
            raise PermutationError("Permutation degree must be positive")
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise PermutationError(f"Images {list(self.images)} are not a bijection")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise PermutationError("Permutation degree must be positive")
        return cls(tuple(range(1, degree + 1)))

    @classmethod
    def from_zero_based(cls, images) -> "Permutation":
        return cls(tuple(int(i) + 1 for i in images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def is_identity(self) -> bool:
        return all(image == point for point, image in enumerate(self.images, start=1))

    def zero_based(self) -> Tuple[int, ...]:
        return tuple(i - 1 for i in self.images)

    @cached_property
    def cycles(self) -> List[Tuple[int, ...]]:
        """Nontrivial cycles, each starting at its least point, ordered by that point."""
        seen = set()
        result = []
        for start in range(1, self.degree + 1):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self(start)
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self(point)
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    @cached_property
    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles)) if self.cycles else 1

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in self.cycles)


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``(1 2 3)(4 5)`` on ``degree`` points.

    Points are 1-based; unmentioned points are fixed and ``()`` is the identity.

    Raises:
        PermutationError: on malformed parentheses, out-of-range or repeated points
    """
    if degree < 1:
        raise PermutationError("Permutation degree must be positive")

    stripped = text.strip()
    if not stripped:
        raise PermutationError("Empty cycle notation; use '()' for the identity")

    # Whatever is left after removing the cycles must be whitespace.
    leftover = _CYCLE_RE.sub("", stripped)
    if leftover.strip():
        raise PermutationError(f"Malformed cycle notation: {text!r}")

    images = list(range(1, degree + 1))
    used = set()
    for body in _CYCLE_RE.findall(stripped):
        tokens = [t for t in _TOKEN_SPLIT_RE.split(body.strip()) if t]
        points = []
        for token in tokens:
            if not token.isdigit():
                raise PermutationError(f"Invalid point {token!r} in {text!r}")
            point = int(token)
            if point < 1 or point > degree:
                raise PermutationError(f"Point {point} out of range 1..{degree}")
            if point in used:
                raise PermutationError(f"Point {point} repeated in {text!r}")
            used.add(point)
            points.append(point)
        for i, point in enumerate(points):
            images[point - 1] = points[(i + 1) % len(points)]

    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return p * q, the map i -> p(q(i))."""
    if p.degree != q.degree:
        raise PermutationError(f"Degree mismatch: {p.degree} != {q.degree}")
    return Permutation(tuple(p.images[i - 1] for i in q.images))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.degree
    for point, image in enumerate(p.images, start=1):
        images[image - 1] = point
    return Permutation(tuple(images))
