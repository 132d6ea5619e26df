"""Simple Dynkin types, their invariant degrees, and Weyl-group checks.

The degree tables are constants.  They are checked against two classical
identities: the product of the degrees is the Weyl group order, and the
sum of ``degree - 1`` is the number of positive roots.  Both sides can be
computed by brute force from the Cartan matrix, see :func:`root_system`
and :func:`enumerate_weyl_group`.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from math import prod


class GroupSpecError(ValueError):
    """Malformed group spelling or invalid Dynkin rank."""

    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


_EXCEPTIONAL_DEGREES = {
    ("G", 2): (2, 6),
    ("F", 4): (2, 6, 8, 12),
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
    ("E", 8): (2, 8, 12, 14, 18, 20, 24, 30),
}


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in "ABCDEFG" or len(f) != 1:
            raise GroupSpecError(f"unknown Dynkin family {f!r}", f"{f}{n}")
        if not isinstance(n, int) or n < 1:
            raise GroupSpecError(f"rank must be a positive integer, got {n!r}", f"{f}{n}")
        ok = {
            "A": n >= 1,
            "B": n >= 1,
            "C": n >= 1,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not ok:
            raise GroupSpecError(f"invalid rank {n} for type {f}", f"{f}{n}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def invariant_degrees(s: SimpleType) -> list[int]:
    """Sorted degrees of the basic Weyl-invariant polynomials of ``s``."""
    f, n = s.family, s.rank
    if f == "A":
        degs = list(range(2, n + 2))
    elif f in "BC":
        degs = list(range(2, 2 * n + 1, 2))
    elif f == "D":
        degs = list(range(2, 2 * n - 1, 2)) + [n]
    else:
        degs = list(_EXCEPTIONAL_DEGREES[(f, n)])
    return sorted(degs)


@dataclass(frozen=True)
class GroupSpec:
    """A semisimple group up to isogeny, i.e. a product of simple types.

    ``degrees`` is the concatenation of each factor's invariant degrees in
    factor order (not re-sorted), so ``A2xG2`` gives ``(2, 3, 2, 6)``.
    """

    factors: tuple[SimpleType, ...]

    def __post_init__(self):
        if not self.factors:
            raise GroupSpecError("a group needs at least one simple factor")
        degs = self.degrees
        assert all(d >= 2 for d in degs)
        assert len(degs) == self.rank

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for s in self.factors for d in invariant_degrees(s))

    @property
    def rank(self) -> int:
        return sum(s.rank for s in self.factors)

    @property
    def positive_root_count(self) -> int:
        return sum(d - 1 for d in self.degrees)

    def __str__(self) -> str:
        return render_group(self)


def weyl_order(g: GroupSpec) -> int:
    """Order of the Weyl group, as the product of the invariant degrees."""
    return prod(g.degrees)


_TOKEN = re.compile(r"([A-Ga-g])(\d+)")


def parse_group(text: str) -> GroupSpec:
    """Parse ``SIMPLE ("x" SIMPLE)*``, e.g. ``"A2xG2"``."""
    if not text or not text.strip():
        raise GroupSpecError("empty group specification", text)
    factors = []
    for token in text.strip().split("x"):
        m = _TOKEN.fullmatch(token.strip())
        if m is None:
            raise GroupSpecError(f"malformed group token {token!r}", token)
        family, rank = m.group(1).upper(), int(m.group(2))
        try:
            factors.append(SimpleType(family, rank))
        except GroupSpecError as exc:
            raise GroupSpecError(f"{exc} (in token {token!r})", token) from None
    return GroupSpec(tuple(factors))


def render_group(g: GroupSpec) -> str:
    return "x".join(str(s) for s in g.factors)


# -- brute-force side ---------------------------------------------------------


def cartan_matrix(s: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``a[i][j] = <alpha_i^vee, alpha_j>`` (Bourbaki numbering)."""
    f, n = s.family, s.rank
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if f in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if n >= 2 and f == "B":
            # alpha_n short
            link(n - 2, n - 1, aij=-1, aji=-2)
        elif n >= 2 and f == "C":
            # alpha_n long
            link(n - 2, n - 1, aij=-2, aji=-1)
    elif f == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif f == "E":
        # Bourbaki: 1-3-4-5-6-7-8 chain with 2 attached to 4
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, aij=-2, aji=-1)
        link(2, 3)
    elif f == "G":
        link(0, 1, aij=-1, aji=-3)
    return tuple(tuple(row) for row in a)


def _reflect(cartan, i: int, v: tuple[int, ...]) -> tuple[int, ...]:
    # s_i(v) = v - <alpha_i^vee, v> alpha_i, in simple-root coordinates
    pairing = sum(cartan[i][j] * v[j] for j in range(len(v)))
    if pairing == 0:
        return v
    w = list(v)
    w[i] -= pairing
    return tuple(w)


def root_system(s: SimpleType) -> set[tuple[int, ...]]:
    """All roots in simple-root coordinates, by closing the simple roots
    under the simple reflections."""
    cartan = cartan_matrix(s)
    n = s.rank
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        v = queue.popleft()
        for i in range(n):
            w = _reflect(cartan, i, v)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def positive_roots(s: SimpleType) -> list[tuple[int, ...]]:
    return sorted(r for r in root_system(s) if all(c >= 0 for c in r))


def enumerate_weyl_group(s: SimpleType, limit: int = 100_000) -> set:
    """Every element of the Weyl group as an integer matrix (column images
    of the simple roots), found by breadth-first search over words in the
    simple reflections.  Refuses groups larger than ``limit``."""
    cartan = cartan_matrix(s)
    n = s.rank
    identity = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

    def apply(i, elem):
        return tuple(_reflect(cartan, i, col) for col in elem)

    seen = {identity}
    queue = deque([identity])
    while queue:
        elem = queue.popleft()
        for i in range(n):
            nxt = apply(i, elem)
            if nxt not in seen:
                if len(seen) >= limit:
                    raise RuntimeError(f"Weyl group of {s} exceeds {limit} elements")
                seen.add(nxt)
                queue.append(nxt)
    return seen
