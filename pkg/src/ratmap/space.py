"""Rational cohomology models of connected finite CW-complexes.

A :class:`SpaceModel` is just a Betti vector ``b_0 .. b_D`` plus a flag
saying whether the constructor guarantees a CW structure with only
even-dimensional cells.  The flag is never inferred from the Betti
numbers: vanishing odd cohomology does not imply an even-cell structure.
"""

from __future__ import annotations

from dataclasses import dataclass


class SpaceSpecError(ValueError):
    def __init__(self, message: str, token: str | None = None):
        super().__init__(message)
        self.token = token


@dataclass(frozen=True)
class SpaceModel:
    betti: tuple[int, ...]
    label: str = "custom"
    even_cells_only: bool = False

    def __post_init__(self):
        betti = tuple(self.betti)
        object.__setattr__(self, "betti", betti)
        if not betti or betti[0] != 1:
            raise SpaceSpecError(
                f"X must be connected (b_0 = 1), got Betti vector {list(betti)}"
            )
        if any(b < 0 for b in betti):
            raise SpaceSpecError(f"negative Betti number in {list(betti)}")

    @property
    def dim(self) -> int:
        """Real dimension, i.e. the top index of the Betti vector."""
        return len(self.betti) - 1

    def b(self, q: int) -> int:
        return self.betti[q] if 0 <= q < len(self.betti) else 0

    @property
    def odd_betti_vanish(self) -> bool:
        return all(b == 0 for b in self.betti[1::2])


def make_point() -> SpaceModel:
    return SpaceModel((1,), "point", True)


def make_sphere(m: int) -> SpaceModel:
    if m < 1:
        raise SpaceSpecError(f"sphere dimension must be >= 1, got {m}")
    betti = [0] * (m + 1)
    betti[0] = betti[m] = 1
    return SpaceModel(tuple(betti), f"sphere:{m}", m % 2 == 0)


def make_curve(g: int) -> SpaceModel:
    # b_1 = 2g for a genus-g Riemann surface
    if g < 0:
        raise SpaceSpecError(f"genus must be >= 0, got {g}")
    return SpaceModel((1, 2 * g, 1), f"curve:{g}", g == 0)


def make_projective(k: int) -> SpaceModel:
    if k < 0:
        raise SpaceSpecError(f"projective dimension must be >= 0, got {k}")
    betti = tuple(1 if j % 2 == 0 else 0 for j in range(2 * k + 1))
    return SpaceModel(betti, f"proj:{k}", True)


def make_hypersurface(k: int, d: int) -> SpaceModel:
    """Smooth hypersurface of complex dimension ``k`` in ``P^(k+1)`` with
    middle Betti number ``d``.

    Below the middle degree the cohomology is that of projective space
    (weak Lefschetz), above it is fixed by Poincare duality.
    """
    if k < 1:
        raise SpaceSpecError(f"hypersurface dimension must be >= 1, got {k}")
    if d < 0:
        raise SpaceSpecError(f"middle Betti number must be >= 0, got {d}")
    if k % 2 == 0 and d < 1:
        raise SpaceSpecError(
            "even-dimensional hypersurface needs d >= 1 (the hyperplane class power lives in H^k)"
        )
    betti = [0] * (2 * k + 1)
    for j in range(k):
        betti[j] = betti[2 * k - j] = 1 if j % 2 == 0 else 0
    betti[k] = d
    return SpaceModel(tuple(betti), f"hyp:{k},{d}", k % 2 == 0)


def make_custom(betti) -> SpaceModel:
    """Arbitrary Betti vector.  Never flagged as even-cell."""
    betti = tuple(int(b) for b in betti)
    return SpaceModel(betti, "betti:" + ",".join(map(str, betti)), False)


def product(a: SpaceModel, b: SpaceModel) -> SpaceModel:
    """Kunneth: the Betti vector of ``a x b`` is the convolution of theirs."""
    out = [0] * (len(a.betti) + len(b.betti) - 1)
    for i, x in enumerate(a.betti):
        for j, y in enumerate(b.betti):
            out[i + j] += x * y
    return SpaceModel(tuple(out), f"prod({a.label};{b.label})", a.even_cells_only and b.even_cells_only)


# -- text grammar -------------------------------------------------------------
#   point | sphere:m | curve:g | proj:k | hyp:k,d | betti:b0,b1,... | prod(S;S)


def _ints(token: str, body: str, count: int | None = None) -> list[int]:
    parts = [p.strip() for p in body.split(",")]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise SpaceSpecError(f"expected integers in {token!r}", token) from None
    if count is not None and len(values) != count:
        raise SpaceSpecError(f"expected {count} integer(s) in {token!r}", token)
    return values


def _split_top_level(body: str, token: str) -> tuple[str, str]:
    depth = 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise SpaceSpecError(f"unbalanced parentheses in {token!r}", token)
        elif ch == ";" and depth == 0:
            return body[:i], body[i + 1 :]
    raise SpaceSpecError(f"prod needs two spaces separated by ';' in {token!r}", token)


def parse_space(text: str) -> SpaceModel:
    token = text.strip()
    if not token:
        raise SpaceSpecError("empty space specification", text)
    if token == "point":
        return make_point()
    if token.startswith("prod(") and token.endswith(")"):
        left, right = _split_top_level(token[5:-1], token)
        return product(parse_space(left), parse_space(right))
    name, sep, body = token.partition(":")
    if not sep:
        raise SpaceSpecError(f"unknown space {token!r}", token)
    try:
        if name == "sphere":
            return make_sphere(*_ints(token, body, 1))
        if name == "curve":
            return make_curve(*_ints(token, body, 1))
        if name == "proj":
            return make_projective(*_ints(token, body, 1))
        if name == "hyp":
            return make_hypersurface(*_ints(token, body, 2))
        if name == "betti":
            return make_custom(_ints(token, body))
    except SpaceSpecError as exc:
        if exc.token is None:
            exc.token = token
        raise
    raise SpaceSpecError(f"unknown space {name!r}", token)
