"""Exact rational linear algebra and convex-hull membership.

Everything is computed over :class:`fractions.Fraction`, which keeps values
gcd-reduced with a positive denominator, so no rounding happens anywhere.
Hull membership is decided by a two-phase simplex on the barycentric
formulation with Bland's rule.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, ParseError

Rational = Fraction
QVector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def qvector(values: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in values)


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer string. Decimals are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational of the form p/q: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


@dataclass(frozen=True)
class LinearSystem:
    rows: tuple
    rhs: tuple

    def __post_init__(self):
        rows = tuple(qvector(r) for r in self.rows)
        rhs = qvector(self.rhs)
        if not rows:
            raise InputError("linear system needs at least one row")
        width = len(rows[0])
        if width < 1 or any(len(r) != width for r in rows):
            raise InputError("rows of a linear system must have equal positive length")
        if len(rhs) != len(rows):
            raise InputError("rhs length must match the number of rows")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "rhs", rhs)

    @property
    def nvars(self) -> int:
        return len(self.rows[0])


def _echelon(aug: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduce ``aug`` in place to reduced row echelon form over the first ``ncols`` columns.

    Returns the pivot columns.
    """
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        piv = aug[r][c]
        if piv != 1:
            aug[r] = [x / piv for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    return pivots


def rank(rows: Sequence[Sequence]) -> int:
    rows = [list(qvector(r)) for r in rows]
    if not rows:
        return 0
    return len(_echelon(rows, len(rows[0])))


def solve_unique(system: LinearSystem) -> tuple[Fraction, ...] | None:
    """The solution of ``system`` if it is consistent with exactly one solution, else ``None``."""
    n = system.nvars
    aug = [list(r) + [b] for r, b in zip(system.rows, system.rhs)]
    pivots = _echelon(aug, n)
    k = len(pivots)
    if any(row[n] != 0 for row in aug[k:]):
        return None
    if k < n:
        return None
    return tuple(aug[i][n] for i in range(n))


def affine_dimension(points: Sequence[Sequence]) -> int:
    """Dimension of the affine span of ``points`` (``-1`` for no points)."""
    if not points:
        return -1
    base = qvector(points[0])
    return rank([[a - b for a, b in zip(qvector(p), base)] for p in points[1:]]) if len(points) > 1 else 0


# --- simplex ---------------------------------------------------------------


def _pivot(T, r, c):
    piv = T[r][c]
    T[r] = [x / piv for x in T[r]]
    pr = T[r]
    for i, row in enumerate(T):
        if i != r and row[c] != 0:
            f = row[c]
            T[i] = [a - f * b for a, b in zip(row, pr)]


def _optimize(T, basis, obj, ncols):
    """Maximize ``obj . x`` over columns ``< ncols`` using Bland's rule.

    Returns False when the objective is unbounded.
    """
    while True:
        in_basis = set(basis)
        entering = None
        for j in range(ncols):
            if j in in_basis:
                continue
            rc = obj[j] - sum(obj[basis[i]] * T[i][j] for i in range(len(T)) if T[i][j] != 0)
            if rc > 0:
                entering = j
                break
        if entering is None:
            return True
        best = None
        for i, row in enumerate(T):
            if row[entering] > 0:
                ratio = row[-1] / row[entering]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(T, best[1], entering)
        basis[best[1]] = entering


def _lp_max(A, b, c=None):
    """Solve ``max c.x  s.t.  A x = b, x >= 0`` exactly.

    Returns ``None`` if infeasible, ``Fraction`` optimum otherwise (``0`` when
    only feasibility is asked, i.e. ``c is None``). Unbounded problems raise,
    since no caller here can produce one.
    """
    m, nv = len(A), len(A[0])
    T = []
    for i in range(m):
        row = [Fraction(x) for x in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row, rhs = [-x for x in row], -rhs
        T.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    basis = [nv + i for i in range(m)]
    phase1 = [Fraction(0)] * nv + [Fraction(-1)] * m
    _optimize(T, basis, phase1, nv + m)
    if any(T[i][-1] != 0 for i in range(m) if basis[i] >= nv):
        return None
    # drive zero-valued artificials out of the basis; rows that cannot pivot are redundant
    keep = []
    for i in range(len(T)):
        if basis[i] >= nv:
            j = next((j for j in range(nv) if T[i][j] != 0), None)
            if j is None:
                continue
            _pivot(T, i, j)
            basis[i] = j
        keep.append(i)
    T = [T[i] for i in keep]
    basis = [basis[i] for i in keep]
    if c is None:
        return Fraction(0)
    obj = [Fraction(x) for x in c] + [Fraction(0)] * m
    if not _optimize(T, basis, obj, nv):
        raise ArithmeticError("unbounded linear program")
    return sum((obj[basis[i]] * T[i][-1] for i in range(len(T))), Fraction(0))


def _check_dims(point, generators):
    if not generators:
        raise InputError("generator list must be nonempty")
    dim = len(point)
    if any(len(g) != dim for g in generators):
        raise InputError("point and generators must have equal length")


def in_convex_hull(point: Sequence, generators: Sequence[Sequence]) -> bool:
    """True iff ``point`` is a convex combination of ``generators``."""
    _check_dims(point, generators)
    dim = len(point)
    A = [[g[i] for g in generators] for i in range(dim)] + [[1] * len(generators)]
    b = list(point) + [1]
    return _lp_max(A, b) is not None


def in_relative_interior(
    point: Sequence,
    generators: Sequence[Sequence],
    ambient_affine_dim: int,
    functionals: Iterable[Sequence] | None = None,
) -> bool:
    """True iff ``point`` is interior to the hull inside an affine space of dimension ``ambient_affine_dim``.

    A hull of smaller affine dimension has empty interior there. With
    ``functionals`` the test is dual: ``point`` is interior iff every functional
    takes a strictly smaller minimum on the generators than at ``point``. The
    caller is responsible for the family being complete. Without it, a point
    is interior iff it is a convex combination with all weights positive,
    found by maximizing the smallest weight.
    """
    _check_dims(point, generators)
    hull_dim = affine_dimension(generators)
    if hull_dim > ambient_affine_dim:
        raise InputError(f"hull has affine dimension {hull_dim} > ambient {ambient_affine_dim}")
    if hull_dim < ambient_affine_dim:
        return False
    if functionals is not None:
        for f in functionals:
            at_point = sum(Fraction(a) * x for a, x in zip(f, point))
            if min(sum(Fraction(a) * x for a, x in zip(f, g)) for g in generators) >= at_point:
                return False
        return True
    # weights w_j = u_j + s with u_j >= 0, s >= 0; maximize s
    m, dim = len(generators), len(point)
    A = [[g[i] for g in generators] + [sum(Fraction(g[i]) for g in generators)] for i in range(dim)]
    A.append([1] * m + [m])
    b = list(point) + [1]
    best = _lp_max(A, b, [0] * m + [1])
    return best is not None and best > 0
