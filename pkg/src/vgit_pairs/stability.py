"""Hilbert-Mumford function, torus stability tests, intervals of stability and candidate walls.

Stability here is torus-level in fixed coordinates, taken over all coordinate
permutations. A pair's hyperplane enters only through its Mukai-minimal
variable ``x_k`` (the largest index in ``H``): the pair ``(X, H)`` is treated
as ``(X, X n {x_k = 0})``. Under that reduction the convex-hull test and the
sign test over the fundamental set and permutations decide the same thing.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterable

from .errors import DomainError, InputError
from .exact import in_convex_hull, in_relative_interior
from .fundamental import FundamentalSet, get_fundamental_set
from .monomials import Monomial, OneParamSubgroup, enumerate_monomials, mukai_min_variable, pairing


def as_parameter(t) -> Fraction:
    t = Fraction(t)
    if t < 0:
        raise DomainError(f"stability parameter must be >= 0, got {t}")
    return t


@dataclass(frozen=True)
class PairSupport:
    """Monomial supports ``(X, H)`` of a degree-``d`` hypersurface and a hyperplane in P^{n+1}."""

    X: frozenset
    H: frozenset
    n: int
    d: int

    def __post_init__(self):
        X, H = frozenset(self.X), frozenset(self.H)
        if not X or not H:
            raise InputError("X and H must be nonempty")
        size = self.n + 2
        for m in X:
            if m.nvars != size or m.degree != self.d:
                raise InputError(f"{m} is not a degree-{self.d} monomial in {size} variables")
        for m in H:
            if m.nvars != size or m.degree != 1:
                raise InputError(f"{m} is not a variable among {size}")
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "H", H)

    @classmethod
    def from_exponents(cls, n: int, d: int, X: Iterable, H: Iterable[int]) -> "PairSupport":
        return cls(
            frozenset(Monomial(tuple(e)) for e in X),
            frozenset(Monomial.variable(i, n + 2) for i in H),
            n,
            d,
        )

    @property
    def pivot(self) -> int:
        """Index of the Mukai-minimal variable of ``H``."""
        return mukai_min_variable(self.H).index

    def reduced(self) -> "PairSupport":
        return PairSupport(self.X, frozenset({Monomial.variable(self.pivot, self.n + 2)}), self.n, self.d)

    def permuted(self, sigma) -> "PairSupport":
        """Image under ``x_i -> x_{sigma[i]}``."""
        return PairSupport(
            frozenset(permute_monomial(m, sigma) for m in self.X),
            frozenset(permute_monomial(m, sigma) for m in self.H),
            self.n,
            self.d,
        )

    def sorted_X(self) -> list[Monomial]:
        return sorted(self.X)

    def sorted_H(self) -> list[Monomial]:
        return sorted(self.H)

    def __str__(self):
        return " + ".join(map(str, self.sorted_X())) + " ; " + " + ".join(map(str, self.sorted_H()))


def permute_monomial(m: Monomial, sigma) -> Monomial:
    out = [0] * m.nvars
    for i, e in enumerate(m.exponents):
        out[sigma[i]] = e
    return Monomial(tuple(out))


class Status(str, enum.Enum):
    STABLE = "stable"
    STRICTLY_SEMISTABLE = "strictly-semistable"
    UNSTABLE = "unstable"


@dataclass(frozen=True)
class StabilityVerdict:
    status: Status
    # the maximizing (lambda, sigma); None iff stable
    witness: tuple | None
    max_mu: Fraction


def mu(X: Iterable[Monomial], lam) -> int:
    X = list(X)
    if not X:
        raise InputError("mu of an empty set")
    return min(pairing(m, lam) for m in X)


def mu_t(p: PairSupport, lam, t) -> Fraction:
    """``mu(X, lambda) + t * min{r_i : x_i in H}``."""
    w = lam.weights if isinstance(lam, OneParamSubgroup) else tuple(lam)
    return mu(p.X, w) + Fraction(t) * min(w[h.index] for h in p.H)


def t_max(n: int, d: int) -> Fraction:
    if n < 0 or d < 1:
        raise InputError("need n >= 0 and d >= 1")
    return Fraction(d, n + 1)


def moduli_dimension(n: int, d: int) -> int:
    if d < 3:
        raise DomainError("the dimension formula needs d >= 3")
    return comb(n + d + 1, d) - n * n - 3 * n - 3


def centroid(n: int, d: int, t) -> tuple[Fraction, ...]:
    c = (d + as_parameter(t)) / (n + 2)
    return (c,) * (n + 2)


def conv_generators(p: PairSupport, t) -> list[tuple[Fraction, ...]]:
    """``disc_t(v, x_k)`` for ``v`` in ``X`` and ``x_k`` the Mukai-minimal variable of ``H``."""
    t = Fraction(t)
    j = p.pivot
    return [tuple(Fraction(e) + (t if i == j else 0) for i, e in enumerate(v.exponents)) for v in p.sorted_X()]


@lru_cache(maxsize=None)
def _orbit(elements: tuple[OneParamSubgroup, ...], size: int):
    """Distinct weight vectors ``lambda o sigma`` with a first (lambda, sigma) producing each."""
    seen = {}
    for lam in elements:
        for sigma in permutations(range(size)):
            w = tuple(lam.weights[sigma[i]] for i in range(size))
            if w not in seen:
                seen[w] = (lam, sigma)
    return tuple((w, lam, sigma) for w, (lam, sigma) in seen.items())


def _resolve(p_or_n, d, fs):
    if fs is None:
        return get_fundamental_set(p_or_n, d)
    return fs


def dual_family(n: int, d: int, fs: FundamentalSet | None = None):
    """All ``(weights, lambda, sigma)`` with ``lambda`` in S_{n,d}: the finite test family of torus 1-PS."""
    fs = _resolve(n, d, fs)
    return _orbit(fs.elements, n + 2)


def _affine_terms(p: PairSupport, fs):
    """``(intercept, slope, lambda, sigma)`` of ``t -> mu_t(sigma . p_reduced, lambda)`` over the test family."""
    k = p.pivot
    X = [m.exponents for m in p.sorted_X()]
    out = []
    for w, lam, sigma in dual_family(p.n, p.d, fs):
        c = min(sum(a * b for a, b in zip(v, w)) for v in X)
        out.append((c, w[k], lam, sigma))
    return out


def max_mu_t(p: PairSupport, t, fs: FundamentalSet | None = None):
    """Max of ``mu_t`` over S_{n,d} and permutations of the reduced pair, with the first maximizer."""
    t = as_parameter(t)
    best = None
    for c, s, lam, sigma in _affine_terms(p, fs):
        val = c + t * s
        if best is None or val > best[0]:
            best = (val, lam, sigma)
    return best


def is_semistable_torus(p: PairSupport, t) -> bool:
    """The centroid lies in the closed hull of the shifted exponent vectors."""
    return in_convex_hull(centroid(p.n, p.d, t), conv_generators(p, t))


def is_stable_torus(p: PairSupport, t, fs: FundamentalSet | None = None) -> bool:
    """Centroid interior to the hull inside ``sum y_i = d + t``, tested against the finite dual family."""
    t = as_parameter(t)
    functionals = [w for w, _, _ in dual_family(p.n, p.d, fs)]
    return in_relative_interior(centroid(p.n, p.d, t), conv_generators(p, t), p.n + 1, functionals)


def verdict(p: PairSupport, t, fs: FundamentalSet | None = None) -> StabilityVerdict:
    t = as_parameter(t)
    semistable = is_semistable_torus(p, t)
    val, lam, sigma = max_mu_t(p, t, fs)
    if semistable != (val <= 0):
        raise RuntimeError(f"hull test and 1-PS test disagree on {p} at t={t}")
    if val < 0:
        return StabilityVerdict(Status.STABLE, None, val)
    status = Status.STRICTLY_SEMISTABLE if semistable else Status.UNSTABLE
    return StabilityVerdict(status, (lam, sigma), val)


def stability_interval(p: PairSupport, fs: FundamentalSet | None = None) -> tuple[Fraction, Fraction] | None:
    """``{t >= 0 : max mu_t <= 0}`` as an intersection of half-lines, or None if empty."""
    lo, hi = Fraction(0), None
    for c, s, _, _ in _affine_terms(p, fs):
        if s > 0:
            bound = Fraction(-c, s)
            hi = bound if hi is None else min(hi, bound)
        elif s < 0:
            lo = max(lo, Fraction(-c, s))
        elif c > 0:
            return None
    if hi is None:
        raise RuntimeError("unbounded interval of stability; the test family is incomplete")
    if lo > hi:
        return None
    return (lo, hi)


def candidate_walls(n: int, d: int, fs: FundamentalSet | None = None) -> list[Fraction]:
    """``-<m, lambda> / <x_i, lambda>`` over Xi_d, variables and S_{n,d}, clipped to ``[0, d/(n+1)]``."""
    fs = _resolve(n, d, fs)
    top = t_max(n, d)
    mons = enumerate_monomials(n, d)
    walls = {Fraction(0), top}
    for lam in fs:
        weights = {pairing(m, lam) for m in mons}
        for r in set(lam.weights):
            if r == 0:
                continue
            for w in weights:
                q = Fraction(-w, r)
                if 0 <= q <= top:
                    walls.add(q)
    return sorted(walls)


def restriction_at_tmax(p: PairSupport) -> frozenset:
    """Support of ``X n H`` for a coordinate hyperplane ``H = {x_i}``, in the remaining ``n + 1`` variables."""
    if len(p.H) != 1:
        raise InputError("restriction needs H to be a single coordinate hyperplane")
    i = next(iter(p.H)).index
    return frozenset(
        Monomial(m.exponents[:i] + m.exponents[i + 1 :]) for m in p.X if m.exponents[i] == 0
    )


def is_semistable_hypersurface(X: Iterable[Monomial]) -> bool:
    """Torus-level semistability of a hypersurface support: its centroid lies in the exponent hull."""
    X = sorted(X)
    if not X:
        return False
    nv, d = X[0].nvars, X[0].degree
    point = (Fraction(d, nv),) * nv
    return in_convex_hull(point, [m.exponents for m in X])
