"""Maximal t-(semi)destabilized monomial families and their annihilators.

For a normalized ``lambda`` and a pivot variable ``x_i`` the family
``N_t(lambda, x_i) = (V, B)`` collects every degree-``d`` monomial ``v`` with
``<v, lambda> + t r_i > 0`` (kind ``+``) or ``>= 0`` (kind ``⊕``), paired with
the variables ``B = {x_0, ..., x_i}``.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from .errors import DomainError, InputError
from .fundamental import FundamentalSet, get_fundamental_set
from .monomials import Monomial, OneParamSubgroup, enumerate_monomials, pairing
from .stability import (
    PairSupport,
    Status,
    as_parameter,
    is_semistable_torus,
    permute_monomial,
    t_max,
    verdict,
)


class Kind(str, enum.Enum):
    STRICT = "+"
    WEAK = "⊕"


class BoundaryWarning(UserWarning):
    """Annihilator evaluated at t = 0 or t = t_max, outside the open interval it is stated on."""


@dataclass(frozen=True)
class DestabilizingFamily:
    lam: OneParamSubgroup
    pivot: int
    V: frozenset
    B: frozenset
    kind: Kind
    t: Fraction

    @property
    def support(self) -> tuple[frozenset, frozenset]:
        return (self.V, self.B)

    def contained_in(self, other: "DestabilizingFamily") -> bool:
        return self.V <= other.V and self.B <= other.B

    def generic_member(self, n: int, d: int) -> PairSupport:
        return PairSupport(self.V, self.B, n, d)


@dataclass(frozen=True)
class AnnihilatorData:
    lam: OneParamSubgroup
    pivot: int
    V0: frozenset
    B0: frozenset
    t: Fraction
    # evaluated at an endpoint of [0, t_max]
    boundary: bool = False


@dataclass(frozen=True)
class ClosedOrbitCandidate:
    V0: frozenset
    B0: frozenset
    witnesses: tuple = field(default=())  # (lambda, pivot) pairs
    boundary: bool = False


def _check_pivot(lam, pivot_index):
    if not lam.is_normalized:
        raise InputError(f"{lam} is not normalized")
    if not 0 <= pivot_index < len(lam):
        raise InputError(f"pivot x{pivot_index} out of range")


def family(lam: OneParamSubgroup, pivot_index: int, t, kind: Kind, d: int) -> DestabilizingFamily:
    _check_pivot(lam, pivot_index)
    t = as_parameter(t)
    kind = Kind(kind)
    size = len(lam)
    shift = t * lam.weights[pivot_index]
    if kind is Kind.STRICT:
        V = frozenset(v for v in enumerate_monomials(size - 2, d) if pairing(v, lam) + shift > 0)
    else:
        V = frozenset(v for v in enumerate_monomials(size - 2, d) if pairing(v, lam) + shift >= 0)
    B = frozenset(Monomial.variable(j, size) for j in range(pivot_index + 1))
    return DestabilizingFamily(lam, pivot_index, V, B, kind, t)


def _support_key(V, B):
    return (tuple(m.exponents for m in sorted(V)), tuple(sorted(b.index for b in B)))


def maximal_only(families: list[DestabilizingFamily]) -> list[DestabilizingFamily]:
    """Drop families strictly contained in another; identical supports keep the first occurrence."""
    out = []
    seen = set()
    for f in families:
        key = (f.V, f.B)
        if key in seen:
            continue
        if any(f.contained_in(g) and (f.V, f.B) != (g.V, g.B) for g in families):
            continue
        seen.add(key)
        out.append(f)
    return out


def maximal_families(n: int, d: int, t, kind: Kind, fs: FundamentalSet | None = None) -> list[DestabilizingFamily]:
    """Maximal families over S_{n,d} x pivots, in (lambda, pivot) order of S_{n,d}."""
    t = as_parameter(t)
    if t > t_max(n, d):
        raise DomainError(f"t = {t} exceeds t_max = {t_max(n, d)}")
    fs = fs if fs is not None else get_fundamental_set(n, d)
    candidates = []
    for lam in fs:
        for i in range(n + 2):
            f = family(lam, i, t, kind, d)
            if f.V:
                candidates.append(f)
    return maximal_only(candidates)


def zero_pairs(lam: OneParamSubgroup, pivot_index: int, t, d: int) -> set:
    """All ``(v, m)`` in the ⊕-family with ``<v, lambda> + t <m, lambda> = 0``, by direct double loop."""
    f = family(lam, pivot_index, t, Kind.WEAK, d)
    return {(v, m) for v in f.V for m in f.B if pairing(v, lam) + f.t * pairing(m, lam) == 0}


def annihilator(
    lam: OneParamSubgroup, pivot_index: int, t, d: int, allow_boundary: bool = False
) -> AnnihilatorData | None:
    """``(V0, B0)`` with ``Ann_t(lambda, x_i) = V0 x B0``, or None when the annihilator is empty.

    Defined for ``0 < t < t_max``. With ``allow_boundary`` the endpoints are
    also accepted and flagged; at ``t = 0`` the product structure may fail and
    is then not asserted.
    """
    _check_pivot(lam, pivot_index)
    t = as_parameter(t)
    n = len(lam) - 2
    top = t_max(n, d)
    boundary = t == 0 or t == top
    if t > top or (boundary and not allow_boundary):
        raise DomainError(f"annihilator needs 0 < t < {top}, got {t}")
    if boundary:
        warnings.warn(f"annihilator at boundary t = {t}", BoundaryWarning, stacklevel=2)
    f = family(lam, pivot_index, t, Kind.WEAK, d)
    if not f.V:
        return None
    weight = {m: pairing(m, lam) for m in f.B}
    low = min(weight.values())
    B0 = frozenset(m for m in f.B if weight[m] == low)
    V0 = frozenset(v for v in f.V if any(pairing(v, lam) + t * weight[m] == 0 for m in f.B))
    zeros = {(v, m) for v in f.V for m in f.B if pairing(v, lam) + t * weight[m] == 0}
    if not zeros:
        return None
    if t > 0 and zeros != {(v, m) for v in V0 for m in B0}:
        raise AssertionError(f"annihilator of {lam}, x{pivot_index} at t={t} is not a product")
    return AnnihilatorData(lam, pivot_index, V0, B0, t, boundary)


def canonical_under_permutation(V, B, nvars: int):
    """Representative of ``(V, B)`` modulo coordinate permutations: the lexicographically largest image."""
    best = None
    for sigma in permutations(range(nvars)):
        V2 = frozenset(permute_monomial(m, sigma) for m in V)
        B2 = frozenset(permute_monomial(m, sigma) for m in B)
        exps, idx = _support_key(V2, B2)
        # prefer exponent mass on low-index variables
        rank_key = (exps, tuple(-i for i in idx))
        if best is None or rank_key > best[0]:
            best = (rank_key, V2, B2)
    return best[1], best[2]


def closed_orbit_candidates(n: int, d: int, t, fs: FundamentalSet | None = None) -> list[ClosedOrbitCandidate]:
    """Supports of candidate closed strictly t-semistable orbits.

    For every maximal ⊕-family whose generic member is t-semistable, its
    nonempty annihilator ``(V0, B0)``. Supports equal up to a coordinate
    permutation are merged, keeping every witness.
    """
    t = as_parameter(t)
    top = t_max(n, d)
    if t > top:
        raise DomainError(f"t = {t} exceeds t_max = {top}")
    boundary = t == 0 or t == top
    merged: dict = {}
    order = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", BoundaryWarning)
        for f in maximal_families(n, d, t, Kind.WEAK, fs):
            if not is_semistable_torus(f.generic_member(n, d), t):
                continue
            ann = annihilator(f.lam, f.pivot, t, d, allow_boundary=True)
            if ann is None:
                continue
            V, B = canonical_under_permutation(ann.V0, ann.B0, n + 2)
            key = _support_key(V, B)
            if key not in merged:
                merged[key] = (V, B, [])
                order.append(key)
            merged[key][2].append((f.lam, f.pivot))
    out = [ClosedOrbitCandidate(merged[k][0], merged[k][1], tuple(merged[k][2]), boundary) for k in sorted(order)]
    for c in out:
        v = verdict(PairSupport(c.V0, c.B0, n, d), t, fs)
        if v.status is not Status.STRICTLY_SEMISTABLE:
            raise AssertionError(f"closed-orbit candidate {c} is {v.status.value} at t={t}")
    return out
