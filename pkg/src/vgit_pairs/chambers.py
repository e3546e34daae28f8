"""Wall and chamber decomposition of the stability parameter interval ``[0, d/(n+1)]``."""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .families import Kind, maximal_families
from .fundamental import FundamentalSet, get_fundamental_set
from .stability import candidate_walls, t_max


@dataclass(frozen=True)
class WallChamberDecomposition:
    n: int
    d: int
    candidates: tuple[Fraction, ...]
    walls: tuple[Fraction, ...]
    chambers: tuple[tuple[Fraction, Fraction], ...]
    representatives: tuple[Fraction, ...]


def classification(n: int, d: int, t, fs: FundamentalSet | None = None) -> frozenset:
    """Supports ``(V, B)`` of the maximal ⊕-families at ``t``."""
    return frozenset((f.V, f.B) for f in maximal_families(n, d, t, Kind.WEAK, fs))


def _classify(args):
    n, d, t, fs = args
    return classification(n, d, t, fs)


def classify_many(n, d, ts, fs, jobs=1):
    tasks = [(n, d, t, fs) for t in ts]
    if jobs <= 1:
        return [_classify(a) for a in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_classify, tasks))


def wall_chamber_decomposition(n: int, d: int, fs: FundamentalSet | None = None, jobs: int = 1) -> WallChamberDecomposition:
    """Filter candidate walls to those where the maximal-family classification changes.

    ``0`` and ``t_max`` are always walls. An interior candidate is kept when its
    classification differs from that of the open interval on either side.
    Families only change at candidate values, so each open interval between
    consecutive candidates has a constant classification, read at its midpoint.
    """
    fs = fs if fs is not None else get_fundamental_set(n, d)
    cands = candidate_walls(n, d, fs)
    mids = [(a + b) / 2 for a, b in zip(cands, cands[1:])]
    classes = classify_many(n, d, cands + mids, fs, jobs)
    at_wall, at_mid = classes[: len(cands)], classes[len(cands) :]
    walls = [cands[0]]
    for i in range(1, len(cands) - 1):
        if at_wall[i] != at_mid[i - 1] or at_wall[i] != at_mid[i]:
            walls.append(cands[i])
    if cands[-1] != cands[0]:
        walls.append(cands[-1])
    assert walls[-1] == t_max(n, d)
    chambers = tuple(zip(walls, walls[1:]))
    reps = tuple((a + b) / 2 for a, b in chambers)
    return WallChamberDecomposition(n, d, tuple(cands), tuple(walls), chambers, reps)
