"""The fundamental set of normalized one-parameter subgroups.

Each element is the vertex of the normalized weight polytope cut out by
choosing ``n`` equations from a finite pool: the chain equalities
``gamma_i = gamma_{i+1}`` and the equalities ``<I - J, gamma> = 0`` between
pairs of degree-``d`` monomials. With ``gamma_0 = 1`` and the weights summing
to zero only ``gamma_1 .. gamma_n`` are unknown.
"""
from __future__ import annotations

import json
import logging
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice
from math import gcd, lcm
from pathlib import Path

from .errors import InputError
from .exact import LinearSystem, solve_unique
from .monomials import OneParamSubgroup, enumerate_monomials

log = logging.getLogger(__name__)

CACHE_FORMAT_VERSION = 1
CACHE_ENV_VAR = "VGIT_PAIRS_CACHE_DIR"


@dataclass(frozen=True)
class FundamentalSet:
    n: int
    d: int
    elements: tuple[OneParamSubgroup, ...]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def as_lists(self) -> list[list[int]]:
        return [list(lam.weights) for lam in self.elements]


def _primitive(row):
    g = 0
    for x in row:
        g = gcd(g, x)
    if g == 0:
        return None
    row = tuple(x // g for x in row)
    if next(x for x in row if x) < 0:
        row = tuple(-x for x in row)
    return row


def equation_pool(n: int, d: int) -> list[tuple[int, ...]]:
    """Coefficient rows of Eq(n, d), primitive and deduplicated up to scalar multiples."""
    if n < 0 or d < 1:
        raise InputError("need n >= 0 and d >= 1")
    size = n + 2
    rows = set()
    for i in range(n + 1):
        rows.add(tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(size)))
    mons = [m.exponents for m in enumerate_monomials(n, d)]
    for a, b in combinations(mons, 2):
        r = _primitive(tuple(x - y for x, y in zip(a, b)))
        if r is not None:
            rows.add(r)
    return sorted(rows, reverse=True)


def _reduced_rows(n, pool):
    """Rewrite each pool row in the unknowns gamma_1..gamma_n.

    Substituting gamma_0 = 1 and gamma_{n+1} = -1 - sum gamma_i turns
    ``sum a_i gamma_i = 0`` into ``sum (a_i - a_{n+1}) gamma_i = a_{n+1} - a_0``.
    Rows that become identical give identical constraints and are merged.
    """
    out = set()
    for a in pool:
        coeffs = tuple(a[i] - a[n + 1] for i in range(1, n + 1))
        out.add((coeffs, a[n + 1] - a[0]))
    return sorted(out)


def _to_weights(n, gammas):
    full = (1,) + tuple(gammas) + (-1 - sum(gammas),)
    if any(full[i] < full[i + 1] for i in range(n + 1)):
        return None
    c = 1
    for g in full:
        c = lcm(c, g.denominator)
    return tuple(int(g * c) for g in full)


def _solve_chunk(args):
    n, rows, combos = args
    found = set()
    for combo in combos:
        system = LinearSystem([rows[i][0] for i in combo], [rows[i][1] for i in combo])
        sol = solve_unique(system)
        if sol is None:
            continue
        w = _to_weights(n, sol)
        if w is not None:
            found.add(w)
    return found


def _chunks(iterable, size):
    it = iter(iterable)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def fundamental_set(n: int, d: int, jobs: int = 1) -> FundamentalSet:
    """Enumerate S_{n,d}; sorted lexicographically descending on weights."""
    if n < 0 or d < 1:
        raise InputError("need n >= 0 and d >= 1")
    if n == 0:
        # no unknowns: gamma = (1, -1) is forced
        return FundamentalSet(n, d, (OneParamSubgroup((1, -1)),))
    rows = _reduced_rows(n, equation_pool(n, d))
    combos = combinations(range(len(rows)), n)
    found = set()
    if jobs <= 1:
        found = _solve_chunk((n, rows, combos))
    else:
        tasks = ((n, rows, block) for block in _chunks(combos, 2000))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_solve_chunk, tasks):
                found |= part
    elements = tuple(OneParamSubgroup(w) for w in sorted(found, reverse=True))
    return FundamentalSet(n, d, elements)


@lru_cache(maxsize=None)
def _memo_fundamental_set(n, d):
    return fundamental_set(n, d)


def get_fundamental_set(n: int, d: int, cache_dir: str | os.PathLike | None = None, jobs: int = 1) -> FundamentalSet:
    """S_{n,d}, read from the disk cache when present, computed (and cached) otherwise.

    Without a ``cache_dir`` only the in-process memo is used. A cache that
    cannot be written only logs a warning.
    """
    if cache_dir is None:
        return _memo_fundamental_set(n, d)
    path = Path(cache_dir) / f"fundamental_n{n}_d{d}.json"
    cached = _read_cache(path, n, d)
    if cached is not None:
        return cached
    fs = fundamental_set(n, d, jobs=jobs)
    try:
        write_cache(path, fs)
    except OSError as exc:
        log.warning("could not write cache %s: %s", path, exc)
    return fs


def _read_cache(path, n, d):
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError):
        return None
    if not isinstance(data, dict) or data.get("format_version") != CACHE_FORMAT_VERSION:
        return None
    if data.get("n") != n or data.get("d") != d:
        return None
    try:
        return FundamentalSet(n, d, tuple(OneParamSubgroup(tuple(w)) for w in data["elements"]))
    except (KeyError, TypeError, ValueError):
        return None


def write_cache(path, fs: FundamentalSet) -> None:
    """Write the cache JSON atomically (temp file in the same directory, then rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        "format_version": CACHE_FORMAT_VERSION,
        "n": fs.n,
        "d": fs.d,
        "elements": fs.as_lists(),
    }
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(payload, fh)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
