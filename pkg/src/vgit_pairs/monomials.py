"""Monomials, diagonal one-parameter subgroups, the pairing and the Mukai order."""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence

from .errors import InputError, ParseError


@dataclass(frozen=True)
class Monomial:
    """Exponent vector ``(d_0, ..., d_{n+1})`` of a monomial in ``n + 2`` variables.

    Instances sort in the canonical order used for every output: lexicographic
    descending on exponents, so ``x0^2 < x0*x1 < x1^2`` as sort keys.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if not exps:
            raise InputError("a monomial needs at least one variable")
        if any(e < 0 for e in exps):
            raise InputError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def variable(cls, index: int, nvars: int) -> "Monomial":
        if not 0 <= index < nvars:
            raise InputError(f"variable x{index} out of range for {nvars} variables")
        return cls(tuple(int(i == index) for i in range(nvars)))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def index(self) -> int:
        """Index of a degree-1 monomial ``x_i``."""
        if self.degree != 1:
            raise InputError(f"{self} is not a variable")
        return self.exponents.index(1)

    def __lt__(self, other):
        return self.exponents > other.exponents

    def __le__(self, other):
        return self.exponents >= other.exponents

    def __gt__(self, other):
        return self.exponents < other.exponents

    def __ge__(self, other):
        return self.exponents <= other.exponents

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i}")
            elif e > 1:
                parts.append(f"x{i}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        return f"Monomial({self})"


@dataclass(frozen=True, order=True)
class OneParamSubgroup:
    """Diagonal 1-PS ``diag(s^{r_0}, ..., s^{r_{n+1}})`` of SL(n+2) given by its weights."""

    weights: tuple[int, ...]

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        if sum(w) != 0:
            raise InputError(f"weights {w} do not sum to zero")
        if not any(w):
            raise InputError("the trivial subgroup is not allowed")
        object.__setattr__(self, "weights", w)

    @property
    def is_normalized(self) -> bool:
        w = self.weights
        return all(a >= b for a, b in zip(w, w[1:]))

    def __len__(self):
        return len(self.weights)

    def __str__(self):
        return "(" + ", ".join(str(x) for x in self.weights) + ")"


def enumerate_monomials(n: int, k: int) -> list[Monomial]:
    """All degree-``k`` monomials in ``n + 2`` variables, lexicographic descending."""
    if n < 0 or k < 0:
        raise InputError("need n >= 0 and k >= 0")
    return [Monomial(e) for e in _compositions(k, n + 2)]


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def pairing(m: Monomial, lam: OneParamSubgroup | Sequence[int]) -> int:
    """``<m, lambda> = sum d_i r_i``."""
    w = lam.weights if isinstance(lam, OneParamSubgroup) else lam
    if len(w) != m.nvars:
        raise InputError(f"length mismatch: {m} has {m.nvars} variables, weights have {len(w)}")
    return sum(a * b for a, b in zip(m.exponents, w))


def mukai_leq(v: Monomial, m: Monomial) -> bool:
    """``v <= m`` in the Mukai order, via dominance of prefix sums."""
    if v.nvars != m.nvars or v.degree != m.degree:
        raise InputError(f"cannot compare {v} and {m}: different degree or number of variables")
    return all(a <= b for a, b in zip(accumulate(v.exponents), accumulate(m.exponents)))


def mukai_min_variable(H: Iterable[Monomial]) -> Monomial:
    """The Mukai-minimal variable of ``H``: the one with the largest index."""
    H = list(H)
    if not H:
        raise InputError("empty set of variables")
    return max(H, key=lambda x: x.index)


_TERM_RE = re.compile(r"x(\d+)(?:\^(\d+))?")


def parse_monomial(text: str, nvars: int | None = None, line: int = 1, column: int = 1) -> Monomial:
    """Parse ``"x0^2*x1"``; ``nvars`` defaults to one more than the largest index."""
    factors = {}
    pos = 0
    s = text
    while True:
        while pos < len(s) and s[pos].isspace():
            pos += 1
        m = _TERM_RE.match(s, pos)
        if m is None:
            raise ParseError(f"expected a factor like x3 or x3^2, got {s[pos:]!r}", line, column + pos)
        i = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        factors[i] = factors.get(i, 0) + e
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            break
        if s[pos] != "*":
            raise ParseError(f"expected '*', got {s[pos]!r}", line, column + pos)
        pos += 1
    size = nvars if nvars is not None else max(factors) + 1
    if max(factors) >= size:
        raise ParseError(f"variable x{max(factors)} out of range for {size} variables", line, column)
    return Monomial(tuple(factors.get(i, 0) for i in range(size)))
