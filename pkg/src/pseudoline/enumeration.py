"""Exhaustive generation of wiring diagrams for small wire counts.

Backtracking over swap sequences with the cross-each-pair-once pruning rule.
Raw mode yields every valid word exactly once, in lexicographic track order;
dedup mode keeps one representative per canonical incidence certificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from .analysis import is_in_Im
from .cells import CellComplex
from .errors import NTooLarge
from .isomorphism import canonical_form
from .sweep import census_sides
from .wiring import WiringDiagram

__all__ = ["EnumerationStream", "enumerate_simple", "raw_words", "MAX_N"]

MAX_N = 7  # raw word counts explode past this


def raw_words(n: int, prefix: tuple[int, ...] = ()) -> Iterator[tuple[int, ...]]:
    """All valid swap words for n wires, optionally below a fixed prefix."""
    total = n * (n - 1) // 2
    perm = list(range(1, n + 1))
    crossed = [[False] * (n + 1) for _ in range(n + 1)]
    word: list[int] = []

    def apply(t: int) -> bool:
        u, v = perm[t - 1], perm[t]
        if crossed[u][v]:
            return False
        crossed[u][v] = crossed[v][u] = True
        perm[t - 1], perm[t] = v, u
        word.append(t)
        return True

    def undo() -> None:
        t = word.pop()
        v, u = perm[t - 1], perm[t]
        perm[t - 1], perm[t] = u, v
        crossed[u][v] = crossed[v][u] = False

    for t in prefix:
        if not apply(t):
            raise ValueError(f"invalid prefix {prefix}")

    def rec() -> Iterator[tuple[int, ...]]:
        if len(word) == total:
            yield tuple(word)
            return
        for t in range(1, n):
            if apply(t):
                yield from rec()
                undo()

    yield from rec()


def _has_one_ge5(n: int, word: tuple[int, ...]) -> bool:
    sides = census_sides(n, word)
    return sum(1 for s in sides if s >= 5) == 1


_FILTERS: dict[str, Callable[[int, tuple[int, ...]], bool]] = {
    "one-ge5": _has_one_ge5,
    "im": lambda n, w: is_in_Im(WiringDiagram(n, w)).member,
}


@dataclass
class EnumerationStream:
    n: int
    filter: str | None
    dedup: bool
    _iter: Iterator[WiringDiagram]

    def __iter__(self) -> Iterator[WiringDiagram]:
        return self._iter

    def count(self) -> int:
        return sum(1 for _ in self._iter)


def enumerate_simple(n: int, filter: str | None = None, dedup: bool = False) -> EnumerationStream:
    if not 1 <= n <= MAX_N:
        raise NTooLarge(f"n={n} outside [1, {MAX_N}]")
    if filter is not None and filter not in _FILTERS:
        raise ValueError(f"unknown filter {filter!r}; choose from {sorted(_FILTERS)}")

    def gen() -> Iterator[WiringDiagram]:
        pred = _FILTERS[filter] if filter else None
        seen = set()
        for word in raw_words(n):
            if pred is not None and not pred(n, word):
                continue
            d = WiringDiagram(n, word)
            if dedup:
                cert = canonical_form(d)
                if cert in seen:
                    continue
                seen.add(cert)
            yield d

    return EnumerationStream(n, filter, dedup, gen())
