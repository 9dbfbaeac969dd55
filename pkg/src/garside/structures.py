"""Concrete Garside structures: classical braid groups and free abelian groups.

Braid simple elements are permutation braids, stored as one-line permutation
tables: entry k (0-based) is the final position of the strand that starts at
position k+1, and composing payloads applies the left factor first.  Under
this convention atom i divides s on the left iff s descends at position i,
and divides it on the right iff the values i and i+1 appear inverted.

Free abelian simple elements are coordinate subsets; the lattice is the
boolean lattice, which makes Z^n a useful trivial cross-check instance.
"""

from __future__ import annotations

import functools
import itertools
import math
import os
from typing import Iterator

from .core import (
    EnumerationCapError,
    GarsideStructure,
    Payload,
    SimpleElement,
    WordParseError,
)

DEFAULT_SIMPLE_CAP = math.factorial(10)
_CAP_ENV_VAR = "GARSIDE_SIMPLE_CAP"


def simple_cap() -> int:
    """Enumeration cap; overridable through the GARSIDE_SIMPLE_CAP variable."""
    raw = os.environ.get(_CAP_ENV_VAR)
    if raw is None:
        return DEFAULT_SIMPLE_CAP
    try:
        value = int(raw)
    except ValueError as exc:
        raise WordParseError(f"bad {_CAP_ENV_VAR} value: {raw!r}") from exc
    if value < 1:
        raise WordParseError(f"bad {_CAP_ENV_VAR} value: {raw!r}")
    return value


class BraidStructure(GarsideStructure):
    """The braid group B_n with its classical Garside structure.

    D is the half twist, whose permutation is the order reversal; the simple
    elements are the n! permutation braids and ||D|| = n(n-1)/2.
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("braid groups need at least 2 strands")
        self.n = n
        self.identifier = f"braid:{n}"
        self.identity = tuple(range(1, n + 1))
        self.delta = tuple(range(n, 0, -1))
        atoms = []
        for i in range(1, n):
            table = list(range(1, n + 1))
            table[i - 1], table[i] = table[i], table[i - 1]
            atoms.append(tuple(table))
        self.atoms = tuple(atoms)
        super().__init__()

    def compose(self, a: Payload, b: Payload) -> Payload:
        """Permutation of the braid ab (a applied first)."""
        return tuple(b[x - 1] for x in a)

    def letter_length(self, s: Payload) -> int:
        n = self.n
        return sum(1 for i in range(n) for j in range(i + 1, n) if s[i] > s[j])

    def atom_prefix(self, i: int, s: Payload) -> bool:
        return s[i - 1] > s[i]

    def atom_suffix(self, i: int, s: Payload) -> bool:
        return s.index(i) > s.index(i + 1)

    def strip_atom_prefix(self, i: int, s: Payload) -> Payload:
        t = list(s)
        t[i - 1], t[i] = t[i], t[i - 1]
        return tuple(t)

    def strip_atom_suffix(self, s: Payload, i: int) -> Payload:
        pi, pj = s.index(i), s.index(i + 1)
        t = list(s)
        t[pi], t[pj] = i + 1, i
        return tuple(t)

    def simple_product(self, a: Payload, b: Payload) -> Payload | None:
        c = self.compose(a, b)
        if self.letter_length(c) == self.letter_length(a) + self.letter_length(b):
            return c
        return None

    def simple_count(self) -> int:
        return math.factorial(self.n)

    def iter_payloads(self) -> Iterator[Payload]:
        # Lexicographic one-line order keeps every enumeration reproducible.
        return itertools.permutations(range(1, self.n + 1))

    def tau(self, s: Payload) -> Payload:
        n = self.n
        return tuple(n + 1 - s[n - 1 - k] for k in range(n))


class FreeAbelianStructure(GarsideStructure):
    """Z^n with D = x_1 ... x_n; the simple elements are the 2^n subsets."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("free abelian structures need rank at least 1")
        self.n = n
        self.identifier = f"zn:{n}"
        self.identity = frozenset()
        self.delta = frozenset(range(1, n + 1))
        self.atoms = tuple(frozenset((i,)) for i in range(1, n + 1))
        super().__init__()

    def letter_length(self, s: Payload) -> int:
        return len(s)

    def atom_prefix(self, i: int, s: Payload) -> bool:
        return i in s

    def atom_suffix(self, i: int, s: Payload) -> bool:
        return i in s

    def strip_atom_prefix(self, i: int, s: Payload) -> Payload:
        return s - {i}

    def strip_atom_suffix(self, s: Payload, i: int) -> Payload:
        return s - {i}

    def simple_product(self, a: Payload, b: Payload) -> Payload | None:
        if a & b:
            return None
        return a | b

    def simple_count(self) -> int:
        return 2**self.n

    def iter_payloads(self) -> Iterator[Payload]:
        for mask in range(2**self.n):
            yield frozenset(i + 1 for i in range(self.n) if mask >> i & 1)

    # The boolean lattice admits direct formulas; results agree with the
    # generic greedy versions, which the tests cross-check.
    def meet(self, a: Payload, b: Payload) -> Payload:
        return a & b

    def suffix_meet(self, a: Payload, b: Payload) -> Payload:
        return a & b

    def join(self, a: Payload, b: Payload) -> Payload:
        return a | b

    def right_complement(self, a: Payload) -> Payload:
        return self.delta - a

    def left_complement(self, a: Payload) -> Payload:
        return self.delta - a

    def tau(self, s: Payload) -> Payload:
        return s


@functools.lru_cache(maxsize=None)
def braid(n: int) -> BraidStructure:
    """The braid group B_n; cached so repeated lookups share tables."""
    return BraidStructure(n)


@functools.lru_cache(maxsize=None)
def free_abelian(n: int) -> FreeAbelianStructure:
    return FreeAbelianStructure(n)


def from_descriptor(text: str) -> GarsideStructure:
    """Structure for a CLI descriptor such as ``braid:4`` or ``zn:3``."""
    family, sep, rank = text.partition(":")
    if not sep:
        raise WordParseError(f"bad structure descriptor {text!r} (expected family:rank)")
    try:
        n = int(rank)
    except ValueError as exc:
        raise WordParseError(f"bad structure rank in {text!r}") from exc
    if family == "braid":
        if n < 2:
            raise WordParseError("braid rank must be at least 2")
        return braid(n)
    if family == "zn":
        if n < 1:
            raise WordParseError("zn rank must be at least 1")
        return free_abelian(n)
    raise WordParseError(f"unknown structure family {family!r}")


def enumerate_simples(
    structure: GarsideStructure, cap: int | None = None
) -> list[SimpleElement]:
    """All simple elements in deterministic order, guarded by the cap."""
    limit = simple_cap() if cap is None else cap
    count = structure.simple_count()
    if count > limit:
        raise EnumerationCapError(
            f"{structure.identifier} has {count} simple elements, above the cap {limit}"
        )
    return [SimpleElement(structure, p) for p in structure.iter_payloads()]
