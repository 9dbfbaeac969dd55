"""Kernel for Garside-group computations: simple elements and left normal forms.

Every group element is kept in left normal form ``D^p x_1 ... x_r``, where D
is the Garside element of the ambient structure, each factor x_i is a proper
simple element (neither trivial nor D), and each adjacent pair of factors is
left weighted.  A concrete structure supplies a small set of primitive
operations on its simple-element payloads; the lattice operations, the
complements, tau, the local left-weighting step and all group arithmetic are
derived here, generically, and memoised per structure.

Conventions fixed once for the whole package:

* payload composition applies the LEFT factor first;
* atoms are indexed 1..atom_count, matching the letters of the word syntax;
* payloads are hashable values compared by equality, so two simple elements
  are equal iff their payloads are identical.
"""

from __future__ import annotations

import abc
import dataclasses
import math
from typing import Hashable, Iterable, Iterator, Sequence

Payload = Hashable


class GarsideError(Exception):
    """Base class for domain errors raised by this package."""


class StructureMismatchError(GarsideError):
    """Operands belong to different Garside structures."""


class EnumerationCapError(GarsideError):
    """A computation would enumerate more simple elements than the cap allows."""


class WordParseError(GarsideError):
    """A word does not conform to the input syntax."""


class GarsideStructure(abc.ABC):
    """Contract shared by all concrete Garside structures.

    Subclasses set ``identifier``, ``atoms``, ``identity`` and ``delta``
    before calling ``super().__init__()``, and implement the primitive hooks
    below.  Structures are immutable after construction and freely shareable.
    """

    identifier: str
    atoms: tuple[Payload, ...]
    identity: Payload
    delta: Payload

    def __init__(self) -> None:
        self.atom_count = len(self.atoms)
        self.delta_length = self.letter_length(self.delta)
        self._weight_cache: dict[tuple[Payload, Payload], tuple[Payload, Payload]] = {}
        self._right_comp_cache: dict[Payload, Payload] = {}
        self._left_comp_cache: dict[Payload, Payload] = {}
        self._tau_cache: dict[Payload, Payload] = {}
        self._word_cache: dict[Payload, tuple[int, ...]] = {}
        self.tau_order = self._compute_tau_order()

    # ------------------------------------------------------------------
    # Primitive hooks.
    # ------------------------------------------------------------------

    @abc.abstractmethod
    def letter_length(self, s: Payload) -> int:
        """Number of atoms in any positive word spelling the simple element s."""

    @abc.abstractmethod
    def atom_prefix(self, i: int, s: Payload) -> bool:
        """Whether atom i divides s on the left."""

    @abc.abstractmethod
    def atom_suffix(self, i: int, s: Payload) -> bool:
        """Whether atom i divides s on the right (s = t * atom_i)."""

    @abc.abstractmethod
    def strip_atom_prefix(self, i: int, s: Payload) -> Payload:
        """atom_i^-1 * s.  Only valid when atom_prefix(i, s)."""

    @abc.abstractmethod
    def strip_atom_suffix(self, s: Payload, i: int) -> Payload:
        """s * atom_i^-1.  Only valid when atom_suffix(i, s)."""

    @abc.abstractmethod
    def simple_product(self, a: Payload, b: Payload) -> Payload | None:
        """The product ab when it is still simple, else None."""

    @abc.abstractmethod
    def simple_count(self) -> int:
        """Size of the interval [1, D]."""

    @abc.abstractmethod
    def iter_payloads(self) -> Iterator[Payload]:
        """All simple payloads exactly once, in a fixed deterministic order."""

    # ------------------------------------------------------------------
    # Derived operations on payloads.
    # ------------------------------------------------------------------

    def first_atom(self, s: Payload) -> int | None:
        """Smallest atom index dividing s on the left, or None for the identity."""
        for i in range(1, self.atom_count + 1):
            if self.atom_prefix(i, s):
                return i
        return None

    def _last_atom(self, s: Payload) -> int | None:
        for i in range(1, self.atom_count + 1):
            if self.atom_suffix(i, s):
                return i
        return None

    def divides(self, a: Payload, b: Payload) -> bool:
        """Prefix test a <= b, by greedily peeling atoms of a off both sides."""
        while a != self.identity:
            i = self.first_atom(a)
            if not self.atom_prefix(i, b):
                return False
            a = self.strip_atom_prefix(i, a)
            b = self.strip_atom_prefix(i, b)
        return True

    def right_divides(self, a: Payload, b: Payload) -> bool:
        """Suffix test: b = c * a for some positive c."""
        while a != self.identity:
            i = self._last_atom(a)
            if not self.atom_suffix(i, b):
                return False
            a = self.strip_atom_suffix(a, i)
            b = self.strip_atom_suffix(b, i)
        return True

    def left_quotient(self, a: Payload, b: Payload) -> Payload:
        """a^-1 * b.  Only valid when a divides b."""
        while a != self.identity:
            i = self.first_atom(a)
            if not self.atom_prefix(i, b):
                raise GarsideError("left_quotient: first operand is not a prefix")
            a = self.strip_atom_prefix(i, a)
            b = self.strip_atom_prefix(i, b)
        return b

    def meet(self, a: Payload, b: Payload) -> Payload:
        """Greatest common prefix, by greedy atom accumulation.

        The lattice axiom makes the result independent of which common atom
        is picked at each step; we always pick the smallest index so that the
        computation is deterministic.
        """
        m = self.identity
        while True:
            found = None
            for i in range(1, self.atom_count + 1):
                if self.atom_prefix(i, a) and self.atom_prefix(i, b):
                    found = i
                    break
            if found is None:
                return m
            m = self._simple_product_strict(m, self.atoms[found - 1])
            a = self.strip_atom_prefix(found, a)
            b = self.strip_atom_prefix(found, b)

    def suffix_meet(self, a: Payload, b: Payload) -> Payload:
        """Greatest common suffix (the meet for the suffix order)."""
        m = self.identity
        while True:
            found = None
            for i in range(1, self.atom_count + 1):
                if self.atom_suffix(i, a) and self.atom_suffix(i, b):
                    found = i
                    break
            if found is None:
                return m
            m = self._simple_product_strict(self.atoms[found - 1], m)
            a = self.strip_atom_suffix(a, found)
            b = self.strip_atom_suffix(b, found)

    def join(self, a: Payload, b: Payload) -> Payload:
        """Least common upper bound in [1, D].

        Uses the complement duality: x covers both a and b iff the right
        complement of x is a common suffix of the right complements of a and
        b, so the join is the left complement of their suffix meet.
        """
        m = self.suffix_meet(self.right_complement(a), self.right_complement(b))
        return self.left_complement(m)

    def right_complement(self, a: Payload) -> Payload:
        """a^-1 * D, the unique simple element with a * comp = D."""
        cached = self._right_comp_cache.get(a)
        if cached is None:
            rest, d = a, self.delta
            while rest != self.identity:
                i = self.first_atom(rest)
                rest = self.strip_atom_prefix(i, rest)
                d = self.strip_atom_prefix(i, d)
            cached = self._right_comp_cache.setdefault(a, d)
        return cached

    def left_complement(self, a: Payload) -> Payload:
        """D * a^-1, the inverse of the right-complement bijection."""
        cached = self._left_comp_cache.get(a)
        if cached is None:
            rest, d = a, self.delta
            while rest != self.identity:
                i = self._last_atom(rest)
                rest = self.strip_atom_suffix(rest, i)
                d = self.strip_atom_suffix(d, i)
            cached = self._left_comp_cache.setdefault(a, d)
        return cached

    def tau(self, s: Payload) -> Payload:
        """D^-1 * s * D.  Equals the square of the right complement."""
        cached = self._tau_cache.get(s)
        if cached is None:
            cached = self._tau_cache.setdefault(
                s, self.right_complement(self.right_complement(s))
            )
        return cached

    def tau_iter(self, s: Payload, k: int) -> Payload:
        """tau^k with k any integer; reduced modulo the order of tau."""
        for _ in range(k % self.tau_order):
            s = self.tau(s)
        return s

    def _simple_product_strict(self, a: Payload, b: Payload) -> Payload:
        c = self.simple_product(a, b)
        if c is None:
            raise GarsideError("product of simple elements left the interval [1, D]")
        return c

    def weight_pair(self, a: Payload, b: Payload) -> tuple[Payload, Payload]:
        """Left-weight the pair (a, b): move the largest possible prefix of b onto a.

        Returns the rewritten pair; the pair is already left weighted iff it
        is returned unchanged.  Memoised, since normal-form computations hit
        the same pairs over and over.
        """
        key = (a, b)
        cached = self._weight_cache.get(key)
        if cached is None:
            t = self.meet(self.right_complement(a), b)
            if t == self.identity:
                cached = key
            else:
                cached = (self._simple_product_strict(a, t), self.left_quotient(t, b))
            self._weight_cache[key] = cached
        return cached

    def is_left_weighted_pair(self, a: Payload, b: Payload) -> bool:
        return self.weight_pair(a, b) == (a, b)

    def canonical_word(self, s: Payload) -> tuple[int, ...]:
        """Deterministic positive word for s: repeatedly peel the smallest atom."""
        cached = self._word_cache.get(s)
        if cached is None:
            letters = []
            rest = s
            while rest != self.identity:
                i = self.first_atom(rest)
                letters.append(i)
                rest = self.strip_atom_prefix(i, rest)
            cached = self._word_cache.setdefault(s, tuple(letters))
        return cached

    def spell(self, s: Payload) -> str:
        """Render a payload as a word; digits are run together when unambiguous."""
        word = self.canonical_word(s)
        if not word:
            return "e"
        if self.atom_count <= 9:
            return "".join(str(i) for i in word)
        return " ".join(str(i) for i in word)

    def _compute_tau_order(self) -> int:
        # tau permutes the atom set, so its order is the lcm of the atom
        # orbit lengths (and D^order is central).
        order = 1
        for a in self.atoms:
            k, cur = 1, self.tau(a)
            while cur != a:
                cur = self.tau(cur)
                k += 1
            order = math.lcm(order, k)
        return order

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GarsideStructure):
            return self.identifier == other.identifier
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.identifier)

    def __repr__(self) -> str:
        return f"<GarsideStructure {self.identifier}>"


# ----------------------------------------------------------------------
# Public value types.
# ----------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SimpleElement:
    """A divisor of the Garside element, wrapped with its structure."""

    structure: GarsideStructure
    payload: Payload

    def _require_same(self, other: "SimpleElement") -> None:
        if self.structure != other.structure:
            raise StructureMismatchError(
                f"{self.structure.identifier} vs {other.structure.identifier}"
            )

    @property
    def is_identity(self) -> bool:
        return self.payload == self.structure.identity

    @property
    def is_delta(self) -> bool:
        return self.payload == self.structure.delta

    def letter_length(self) -> int:
        return self.structure.letter_length(self.payload)

    def is_prefix_of(self, other: "SimpleElement") -> bool:
        self._require_same(other)
        return self.structure.divides(self.payload, other.payload)

    def meet(self, other: "SimpleElement") -> "SimpleElement":
        self._require_same(other)
        return SimpleElement(self.structure, self.structure.meet(self.payload, other.payload))

    def join(self, other: "SimpleElement") -> "SimpleElement":
        self._require_same(other)
        return SimpleElement(self.structure, self.structure.join(self.payload, other.payload))

    def product(self, other: "SimpleElement") -> "SimpleElement | None":
        """The product when it is still simple, else None."""
        self._require_same(other)
        p = self.structure.simple_product(self.payload, other.payload)
        return None if p is None else SimpleElement(self.structure, p)

    def right_complement(self) -> "SimpleElement":
        return SimpleElement(self.structure, self.structure.right_complement(self.payload))

    def left_complement(self) -> "SimpleElement":
        return SimpleElement(self.structure, self.structure.left_complement(self.payload))

    def tau(self, k: int = 1) -> "SimpleElement":
        return SimpleElement(self.structure, self.structure.tau_iter(self.payload, k))

    def word(self) -> tuple[int, ...]:
        return self.structure.canonical_word(self.payload)

    def to_normal_form(self) -> "NormalForm":
        if self.is_identity:
            return NormalForm(self.structure, 0, ())
        if self.is_delta:
            return NormalForm(self.structure, 1, ())
        return NormalForm(self.structure, 0, (self.payload,))

    def __str__(self) -> str:
        if self.is_delta:
            return "D"
        return self.structure.spell(self.payload)

    def __repr__(self) -> str:
        return f"SimpleElement({self.structure.identifier}, {self})"


def is_left_weighted(a: SimpleElement, b: SimpleElement) -> bool:
    """Whether the product ab is in left normal form as written."""
    a._require_same(b)
    return a.structure.is_left_weighted_pair(a.payload, b.payload)


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """A group element in left normal form D^power x_1 ... x_r.

    The factors are stored as raw payloads; no factor may be trivial or D.
    Canonical equality is field equality, so NormalForm values can be used
    as dictionary keys and set members directly.
    """

    structure: GarsideStructure
    power: int
    factors: tuple[Payload, ...]

    def __post_init__(self) -> None:
        s = self.structure
        for f in self.factors:
            if f == s.identity or f == s.delta:
                raise ValueError("normal-form factors must be proper simple elements")

    # -- read-offs ------------------------------------------------------

    @property
    def inf(self) -> int:
        return self.power

    @property
    def sup(self) -> int:
        return self.power + len(self.factors)

    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def is_identity(self) -> bool:
        return self.power == 0 and not self.factors

    def is_delta_power(self) -> bool:
        return not self.factors

    def factor(self, i: int) -> SimpleElement:
        """The i-th non-D factor, 0-based."""
        return SimpleElement(self.structure, self.factors[i])

    def factor_elements(self) -> tuple[SimpleElement, ...]:
        return tuple(SimpleElement(self.structure, f) for f in self.factors)

    def initial_factor(self) -> SimpleElement:
        """iota: tau^-p of the first factor; trivial for a power of D."""
        s = self.structure
        if not self.factors:
            return SimpleElement(s, s.identity)
        return SimpleElement(s, s.tau_iter(self.factors[0], -self.power))

    def final_factor(self) -> SimpleElement:
        """phi: the last factor; D itself for a power of D."""
        s = self.structure
        if not self.factors:
            return SimpleElement(s, s.delta)
        return SimpleElement(s, self.factors[-1])

    # -- arithmetic ------------------------------------------------------

    def _require_same(self, other: "NormalForm") -> None:
        if self.structure != other.structure:
            raise StructureMismatchError(
                f"{self.structure.identifier} vs {other.structure.identifier}"
            )

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        self._require_same(other)
        s = self.structure
        q = other.power
        shifted = tuple(s.tau_iter(f, q) for f in self.factors)
        return normalize_factors(s, self.power + q, shifted + other.factors)

    def inverse(self) -> "NormalForm":
        """Left normal form of the inverse, built directly factor by factor.

        If X = D^p x_1 ... x_r then X^-1 = D^(-p-r) x_r' ... x_1' with
        x_i' = tau^(-p-i) of the right complement of x_i; no renormalization
        pass is needed.
        """
        s = self.structure
        p, fs = self.power, self.factors
        r = len(fs)
        rev = tuple(
            s.tau_iter(s.right_complement(fs[i - 1]), -(p + i))
            for i in range(r, 0, -1)
        )
        return NormalForm(s, -p - r, rev)

    def __pow__(self, m: int) -> "NormalForm":
        base = self if m >= 0 else self.inverse()
        m = abs(m)
        acc = NormalForm(self.structure, 0, ())
        while m:
            if m & 1:
                acc = acc * base
            m >>= 1
            if m:
                base = base * base
        return acc

    def conjugate(self, by: "NormalForm") -> "NormalForm":
        """by^-1 * self * by."""
        self._require_same(by)
        return by.inverse() * self * by

    def tau_power(self, k: int = 1) -> "NormalForm":
        """Conjugate by D^k; preserves the normal form factorwise."""
        s = self.structure
        return NormalForm(s, self.power, tuple(s.tau_iter(f, k) for f in self.factors))

    def delta_prefix(self, k: int) -> "NormalForm":
        """The gcd of this element with D^k: the first k factors counting D's."""
        p, fs = self.power, self.factors
        if k <= p:
            return NormalForm(self.structure, k, ())
        if k >= p + len(fs):
            return self
        return NormalForm(self.structure, p, fs[: k - p])

    # -- validation and rendering ----------------------------------------

    def is_valid(self) -> bool:
        """Full left-weightedness check; used by the test-suite validator."""
        s = self.structure
        for f in self.factors:
            if f == s.identity or f == s.delta:
                return False
        return all(
            s.is_left_weighted_pair(a, b)
            for a, b in zip(self.factors, self.factors[1:])
        )

    def __str__(self) -> str:
        s = self.structure
        parts = []
        if self.power == 1:
            parts.append("D")
        elif self.power != 0 or not self.factors:
            parts.append(f"D^{self.power}")
        parts.extend(s.spell(f) for f in self.factors)
        return " . ".join(parts)

    def __repr__(self) -> str:
        return f"NormalForm({self.structure.identifier}, {self})"


def identity_element(structure: GarsideStructure) -> NormalForm:
    return NormalForm(structure, 0, ())


def delta_power(structure: GarsideStructure, k: int) -> NormalForm:
    return NormalForm(structure, k, ())


# ----------------------------------------------------------------------
# Normalization.
# ----------------------------------------------------------------------


def normalize_factors(
    structure: GarsideStructure, power: int, factors: Sequence[Payload]
) -> NormalForm:
    """Left normal form of D^power f_1 ... f_m for arbitrary simple f_i.

    Quadratic local-transformation passes, rightmost pair first, repeated
    until no pair changes; D factors then sit at the front and are absorbed
    into the power.  This is deliberately the textbook algorithm, fast
    enough at desk scale once the pair rewrites are memoised.
    """
    s = structure
    fs = [f for f in factors if f != s.identity]
    guard = 4 * len(fs) + 16
    for _ in range(guard):
        changed = False
        for i in range(len(fs) - 2, -1, -1):
            a, b = fs[i], fs[i + 1]
            a2, b2 = s.weight_pair(a, b)
            if a2 != a:
                fs[i], fs[i + 1] = a2, b2
                changed = True
        if any(f == s.identity for f in fs):
            fs = [f for f in fs if f != s.identity]
            changed = True
        if not changed:
            break
    else:
        raise GarsideError("normalization failed to reach a fixed point")
    lead = 0
    while lead < len(fs) and fs[lead] == s.delta:
        lead += 1
    fs = fs[lead:]
    if any(f == s.delta for f in fs):
        raise GarsideError("normalization left a stray Garside factor")
    return NormalForm(s, power + lead, tuple(fs))


def normalize_letters(structure: GarsideStructure, letters: Iterable[int]) -> NormalForm:
    """Normal form of a word in signed atoms (i for atom i, -i for its inverse).

    A negative letter -i is rewritten as D^-1 times the left complement of
    atom i; the accumulated D powers are then pushed to the front through
    tau before the factor sequence is normalized.
    """
    s = structure
    items: list[tuple[Payload, int]] = []
    for letter in letters:
        if letter == 0 or abs(letter) > s.atom_count:
            raise WordParseError(f"atom index {letter} out of range for {s.identifier}")
        if letter > 0:
            items.append((s.atoms[letter - 1], 0))
        else:
            items.append((s.left_complement(s.atoms[-letter - 1]), -1))
    return assemble(structure, items)


def assemble(structure: GarsideStructure, items: Sequence[tuple[Payload, int]]) -> NormalForm:
    """Normal form of a product of (simple payload, D-power to its left) items."""
    s = structure
    shift = 0
    out: list[Payload] = []
    for payload, dpow in reversed(items):
        out.append(s.tau_iter(payload, shift))
        shift += dpow
    out.reverse()
    return normalize_factors(s, shift, out)
