"""Cycling, summit sets, the transport map, and the conjugacy solver.

The conjugacy machinery follows the classical scheme: bring both elements
into their ultra summit sets by cyclings and decyclings, then close one of
the two ultra summit sets under conjugation by minimal simple elements,
keeping a conjugator for every vertex discovered.  Minimal simple elements
are found by exhaustive filtration over the (finite) set of simple
elements, which is the correctness-first choice at desk scale.
"""

from __future__ import annotations

import dataclasses
import json

from .core import (
    EnumerationCapError,
    GarsideError,
    NormalForm,
    Payload,
    SimpleElement,
    StructureMismatchError,
    identity_element,
    normalize_factors,
)
from .structures import simple_cap


def cycling(x: NormalForm) -> NormalForm:
    """c(X): conjugate by the initial factor, rotating it to the back."""
    if not x.factors:
        return x
    s = x.structure
    rotated = x.factors[1:] + (s.tau_iter(x.factors[0], -x.power),)
    return normalize_factors(s, x.power, rotated)


def decycling(x: NormalForm) -> NormalForm:
    """d(X): conjugate by the inverse of the final factor, rotating it to the front."""
    if not x.factors:
        return x
    s = x.structure
    rotated = (s.tau_iter(x.factors[-1], x.power),) + x.factors[:-1]
    return normalize_factors(s, x.power, rotated)


@dataclasses.dataclass(frozen=True)
class ConjugationStep:
    """One verified conjugation: target = conjugator^-1 * source * conjugator."""

    source: NormalForm
    conjugator: NormalForm
    target: NormalForm
    kind: str  # cycling | decycling | minimal-simple | tau | composite

    def __post_init__(self) -> None:
        if self.source.conjugate(self.conjugator) != self.target:
            raise GarsideError("conjugation step failed verification")


def _cycling_step(x: NormalForm) -> ConjugationStep:
    return ConjugationStep(x, x.initial_factor().to_normal_form(), cycling(x), "cycling")


def _decycling_step(x: NormalForm) -> ConjugationStep:
    conj = x.final_factor().to_normal_form().inverse()
    return ConjugationStep(x, conj, decycling(x), "decycling")


def compose_steps(structure, steps) -> NormalForm:
    acc = identity_element(structure)
    for step in steps:
        acc = acc * step.conjugator
    return acc


# ----------------------------------------------------------------------
# Super summit sets.
# ----------------------------------------------------------------------
#
# If the infimum of an element is not maximal in its conjugacy class, it
# increases within ||D|| cyclings; dually for the supremum and decyclings.
# Each phase therefore probes up to ||D|| steps and commits them only when
# they paid off, so the conjugator chains stay short.  The total work per
# phase stays within (canonical length + 1) * ||D|| moves.


def _probe_phase(cur: NormalForm, move, improved) -> tuple[list[ConjugationStep], NormalForm]:
    steps: list[ConjugationStep] = []
    window = cur.structure.delta_length
    guard = (cur.canonical_length() + 1) * (window + 1) + 8
    while cur.canonical_length() > 0:
        probe = cur
        trail = []
        hit = False
        for _ in range(window):
            probe = move(probe)
            trail.append(probe)
            if improved(cur, probe):
                hit = True
                break
        if not hit:
            return steps, cur
        src = cur
        for nxt in trail:
            step = _cycling_step(src) if move is cycling else _decycling_step(src)
            steps.append(step)
            src = nxt
        cur = src
        if len(steps) > guard:
            raise GarsideError("summit iteration guard exceeded")
    return steps, cur


def _sss_steps(x: NormalForm) -> tuple[list[ConjugationStep], NormalForm]:
    steps: list[ConjugationStep] = []
    cur = x
    while True:
        up, cur = _probe_phase(cur, cycling, lambda old, new: new.power > old.power)
        down, cur = _probe_phase(cur, decycling, lambda old, new: new.sup < old.sup)
        steps.extend(up)
        steps.extend(down)
        if not up and not down:
            return steps, cur


def to_sss(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """A super summit representative together with a conjugator onto it."""
    steps, rep = _sss_steps(x)
    return rep, compose_steps(x.structure, steps)


def sss_invariants(x: NormalForm) -> tuple[int, int]:
    """(inf, sup) of the super summit set, computed without step records."""
    cur = x
    window = x.structure.delta_length

    def run(move, improved):
        nonlocal cur
        while cur.canonical_length() > 0:
            probe = cur
            hit = None
            for _ in range(window):
                probe = move(probe)
                if improved(cur, probe):
                    hit = probe
                    break
            if hit is None:
                return
            cur = hit

    while True:
        before = (cur.power, cur.sup)
        run(cycling, lambda old, new: new.power > old.power)
        run(decycling, lambda old, new: new.sup < old.sup)
        if (cur.power, cur.sup) == before:
            return before


def is_super_summit(x: NormalForm, witness: NormalForm) -> bool:
    """Whether x has the minimal canonical length of witness's conjugacy class."""
    lo, hi = sss_invariants(witness)
    return x.power == lo and x.sup == hi


# ----------------------------------------------------------------------
# Ultra summit sets.
# ----------------------------------------------------------------------


def _is_rigid_quick(x: NormalForm) -> bool:
    # iota(X) ^ iota(X^-1) = 1; rigid elements always lie in their USS.
    if not x.factors:
        return False
    s = x.structure
    return (
        s.meet(x.initial_factor().payload, x.inverse().initial_factor().payload)
        == s.identity
    )


# Cycling trajectories of super summit elements stay inside the (finite)
# super summit set, so cycle detection by a visited set always terminates;
# the hard cap only exists to surface bugs instead of looping.
_ORBIT_GUARD = 1_000_000


def _returns_to_self(y: NormalForm) -> bool:
    """Whether iterated cycling comes back to y (y assumed super summit)."""
    seen = {y}
    cur = y
    for _ in range(_ORBIT_GUARD):
        cur = cycling(cur)
        if cur == y:
            return True
        if cur in seen:
            return False
        seen.add(cur)
    raise GarsideError("cycling orbit did not close within the guard")


def in_own_uss(x: NormalForm) -> bool:
    """Whether x lies in its own ultra summit set."""
    if not x.factors:
        return True
    if _is_rigid_quick(x):
        return True
    lo, hi = sss_invariants(x)
    if x.power != lo or x.sup != hi:
        return False
    return _returns_to_self(x)


def to_uss(x: NormalForm) -> tuple[NormalForm, NormalForm]:
    """An ultra summit representative together with a conjugator onto it.

    Starting from a super summit representative, cycling is iterated until
    an element repeats; the first repeated element is returned.  Callers
    must not rely on which orbit representative is chosen.
    """
    steps, rep = _uss_steps(x)
    return rep, compose_steps(x.structure, steps)


def _uss_steps(x: NormalForm) -> tuple[list[ConjugationStep], NormalForm]:
    steps, cur = _sss_steps(x)
    positions = {cur: 0}
    trail: list[ConjugationStep] = []
    for _ in range(_ORBIT_GUARD):
        step = _cycling_step(cur)
        nxt = step.target
        if nxt in positions:
            k = positions[nxt]
            return steps + trail[:k], trail[k].source if k < len(trail) else nxt
        trail.append(step)
        positions[nxt] = len(trail)
        cur = nxt
    raise GarsideError("cycling orbit did not close within the guard")


def cycling_orbit(y: NormalForm) -> list[NormalForm]:
    """[y, c(y), ...] up to the first return to y; y must be cycling-periodic."""
    if not y.factors:
        return [y]
    orbit = [y]
    seen = {y}
    cur = y
    for _ in range(_ORBIT_GUARD):
        cur = cycling(cur)
        if cur == y:
            return orbit
        if cur in seen:
            raise ValueError("element is not cycling-periodic")
        orbit.append(cur)
        seen.add(cur)
    raise GarsideError("cycling orbit did not close within the guard")


def _check_cap(structure, cap: int | None) -> None:
    limit = simple_cap() if cap is None else cap
    if structure.simple_count() > limit:
        raise EnumerationCapError(
            f"{structure.identifier} has {structure.simple_count()} simple elements, "
            f"above the cap {limit}"
        )


def _minimal_simples_unchecked(y: NormalForm) -> list[SimpleElement]:
    """Minimal simple conjugators of y into USS(y), for y already ultra summit."""
    s = y.structure
    hits: list[Payload] = []
    for p in s.iter_payloads():
        if p == s.identity:
            continue
        z = y.conjugate(SimpleElement(s, p).to_normal_form())
        if z.power == y.power and z.sup == y.sup and (z == y or _returns_to_self(z)):
            hits.append(p)
    minimal = [
        p
        for p in hits
        if not any(q != p and s.divides(q, p) for q in hits)
    ]
    minimal.sort(key=s.canonical_word)
    return [SimpleElement(s, p) for p in minimal]


def minimal_simple_elements(y: NormalForm, cap: int | None = None) -> list[SimpleElement]:
    """All nontrivial simple s with y^s ultra summit and no proper prefix doing so."""
    _check_cap(y.structure, cap)
    if not in_own_uss(y):
        raise ValueError("element is not in its own ultra summit set")
    return _minimal_simples_unchecked(y)


@dataclasses.dataclass(frozen=True)
class UssArrow:
    source: NormalForm
    label: SimpleElement
    target: NormalForm


@dataclasses.dataclass(eq=False)
class UssGraph:
    """The graph on USS(X): vertices, labeled arrows, and conjugator tracking.

    Conjugators are stored per discovery step (parent links) and composed on
    demand; entry is the verified chain from the original element onto the
    first vertex.
    """

    base: NormalForm
    entry: tuple[ConjugationStep, ...]
    orbits: tuple[tuple[NormalForm, ...], ...]
    arrows: tuple[UssArrow, ...]
    _links: dict[NormalForm, tuple[NormalForm | None, NormalForm]]
    _memo: dict[NormalForm, NormalForm] = dataclasses.field(default_factory=dict)

    def vertices(self) -> tuple[NormalForm, ...]:
        return tuple(v for orbit in self.orbits for v in orbit)

    def vertex_count(self) -> int:
        return sum(len(orbit) for orbit in self.orbits)

    def orbit_count(self) -> int:
        return len(self.orbits)

    def entry_conjugator(self) -> NormalForm:
        return compose_steps(self.base.structure, self.entry)

    def conjugator_to(self, vertex: NormalForm) -> NormalForm:
        """A conjugator c with base^c = vertex, composed along discovery links."""
        if vertex not in self._links:
            raise ValueError("not a vertex of this graph")
        if vertex not in self._memo:
            parent, step = self._links[vertex]
            if parent is None:
                self._memo[vertex] = self.entry_conjugator()
            else:
                self._memo[vertex] = self.conjugator_to(parent) * step
        return self._memo[vertex]

    def to_dot(self) -> str:
        names = {v: f"v{i}" for i, v in enumerate(self.vertices())}
        lines = ["digraph uss {", "  rankdir=LR;"]
        for v, name in names.items():
            lines.append(f'  {name} [label="{v}"];')
        for arrow in self.arrows:
            lines.append(
                f'  {names[arrow.source]} -> {names[arrow.target]} '
                f'[label="{arrow.label}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "base": str(self.base),
            "entry_conjugator": str(self.entry_conjugator()),
            "orbits": [[str(v) for v in orbit] for orbit in self.orbits],
            "arrows": [
                {"from": str(a.source), "label": str(a.label), "to": str(a.target)}
                for a in self.arrows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def uss(x: NormalForm, cap: int | None = None) -> UssGraph:
    """The full ultra summit graph of x, with deterministic vertex order."""
    graph, _ = _uss_closure(x, None, cap)
    return graph


def _uss_closure(
    x: NormalForm, stop_at: NormalForm | None, cap: int | None
) -> tuple[UssGraph, bool]:
    _check_cap(x.structure, cap)
    entry, rep = _uss_steps(x)
    links: dict[NormalForm, tuple[NormalForm | None, NormalForm]] = {}
    orbits: list[tuple[NormalForm, ...]] = []
    arrows: list[UssArrow] = []

    def register(first: NormalForm, parent: NormalForm | None, step: NormalForm) -> bool:
        orbit = cycling_orbit(first)
        orbits.append(tuple(orbit))
        links[first] = (parent, step)
        for prev, nxt in zip(orbit, orbit[1:]):
            links[nxt] = (prev, prev.initial_factor().to_normal_form())
        return stop_at is not None and stop_at in links

    found = register(rep, None, identity_element(x.structure))
    oi = 0
    while not found and oi < len(orbits):
        for y in orbits[oi]:
            for label in _minimal_simples_unchecked(y):
                z = y.conjugate(label.to_normal_form())
                arrows.append(UssArrow(y, label, z))
                if z not in links:
                    found = register(z, y, label.to_normal_form())
                    if found:
                        break
            if found:
                break
        oi += 1
    graph = UssGraph(x, tuple(entry), tuple(orbits), tuple(arrows), links)
    return graph, found


def transport(x: NormalForm, alpha: NormalForm, y: NormalForm) -> NormalForm:
    """Transport of a conjugator along one cycling: iota(x)^-1 * alpha * iota(y)."""
    if x.conjugate(alpha) != y:
        raise GarsideError("transport: alpha does not conjugate the first element to the second")
    ix = x.initial_factor().to_normal_form()
    iy = y.initial_factor().to_normal_form()
    return ix.inverse() * alpha * iy


def solve_conjugacy(
    x: NormalForm, y: NormalForm, cap: int | None = None
) -> NormalForm | None:
    """A verified conjugator c with x^c = y, or None when not conjugate."""
    if x.structure != y.structure:
        raise StructureMismatchError(
            f"{x.structure.identifier} vs {y.structure.identifier}"
        )
    if sss_invariants(x) != sss_invariants(y):
        return None
    rep_y, conj_y = to_uss(y)
    graph, found = _uss_closure(x, rep_y, cap)
    if not found:
        return None
    conj = graph.conjugator_to(rep_y) * conj_y.inverse()
    if x.conjugate(conj) != y:
        raise GarsideError("conjugacy solver produced an invalid conjugator")
    return conj
