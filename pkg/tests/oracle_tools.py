"""Brute-force oracles, independent of the library's derived algorithms.

Products of payloads are recomputed here from first principles (permutation
composition with inversion counting, or disjoint set union); prefix tests,
meets, joins, ultra summit sets and minimal simple elements then come from
exhaustive search straight out of the definitions.  Tiny structures only.
"""

from __future__ import annotations

from functools import lru_cache

from garside import NormalForm, SimpleElement, to_sss
from garside.structures import BraidStructure, FreeAbelianStructure


def all_payloads(structure):
    return list(structure.iter_payloads())


def oracle_simple_product(structure, a, b):
    """ab when simple, else None; recomputed from first principles."""
    if isinstance(structure, BraidStructure):
        c = tuple(b[x - 1] for x in a)
        if _inversions(c) == _inversions(a) + _inversions(b):
            return c
        return None
    if isinstance(structure, FreeAbelianStructure):
        return a | b if not (a & b) else None
    raise TypeError(structure)


def _inversions(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def oracle_prefix(structure, a, b):
    """a divides b on the left iff some simple element completes a to b."""
    return any(oracle_simple_product(structure, a, c) == b for c in all_payloads(structure))


@lru_cache(maxsize=None)
def _divisor_table(structure):
    payloads = all_payloads(structure)
    return {
        b: frozenset(a for a in payloads if oracle_prefix(structure, a, b))
        for b in payloads
    }


def oracle_meet(structure, a, b):
    common = _divisor_table(structure)[a] & _divisor_table(structure)[b]
    tops = [m for m in common if all(oracle_prefix(structure, c, m) for c in common)]
    assert len(tops) == 1, "lattice axiom violated in the oracle"
    return tops[0]


def oracle_join(structure, a, b):
    table = _divisor_table(structure)
    uppers = [m for m in all_payloads(structure) if a in table[m] and b in table[m]]
    bottoms = [m for m in uppers if all(oracle_prefix(structure, m, u) for u in uppers)]
    assert len(bottoms) == 1, "lattice axiom violated in the oracle"
    return bottoms[0]


def _conjugation_cycling(y: NormalForm) -> NormalForm:
    # cycling via its defining conjugation, not the factor-rotation fast path
    return y.conjugate(y.initial_factor().to_normal_form())


def oracle_uss(x: NormalForm) -> set[NormalForm]:
    """USS(x) from the definitions: SSS closure, then the eventual cycling image.

    The super summit set is closed by conjugating every member by every
    simple element; the ultra summit set is the image of that finite set
    under sufficiently many iterations of the cycling map.
    """
    structure = x.structure
    rep, _ = to_sss(x)
    lo, hi = rep.power, rep.sup
    sss = {rep}
    frontier = [rep]
    simples = [
        SimpleElement(structure, p).to_normal_form()
        for p in all_payloads(structure)
        if p != structure.identity
    ]
    while frontier:
        y = frontier.pop()
        for s in simples:
            z = y.conjugate(s)
            if z.power == lo and z.sup == hi and z not in sss:
                sss.add(z)
                frontier.append(z)
    current = set(sss)
    for _ in range(len(sss)):
        current = {_conjugation_cycling(y) for y in current}
    return current


def oracle_minimal_simples(y: NormalForm) -> set[tuple[int, ...]]:
    """Minimal simple conjugators of y into USS(y), straight from the definition."""
    structure = y.structure
    members = oracle_uss(y)
    assert y in members, "oracle_minimal_simples needs an ultra summit element"
    hits = [
        p
        for p in all_payloads(structure)
        if p != structure.identity
        and y.conjugate(SimpleElement(structure, p).to_normal_form()) in members
    ]
    minimal = {
        p
        for p in hits
        if not any(q != p and oracle_prefix(structure, q, p) for q in hits)
    }
    return {structure.canonical_word(p) for p in minimal}
