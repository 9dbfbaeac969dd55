"""Hypothesis property tests for the kernel invariants."""

from hypothesis import given, settings, strategies as st

from garside import braid, free_abelian, normalize_letters, parse_word
from garside.core import GarsideStructure

STRUCTURES = [braid(3), braid(4), free_abelian(3)]

structure_ix = st.integers(min_value=0, max_value=len(STRUCTURES) - 1)


def letters(structure, size=8):
    atom = st.integers(min_value=1, max_value=structure.atom_count)
    return st.lists(
        st.builds(lambda i, s: i * s, atom, st.sampled_from((1, -1))),
        max_size=size,
    )


@st.composite
def structure_and_words(draw, count=1):
    structure = STRUCTURES[draw(structure_ix)]
    words = tuple(draw(letters(structure)) for _ in range(count))
    return (structure, *words)


@given(structure_and_words())
@settings(max_examples=150, deadline=None)
def test_normal_forms_are_left_weighted(data):
    structure, word = data
    nf = normalize_letters(structure, word)
    assert nf.is_valid()
    assert parse_word(str(nf), structure) == nf


@given(structure_and_words(count=2))
@settings(max_examples=150, deadline=None)
def test_multiplication_matches_concatenation(data):
    structure, w1, w2 = data
    assert normalize_letters(structure, w1) * normalize_letters(structure, w2) == \
        normalize_letters(structure, w1 + w2)


@given(structure_and_words())
@settings(max_examples=150, deadline=None)
def test_inverse_theorem_against_cancellation(data):
    structure, word = data
    x = normalize_letters(structure, word)
    inv = x.inverse()
    assert inv.is_valid()
    assert (x * inv).is_identity and (inv * x).is_identity
    assert inv.inf == -x.sup and inv.sup == -x.inf


@given(structure_ix, st.data())
@settings(max_examples=80, deadline=None)
def test_meet_is_a_common_prefix_and_maximal_among_atoms(ix, data):
    structure = STRUCTURES[ix]
    payloads = list(structure.iter_payloads())
    a = data.draw(st.sampled_from(payloads))
    b = data.draw(st.sampled_from(payloads))
    met = structure.meet(a, b)
    assert structure.divides(met, a) and structure.divides(met, b)
    # no atom extends the meet inside both arguments
    ra = structure.left_quotient(met, a)
    rb = structure.left_quotient(met, b)
    for i in range(1, structure.atom_count + 1):
        assert not (structure.atom_prefix(i, ra) and structure.atom_prefix(i, rb))


@given(structure_ix, st.data())
@settings(max_examples=80, deadline=None)
def test_join_is_a_minimal_common_multiple(ix, data):
    structure = STRUCTURES[ix]
    payloads = list(structure.iter_payloads())
    a = data.draw(st.sampled_from(payloads))
    b = data.draw(st.sampled_from(payloads))
    joined = structure.join(a, b)
    assert structure.divides(a, joined) and structure.divides(b, joined)


@given(structure_ix, st.data())
@settings(max_examples=60, deadline=None)
def test_meet_is_order_independent(ix, data):
    structure = STRUCTURES[ix]
    payloads = list(structure.iter_payloads())
    a = data.draw(st.sampled_from(payloads))
    b = data.draw(st.sampled_from(payloads))
    order = data.draw(st.permutations(range(1, structure.atom_count + 1)))

    met = GarsideStructure.meet(structure, a, b)
    m = structure.identity
    ra, rb = a, b
    while True:
        found = None
        for i in order:
            if structure.atom_prefix(i, ra) and structure.atom_prefix(i, rb):
                found = i
                break
        if found is None:
            break
        m = structure.simple_product(m, structure.atoms[found - 1])
        ra = structure.strip_atom_prefix(found, ra)
        rb = structure.strip_atom_prefix(found, rb)
    assert m == met
