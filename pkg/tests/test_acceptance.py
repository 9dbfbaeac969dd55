"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-criterion
lines.  Every tolerance is exact and every time budget is asserted.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

from garside import (
    SimpleElement,
    cycling_orbit,
    cycling_record,
    is_left_weighted,
    is_rigid,
    minimal_simple_elements,
    parse_word,
    product_C,
    product_R,
    rigid_power,
    rigid_power_search,
    rigidity,
    to_uss,
    uss,
    verify_cm_theorem,
)
from garside.rigidity import chain_stabilization_index
from conftest import random_element
from oracle_tools import all_payloads, oracle_join, oracle_meet, oracle_minimal_simples

SEED = 20260810


@contextmanager
def criterion(number: int, title: str, budget_seconds: float):
    start = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number} ({title}): FAIL")
        raise
    elapsed = time.monotonic() - start
    status = "PASS" if elapsed < budget_seconds else "FAIL (over time budget)"
    print(f"ACCEPTANCE {number} ({title}): {status} [{elapsed:.2f}s < {budget_seconds:.0f}s]")
    assert elapsed < budget_seconds


def test_criterion_1_b5_fixture_end_to_end(b5, b5_fixture):
    with criterion(1, "B_5 fixture end-to-end", 1.0):
        x = b5_fixture
        expected_powers = {
            1: "12132143 . 143",
            2: "D . 2324321 . 14 . 143",
            3: "D^2 . 12324 . 214 . 14 . 143",
            4: "D^2 . 12132143 . 143 . 12324 . 214 . 14 . 143",
            5: "D^3 . 2324321 . 14 . 143 . 12324 . 214 . 14 . 143",
        }
        for m, text in expected_powers.items():
            assert str(x**m) == str(parse_word(text, b5))
        assert [(x**m).inf - m * x.inf for m in (2, 3, 4, 5)] == [1, 2, 2, 3]

        orbit = cycling_orbit(x)
        assert len(orbit) == 4
        expected_orbit = [
            "12132143 . 143",
            "121324321 . 14",
            "12132432 . 214",
            "121343 . 12324",
        ]
        assert [str(v) for v in orbit] == [str(parse_word(t, b5)) for t in expected_orbit]

        rec = cycling_record(x)
        expected_products = {
            1: "12132143",
            2: "D . 2324321",
            3: "D^2 . 12324",
            4: "D^2 . 12132143 . 143",
            5: "D^3 . 2324321 . 14",
        }
        for m, text in expected_products.items():
            assert str(product_C(rec, 0, m)) == str(parse_word(text, b5))


def test_criterion_2_rigidity_table(b3, b4, b5, b3_rigid, b5_fixture):
    with criterion(2, "rigidity table", 1.0):
        assert rigidity(b3_rigid) == Fraction(1)
        assert rigidity(parse_word("13 . 13 . 1", b4)) == Fraction(2, 3)
        assert rigidity(b5_fixture) == Fraction(0)
        assert [rigidity(b5_fixture**m) for m in range(1, 7)] == [
            Fraction(0), Fraction(0), Fraction(1),
            Fraction(0), Fraction(0), Fraction(1),
        ]


def test_criterion_3_rigid_power_search(b4, b5, b5_fixture):
    with criterion(3, "rigid power search", 30.0):
        found = rigid_power(b5_fixture)
        assert found is not None
        m, witness, conj = found
        assert m == 3
        assert is_rigid(witness)
        assert (b5_fixture**m).conjugate(conj) == witness
        assert m < b5.delta_length**3 == 1000

        report = rigid_power_search(parse_word("1 3 . 3", b4))
        assert report.result is None
        assert report.chain and all(
            row.rigidity == Fraction(1, 2) for row in report.chain
        )


def test_criterion_4_uss_fixtures(b4, b4_uss_fixture):
    with criterion(4, "ultra summit fixtures", 5.0):
        graph = uss(parse_word("1", b4))
        assert {str(v) for v in graph.vertices()} == {"1", "2", "3"}
        arrows = {
            (str(a.source), str(a.label), str(a.target)) for a in graph.arrows
        }
        assert arrows == {
            ("1", "1", "1"), ("1", "3", "1"), ("1", "21", "2"),
            ("2", "2", "2"), ("2", "12", "1"), ("2", "32", "3"),
            ("3", "1", "3"), ("3", "3", "3"), ("3", "23", "2"),
        }

        graph2 = uss(b4_uss_fixture)
        assert graph2.vertex_count() == 6
        assert graph2.orbit_count() == 2
        o1, o2 = (set(o) for o in graph2.orbits)
        assert len(o1) == len(o2) == 3
        assert {v.tau_power(1) for v in o1} == o2
        expected_o1 = {
            parse_word("1321 . 12 . 213", b4),
            parse_word("12 . 213 . 1321", b4),
            parse_word("213 . 1321 . 12", b4),
        }
        expected_o2 = {
            parse_word("3123 . 32 . 231", b4),
            parse_word("32 . 231 . 3123", b4),
            parse_word("231 . 3123 . 32", b4),
        }
        assert o1 | o2 == expected_o1 | expected_o2


def test_criterion_5_theorem_suite(b3, b4):
    with criterion(5, "theorem suite on random elements", 60.0):
        rng = random.Random(SEED)
        elements = []
        for structure, count in ((b3, 250), (b4, 250)):
            for _ in range(count):
                elements.append(random_element(rng, structure, rng.randrange(1, 7)))

        # (b) complement squared equals tau, exhaustively on all simples
        for structure in (b3, b4):
            for payload in structure.iter_payloads():
                assert structure.right_complement(
                    structure.right_complement(payload)
                ) == structure.tau(payload)

        reps = {}
        for x in elements:
            # (a) the inverse formula against multiplication to the identity
            inv = x.inverse()
            s = x.structure
            assert (x * inv).is_identity
            rebuilt = tuple(
                s.tau_iter(s.right_complement(x.factors[i - 1]), -(x.power + i))
                for i in range(x.canonical_length(), 0, -1)
            )
            assert inv.power == -x.sup and inv.factors == rebuilt

            rep, _ = to_uss(x)
            reps.setdefault(rep, rep)

        convexity_checked = 0
        for rep in reps:
            structure = rep.structure
            if rep.canonical_length() >= 1:
                rec = cycling_record(rep)
                # (c) the C_m prefix theorem for m <= 6
                for m in range(1, 7):
                    assert verify_cm_theorem(rec, m)
                # (d) aligned C/R products are left weighted
                for k in (-1, 0, 1):
                    for m in (1, 2, 3):
                        for n in (1, 2, 3):
                            l_shift = k + m - n
                            c_part = product_C(rec, k, m)
                            r_part = product_R(rec, l_shift, n)
                            if c_part.canonical_length() == 0:
                                continue
                            assert is_left_weighted(
                                c_part.final_factor(), r_part.initial_factor()
                            )
            if rep.canonical_length() > 1:
                # (f) chain stabilization below ||D||, F.I left weighted
                rec = cycling_record(rep)
                assert chain_stabilization_index(rec) < structure.delta_length
                from garside import absolute_final_factor, absolute_initial_factor

                assert is_left_weighted(
                    absolute_final_factor(rec), absolute_initial_factor(rec)
                )
            # (e) convexity of the ultra summit set
            if structure is b3:
                pairs = [
                    (s, t)
                    for s in structure.iter_payloads()
                    for t in structure.iter_payloads()
                ]
            elif convexity_checked < 40:
                payloads = list(structure.iter_payloads())
                pairs = [
                    (rng.choice(payloads), rng.choice(payloads)) for _ in range(10)
                ]
            else:
                continue
            convexity_checked += 1
            member_cache = {}

            def in_uss_of_rep(z, rep=rep):
                from garside.conjugacy import _returns_to_self

                if z not in member_cache:
                    member_cache[z] = (
                        z.power == rep.power
                        and z.sup == rep.sup
                        and (z == rep or _returns_to_self(z))
                    )
                return member_cache[z]

            for s, t in pairs:
                zs = rep.conjugate(SimpleElement(structure, s).to_normal_form())
                zt = rep.conjugate(SimpleElement(structure, t).to_normal_form())
                if in_uss_of_rep(zs) and in_uss_of_rep(zt):
                    met = structure.meet(s, t)
                    zmet = rep.conjugate(SimpleElement(structure, met).to_normal_form())
                    assert in_uss_of_rep(zmet)
        assert len(elements) >= 500


def test_criterion_6_rigid_uss_theorem(b4):
    with criterion(6, "rigid ultra summit sets", 60.0):
        rng = random.Random(SEED + 1)
        found = 0
        while found < 20:
            rep, _ = to_uss(random_element(rng, b4, rng.randrange(3, 9)))
            if rep.canonical_length() <= 1 or not is_rigid(rep):
                continue
            found += 1
            graph = uss(rep)
            vertices = set(graph.vertices())
            assert all(is_rigid(v) for v in vertices)
            inverse_vertices = set(uss(rep.inverse()).vertices())
            assert inverse_vertices == {v.inverse() for v in vertices}


def test_criterion_7_b6_simple_rigidity_pair(b6):
    with criterion(7, "B_6 simple-element rigidity pair", 1.0):
        rigid = parse_word("12321435", b6)
        other = parse_word("12134325", b6)
        assert is_rigid(rigid)
        assert not is_rigid(other)
        assert rigid.conjugate(parse_word("23", b6)) == other

        square = other * other
        expected = parse_word("12134325 14 . 213245", b6)
        assert square == expected
        assert square.canonical_length() == 2
        assert is_left_weighted(square.factor(0), square.factor(1))
        assert square.factor(0).payload == b6.simple_product(
            other.factor(0).payload, parse_word("14", b6).factor(0).payload
        )


def test_criterion_8_oracle_equivalence(b3, b4):
    with criterion(8, "brute-force oracle equivalence", 10.0):
        for structure in (b3, b4):
            payloads = all_payloads(structure)
            assert len(payloads) == (6 if structure is b3 else 24)
            for a in payloads:
                for b in payloads:
                    assert structure.meet(a, b) == oracle_meet(structure, a, b)
                    assert structure.join(a, b) == oracle_join(structure, a, b)

        for structure, texts in (
            (b3, ("1", "2", "D 1 2")),
            (b4, ("1", "2", "3", "1 3 2 1 1 2 2 1 3")),
        ):
            for text in texts:
                rep, _ = to_uss(parse_word(text, structure))
                got = {s.word() for s in minimal_simple_elements(rep)}
                assert got == oracle_minimal_simples(rep)
