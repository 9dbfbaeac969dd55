"""Cycling records, power decompositions, rigidity, and rigid-power search.

For Y in its ultra summit set with inf(Y) = p, every element of the cycling
orbit decomposes as c^(i-1)(Y) = C_i D^p R_i, where C_i is the conjugating
factor of the i-th cycling and R_i the remainder.  The ordered products of
the C_i and the tau-twisted R_i decompose powers of Y, control the normal
form of Y^m, and bound the least rigid power.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction

from .conjugacy import cycling_orbit, in_own_uss, to_sss, to_uss
from .core import (
    GarsideError,
    NormalForm,
    SimpleElement,
    delta_power,
    identity_element,
)


@dataclasses.dataclass(frozen=True)
class CyclingRecord:
    """The cycling orbit of an ultra summit element with its C_i / R_i data.

    Indexing is periodic: C(i) and R(i) accept any integer i, with C(1)
    being the initial factor of the base element.
    """

    base: NormalForm
    orbit: tuple[NormalForm, ...]
    conjugating: tuple[SimpleElement, ...]
    remainders: tuple[NormalForm, ...]
    power: int

    def orbit_length(self) -> int:
        return len(self.orbit)

    def element(self, i: int) -> NormalForm:
        """c^i of the base element, for any integer i."""
        return self.orbit[i % len(self.orbit)]

    def C(self, i: int) -> SimpleElement:
        return self.conjugating[(i - 1) % len(self.orbit)]

    def R(self, i: int) -> NormalForm:
        return self.remainders[(i - 1) % len(self.orbit)]


def cycling_record(y: NormalForm) -> CyclingRecord:
    """Build and verify the C_i D^p R_i decompositions along the orbit of y."""
    if y.canonical_length() < 1:
        raise ValueError("cycling records need canonical length at least 1")
    if not in_own_uss(y):
        raise ValueError("element is not in its own ultra summit set")
    orbit = tuple(cycling_orbit(y))
    p = y.power
    cs = []
    rs = []
    for el in orbit:
        c = el.initial_factor()
        r = NormalForm(el.structure, 0, el.factors[1:])
        if c.to_normal_form() * delta_power(el.structure, p) * r != el:
            raise GarsideError("cycling record failed verification")
        cs.append(c)
        rs.append(r)
    return CyclingRecord(y, orbit, tuple(cs), tuple(rs), p)


def product_C(rec: CyclingRecord, k: int, m: int) -> NormalForm:
    """C_[k,m] = C_(k+1) ... C_(k+m)."""
    if m < 1:
        raise ValueError("m must be positive")
    acc = identity_element(rec.base.structure)
    for j in range(k + 1, k + m + 1):
        acc = acc * rec.C(j).to_normal_form()
    return acc


def product_R(rec: CyclingRecord, k: int, m: int) -> NormalForm:
    """R_[k,m] = tau^-p(R_(k+m)) tau^-2p(R_(k+m-1)) ... tau^-mp(R_(k+1))."""
    if m < 1:
        raise ValueError("m must be positive")
    p = rec.power
    acc = identity_element(rec.base.structure)
    for j in range(1, m + 1):
        acc = acc * rec.R(k + m + 1 - j).tau_power(-j * p)
    return acc


@dataclasses.dataclass(frozen=True)
class PowerDecomposition:
    """The verified decomposition (c^k(Y))^m = Cm Rm D^(mp)."""

    record: CyclingRecord
    k: int
    m: int
    Cm: NormalForm
    Rm: NormalForm


def power_decomposition(rec: CyclingRecord, k: int, m: int) -> PowerDecomposition:
    """Bundle C_[k,m] and R_[k,m] and check the decomposition invariants."""
    cm = product_C(rec, k, m)
    rm = product_R(rec, k, m)
    base = rec.element(k)
    if cm * rm * delta_power(base.structure, m * rec.power) != base**m:
        raise GarsideError("power decomposition failed verification")
    if rm.inf != 0:
        raise GarsideError("remainder product has unexpected Garside factors")
    if rec.base.canonical_length() > 1 and cm.sup != m:
        raise GarsideError("conjugating product has an unexpected supremum")
    if cm.canonical_length() > 0 and not base.structure.is_left_weighted_pair(
        cm.final_factor().payload, rm.initial_factor().payload
    ):
        raise GarsideError("power decomposition is not left weighted")
    return PowerDecomposition(rec, k, m, cm, rm)


def verify_cm_theorem(rec: CyclingRecord, m: int) -> bool:
    """Self-check: the first m factors of Y^m D^-mp (counting D's) equal C_[0,m]."""
    y = rec.base
    lhs = (y**m) * delta_power(y.structure, -m * rec.power)
    return lhs.delta_prefix(m) == product_C(rec, 0, m)


def unexpected_deltas(x: NormalForm, m: int) -> int:
    """inf(X^m) - m inf(X): the D factors not explained by inf alone."""
    if m < 1:
        raise ValueError("m must be positive")
    return (x**m).power - m * x.power


def absolute_final_factor(rec: CyclingRecord) -> SimpleElement:
    """F(Y): the stable value of the descending chain phi(C_[-m,m]).

    The chain stabilizes strictly before ||D|| steps, so it is evaluated at
    m = ||D||-1 and certified by comparing with the next chain element.
    """
    if rec.base.canonical_length() <= 1:
        raise ValueError("absolute factors need canonical length greater than 1")
    m = max(1, rec.base.structure.delta_length - 1)
    value = product_C(rec, -m, m).final_factor()
    if value != product_C(rec, -(m + 1), m + 1).final_factor():
        raise GarsideError("absolute final factor failed stabilization check")
    return value


def absolute_initial_factor(rec: CyclingRecord) -> SimpleElement:
    """I(Y): the stable value of the ascending chain iota(R_[-m,m])."""
    if rec.base.canonical_length() <= 1:
        raise ValueError("absolute factors need canonical length greater than 1")
    m = max(1, rec.base.structure.delta_length - 1)
    value = product_R(rec, -m, m).initial_factor()
    if value != product_R(rec, -(m + 1), m + 1).initial_factor():
        raise GarsideError("absolute initial factor failed stabilization check")
    return value


def chain_stabilization_index(rec: CyclingRecord, k: int = -1) -> int:
    """First j at which both absolute-factor chains repeat; always < ||D||."""
    if rec.base.canonical_length() <= 1:
        raise ValueError("chains need canonical length greater than 1")
    limit = rec.base.structure.delta_length
    for j in range(1, limit + 1):
        phi_ok = (
            product_C(rec, k - j + 1, j).final_factor()
            == product_C(rec, k - j, j + 1).final_factor()
        )
        iota_ok = (
            product_R(rec, k - j + 1, j).initial_factor()
            == product_R(rec, k - j, j + 1).initial_factor()
        )
        if phi_ok and iota_ok:
            return j
    raise GarsideError("chains failed to stabilize within ||D||")


# ----------------------------------------------------------------------
# Rigidity.
# ----------------------------------------------------------------------


def rigidity(x: NormalForm) -> Fraction:
    """k/r, where the first k factors of X survive at the front of X^2."""
    r = x.canonical_length()
    if r == 0:
        return Fraction(0)
    p = x.power
    single = x * delta_power(x.structure, -p)
    double = (x * x) * delta_power(x.structure, -2 * p)
    for k in range(r, -1, -1):
        if single.delta_prefix(k) == double.delta_prefix(k):
            return Fraction(k, r)
    raise AssertionError("unreachable: k = 0 always satisfies the gcd equation")


def is_rigid(x: NormalForm) -> bool:
    """Whether iota(X) and iota(X^-1) are coprime; agrees with rigidity == 1."""
    if x.canonical_length() == 0:
        return False
    s = x.structure
    return (
        s.meet(x.initial_factor().payload, x.inverse().initial_factor().payload)
        == s.identity
    )


# ----------------------------------------------------------------------
# Stabilizing a window of powers.
# ----------------------------------------------------------------------


def stabilize_powers(x: NormalForm, low: int, high: int) -> tuple[NormalForm, NormalForm]:
    """A conjugate V of x with V^m ultra summit for all m in [low, high] - {0}.

    Repeatedly picks a failing power and applies the cycling/decycling
    conjugations that bring that power into its ultra summit set; by the
    convexity of ultra summit sets these conjugations never spoil powers
    that were already good, so the loop ends within one pass per exponent.
    """
    if low > high:
        raise ValueError("empty stabilization window")
    window = [m for m in range(low, high + 1) if m != 0]
    v = x
    total = identity_element(x.structure)
    for _ in range(len(window) + 1):
        bad = next((m for m in window if not in_own_uss(v**m)), None)
        if bad is None:
            return v, total
        _, conj = to_uss(v**bad)
        v = v.conjugate(conj)
        total = total * conj
    raise GarsideError("power-window stabilization guard exceeded")


# ----------------------------------------------------------------------
# Rigid power search.
# ----------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class ChainRow:
    m: int
    inf: int
    sup: int
    rigidity: Fraction


@dataclasses.dataclass(frozen=True)
class RigidPowerReport:
    """Diagnostic record of a rigid-power search."""

    source: NormalForm
    window: tuple[int, int]
    stabilizer: NormalForm
    stabilized: NormalForm
    chain: tuple[ChainRow, ...]
    result: tuple[int, NormalForm] | None
    certificate: tuple[int, int, int] | None
    notes: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "input": str(self.source),
            "window": list(self.window),
            "stabilization_conjugator": str(self.stabilizer),
            "chain": [
                {
                    "m": row.m,
                    "inf": row.inf,
                    "sup": row.sup,
                    "rigidity": str(row.rigidity),
                }
                for row in self.chain
            ],
            "result": (
                None
                if self.result is None
                else {"m": self.result[0], "witness": str(self.result[1])}
            ),
            "certificate": (
                None
                if self.certificate is None
                else {
                    "M": self.certificate[0],
                    "k": self.certificate[1],
                    "t": self.certificate[2],
                }
            ),
            "notes": list(self.notes),
        }


def _certificate(v: NormalForm, orbit_multiples: int = 6) -> tuple[int, int, int] | None:
    """Search for C_M = D^k V^t with D^k central, certifying a rigid power."""
    rec = cycling_record(v)
    n = rec.orbit_length()
    e = v.structure.tau_order
    for mult in range(1, orbit_multiples + 1):
        big_m = mult * n
        cm = product_C(rec, 0, big_m)
        power = identity_element(v.structure)
        for t in range(1, big_m + 1):
            power = power * v
            diff = cm * power.inverse()
            if diff.canonical_length() == 0 and diff.power % e == 0:
                return big_m, diff.power, t
    return None


def rigid_power_search(x: NormalForm) -> RigidPowerReport:
    """Find the least rigid power within the theorem bounds, with diagnostics.

    After conjugating so that the powers in the stabilization window are all
    ultra summit, powers are tested in order.  For canonical length greater
    than 1 the bound is ||D||^2; for length 1 the search first looks for a
    power of length greater than 1 within ||D|| steps (enlarging the window
    accordingly), for an overall bound of ||D||^3.  An empty result means no
    power of the element is rigid, under the stated hypotheses.
    """
    sss_rep, _ = to_sss(x)
    if sss_rep.canonical_length() == 0:
        raise ValueError("powers of the Garside element are periodic and never rigid")

    ell = x.structure.delta_length
    notes: list[str] = []
    window = (-ell, ell)
    v, conj = stabilize_powers(x, -ell, ell)

    if v.canonical_length() == 1:
        quick = _search_chain(v, ell + 1)
        if quick.found is not None:
            return RigidPowerReport(
                x, window, conj, v, quick.rows, quick.found,
                _attempt_certificate(v), tuple(notes),
            )
        window = (-ell * ell, ell * ell)
        v2, conj2 = stabilize_powers(v, window[0], window[1])
        v, conj = v2, conj * conj2
        base = next(
            (m for m in range(1, ell + 1) if (v**m).canonical_length() > 1), None
        )
        if base is None:
            # By the length-one lemma some power within ||D|| then has
            # length 0, i.e. the element is periodic.
            notes.append("element is periodic (a root of a central power of D)")
            rows = _search_chain(v, ell + 1).rows
            return RigidPowerReport(x, window, conj, v, rows, None, None, tuple(notes))
        bound = base * ell * ell
        notes.append(
            f"canonical length 1: power {base} has length > 1, bound raised to {bound}"
        )
    else:
        bound = ell * ell

    outcome = _search_chain(v, bound)
    certificate = _attempt_certificate(v) if outcome.found is not None else None
    if outcome.found is None:
        notes.append(f"no rigid power below the bound {bound}")
    return RigidPowerReport(
        x, window, conj, v, outcome.rows, outcome.found, certificate, tuple(notes)
    )


@dataclasses.dataclass(frozen=True)
class _SearchOutcome:
    rows: tuple[ChainRow, ...]
    found: tuple[int, NormalForm] | None


def _search_chain(v: NormalForm, bound: int) -> _SearchOutcome:
    rows = []
    power = identity_element(v.structure)
    for m in range(1, bound):
        power = power * v
        rig = rigidity(power)
        rows.append(ChainRow(m, power.power, power.sup, rig))
        if power.canonical_length() > 0 and rig == 1:
            return _SearchOutcome(tuple(rows), (m, power))
    return _SearchOutcome(tuple(rows), None)


def _attempt_certificate(v: NormalForm) -> tuple[int, int, int] | None:
    if v.canonical_length() <= 1:
        return None
    try:
        return _certificate(v)
    except (ValueError, GarsideError):
        return None


def rigid_power(x: NormalForm) -> tuple[int, NormalForm, NormalForm] | None:
    """(m, witness, conjugator) for the least rigid power found, or None.

    The witness is V^m for the stabilized conjugate V = x^conjugator, so the
    same conjugator carries x^m onto the rigid witness.
    """
    report = rigid_power_search(x)
    if report.result is None:
        return None
    m, witness = report.result
    return m, witness, report.stabilizer


# ----------------------------------------------------------------------
# Initial factors of powers.
# ----------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class IotaPowerChain:
    """iota(X), iota(X^2), ... with the first repetition and periodicity report."""

    factors: tuple[SimpleElement, ...]
    first_repetition: tuple[int, int] | None
    periodic_after_repetition: bool | None


def iota_power_chain(x: NormalForm, limit: int) -> IotaPowerChain:
    """Initial factors of x, x^2, ..., x^limit (callers stabilize powers first)."""
    if limit < 1:
        raise ValueError("limit must be positive")
    factors = []
    power = identity_element(x.structure)
    for _ in range(limit):
        power = power * x
        factors.append(power.initial_factor())
    repetition = None
    for b in range(1, len(factors)):
        for a in range(b):
            if factors[a] == factors[b]:
                repetition = (a + 1, b + 1)
                break
        if repetition:
            break
    periodic = None
    if repetition:
        a, b = repetition
        periodic = all(
            factors[a - 1 + k] == factors[b - 1 + k] for k in range(limit - b + 1)
        )
    return IotaPowerChain(tuple(factors), repetition, periodic)
