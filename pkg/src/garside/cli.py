"""Command-line driver: every kernel operation as a subcommand.

Results go to stdout, diagnostics to stderr.  Exit status 0 on success, 1 on
domain-level negative answers (not conjugate, no rigid power) and 2 on usage
errors, so scripts can branch without parsing text.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import random
import sys

from .conjugacy import (
    cycling,
    decycling,
    solve_conjugacy,
    to_sss,
    to_uss,
    uss,
)
from .core import GarsideError, NormalForm
from .rigidity import (
    absolute_final_factor,
    absolute_initial_factor,
    chain_stabilization_index,
    cycling_record,
    product_C,
    product_R,
    rigid_power_search,
    rigidity,
    stabilize_powers,
)
from .structures import from_descriptor
from .words import parse_word

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="garside",
        description="Garside-group computations: normal forms, summit sets, rigidity.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("structure", help="structure descriptor, e.g. braid:4 or zn:3")
        p.add_argument("word", help="element word, e.g. '1 2 -1' or '12132143 . 143'")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        return p

    add("nf", "left normal form of a word")
    add("inv", "normal form of the inverse")
    mul = sub.add_parser("mul", help="normal form of a product")
    mul.add_argument("structure")
    mul.add_argument("word1")
    mul.add_argument("word2")
    mul.add_argument("--json", action="store_true")
    add("inf-sup", "infimum, supremum and canonical length")
    add("iota-phi", "initial and final factors")
    cyc = add("cycle", "iterated cycling")
    cyc.add_argument("--times", type=int, default=1)
    dec = add("decycle", "iterated decycling")
    dec.add_argument("--times", type=int, default=1)
    add("sss", "super summit representative and conjugator")
    add("uss", "ultra summit set summary")
    graph = add("uss-graph", "ultra summit graph as DOT or JSON")
    graph.add_argument("--format", choices=("dot", "json"), default="dot")
    add("rigidity", "rigidity of the left normal form")
    rp = add("rigid-power", "search for the least rigid power (JSON report)")
    rp.add_argument("--figure", help="also render the rigidity chain to this file")
    conj = sub.add_parser("conj", help="solve the conjugacy decision/search problem")
    conj.add_argument("structure")
    conj.add_argument("word1")
    conj.add_argument("word2")
    conj.add_argument("--json", action="store_true")
    stab = add("stabilize", "conjugate so a window of powers is ultra summit")
    stab.add_argument("low", type=int)
    stab.add_argument("high", type=int)
    add("chains", "absolute initial/final factors and their chains")
    stats = sub.add_parser("random-stats", help="randomized experiment harness (CSV)")
    stats.add_argument("structure")
    stats.add_argument("--count", type=int, default=100)
    stats.add_argument("--length", type=int, default=8)
    stats.add_argument("--seed", type=int, default=0)
    stats.add_argument("--out", help="write CSV here instead of stdout")
    stats.add_argument("--figure", help="also render histogram panels to this file")
    stats.add_argument("--json", action="store_true")
    return parser


def _element(args, attr="word") -> NormalForm:
    structure = from_descriptor(args.structure)
    return parse_word(getattr(args, attr), structure)


def _emit(args, text: str, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _cmd_nf(args) -> int:
    x = _element(args)
    _emit(args, str(x), {
        "normal_form": str(x), "inf": x.inf, "sup": x.sup,
        "canonical_length": x.canonical_length(),
    })
    return EXIT_OK


def _cmd_inv(args) -> int:
    x = _element(args).inverse()
    _emit(args, str(x), {"normal_form": str(x)})
    return EXIT_OK


def _cmd_mul(args) -> int:
    structure = from_descriptor(args.structure)
    x = parse_word(args.word1, structure) * parse_word(args.word2, structure)
    _emit(args, str(x), {"normal_form": str(x)})
    return EXIT_OK


def _cmd_inf_sup(args) -> int:
    x = _element(args)
    _emit(args, f"inf={x.inf} sup={x.sup} len={x.canonical_length()}",
          {"inf": x.inf, "sup": x.sup, "canonical_length": x.canonical_length()})
    return EXIT_OK


def _cmd_iota_phi(args) -> int:
    x = _element(args)
    iota, phi = x.initial_factor(), x.final_factor()
    _emit(args, f"iota={iota} phi={phi}", {"iota": str(iota), "phi": str(phi)})
    return EXIT_OK


def _cmd_cycle(args) -> int:
    x = _element(args)
    for _ in range(args.times):
        x = cycling(x)
    _emit(args, str(x), {"normal_form": str(x)})
    return EXIT_OK


def _cmd_decycle(args) -> int:
    x = _element(args)
    for _ in range(args.times):
        x = decycling(x)
    _emit(args, str(x), {"normal_form": str(x)})
    return EXIT_OK


def _cmd_sss(args) -> int:
    rep, conj = to_sss(_element(args))
    _emit(args, f"rep={rep} conjugator={conj}",
          {"representative": str(rep), "conjugator": str(conj)})
    return EXIT_OK


def _cmd_uss(args) -> int:
    graph = uss(_element(args))
    _emit(args, f"{graph.vertex_count()} elements, {graph.orbit_count()} orbits",
          graph.to_json_dict())
    return EXIT_OK


def _cmd_uss_graph(args) -> int:
    graph = uss(_element(args))
    sys.stdout.write(graph.to_json() if args.format == "json" else graph.to_dot())
    return EXIT_OK


def _cmd_rigidity(args) -> int:
    value = rigidity(_element(args))
    _emit(args, str(value), {"rigidity": str(value)})
    return EXIT_OK


def _cmd_rigid_power(args) -> int:
    report = rigid_power_search(_element(args)).to_json_dict()
    print(json.dumps(report, indent=2))
    if args.figure:
        from . import plots  # matplotlib import only when a figure is asked for

        plots.save_rigid_power_figure(report, args.figure)
    return EXIT_OK if report["result"] is not None else EXIT_NEGATIVE


def _cmd_conj(args) -> int:
    structure = from_descriptor(args.structure)
    x = parse_word(args.word1, structure)
    y = parse_word(args.word2, structure)
    conj = solve_conjugacy(x, y)
    if conj is None:
        _emit(args, "not conjugate", {"conjugate": False, "conjugator": None})
        return EXIT_NEGATIVE
    _emit(args, str(conj), {"conjugate": True, "conjugator": str(conj)})
    return EXIT_OK


def _cmd_stabilize(args) -> int:
    rep, conj = stabilize_powers(_element(args), args.low, args.high)
    _emit(args, f"rep={rep} conjugator={conj}",
          {"representative": str(rep), "conjugator": str(conj)})
    return EXIT_OK


def _cmd_chains(args) -> int:
    rep, _ = to_uss(_element(args))
    if rep.canonical_length() <= 1:
        raise GarsideError("chains need an ultra summit element of length greater than 1")
    rec = cycling_record(rep)
    limit = rep.structure.delta_length
    phi_chain = [str(product_C(rec, -j, j).final_factor()) for j in range(1, limit + 1)]
    iota_chain = [str(product_R(rec, -j, j).initial_factor()) for j in range(1, limit + 1)]
    payload = {
        "representative": str(rep),
        "orbit_length": rec.orbit_length(),
        "stabilization_index": chain_stabilization_index(rec),
        "F": str(absolute_final_factor(rec)),
        "I": str(absolute_initial_factor(rec)),
        "phi_chain": phi_chain,
        "iota_chain": iota_chain,
    }
    _emit(args, f"F={payload['F']} I={payload['I']} "
                f"stabilization_index={payload['stabilization_index']}", payload)
    return EXIT_OK


_STATS_FIELDS = (
    "input_hash", "status", "inf", "sup", "len", "uss_size", "orbits", "rigidity"
)


def random_stats_rows(structure, count: int, length: int, seed: int) -> list[dict]:
    """Per-sample summit statistics for seeded random words; reproducible."""
    rng = random.Random(seed)
    rows = []
    for _ in range(count):
        letters = [
            rng.randrange(1, structure.atom_count + 1) * rng.choice((1, -1))
            for _ in range(length)
        ]
        word = " ".join(str(v) for v in letters)
        digest = hashlib.sha256(word.encode()).hexdigest()[:12]
        x = parse_word(word, structure)
        rep, _ = to_sss(x)
        row = {
            "input_hash": digest,
            "status": "ok",
            "inf": rep.inf,
            "sup": rep.sup,
            "len": rep.canonical_length(),
            "uss_size": "",
            "orbits": "",
            "rigidity": "",
        }
        try:
            graph = uss(x)
            row["uss_size"] = graph.vertex_count()
            row["orbits"] = graph.orbit_count()
            row["rigidity"] = str(rigidity(graph.vertices()[0]))
        except GarsideError:
            row["status"] = "cap-exceeded"
        rows.append(row)
    return rows


def _cmd_random_stats(args) -> int:
    structure = from_descriptor(args.structure)
    rows = random_stats_rows(structure, args.count, args.length, args.seed)
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=_STATS_FIELDS)
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
    if args.figure:
        from . import plots

        plots.save_stats_figure(rows, args.figure)
    return EXIT_OK


_COMMANDS = {
    "nf": _cmd_nf,
    "inv": _cmd_inv,
    "mul": _cmd_mul,
    "inf-sup": _cmd_inf_sup,
    "iota-phi": _cmd_iota_phi,
    "cycle": _cmd_cycle,
    "decycle": _cmd_decycle,
    "sss": _cmd_sss,
    "uss": _cmd_uss,
    "uss-graph": _cmd_uss_graph,
    "rigidity": _cmd_rigidity,
    "rigid-power": _cmd_rigid_power,
    "conj": _cmd_conj,
    "stabilize": _cmd_stabilize,
    "chains": _cmd_chains,
    "random-stats": _cmd_random_stats,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return _COMMANDS[args.command](args)
    except (GarsideError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
