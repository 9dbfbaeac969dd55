"""Word syntax shared by the library fixtures and the CLI.

Tokens are separated by whitespace, commas or dots: a signed integer i
stands for atom i (negative for its inverse), ``D`` for the Garside element
and ``D^k`` for its k-th power.  When every atom index is a single digit, a
contiguous digit string such as ``12132143`` is read as a run of positive
atoms.  Serialized normal forms (``D^p . f1 . f2``) parse back to themselves.
"""

from __future__ import annotations

import re

from .core import GarsideStructure, NormalForm, Payload, WordParseError, assemble

_SIGNED_INT = re.compile(r"[+-]?\d+$")
_DELTA = re.compile(r"D(\^([+-]?\d+))?$")


def parse_word(text: str, structure: GarsideStructure) -> NormalForm:
    """Normal form of a word over the structure's atoms and D."""
    s = structure
    items: list[tuple[Payload, int]] = []

    def push_letter(letter: int) -> None:
        if letter == 0 or abs(letter) > s.atom_count:
            raise WordParseError(f"atom index {letter} out of range for {s.identifier}")
        if letter > 0:
            items.append((s.atoms[letter - 1], 0))
        else:
            items.append((s.left_complement(s.atoms[-letter - 1]), -1))

    for token in text.replace(",", " ").replace(".", " ").split():
        match = _DELTA.match(token)
        if match:
            items.append((s.identity, int(match.group(2)) if match.group(2) else 1))
            continue
        if not _SIGNED_INT.match(token):
            raise WordParseError(f"bad token {token!r}")
        if token.isdigit() and len(token) > 1 and s.atom_count <= 9:
            for ch in token:
                push_letter(int(ch))
        else:
            push_letter(int(token))
    return assemble(s, items)


def serialize(nf: NormalForm) -> str:
    """Canonical text form; inverse of parse_word on emitted output."""
    return str(nf)
