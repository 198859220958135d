"""Plain-text file formats for tournaments and Hadamard matrices.

Tournament::

    tournament 3
    010
    001
    100

Hadamard::

    hadamard 2
    ++
    -+

A single trailing newline is accepted; anything else after the last matrix
row is rejected.
"""
from __future__ import annotations

from .errors import NotATournament, ParseError
from .tournament import SkewHadamard, Tournament

MAX_VERTICES = 4096


def _split(text: str, keyword: str) -> tuple[int, list[str]]:
    if text.endswith("\n"):
        text = text[:-1]
    lines = text.split("\n")
    header = lines[0].split(" ")
    if len(header) != 2 or header[0] != keyword:
        raise ParseError(f"expected header '{keyword} <n>', got {lines[0]!r}")
    if not header[1].isdigit():
        raise ParseError(f"bad size field {header[1]!r}")
    n = int(header[1])
    if n > MAX_VERTICES:
        raise ParseError(f"size {n} exceeds the {MAX_VERTICES} cap")
    body = lines[1:]
    if n == 0 and body == []:
        return 0, []
    if len(body) != n:
        raise ParseError(f"expected {n} matrix rows, got {len(body)}")
    for i, line in enumerate(body):
        if len(line) != n:
            raise ParseError(f"row {i} has {len(line)} characters, expected {n}")
    return n, body


def parse_tournament(text: str) -> Tournament:
    n, body = _split(text, "tournament")
    rows = []
    for i, line in enumerate(body):
        if set(line) - {"0", "1"}:
            raise ParseError(f"row {i} contains characters other than 0/1")
        rows.append([int(c) for c in line])
    try:
        return Tournament(rows)
    except NotATournament as exc:
        raise ParseError(f"not a tournament: {exc}") from exc


def format_tournament(t: Tournament) -> str:
    lines = [f"tournament {t.n}"]
    lines += ["".join(str(b) for b in row) for row in t.rows]
    return "\n".join(lines) + "\n"


def parse_hadamard(text: str) -> SkewHadamard:
    n, body = _split(text, "hadamard")
    rows = []
    for i, line in enumerate(body):
        if set(line) - {"+", "-"}:
            raise ParseError(f"row {i} contains characters other than +/-")
        rows.append(tuple(1 if c == "+" else -1 for c in line))
    return SkewHadamard(tuple(rows))


def format_hadamard(h: SkewHadamard) -> str:
    lines = [f"hadamard {h.n}"]
    lines += ["".join("+" if v == 1 else "-" for v in row) for row in h.rows]
    return "\n".join(lines) + "\n"
