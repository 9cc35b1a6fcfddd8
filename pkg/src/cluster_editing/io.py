"""Text formats for instances and edit certificates.

Instance files::

    c optional comment
    p cep11 <n> <m>
    w <id> <a> <d>      # optional; missing vertices default to 1 1
    e <u> <v>

Certificate files hold ``d <u> <v>`` (deletion) and ``a <u> <v>``
(addition) lines plus optional ``c`` comments.  Files use vertex ids
``1..n``; in memory the ids are ``0..n-1``.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import InputError, UsageError
from .graph import EditSolution, Instance, pair


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {' '.join(tokens)!r}") from None


def parse_instance(text: str) -> Instance:
    """Parse an instance file; raises :class:`InputError` on any defect."""
    n: int | None = None
    m = 0
    weights: dict[int, tuple[int, int]] = {}
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind, rest = tokens[0], tokens[1:]
        if kind == "p":
            if n is not None:
                raise InputError(f"line {lineno}: second header")
            if len(rest) != 3 or rest[0] != "cep11":
                raise InputError(f"line {lineno}: header must be 'p cep11 <n> <m>'")
            n, m = _ints(rest[1:], lineno)
            if n < 0 or m < 0:
                raise InputError(f"line {lineno}: negative size in header")
            continue
        if n is None:
            raise InputError(f"line {lineno}: '{kind}' line before the header")
        if kind == "w":
            if len(rest) != 3:
                raise InputError(f"line {lineno}: weight line must be 'w <id> <a> <d>'")
            v, a, d = _ints(rest, lineno)
            if not 1 <= v <= n:
                raise InputError(f"line {lineno}: vertex {v} out of range 1..{n}")
            if a not in (0, 1) or d not in (0, 1):
                raise InputError(f"line {lineno}: weights must be 0 or 1")
            if v - 1 in weights:
                raise InputError(f"line {lineno}: second weight line for vertex {v}")
            weights[v - 1] = (a, d)
        elif kind == "e":
            if len(rest) != 2:
                raise InputError(f"line {lineno}: edge line must be 'e <u> <v>'")
            u, v = _ints(rest, lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"line {lineno}: edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise InputError(f"line {lineno}: self-loop at {u}")
            e = pair(u - 1, v - 1)
            if e in seen:
                raise InputError(f"line {lineno}: duplicate edge ({u}, {v})")
            seen.add(e)
            edges.append(e)
        else:
            raise InputError(f"line {lineno}: unknown line type {kind!r}")
    if n is None:
        raise InputError("missing header 'p cep11 <n> <m>'")
    if len(edges) != m:
        raise InputError(f"header announces {m} edges, found {len(edges)}")
    a_star = {v: weights.get(v, (1, 1))[0] for v in range(n)}
    d_star = {v: weights.get(v, (1, 1))[1] for v in range(n)}
    return Instance.from_edges(n, edges, a_star, d_star)


def _file_ids(inst: Instance) -> dict[int, int]:
    verts = inst.vertices()
    if verts != list(range(len(verts))):
        raise UsageError("only instances with ids 0..n-1 can be written")
    return {v: v + 1 for v in verts}


def serialize_instance(inst: Instance, comments: Iterable[str] = ()) -> str:
    """Render ``inst``; weight lines are written only for non-default vertices."""
    ids = _file_ids(inst)
    lines = [f"c {c}" for c in comments]
    lines.append(f"p cep11 {inst.n} {inst.m}")
    for v in inst.vertices():
        a, d = inst.a_star[v], inst.d_star[v]
        if (a, d) != (1, 1):
            lines.append(f"w {ids[v]} {a} {d}")
    for u, v in inst.edges():
        lines.append(f"e {ids[u]} {ids[v]}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> EditSolution:
    deletions: set[tuple[int, int]] = set()
    additions: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind, rest = tokens[0], tokens[1:]
        if kind not in ("d", "a") or len(rest) != 2:
            raise InputError(f"line {lineno}: expected 'd <u> <v>' or 'a <u> <v>'")
        u, v = _ints(rest, lineno)
        if u < 1 or v < 1 or u == v:
            raise InputError(f"line {lineno}: invalid vertex pair ({u}, {v})")
        target = deletions if kind == "d" else additions
        target.add(pair(u - 1, v - 1))
    return EditSolution(frozenset(deletions), frozenset(additions))


def serialize_certificate(sol: EditSolution) -> str:
    lines = [f"d {u + 1} {v + 1}" for u, v in sorted(sol.deletions)]
    lines += [f"a {u + 1} {v + 1}" for u, v in sorted(sol.additions)]
    return "".join(line + "\n" for line in lines)


def read_instance(path: str | Path) -> Instance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_instance(text)


def read_certificate(path: str | Path) -> EditSolution:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_certificate(text)
