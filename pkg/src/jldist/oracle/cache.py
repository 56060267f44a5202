"""Plain-text cache of character tables of GL_m(F_q).

File layout (one record per line, integers in decimal)::

    jldist-character-table <format version>
    group GL <m> <q>
    modulus <coefficients of the field modulus, constant term first>
    order <|G|>
    conductor <e>
    classes <r>
    class <size> <representative entries as codes, row major>     (r lines)
    row <coefficients of each class value, phi(e) per class>      (r lines)

Codes are 0 for zero and k + 1 for g^k.  Classes appear in the order the
enumeration produces them, and loading checks representatives and sizes
against a fresh enumeration.
"""

from __future__ import annotations

import os
import tempfile
from pathlib import Path

import numpy as np

from ..charlat import CycloInt, _cyclo_data
from .dixon import CharacterTable, check_table, dixon_table
from .groups import OracleError, conjugacy_classes, enumerate_gl

FORMAT_VERSION = 1
CACHE_ENV = "JLDIST_CACHE_DIR"


def cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "jldist"


def cache_path(m: int, q: int, directory: Path | None = None) -> Path:
    return (directory or cache_dir()) / f"gl{m}_q{q}.v{FORMAT_VERSION}.txt"


def dumps(table: CharacterTable) -> str:
    G, cc = table.group, table.classes
    lines = [
        f"jldist-character-table {FORMAT_VERSION}",
        f"group GL {G.m} {G.q}",
        "modulus " + " ".join(map(str, G.field.modulus)),
        f"order {G.order}",
        f"conductor {table.conductor}",
        f"classes {len(cc)}",
    ]
    for rep, size in zip(cc.reps, cc.sizes):
        lines.append(f"class {size} " + " ".join(map(str, G.elements[rep].ravel().tolist())))
    for row in table.rows:
        lines.append("row " + " ".join(str(c) for v in row for c in v.coeffs))
    return "\n".join(lines) + "\n"


def loads(text: str) -> CharacterTable:
    lines = text.splitlines()
    head = lines[0].split()
    if head[0] != "jldist-character-table" or int(head[1]) != FORMAT_VERSION:
        raise OracleError("unknown cache format")
    _, kind, m, q = lines[1].split()
    m, q = int(m), int(q)
    G = enumerate_gl(m, q)
    modulus = tuple(int(x) for x in lines[2].split()[1:])
    if modulus != G.field.modulus:
        raise OracleError("cached table uses a different field modulus")
    if int(lines[3].split()[1]) != G.order:
        raise OracleError("cached group order mismatch")
    e = int(lines[4].split()[1])
    r = int(lines[5].split()[1])
    cc = conjugacy_classes(G)
    if len(cc) != r:
        raise OracleError("cached class count mismatch")
    for k, line in enumerate(lines[6:6 + r]):
        parts = [int(x) for x in line.split()[1:]]
        rep = np.array(parts[1:], dtype=np.int32).reshape(m, m)
        if parts[0] != cc.sizes[k] or not np.array_equal(rep, G.elements[cc.reps[k]]):
            raise OracleError("cached classes do not match the enumeration")
    phi = _cyclo_data(e)[0]
    rows = []
    for line in lines[6 + r:6 + 2 * r]:
        coeffs = [int(x) for x in line.split()[1:]]
        if len(coeffs) != phi * r:
            raise OracleError("malformed cached row")
        rows.append(tuple(CycloInt(e, tuple(coeffs[i * phi:(i + 1) * phi])) for i in range(r)))
    table = CharacterTable(G, cc, e, rows)
    check_table(table)
    return table


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def gl_table(m: int, q: int, use_cache: bool = True, directory: Path | None = None
             ) -> tuple[CharacterTable, bool]:
    """The character table of GL_m(F_q) and whether it came from the cache."""
    path = cache_path(m, q, directory)
    if use_cache and path.exists():
        try:
            return loads(path.read_text(encoding="ascii")), True
        except (OracleError, ValueError, IndexError):
            pass  # stale or damaged; rebuild below
    G = enumerate_gl(m, q)
    table = dixon_table(G)
    if use_cache:
        write_atomic(path, dumps(table))
    return table, False
