"""
Module files.

Header ``module p=<p> dim=<d> generators=<k>``, then for each generator of S
a d x d matrix, one row per line, entries space-separated residues. The
generators are `module_generators(S)`: the group file's generators when S is
the whole group, otherwise S's canonical (greedy lowest-id) generators.
"""

from __future__ import annotations

import re
from pathlib import Path

from ..errors import InputFormatError, ModuleValidationError
from ..groups.core import Subgroup
from .fpmodule import FpModule

_HEADER = re.compile(r"^module\s+p=(\d+)\s+dim=(\d+)\s+generators=(\d+)$")


def module_generators(S: Subgroup) -> tuple[int, ...]:
    group = S.parent
    if S.order == group.order and group.generators:
        return tuple(group.generators)
    return S.canonical_generators


def parse_module_text(
    text: str, S: Subgroup, source: str = "<text>", p: int | None = None
) -> FpModule:
    lines = [
        (number, raw.split("#", 1)[0].strip())
        for number, raw in enumerate(text.splitlines(), 1)
    ]
    lines = [(number, line) for number, line in lines if line]
    if not lines:
        raise InputFormatError(source, 1, "empty module file")
    number, header = lines[0]
    match = _HEADER.match(header)
    if not match:
        raise InputFormatError(source, number, "expected 'module p=<p> dim=<d> generators=<k>'")
    declared_p, d, k = (int(x) for x in match.groups())
    if p is not None and declared_p != p:
        raise InputFormatError(source, number, f"module is over F_{declared_p}, expected F_{p}")
    p = declared_p
    gens = module_generators(S)
    if k != len(gens):
        raise InputFormatError(
            source, number, f"S has {len(gens)} generators here, file declares {k}"
        )
    body = lines[1:]
    if len(body) != k * d:
        raise InputFormatError(source, number, f"expected {k * d} matrix rows, found {len(body)}")
    matrices = []
    for g in range(k):
        rows = []
        for number, line in body[g * d : (g + 1) * d]:
            try:
                row = [int(tok) for tok in line.split()]
            except ValueError as exc:
                raise InputFormatError(source, number, f"non-integer entry in {line!r}") from exc
            if len(row) != d:
                raise InputFormatError(source, number, f"expected {d} entries, found {len(row)}")
            rows.append(row)
        matrices.append(rows)
    try:
        return FpModule.from_generators(S, p, gens, matrices, name=Path(source).stem, dim=d)
    except ModuleValidationError as exc:
        raise InputFormatError(source, number, str(exc)) from exc


def parse_module_file(path: str | Path, S: Subgroup, p: int | None = None) -> FpModule:
    path = Path(path)
    return parse_module_text(path.read_text(encoding="utf-8"), S, str(path), p)
