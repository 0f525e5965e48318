"""
Group input files.

Line 1 is either ``perm <degree>`` or ``catalog <name> [params]``; for
permutation groups each further line holds one generator in disjoint-cycle
notation with 1-based points, e.g. ``(1 2 3)(4 5)``; ``()`` is the identity.
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import re
from pathlib import Path

from ..config import DEFAULT_LIMITS, Limits
from ..errors import CatalogError, GroupInputError, InputFormatError
from .catalog import group_from_catalog, parse_catalog_spec
from .core import Group, Permutation, group_from_generators

_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation into a 0-based image tuple"""
    stripped = text.strip()
    if _CYCLE.sub("", stripped).strip():
        raise GroupInputError(f"unexpected characters in cycle notation: {text!r}")
    perm = list(range(degree))
    moved: set[int] = set()
    for body in _CYCLE.findall(stripped):
        points = [int(tok) - 1 for tok in body.replace(",", " ").split()]
        for point in points:
            if not 0 <= point < degree:
                raise GroupInputError(f"point {point + 1} outside 1..{degree}")
            if point in moved:
                raise GroupInputError(f"cycles are not disjoint in {text!r}")
            moved.add(point)
        for a, b in zip(points, points[1:] + points[:1]):
            perm[a] = b
    return tuple(perm)


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_group_text(text: str, source: str = "<text>", limits: Limits = DEFAULT_LIMITS) -> Group:
    lines = [(number, _strip(raw)) for number, raw in enumerate(text.splitlines(), 1)]
    lines = [(number, line) for number, line in lines if line]
    if not lines:
        raise InputFormatError(source, 1, "empty group file")
    number, header = lines[0]
    words = header.split()
    try:
        if words[0] == "catalog":
            if len(words) < 2:
                raise InputFormatError(source, number, "catalog line needs a name")
            name = words[1]
            rest = words[2:]
            if name == "direct":
                return parse_catalog_spec("*".join(rest), limits)
            return group_from_catalog(name, [int(x) for x in rest], limits)
        if words[0] == "perm":
            if len(words) != 2:
                raise InputFormatError(source, number, "expected 'perm <degree>'")
            degree = int(words[1])
            gens = []
            for gen_number, gen_line in lines[1:]:
                try:
                    gens.append(parse_cycles(gen_line, degree))
                except GroupInputError as exc:
                    raise InputFormatError(source, gen_number, str(exc)) from exc
            if not gens:
                gens = [tuple(range(degree))]
            return group_from_generators(degree, gens, name=Path(source).stem, limits=limits)
    except (ValueError, CatalogError) as exc:
        if isinstance(exc, InputFormatError):
            raise
        raise InputFormatError(source, number, str(exc)) from exc
    raise InputFormatError(source, number, f"unknown header {words[0]!r}")


def parse_group_file(path: str | Path, limits: Limits = DEFAULT_LIMITS) -> Group:
    path = Path(path)
    return parse_group_text(path.read_text(encoding="utf-8"), str(path), limits)


def load_group(source: str, limits: Limits = DEFAULT_LIMITS) -> Group:
    """A group file path if one exists, otherwise catalog shorthand"""
    path = Path(source)
    if path.is_file():
        return parse_group_file(path, limits)
    try:
        return parse_catalog_spec(source, limits)
    except CatalogError as exc:
        raise InputFormatError(source, 0, str(exc)) from exc
