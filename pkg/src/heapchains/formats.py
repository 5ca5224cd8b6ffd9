"""File formats: poset JSON, interval/box CSV, forest JSON.

Decimal coordinates are parsed exactly (as rationals), never through binary
floating point, so file-based inputs behave identically to in-memory exact
inputs.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .poset import Box, Coord, HeapForest, Interval, Poset, poset_from_relations


class InputFormatError(ValueError):
    """Malformed input file; message names the file and line."""


def parse_exact(text: str) -> Coord:
    """Exact numeric parse of a decimal string; integers stay ints."""
    value = Fraction(text)
    return int(value) if value.denominator == 1 else value


def _rows(path, expected_fields: int):
    with open(path) as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            fields = [field.strip() for field in line.split(",")]
            if len(fields) != expected_fields:
                raise InputFormatError(
                    f"{path}:{lineno}: expected {expected_fields} fields, got {len(fields)}"
                )
            try:
                yield lineno, [parse_exact(field) for field in fields]
            except ValueError as exc:
                raise InputFormatError(f"{path}:{lineno}: {exc}") from exc


def load_intervals_csv(path) -> list[Interval]:
    """One 'left,right' pair per line."""
    items = []
    for lineno, row in _rows(path, 2):
        try:
            items.append(Interval(row[0], row[1]))
        except ValueError as exc:
            raise InputFormatError(f"{path}:{lineno}: {exc}") from exc
    return items


def load_boxes_csv(path) -> list[Box]:
    """One 'lx,ly,ux,uy' quadruple per line."""
    items = []
    for lineno, row in _rows(path, 4):
        try:
            items.append(Box((row[0], row[1]), (row[2], row[3])))
        except ValueError as exc:
            raise InputFormatError(f"{path}:{lineno}: {exc}") from exc
    return items


def load_permutation(path) -> list[int]:
    """One integer per line, the sequence pi(0), pi(1), ..."""
    values = []
    with open(path) as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line:
                continue
            try:
                values.append(int(line))
            except ValueError as exc:
                raise InputFormatError(f"{path}:{lineno}: not an integer: {line!r}") from exc
    return values


def load_poset_json(path) -> Poset:
    """{"n": int, "relations": [[i, j], ...]}; transitive closure applied on load."""
    with open(path) as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"{path}: invalid JSON: {exc}") from exc
    try:
        n = int(data["n"])
        relations = [(int(i), int(j)) for i, j in data["relations"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"{path}: expected {{'n': int, 'relations': [[i, j], ...]}}") from exc
    return poset_from_relations(n, relations)


def save_poset_json(path, poset: Poset) -> None:
    with open(path, "w") as handle:
        json.dump({"n": poset.n, "relations": [list(p) for p in poset.pairs()]}, handle)
        handle.write("\n")


def save_forest_json(path, forest: HeapForest) -> None:
    """{"k", "roots", "parent": {child: parent}}; children serialized ascending."""
    parent = {
        str(child): forest.parent[child]
        for child in sorted(forest.parent)
        if forest.parent[child] is not None
    }
    with open(path, "w") as handle:
        json.dump({"k": forest.k, "roots": list(forest.roots), "parent": parent}, handle)
        handle.write("\n")


def load_forest_json(path) -> HeapForest:
    with open(path) as handle:
        try:
            data = json.load(handle)
        except json.JSONDecodeError as exc:
            raise InputFormatError(f"{path}: invalid JSON: {exc}") from exc
    try:
        parent: dict[int, int | None] = {int(root): None for root in data["roots"]}
        for child, par in data["parent"].items():
            parent[int(child)] = int(par)
        return HeapForest(int(data["k"]), parent)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"{path}: malformed forest JSON") from exc
