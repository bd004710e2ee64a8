"""JSON documents holding a frame and named BPAs.

The document layout::

    {
      "frame": ["A1", "A2", "A3"],
      "bpas": [
        {"name": "m1", "masses": [{"set": ["A1", "A2"], "mass": 0.9},
                                  {"set": ["A3"], "mass": 0.1}]}
      ]
    }

Parsing is strict: unknown keys, wrong types, unknown labels, negative or
unnormalized masses all raise :class:`~dsconflict.errors.DocumentError` whose
``where`` attribute points at the offending element
(``bpas[1].masses[0].mass`` and the like).
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from typing import Mapping

from .core import Frame, MassFunction, make_bpa, make_frame
from .errors import DocumentError, UnknownLabelError, ValidationError

__all__ = ["BpaDocument", "loads", "load", "dumps", "dump"]


@dataclass(frozen=True)
class BpaDocument:
    """A frame together with an ordered mapping of named BPAs."""

    frame: Frame
    bpas: Mapping[str, MassFunction]

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.bpas)

    def bpa(self, name: str) -> MassFunction:
        try:
            return self.bpas[name]
        except KeyError:
            known = ", ".join(repr(n) for n in self.bpas) or "none"
            raise DocumentError(
                "bpas", f"no BPA named {name!r} (known: {known})"
            ) from None


def _require(condition: bool, where: str, message: str) -> None:
    if not condition:
        raise DocumentError(where, message)


def _require_object(value: object, where: str, keys: tuple[str, ...]) -> dict:
    _require(isinstance(value, dict), where, "expected an object")
    assert isinstance(value, dict)
    for key in value:
        _require(
            key in keys,
            f"{where}.{key}" if where else str(key),
            f"unknown key (expected {', '.join(repr(k) for k in keys)})",
        )
    for key in keys:
        _require(
            key in value,
            where or key,
            f"missing required key {key!r}",
        )
    return value


def _require_list(value: object, where: str) -> list:
    _require(isinstance(value, list), where, "expected an array")
    assert isinstance(value, list)
    return value


def _require_string(value: object, where: str) -> str:
    _require(
        isinstance(value, str) and bool(value),
        where,
        "expected a non-empty string",
    )
    assert isinstance(value, str)
    return value


def _require_number(value: object, where: str) -> float:
    _require(
        isinstance(value, (int, float)) and not isinstance(value, bool),
        where,
        "expected a number",
    )
    return float(value)  # type: ignore[arg-type]


def _parse_frame(value: object) -> Frame:
    items = _require_list(value, "frame")
    labels = [
        _require_string(label, f"frame[{i}]") for i, label in enumerate(items)
    ]
    try:
        return make_frame(labels)
    except ValidationError as exc:
        raise DocumentError("frame", str(exc)) from exc


def _parse_bpa(frame: Frame, value: object, where: str) -> tuple[str, MassFunction]:
    entry = _require_object(value, where, ("name", "masses"))
    name = _require_string(entry["name"], f"{where}.name")
    items = _require_list(entry["masses"], f"{where}.masses")
    assignments: list[tuple[tuple[str, ...], float]] = []
    for j, item in enumerate(items):
        spot = f"{where}.masses[{j}]"
        record = _require_object(item, spot, ("set", "mass"))
        members = _require_list(record["set"], f"{spot}.set")
        labels = tuple(
            _require_string(label, f"{spot}.set[{p}]")
            for p, label in enumerate(members)
        )
        mass = _require_number(record["mass"], f"{spot}.mass")
        try:
            mask = frame.subset(labels)
        except UnknownLabelError as exc:
            raise DocumentError(f"{spot}.set", str(exc)) from exc
        _require(mass >= 0.0, f"{spot}.mass", f"mass {mass!r} is negative")
        if mass > 0.0 and mask == 0:
            raise DocumentError(
                f"{spot}.set", "positive mass on the empty set is not allowed"
            )
        assignments.append((labels, mass))
    try:
        bpa = make_bpa(frame, assignments)
    except ValidationError as exc:
        raise DocumentError(f"{where}.masses", f"BPA {name!r}: {exc}") from exc
    return name, bpa


def loads(text: str) -> BpaDocument:
    """Parse a BPA document from JSON text."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"line {exc.lineno}, column {exc.colno}", f"invalid JSON: {exc.msg}"
        ) from exc
    root = _require_object(payload, "", ("frame", "bpas"))
    frame = _parse_frame(root["frame"])
    entries = _require_list(root["bpas"], "bpas")
    bpas: dict[str, MassFunction] = {}
    for i, value in enumerate(entries):
        name, bpa = _parse_bpa(frame, value, f"bpas[{i}]")
        _require(
            name not in bpas,
            f"bpas[{i}].name",
            f"duplicate BPA name {name!r}",
        )
        bpas[name] = bpa
    return BpaDocument(frame=frame, bpas=bpas)


def load(path: str | os.PathLike[str]) -> BpaDocument:
    """Read and parse a BPA document file."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise DocumentError(str(path), f"cannot read document: {exc}") from exc
    return loads(text)


def dumps(document: BpaDocument) -> str:
    """Serialize a document to JSON text (full float precision)."""
    payload = {
        "frame": list(document.frame.labels),
        "bpas": [
            {
                "name": name,
                "masses": [
                    {
                        "set": list(document.frame.members(mask)),
                        "mass": value,
                    }
                    for mask, value in sorted(bpa.items())
                ],
            }
            for name, bpa in document.bpas.items()
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def dump(document: BpaDocument, path: str | os.PathLike[str]) -> None:
    """Write a document file atomically (temp file + rename)."""
    text = dumps(document)
    target = os.fspath(path)
    directory = os.path.dirname(target) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".bpadoc-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(text)
        os.replace(tmp, target)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
