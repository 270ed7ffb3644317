"""Input documents for the CLI: one space, named fuzzy sets, families and
sequences, loaded from UTF-8 JSON and fully validated.

Schema (top level):
  "space":      {"type": "euclidean", "dim": m} or {"type": "finite", "matrix": [[...]]}
  "fuzzy_sets": [{"name": ..., "levels": [{"alpha": a, "points": [...]}, ...]}, ...]
  "families":   [{"name": ..., "members": [names]} or
                 {"name": ..., "generator": {"kind", "params", "count", "seed"}}, ...]
  "sequences":  [{"name": ..., "members": [names]}, ...]

Levels list full cuts: alphas strictly decreasing starting at 1.0 and each
lower level lists a superset of the level above. Points are coordinate arrays
in euclidean mode and integer indices in finite mode. Generator-expanded
members are registered as fuzzy sets named "<family>[k]". Sequences may
repeat names; sequence lookups fall back to family names, so a generated
family can be used directly as a sequence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Mapping

from .common import InputError
from .families import FuzzyFamily, fuzzy_family
from .fuzzy import StepFuzzySet, make_fuzzy
from .generators import (
    collapse_family,
    crisp_interval_family,
    random_family,
    translates_family,
)
from .sets import finite_set
from .space import EUCLIDEAN, FINITE, MetricSpace, validate_metric
from .certificates import Verdict


@dataclass(frozen=True)
class Document:
    space: MetricSpace
    fuzzy_sets: dict[str, StepFuzzySet]
    declared: tuple[str, ...]
    families: dict[str, FuzzyFamily] = field(default_factory=dict)
    sequences: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def fuzzy(self, name: str) -> StepFuzzySet:
        try:
            return self.fuzzy_sets[name]
        except KeyError:
            raise InputError(f"unknown fuzzy set {name!r}") from None

    def family(self, name: str) -> FuzzyFamily:
        try:
            return self.families[name]
        except KeyError:
            raise InputError(f"unknown family {name!r}") from None

    def sequence(self, name: str) -> list[StepFuzzySet]:
        """Resolve a sequence name; family names are accepted as sequences in
        member order."""
        if name in self.sequences:
            return [self.fuzzy(m) for m in self.sequences[name]]
        if name in self.families:
            return list(self.families[name].members)
        raise InputError(f"unknown sequence {name!r}")


def _need(obj: Mapping, key: str, where: str):
    if key not in obj:
        raise InputError(f"{where}: missing field {key!r}")
    return obj[key]


def _check_name(name: Any, where: str) -> str:
    if not isinstance(name, str) or not name:
        raise InputError(f"{where}: name must be a nonempty string")
    if any(c in name for c in ",\n\r"):
        raise InputError(f"{where}: name {name!r} contains a comma or newline")
    return name


def _parse_space(obj: Any) -> MetricSpace:
    if not isinstance(obj, Mapping):
        raise InputError("space: must be an object")
    kind = _need(obj, "type", "space")
    if kind == EUCLIDEAN:
        dim = _need(obj, "dim", "space")
        if not isinstance(dim, int) or dim < 1:
            raise InputError(f"space: dim must be a positive integer, got {dim!r}")
        return MetricSpace.euclidean(dim)
    if kind == FINITE:
        matrix = _need(obj, "matrix", "space")
        space = MetricSpace.finite(matrix)
        cert = validate_metric(space)
        if cert.verdict is not Verdict.PASS:
            raise InputError(f"space: matrix is not a metric ({cert.witness})")
        return space
    raise InputError(f"space: unknown type {kind!r}")


def _parse_points(space: MetricSpace, raw: Any, where: str) -> list:
    if not isinstance(raw, list) or not raw:
        raise InputError(f"{where}: points must be a nonempty list")
    out = []
    for p in raw:
        if space.mode == EUCLIDEAN:
            if not isinstance(p, list):
                raise InputError(f"{where}: euclidean point must be a coordinate list, got {p!r}")
            out.append(tuple(float(c) for c in p))
        else:
            if not isinstance(p, int):
                raise InputError(f"{where}: finite-space point must be an integer index, got {p!r}")
            out.append(p)
    return out


def _parse_fuzzy(space: MetricSpace, obj: Any) -> tuple[str, StepFuzzySet]:
    if not isinstance(obj, Mapping):
        raise InputError("fuzzy_sets: entries must be objects")
    name = _check_name(_need(obj, "name", "fuzzy_sets"), "fuzzy_sets")
    raw_levels = _need(obj, "levels", f"fuzzy set {name!r}")
    if not isinstance(raw_levels, list) or not raw_levels:
        raise InputError(f"fuzzy set {name!r}: levels must be a nonempty list")
    levels = []
    for lv in raw_levels:
        if not isinstance(lv, Mapping):
            raise InputError(f"fuzzy set {name!r}: each level must be an object")
        alpha = float(_need(lv, "alpha", f"fuzzy set {name!r}"))
        pts = _parse_points(space, _need(lv, "points", f"fuzzy set {name!r}"), f"fuzzy set {name!r}")
        levels.append((alpha, finite_set(space, pts)))
    try:
        return name, make_fuzzy(levels)
    except InputError as e:
        raise InputError(f"fuzzy set {name!r}: {e}") from None


_GENERATORS = {
    "translates": (translates_family, ("start", "step")),
    "collapse": (collapse_family, ("base", "far")),
    "crisp_intervals": (crisp_interval_family, ("low", "high", "step")),
    "random": (random_family, ("box", "max_levels", "max_points")),
}


def _expand_generator(space: MetricSpace, name: str, gen: Mapping, default_seed: int) -> FuzzyFamily:
    kind = _need(gen, "kind", f"family {name!r} generator")
    if kind not in _GENERATORS:
        raise InputError(f"family {name!r}: unknown generator kind {kind!r}")
    fn, allowed = _GENERATORS[kind]
    params = gen.get("params", {})
    if not isinstance(params, Mapping):
        raise InputError(f"family {name!r}: generator params must be an object")
    bad = sorted(set(params) - set(allowed))
    if bad:
        raise InputError(f"family {name!r}: unknown generator params {bad} (allowed: {list(allowed)})")
    kwargs = dict(params)
    if "box" in kwargs:
        kwargs["box"] = tuple(float(x) for x in kwargs["box"])
    if kind == "crisp_intervals":
        if "count" in gen:
            raise InputError(f"family {name!r}: crisp_intervals derives its count from the grid")
        fam = fn(space, **kwargs)
    else:
        count = _need(gen, "count", f"family {name!r} generator")
        if not isinstance(count, int) or count < 1:
            raise InputError(f"family {name!r}: count must be a positive integer")
        if kind == "random":
            kwargs["seed"] = int(gen.get("seed", default_seed))
        fam = fn(space, count, **kwargs)
    names = tuple(f"{name}[{k + 1}]" for k in range(len(fam.members)))
    return fuzzy_family(fam.members, names, fam.generator)


def parse_document(data: Any, default_seed: int = 0) -> Document:
    """Validate a decoded JSON document and expand its generators."""
    if not isinstance(data, Mapping):
        raise InputError("document: top level must be an object")
    space = _parse_space(_need(data, "space", "document"))
    fuzzy_sets: dict[str, StepFuzzySet] = {}
    declared: list[str] = []
    for obj in data.get("fuzzy_sets", []):
        name, u = _parse_fuzzy(space, obj)
        if name in fuzzy_sets:
            raise InputError(f"duplicate fuzzy set name {name!r}")
        fuzzy_sets[name] = u
        declared.append(name)
    families: dict[str, FuzzyFamily] = {}
    for obj in data.get("families", []):
        if not isinstance(obj, Mapping):
            raise InputError("families: entries must be objects")
        name = _check_name(_need(obj, "name", "families"), "families")
        if name in families:
            raise InputError(f"duplicate family name {name!r}")
        if ("members" in obj) == ("generator" in obj):
            raise InputError(f"family {name!r}: needs exactly one of members or generator")
        if "members" in obj:
            member_names = [str(m) for m in obj["members"]]
            members = []
            for m in member_names:
                if m not in fuzzy_sets:
                    raise InputError(f"family {name!r}: unknown member {m!r}")
                members.append(fuzzy_sets[m])
            families[name] = fuzzy_family(members, member_names)
        else:
            fam = _expand_generator(space, name, obj["generator"], default_seed)
            for member_name, member in zip(fam.names, fam.members):
                if member_name in fuzzy_sets:
                    raise InputError(f"generated name {member_name!r} collides with a fuzzy set")
                fuzzy_sets[member_name] = member
            families[name] = fam
    sequences: dict[str, tuple[str, ...]] = {}
    for obj in data.get("sequences", []):
        if not isinstance(obj, Mapping):
            raise InputError("sequences: entries must be objects")
        name = _check_name(_need(obj, "name", "sequences"), "sequences")
        if name in sequences:
            raise InputError(f"duplicate sequence name {name!r}")
        member_names = [str(m) for m in _need(obj, "members", f"sequence {name!r}")]
        if not member_names:
            raise InputError(f"sequence {name!r}: members must be nonempty")
        for m in member_names:
            if m not in fuzzy_sets:
                raise InputError(f"sequence {name!r}: unknown member {m!r}")
        sequences[name] = tuple(member_names)
    return Document(
        space=space,
        fuzzy_sets=fuzzy_sets,
        declared=tuple(declared),
        families=families,
        sequences=sequences,
    )


def load_document(path: str, default_seed: int = 0) -> Document:
    """Load and validate a document from a JSON file."""
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: parse error at line {e.lineno}, column {e.colno}: {e.msg}") from None
    return parse_document(data, default_seed)


def document_to_json(doc: Document) -> dict:
    """Serialize a document with all generators expanded to member lists."""
    if doc.space.mode == EUCLIDEAN:
        space_obj: dict[str, Any] = {"type": EUCLIDEAN, "dim": doc.space.dim}
    else:
        space_obj = {"type": FINITE, "matrix": [list(row) for row in doc.space.matrix]}
    fuzzy_objs = []
    for name, u in doc.fuzzy_sets.items():
        levels = []
        for a, cut in u.levels:
            if doc.space.mode == EUCLIDEAN:
                pts = [list(p.coords) for p in cut.points]
            else:
                pts = [p.index for p in cut.points]
            levels.append({"alpha": a, "points": pts})
        fuzzy_objs.append({"name": name, "levels": levels})
    family_objs = [
        {"name": name, "members": list(fam.names)} for name, fam in doc.families.items()
    ]
    seq_objs = [{"name": name, "members": list(ms)} for name, ms in doc.sequences.items()]
    return {
        "space": space_obj,
        "fuzzy_sets": fuzzy_objs,
        "families": family_objs,
        "sequences": seq_objs,
    }
