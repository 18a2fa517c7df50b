"""File formats: structure JSON (covers / partial joins) and DOT export.

Total semilattices:   {"labels": [...], "covers": [[lower, upper], ...]}
Partial algebras:     {"n": 9, "joins": [[i, j, k], ...]}

Cover and join entries may reference elements by index or by label.
"""

import json

from subsemi.counting import PartialBinaryAlgebra
from subsemi.errors import SubsemiError
from subsemi.order import JoinSemilattice, Poset, to_semilattice


class FormatError(SubsemiError, ValueError):
    """Malformed structure file; message names the offending field."""


def _resolve(entry, labels, field):
    if isinstance(entry, int):
        if labels is not None and not 0 <= entry < len(labels):
            raise FormatError(f"{field}: index {entry} out of range")
        return entry
    if labels is None:
        raise FormatError(f"{field}: label {entry!r} used but no labels given")
    try:
        return labels.index(entry)
    except ValueError:
        raise FormatError(f"{field}: unknown label {entry!r}") from None


def structure_from_dict(data):
    """Parse a structure dict; returns (structure, labels)."""
    if not isinstance(data, dict):
        raise FormatError("top level: expected an object")
    if "covers" in data:
        labels = data.get("labels")
        if labels is None or not isinstance(labels, list) or not labels:
            raise FormatError("labels: required nonempty list for cover format")
        labels = [str(x) for x in labels]
        if len(set(labels)) != len(labels):
            raise FormatError("labels: duplicate label")
        n = len(labels)
        covers = []
        for idx, pair in enumerate(data["covers"]):
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise FormatError(f"covers[{idx}]: expected [lower, upper]")
            lo = _resolve(pair[0], labels, f"covers[{idx}][0]")
            hi = _resolve(pair[1], labels, f"covers[{idx}][1]")
            covers.append((lo, hi))
        try:
            sl = to_semilattice(Poset.from_covers(n, covers))
        except SubsemiError as exc:
            raise FormatError(f"covers: {exc}") from exc
        return sl, tuple(labels)
    if "joins" in data:
        n = data.get("n")
        labels = data.get("labels")
        if labels is not None:
            labels = [str(x) for x in labels]
            n = len(labels) if n is None else n
        if not isinstance(n, int) or n < 1:
            raise FormatError("n: required positive integer for join format")
        joins = []
        for idx, triple in enumerate(data["joins"]):
            if not isinstance(triple, (list, tuple)) or len(triple) != 3:
                raise FormatError(f"joins[{idx}]: expected [i, j, k]")
            i, j, k = (_resolve(x, labels, f"joins[{idx}][{t}]")
                       for t, x in enumerate(triple))
            joins.append((i, j, k))
        try:
            pa = PartialBinaryAlgebra(n, joins)
        except ValueError as exc:
            raise FormatError(f"joins: {exc}") from exc
        return pa, tuple(labels) if labels else tuple(str(i) for i in range(n))
    raise FormatError("top level: expected a 'covers' or 'joins' field")


def load_structure(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc
    return structure_from_dict(data)


def structure_to_dict(structure, labels=None):
    if labels is None:
        labels = [str(i) for i in range(structure.n)]
    labels = list(labels)
    if isinstance(structure, JoinSemilattice):
        return {"labels": labels,
                "covers": [list(c) for c in structure.poset.covers]}
    return {"labels": labels, "n": structure.n,
            "joins": [list(t) for t in structure.defined_joins]}


def structure_to_dot(structure, labels=None, name="structure"):
    """DOT digraph of covers, drawn bottom to top; defined joins of partial
    algebras appear as labeled constraint nodes."""
    if labels is None:
        labels = [str(i) for i in range(structure.n)]
    lines = [f"digraph {json.dumps(name)} {{", "  rankdir=BT;"]
    for i, lab in enumerate(labels):
        lines.append(f"  e{i} [label={json.dumps(str(lab))}];")
    if isinstance(structure, JoinSemilattice):
        for lo, hi in structure.poset.covers:
            lines.append(f"  e{lo} -> e{hi};")
    else:
        for t, (i, j, k) in enumerate(structure.defined_joins):
            lines.append(f'  j{t} [label="v", shape=diamond, fontsize=9];')
            lines.append(f"  e{i} -> j{t} [dir=none, style=dashed];")
            lines.append(f"  e{j} -> j{t} [dir=none, style=dashed];")
            lines.append(f"  j{t} -> e{k};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def count_report_to_dict(report):
    return {
        "count": report.count,
        "sigma": str(report.sigma),
        "sigma_decimal": float(report.sigma),
        "k": report.k,
        "n": report.n,
    }
