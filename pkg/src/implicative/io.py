"""JSON algebra definitions, content fingerprints and the shipped example algebras.

An algebra file looks like::

    {"name": "C3",
     "elements": ["0", "h", "1"],
     "order": "chain",                # or "powerset:k", or [["a", "b"], ...] generating pairs
     "implication": "heyting",        # or a table of labels, row = antecedent
     "separator": ["h", "1"]}         # or "top" / "all"
"""
from __future__ import annotations

import hashlib
import json
from importlib import resources
from pathlib import Path

from .algebra import ImplicativeAlgebra, heyting_implication, resolve_separator
from .errors import InvalidArgument, ParseError
from .lattice import CompleteLattice, ValidationReport, build_powerset, subset_label, validate_lattice

SHIPPED = ("b2", "c3", "c3_half", "m2", "magma1", "c3_weak")


class InvalidAlgebra(InvalidArgument):
    """The definition parsed but its order is not a complete lattice."""

    def __init__(self, report: ValidationReport):
        law, witness = report.violations[0]
        super().__init__(f"not a complete lattice: {law} {witness}")
        self.report = report


def _order(spec: dict):
    elements = spec.get("elements")
    order = spec.get("order")
    if elements is not None:
        if not isinstance(elements, list) or not all(isinstance(e, str) for e in elements):
            raise ParseError("'elements' must be a list of strings")
        if len(set(elements)) != len(elements):
            raise ParseError("element labels must be unique")
    if order == "chain":
        if not elements:
            raise ParseError("a chain needs its elements listed bottom to top")
        n = len(elements)
        return elements, [[a <= b for b in range(n)] for a in range(n)]
    if isinstance(order, str) and order.startswith("powerset:"):
        try:
            k = int(order.split(":", 1)[1])
        except ValueError:
            raise ParseError(f"bad powerset order {order!r}") from None
        if k < 0 or k > 4:
            raise ParseError("powerset orders are limited to k <= 4")
        labels = elements or [subset_label(b, k) for b in range(1 << k)]
        if len(labels) != 1 << k:
            raise ParseError(f"powerset:{k} needs {1 << k} elements in bitmask order")
        lat = build_powerset(k, labels)
        return list(lat.labels), lat.leq_table
    if isinstance(order, list):
        if elements is None:
            raise ParseError("an explicit order needs 'elements'")
        index = {lab: i for i, lab in enumerate(elements)}
        n = len(elements)
        leq = [[a == b for b in range(n)] for a in range(n)]
        for pair in order:
            if not (isinstance(pair, list) and len(pair) == 2):
                raise ParseError(f"order entries must be [lower, upper] pairs, got {pair!r}")
            a, b = pair
            if a not in index or b not in index:
                raise ParseError(f"order pair {pair!r} mentions an unknown element")
            leq[index[a]][index[b]] = True
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    for j in range(n):
                        if leq[k][j]:
                            leq[i][j] = True
        return elements, leq
    raise ParseError("'order' must be \"chain\", \"powerset:k\" or a list of pairs")


def algebra_from_dict(spec: dict) -> ImplicativeAlgebra:
    """Build the algebra. The lattice is validated (InvalidAlgebra); the
    implicative laws are not, see :func:`validate_algebra`."""
    if not isinstance(spec, dict):
        raise ParseError("algebra definition must be a JSON object")
    labels, leq = _order(spec)
    report = validate_lattice(labels, leq)
    if not report.ok:
        raise InvalidAlgebra(report)
    lattice = CompleteLattice(labels, leq, validate=False)
    index = {lab: i for i, lab in enumerate(lattice.labels)}
    implication = spec.get("implication", "heyting")
    if implication == "heyting":
        imp = heyting_implication(lattice)
    elif isinstance(implication, list):
        n = lattice.size
        if len(implication) != n or any(not isinstance(r, list) or len(r) != n for r in implication):
            raise ParseError(f"implication table must be {n} x {n}")
        try:
            imp = [[index[v] for v in row] for row in implication]
        except KeyError as exc:
            raise ParseError(f"implication table mentions unknown element {exc.args[0]!r}") from None
    else:
        raise ParseError("'implication' must be \"heyting\" or a table of labels")
    separator = spec.get("separator", "top")
    if isinstance(separator, list):
        unknown = [s for s in separator if s not in index]
        if unknown:
            raise ParseError(f"separator mentions unknown elements {unknown}")
    elif separator not in ("top", "all"):
        raise ParseError("'separator' must be a list of labels, \"top\" or \"all\"")
    return ImplicativeAlgebra(lattice, imp, resolve_separator(lattice, separator), name=str(spec.get("name", "")))


def algebra_to_dict(alg: ImplicativeAlgebra) -> dict:
    labels = alg.lattice.labels
    return {
        "name": alg.name,
        "elements": list(labels),
        "order": [list(p) for p in alg.lattice.order_pairs()],
        "implication": [[labels[v] for v in row] for row in alg.imp_table],
        "separator": [labels[a] for a in sorted(alg.separator)],
    }


def load_algebra(source) -> ImplicativeAlgebra:
    """From a path, a JSON string, a dict, or the name of a shipped algebra."""
    if isinstance(source, dict):
        return algebra_from_dict(source)
    text = str(source)
    if text in SHIPPED:
        return shipped_algebra(text)
    if not text.lstrip().startswith("{"):
        try:
            text = Path(text).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read algebra file {source!r}: {exc.strerror}") from None
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos, text) from None
    return algebra_from_dict(spec)


def dump_algebra(alg: ImplicativeAlgebra, path=None) -> str:
    text = json.dumps(algebra_to_dict(alg), indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def fingerprint(alg: ImplicativeAlgebra) -> str:
    """sha256 of the algebra's content (order, implication, separator); the name is ignored."""
    return hashlib.sha256(canonical_json(alg.fingerprint_data()).encode()).hexdigest()


def shipped_algebra(name: str) -> ImplicativeAlgebra:
    if name not in SHIPPED:
        raise InvalidArgument(f"no shipped algebra {name!r}; choose from {SHIPPED}")
    text = resources.files("implicative.data").joinpath(f"{name}.json").read_text()
    return algebra_from_dict(json.loads(text))


def shipped_algebras() -> dict[str, ImplicativeAlgebra]:
    return {name: shipped_algebra(name) for name in SHIPPED}
