import json
import lzma
from typing import Any, Dict, List, Optional

from eqtree.automorphism import EquippedColoredTree, validate_automorphism
from eqtree.colored_tree import Mode, validate_tree
from eqtree.errors import DocumentError
from eqtree.planar_reduction import SimpleGraphImage
from eqtree.quotient import QuotientTree, make_quotient

INSTANCE_FIELDS = ({"n", "k", "edges"}, {"mode", "perm"})
QUOTIENT_FIELDS = ({"m", "k", "weights", "edges"}, {"loop"})
GRAPH_FIELDS = ({"nv", "edges"}, {"provenance"})


def read_document(path: str) -> Dict[str, Any]:
    try:
        if path.endswith(".xz"):
            with lzma.open(path, "r") as f:
                text = f.read().decode("utf-8")
        else:
            with open(path, "r", encoding="utf-8") as f:
                text = f.read()
    except (OSError, lzma.LZMAError, UnicodeDecodeError) as error:
        raise DocumentError(f"cannot read {path}: {error}", "file")
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise DocumentError(
            f"invalid JSON at line {error.lineno} column {error.colno}: {error.msg}",
            "document",
        )


def write_document(path: str, document: Dict[str, Any]):
    text = json.dumps(document, ensure_ascii=False)
    if path.endswith(".xz"):
        with lzma.open(path, "w") as f:
            f.write(text.encode("utf-8"))
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _check_fields(document, fields, kind: str):
    required, optional = fields
    if not isinstance(document, dict):
        raise DocumentError(f"{kind} document must be a JSON object", "document")
    for name in document:
        if name not in required and name not in optional:
            raise DocumentError(f"unknown field {name!r} in {kind} document", name)
    for name in sorted(required):
        if name not in document:
            raise DocumentError(f"missing field {name!r} in {kind} document", name)


def _int(value, position: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"expected an integer, got {value!r}", position)
    return value


def _int_list(value, position: str, width: Optional[int] = None) -> List[int]:
    if not isinstance(value, list):
        raise DocumentError(f"expected a list, got {value!r}", position)
    if width is not None and len(value) != width:
        raise DocumentError(f"expected {width} entries, got {len(value)}", position)
    return [_int(item, f"{position}[{i}]") for i, item in enumerate(value)]


def _rows(value, position: str, width: int) -> List[List[int]]:
    if not isinstance(value, list):
        raise DocumentError(f"expected a list, got {value!r}", position)
    return [_int_list(row, f"{position}[{i}]", width) for i, row in enumerate(value)]


def document_kind(document: Dict[str, Any]) -> str:
    if isinstance(document, dict):
        if "n" in document:
            return "instance"
        if "m" in document:
            return "quotient"
        if "nv" in document:
            return "graph"
    raise DocumentError("not an instance, quotient or graph document", "document")


def parse_instance(document: Dict[str, Any]) -> EquippedColoredTree:
    _check_fields(document, INSTANCE_FIELDS, "instance")
    n = _int(document["n"], "n")
    k = _int(document["k"], "k")
    mode_name = document.get("mode", Mode.GENERIC.value)
    try:
        mode = Mode(mode_name)
    except ValueError:
        raise DocumentError(f"unknown mode {mode_name!r}", "mode")
    edges = _rows(document["edges"], "edges", 3)
    tree = validate_tree(n, edges, k, mode)
    perm = document.get("perm")
    perm = list(range(tree.n)) if perm is None else _int_list(perm, "perm")
    return validate_automorphism(tree, perm)


def instance_to_document(et: EquippedColoredTree) -> Dict[str, Any]:
    return {
        "n": et.n,
        "k": et.tree.k,
        "mode": et.tree.mode.value,
        "edges": [list(edge) for edge in et.tree.edges],
        "perm": list(et.perm.image),
    }


def parse_quotient(document: Dict[str, Any]) -> QuotientTree:
    _check_fields(document, QUOTIENT_FIELDS, "quotient")
    m = _int(document["m"], "m")
    k = _int(document["k"], "k")
    weights = _int_list(document["weights"], "weights")
    edges = _rows(document["edges"], "edges", 3)
    loop = document.get("loop")
    if loop is not None:
        if not isinstance(loop, dict) or set(loop) != {"vertex", "color"}:
            raise DocumentError('loop must be null or {"vertex", "color"}', "loop")
        loop = (_int(loop["vertex"], "loop.vertex"), _int(loop["color"], "loop.color"))
    return make_quotient(m, weights, edges, k, loop)


def quotient_to_document(q: QuotientTree) -> Dict[str, Any]:
    loop = None
    if q.loop is not None:
        loop = {"vertex": q.loop[0], "color": q.loop[1]}
    return {
        "m": q.m,
        "k": q.k,
        "weights": list(q.weight),
        "edges": [list(edge) for edge in q.qedges],
        "loop": loop,
    }


PROVENANCE_KINDS = {"vertex": 1, "subdivision": 2, "cycle": 2}


def _provenance_tag(tag, position: str):
    if tag is None:
        return None
    kind = tag[0] if isinstance(tag, list) and tag else None
    if not isinstance(kind, str) or kind not in PROVENANCE_KINDS:
        raise DocumentError(f"expected a provenance tag or null, got {tag!r}", position)
    if len(tag) != PROVENANCE_KINDS[kind] + 1:
        raise DocumentError(f"{kind} tags carry {PROVENANCE_KINDS[kind]} integers", position)
    return (kind,) + tuple(_int(item, f"{position}[{i + 1}]") for i, item in enumerate(tag[1:]))


def parse_graph(document: Dict[str, Any]) -> SimpleGraphImage:
    _check_fields(document, GRAPH_FIELDS, "graph")
    nv = _int(document["nv"], "nv")
    if nv < 1:
        raise DocumentError(f"nv must be positive, got {nv}", "nv")
    edges = _rows(document["edges"], "edges", 2)
    provenance = document.get("provenance")
    if provenance is not None:
        if not isinstance(provenance, list) or len(provenance) != nv:
            raise DocumentError(f"provenance must list {nv} tags", "provenance")
        provenance = tuple(
            _provenance_tag(tag, f"provenance[{v}]") for v, tag in enumerate(provenance)
        )
    return SimpleGraphImage(
        nv=nv, gedges=tuple(tuple(edge) for edge in edges), provenance=provenance
    )


def graph_to_document(g: SimpleGraphImage) -> Dict[str, Any]:
    document = {"nv": g.nv, "edges": [list(edge) for edge in g.gedges]}
    if g.provenance is not None:
        document["provenance"] = [None if tag is None else list(tag) for tag in g.provenance]
    return document


def load_instance(path: str) -> EquippedColoredTree:
    return parse_instance(read_document(path))


def load_quotient(path: str) -> QuotientTree:
    return parse_quotient(read_document(path))


def load_graph(path: str) -> SimpleGraphImage:
    return parse_graph(read_document(path))

