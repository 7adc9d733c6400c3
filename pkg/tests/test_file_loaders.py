import json

import pytest

from eqtree.errors import ColorOutOfRange, DocumentError, WrongEdgeCount
from eqtree.file_loaders import (
    document_kind,
    graph_to_document,
    instance_to_document,
    load_instance,
    load_quotient,
    parse_graph,
    parse_instance,
    parse_quotient,
    quotient_to_document,
    read_document,
    write_document,
)
from eqtree.planar_reduction import reduce_to_graph
from eqtree.quotient import build_dynamics_quotient, expand_quotient


def test_instance_round_trip(fix_d):
    et = expand_quotient(fix_d)
    assert parse_instance(instance_to_document(et)) == et


def test_quotient_round_trip(fix_d, path4_swap):
    assert parse_quotient(quotient_to_document(fix_d)) == fix_d
    looped = build_dynamics_quotient(path4_swap)
    document = quotient_to_document(looped)
    assert document["loop"] == {"vertex": 0, "color": 2}
    assert parse_quotient(document) == looped


def test_graph_round_trip(fix_d):
    g = reduce_to_graph(fix_d)
    assert parse_graph(graph_to_document(g)) == g
    assert "provenance" not in graph_to_document(g.without_provenance())


def test_xz_files(tmp_path, fix_d):
    path = str(tmp_path / "fix_d.json.xz")
    write_document(path, quotient_to_document(fix_d))
    assert load_quotient(path) == fix_d


def test_defaults(tmp_path):
    path = tmp_path / "path.json"
    path.write_text(json.dumps({"n": 3, "k": 1, "edges": [[0, 1, 1], [1, 2, 1]]}))
    et = load_instance(str(path))
    assert et.perm.image == (0, 1, 2)
    assert et.tree.mode.value == "generic"


@pytest.mark.parametrize(
    "document, position",
    [
        ({"n": 2, "k": 1, "edges": [[0, 1, 1]], "colour": 1}, "colour"),
        ({"n": 2, "edges": [[0, 1, 1]]}, "k"),
        ({"n": 2, "k": 1, "edges": [[0, 1]]}, "edges[0]"),
        ({"n": "2", "k": 1, "edges": [[0, 1, 1]]}, "n"),
        ({"n": 2, "k": 1, "edges": [[0, 1, 1]], "mode": "smooth"}, "mode"),
        ({"n": 2, "k": 1, "edges": [[0, 1, 1]], "perm": [0, True]}, "perm[1]"),
    ],
)
def test_instance_document_errors(document, position):
    with pytest.raises(DocumentError) as info:
        parse_instance(document)
    assert info.value.position == position


@pytest.mark.parametrize(
    "document, position",
    [
        ({"nv": -1, "edges": []}, "nv"),
        ({"nv": 0, "edges": []}, "nv"),
        ({"nv": 2, "edges": [], "provenance": [1, None]}, "provenance[0]"),
        ({"nv": 1, "edges": [], "provenance": [["cycle", 0]]}, "provenance[0]"),
        ({"nv": 1, "edges": [], "provenance": [[["vertex"], 0]]}, "provenance[0]"),
        ({"nv": 1, "edges": [], "provenance": [["vertex", "a"]]}, "provenance[0][1]"),
    ],
)
def test_graph_document_errors(document, position):
    with pytest.raises(DocumentError) as info:
        parse_graph(document)
    assert info.value.position == position


def test_validation_errors_pass_through():
    with pytest.raises(WrongEdgeCount):
        parse_instance({"n": 3, "k": 1, "edges": [[0, 1, 1], [1, 2, 1], [0, 2, 1]]})
    with pytest.raises(ColorOutOfRange):
        parse_quotient({"m": 2, "k": 1, "weights": [1, 1], "edges": [[0, 1, 2]], "loop": None})


def test_unreadable_documents(tmp_path):
    with pytest.raises(DocumentError) as info:
        read_document(str(tmp_path / "missing.json"))
    assert info.value.position == "file"
    broken = tmp_path / "broken.json"
    broken.write_text("{\"n\": ")
    with pytest.raises(DocumentError) as info:
        read_document(str(broken))
    assert info.value.position == "document"


def test_document_kind():
    assert document_kind({"n": 1}) == "instance"
    assert document_kind({"m": 1}) == "quotient"
    assert document_kind({"nv": 3}) == "graph"
    with pytest.raises(DocumentError):
        document_kind([])
