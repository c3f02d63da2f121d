import os

import pytest
from hypothesis import given, settings, strategies as st

from cyclicflats.constructions import example3_printed_spec, example4_spec, fig3_spec
from cyclicflats.fileformat import (FIXTURES, ExtensionFile, FormatError, MatroidFile, PavingFile, fixture_path,
                                    load, load_fixture, load_matroid, loads, write_atomic)

from corpus import FANO, corpus, fig1


@pytest.mark.parametrize("name", FIXTURES)
def test_fixtures_round_trip_byte_identical(name):
    text = fixture_path(name).read_text(encoding="utf-8")
    assert text.startswith("format: 1\n")
    assert loads(text).dumps() == text


def test_fixture_contents():
    M, N = fig1()
    assert M.name == "fig1-M" and (M.n, M.r) == (8, 3)
    assert load_fixture("fig1-M").labels == tuple(str(i) for i in range(1, 9))
    pair = load_fixture("example5.3").pair_spec()
    assert pair == example4_spec(2)
    assert load_fixture("example5.2-printed").pair_spec() == example3_printed_spec()
    ext = load_fixture("fig3")
    spec, sizes, ranks = fig3_spec()
    assert ext.sizes == sizes and ext.ranks == ranks
    assert ext.spec.s == spec.s and ext.spec.t == spec.t and ext.spec.atoms == spec.atoms


@pytest.mark.parametrize("m", corpus()[:12], ids=lambda m: m.name or "m")
def test_matroid_documents_round_trip(m):
    text = MatroidFile.from_matroid(m).dumps()
    doc = MatroidFile.loads(text)
    assert doc.to_matroid() == m
    assert doc.dumps() == text


def test_noncanonical_input_canonicalizes():
    text = "format: 1\nkind: matroid\nn: 3\ncyclic_flats:\n  - [[2, 1, 0], 2]\n  - [[], 0]\n"
    doc = MatroidFile.loads(text)
    again = doc.dumps()
    assert again != text and MatroidFile.loads(again).dumps() == again
    assert "name" not in again


@pytest.mark.parametrize("text, msg", [
    ("kind: matroid\nn: 2\ncyclic_flats: []\n", "format"),
    ("format: 2\nkind: matroid\n", "format"),
    ("format: 1\nkind: matroid\ncyclic_flats: []\n", "missing"),
    ("format: 1\nkind: matroid\nn: 2\ncyclic_flats:\n  - [[0, 5], 1]\n", "outside"),
    ("format: 1\nkind: matroid\nn: 2\ncyclic_flats:\n  - [[0, 0], 1]\n", "repeated"),
    ("format: 1\nkind: matroid\nn: 2\ncyclic_flats:\n  - [[0], 1, 3]\n", "pairs"),
    ("format: 1\nkind: widget\n", "unknown"),
    ("format: 1\n: [\n", "YAML"),
    ("- 1\n- 2\n", "mapping"),
])
def test_malformed_documents(text, msg):
    with pytest.raises(FormatError, match=msg):
        loads(text)


def test_paving_documents():
    pf = PavingFile(7, 3, None, tuple(frozenset(h) for h in FANO.dependent_hyperplanes))
    text = pf.dumps()
    assert "kind: paving\n" in text
    assert PavingFile.loads(text).dumps() == text
    bad = text.replace("[0, 1, 2]", "[0, 1]")
    with pytest.raises(FormatError):
        loads(bad)


def test_pair_with_explicit_alpha_map():
    text = fixture_path("example5.3").read_text()
    first = '"(e,p)(f,q)"'
    explicit = '["a", "b", "c", "d", "p", "q", "e", "f", "r", "s", "t", "u"]'
    doc = loads(text.replace(first, explicit))
    assert doc.pair_spec() == example4_spec(2)
    with pytest.raises(FormatError):
        loads(text.replace(first, '["a", "a", "c", "d", "p", "q", "e", "f", "r", "s", "t", "u"]'))
    with pytest.raises(FormatError):
        loads(text.replace(first, '"(e,zz)"'))


def test_extension_document_round_trip():
    spec, sizes, ranks = fig3_spec()
    text = ExtensionFile(spec, sizes, ranks).dumps()
    assert ExtensionFile.loads(text).dumps() == text
    with pytest.raises(FormatError):
        loads(text.replace("s: [1, 1]", "s: [0, 1]"))


def test_load_from_disk_and_atomic_write(tmp_path):
    path = tmp_path / "m.yaml"
    write_atomic(path, load_fixture("fig1-N").dumps())
    assert load(path).name == "fig1-N"
    assert load_matroid(path).n == 8
    assert [p.name for p in tmp_path.iterdir()] == ["m.yaml"]
    with pytest.raises(FormatError):
        load_matroid(fixture_path("example5.3"))


def test_atomic_write_leaves_no_partial_file(tmp_path):
    target = tmp_path / "out.yaml"
    with pytest.raises(TypeError):
        write_atomic(target, None)
    assert not target.exists()
    assert not [p for p in os.listdir(tmp_path) if p.startswith(".tmp-")]


def test_unknown_fixture():
    with pytest.raises(FormatError):
        fixture_path("nope")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, len(corpus()) - 1), st.text(alphabet="abcxyz -_:'\"", max_size=12))
def test_names_survive_round_trip(i, name):
    m = corpus()[i]
    doc = MatroidFile.from_matroid(m, name=name)
    back = MatroidFile.loads(doc.dumps())
    assert back.name == name and back.to_matroid() == m
