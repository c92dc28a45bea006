import pytest

from coiso.catalog import (
    MATCH,
    MISMATCH,
    CatalogError,
    find,
    load,
    load_default,
    loads,
    verify_entry,
)

PAIR = """
[[entry]]
label = "x"
big = "B3"
small = "G2"
restriction = [["1", "0", "1"], ["0", "1", "0"]]
provenance = "test"
expected.ctilde = { value = %s, source = "test" }
"""


def test_empty_file_is_empty_catalog():
    assert loads("") == []
    assert loads("schema_version = 1\n") == []


def test_bundled_catalog_covers_table_rows(catalog):
    labels = {e.label for e in catalog}
    rows = {f"table1-{k}" for k in (1, 2, 3, 4, 5, 6, 8)} | {"table1-7s", "table1-7l"}
    assert rows <= labels
    assert len(catalog) >= 9


def test_every_expected_value_has_a_source(catalog):
    for e in catalog:
        assert e.provenance
        for name, exp in e.expected.items():
            assert exp.source, (e.label, name)
        for spec in e.invariants:
            for name, exp in spec.expected.items():
                assert exp.source, (e.label, spec.name, name)


def test_negative_complexity_rejected():
    with pytest.raises(CatalogError):
        loads(PAIR % "-1")


def test_unknown_quantity_rejected():
    with pytest.raises(CatalogError, match="frobnication"):
        loads(PAIR.replace("ctilde", "frobnication") % "1")


def test_missing_source_rejected():
    with pytest.raises(CatalogError):
        loads(PAIR.replace(', source = "test"', "") % "1")


def test_duplicates_rejected():
    with pytest.raises(CatalogError, match="duplicate"):
        loads(PAIR % "1" + PAIR % "1")


def test_bad_schema_and_syntax():
    with pytest.raises(CatalogError, match="schema_version"):
        loads("schema_version = 2\n")
    with pytest.raises(CatalogError, match="line"):
        loads("[[entry]\nlabel = 1\n")
    with pytest.raises(CatalogError):
        loads(PAIR.replace('small = "G2"', 'small = "Q7"') % "1")


def test_wrong_expected_value_is_a_mismatch_not_an_error():
    (entry,) = loads(PAIR % "2")
    v = verify_entry(entry)
    q = {x.name: x for x in v.quantities}
    assert q["ctilde"].status == MISMATCH
    assert (q["ctilde"].expected, q["ctilde"].computed) == (2, 1)
    assert not v.ok


def test_correct_value_matches():
    (entry,) = loads(PAIR % "1")
    v = verify_entry(entry)
    assert v.ok and {x.name: x.status for x in v.quantities}["ctilde"] == MATCH


def test_bound_caps_family_rank():
    small = load_default(max_rank=3)
    labels = {e.label for e in small}
    assert "gelfand-sl4-gl3" in labels and "gelfand-sl5-gl4" not in labels


def test_load_directory_and_file(tmp_path):
    (tmp_path / "a.toml").write_text(PAIR % "1")
    (tmp_path / "b.toml").write_text(PAIR.replace('label = "x"', 'label = "y"') % "1")
    assert [e.label for e in load(tmp_path)] == ["x", "y"]
    assert [e.label for e in load(tmp_path / "a.toml")] == ["x"]
    (tmp_path / "c.toml").write_text(PAIR % "1")
    with pytest.raises(CatalogError):
        load(tmp_path)


def test_find_unknown_label(catalog):
    with pytest.raises(KeyError):
        find(catalog, "nope")


@pytest.mark.parametrize("label", ["table1-3", "gelfand-spin7-spin6", "item14"])
def test_selected_entries_verify(catalog, label):
    v = verify_entry(find(catalog, label), points=20)
    assert v.ok, [q.to_dict() for q in v.mismatches]
