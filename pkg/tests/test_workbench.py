import pytest

from vertexmagic.abelian import enumerate_abelian_groups
from vertexmagic.families import parse_instance
from vertexmagic.workbench import (
    VerdictRecord,
    audit_families,
    crosscheck,
    discrepancies,
    emit_records,
    load_records,
    recheck_record,
)


def test_standard_grid_contents(grid):
    names = {inst.render() for inst in grid}
    assert "M11(0,0)" in names
    assert "C8" in names
    assert "G2(1,0)" in names
    assert all(inst.variant is None for inst in grid)


def test_grid_is_sorted_and_unique(grid):
    keys = [(i.family, i.variant or "", i.pendant_params, i.hub_subtrees)
            for i in grid]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_mini_crosscheck_agrees():
    grid = [parse_instance("G2(1,0)"), parse_instance("M11(0,0)"),
            parse_instance("M3(1,0,0)")]
    records = crosscheck(grid, enumerate_abelian_groups(5))
    assert len(records) == 15
    assert all(r.agree for r in records)
    assert discrepancies(records) == []
    m11 = [r for r in records if r.instance == "M11(0,0)"]
    assert all(r.oracle == "witness" for r in m11)


def test_records_roundtrip(tmp_path, campaign):
    path = tmp_path / "records.jsonl"
    emit_records(campaign, path)
    again = load_records(path)
    assert again == campaign


def test_records_byte_stable(tmp_path):
    grid = [parse_instance("G2(1,0)"), parse_instance("M4(0,0)")]
    catalog = enumerate_abelian_groups(5)
    p1 = tmp_path / "a.jsonl"
    p2 = tmp_path / "b.jsonl"
    emit_records(crosscheck(grid, catalog), p1)
    emit_records(crosscheck(grid, catalog), p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_load_rejects_corrupt_line(tmp_path, campaign):
    path = tmp_path / "records.jsonl"
    emit_records(campaign[:5], path)
    text = path.read_text().splitlines()
    text[2] = text[2][:-3] + "garbage"
    path.write_text("\n".join(text) + "\n")
    with pytest.raises(ValueError, match="line 3"):
        load_records(path)


def test_records_self_contained(campaign):
    sample = [r for r in campaign if r.oracle == "witness"][:25]
    sample += [r for r in campaign if r.oracle == "exhausted"][:10]
    for rec in sample:
        assert recheck_record(rec)


def test_ledger_entry_synthesis():
    """The ledger machinery re-verifies entries by their own contents; a
    tampered record must fail the recheck."""
    grid = [parse_instance("G2(1,0)")]
    records = crosscheck(grid, enumerate_abelian_groups(4))
    witness = next(r for r in records if r.oracle == "witness")
    tampered = VerdictRecord(**{**witness.__dict__, "mu": "0"})
    assert not recheck_record(tampered)


def test_audit_clean():
    report = audit_families(nmax_uni=9, nmax_bi=8)
    assert report.clean
    assert report.family_counts.get("B3-M11", 0) >= 1


def test_audit_bounds():
    from vertexmagic.graphs import GraphError

    with pytest.raises(GraphError):
        audit_families(nmax_uni=11)


def test_audit_documents_exceptions():
    report = audit_families(nmax_uni=9, nmax_bi=8)
    text = report.to_text()
    assert "C6 (diameter 3)" in text
    assert "C8 (diameter 4)" in text
    assert "four pendant parameters" in text
    assert "unrecognized: none" in text
