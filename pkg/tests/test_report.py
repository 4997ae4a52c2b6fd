import json

import pytest

from dp5links.cli import main
from dp5links.report import (
    CATALOG,
    CHECK_FUNCTIONS,
    CheckFailure,
    Context,
    UnknownCheckId,
    catalog_ids,
    run_checks,
)


@pytest.fixture(scope="module")
def ctx():
    return Context()


def test_catalog_is_large_enough_and_well_formed():
    ids = catalog_ids()
    assert len(ids) >= 15
    assert len(set(ids)) == len(ids)
    for cid in ids:
        assert cid == cid.lower()
        assert " " not in cid
        assert cid in CHECK_FUNCTIONS
    required = {
        "clebsch-smooth", "clebsch-orbit-4", "clebsch-orbit-5", "clebsch-census-lt8",
        "lines-27", "skew-families", "quadric-census-lt8", "general-position-k1-k2",
        "ruling-minus2", "picard-reconstruct", "invariant-ranks", "contractions-two",
        "divisor-relations", "selfmap-degree", "dp5-orbit-descent", "thm-g40",
    }
    assert required <= set(ids)


def test_run_checks_subset_and_unknown_id(ctx):
    report = run_checks(["clebsch-smooth", "clebsch-orbit-4"], context=ctx)
    # results are ordered by check id
    assert [c.check_id for c in report.checks] == ["clebsch-orbit-4", "clebsch-smooth"]
    assert report.overall == "pass"
    with pytest.raises(UnknownCheckId):
        run_checks(["nope"], context=ctx)


def test_report_json_schema(ctx):
    report = run_checks(["clebsch-smooth"], context=ctx)
    data = json.loads(report.to_json())
    assert set(data) == {"version", "schema_version", "conventions", "checks", "overall"}
    assert data["overall"] == "pass"
    check = data["checks"][0]
    assert set(check) == {"id", "statement", "status", "certificate"}
    assert "wall_time" not in json.dumps(data)


def test_failures_are_reported_not_raised(ctx, monkeypatch):
    def broken(_):
        raise CheckFailure("synthetic discrepancy")

    monkeypatch.setitem(CHECK_FUNCTIONS, "clebsch-smooth", broken)
    report = run_checks(["clebsch-smooth"], context=ctx)
    assert report.overall == "fail"
    assert report.checks[0].status == "fail"
    assert "synthetic discrepancy" in report.checks[0].certificate["failure"]


def test_errors_are_reported_not_raised(ctx, monkeypatch):
    def exploding(_):
        raise RuntimeError("boom")

    monkeypatch.setitem(CHECK_FUNCTIONS, "clebsch-smooth", exploding)
    report = run_checks(["clebsch-smooth"], context=ctx)
    assert report.checks[0].status == "error"
    assert report.overall == "fail"


def test_parallel_jobs_match_sequential(ctx):
    selection = ["clebsch-smooth", "clebsch-orbit-4", "clebsch-orbit-5"]
    seq = run_checks(selection, jobs=1, context=ctx)
    par = run_checks(selection, jobs=3, context=ctx)
    assert seq.serialize() == par.serialize()


def test_markdown_contains_statements(ctx):
    report = run_checks(["clebsch-smooth"], context=ctx)
    text = report.to_markdown()
    assert "# Verification report" in text
    assert "clebsch-smooth" in text
    assert "## Conventions" in text
    assert "Overall: PASS" in text


def test_cli_list_enumerates_exactly_the_catalog(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    lines = [ln for ln in out.splitlines() if ln.strip()]
    assert len(lines) == len(CATALOG)
    for line, (cid, statement) in zip(lines, CATALOG):
        assert line.startswith(f"{cid}: ")
    assert main(["verify", "no-such-check"]) == 2


def test_cli_verify_writes_output(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "clebsch-smooth", "--format", "json", "--output", str(out)])
    assert code == 0
    data = json.loads(out.read_text())
    assert data["overall"] == "pass"


def test_cli_rejects_unwritable_output(tmp_path):
    target = tmp_path / "missing-dir" / "report.json"
    code = main(["verify", "clebsch-smooth", "--format", "json", "--output", str(target)])
    assert code == 2
