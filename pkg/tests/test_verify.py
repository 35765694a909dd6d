from __future__ import annotations

from homcount.groups import preset
from homcount.verify import verify_all


def test_verify_all_passes_on_catalog_samples():
    for name in ("S3", "Q8", "C3", "trivial"):
        report = verify_all(preset(name), max_genus=2, max_crosscaps=3, max_edges=2)
        assert report.all_passed, [c for c in report.checks if not c.passed]
        assert all(c.passed for c in report.checks)


def test_verify_reports_fs_partition():
    report = verify_all(preset("Q8"))
    assert report.fs == {"g1": [0, 1, 2, 3], "g2": [], "g3": [4]}
    assert verify_all(preset("C3")).fs["g2"] == [1, 2]


def test_verify_work_bound_skips_instead_of_failing():
    report = verify_all(preset("S3"), max_genus=2, max_crosscaps=3, max_edges=2, work=40)
    skipped = [c.name for c in report.checks if c.passed is None]
    assert skipped
    assert report.all_passed
    assert report.to_json()["all_passed"] is True
