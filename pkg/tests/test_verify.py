from __future__ import annotations

import pytest

from positroid_lab.core import DyckPath
from positroid_lab.errors import InvalidArgument
from positroid_lab.verify import (
    CHECKS,
    FAIL,
    PASS,
    SKIP,
    Caps,
    CheckResult,
    PathReport,
    VerifyReport,
    sweep_types,
    verify_path,
    verify_sweep,
    verify_type,
)


class TestCaps:
    def test_defaults(self):
        assert Caps.from_env({}) == Caps(12, 9, 8)

    def test_override_replaces_every_cap(self):
        assert Caps.from_env({"POSITROID_LAB_MAX_N": "6"}) == Caps(6, 6, 6)

    @pytest.mark.parametrize("raw", ["six", "1"])
    def test_bad_override(self, raw):
        with pytest.raises(InvalidArgument):
            Caps.from_env({"POSITROID_LAB_MAX_N": raw})


class TestVerifyPath:
    def test_all_checks_pass_on_eenen(self):
        report = verify_path(DyckPath.parse("EENEN"))
        assert report.passed
        assert [c.name for c in report.checks] == list(CHECKS)
        assert all(c.status == PASS for c in report.checks)

    def test_skip_marks_checks(self):
        report = verify_path(DyckPath.parse("EENEN"), frozenset({"polytope-lp", "minors"}))
        status = {c.name: c.status for c in report.checks}
        assert status["polytope-lp"] == SKIP and status["minors"] == SKIP
        assert status["necklace"] == PASS

    def test_caps_skip_expensive_checks(self):
        report = verify_path(DyckPath.parse("EENEN"), caps=Caps(12, 4, 4))
        status = {c.name: c.status for c in report.checks}
        assert status["minors"] == SKIP and status["polytope-lp"] == SKIP
        assert status["permutation"] == PASS and status["le"] == PASS

    def test_notes_collected(self):
        notes = []
        verify_path(DyckPath.parse("EENEENN"), notes=notes)
        assert all(n.path == "EENEENN" for n in notes)


class TestReports:
    def test_type_3_2_has_two_paths(self):
        report = verify_type(3, 2)
        assert report.passed
        assert sorted(p.path for p in report.paths) == ["EEENN", "EENEN"]

    def test_type_2_1(self):
        report = verify_type(2, 1)
        assert report.passed and len(report.paths) == 1

    def test_sweep_types(self):
        assert sweep_types(3) == [(1, 1), (2, 1), (1, 2)]

    def test_sweep_respects_count_cap(self):
        with pytest.raises(InvalidArgument):
            verify_sweep(7, caps=Caps(6, 6, 6))

    def test_small_sweep_passes(self):
        report = verify_sweep(6)
        assert report.passed
        assert report.counterexample() is None
        assert report.to_json()["status"] == PASS

    def test_unknown_skip(self):
        with pytest.raises(InvalidArgument):
            verify_type(2, 1, skip=["nonsense"])

    def test_counterexample_is_shortest(self):
        bad = (CheckResult("minors", FAIL, "boom"),)
        good = (CheckResult("minors", PASS),)
        report = VerifyReport(
            ((3, 2),),
            (PathReport("EEENENN", 4, 3, bad), PathReport("EENEN", 3, 2, bad),
             PathReport("EEN", 2, 1, good)),
        )
        assert not report.passed
        assert report.counterexample().path == "EENEN"
        data = report.to_json()
        assert data["status"] == FAIL
        assert data["counterexample"]["failures"] == [{"check": "minors", "detail": "boom"}]

    def test_tsv_layout(self):
        tsv = verify_type(2, 1).to_tsv().splitlines()
        assert tsv[0].split("\t") == ["path", "m", "d", *CHECKS]
        assert tsv[1].split("\t")[:3] == ["EEN", "2", "1"]

    def test_literal_formulas_flagged(self):
        report = verify_sweep(6)
        summary = report.note_summary()
        assert summary.get("refined-literal", 0) > 0
