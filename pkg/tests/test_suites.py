"""
Tests for verification.suites
-----------------------------
Every suite passes at small n, reports are well formed, and specialization is applied.
"""

from fractions import Fraction

import pytest

from orthotl.combinatorics.shapes import Shape
from orthotl.core.errors import ConfigError
from orthotl.utils.config import Settings
from orthotl.verification.report import CheckRecorder
from orthotl.verification.suites import SPECIALIZABLE, SUITES, run_all, run_suite

SMALL_N = {
    "qscalars": 6,
    "dimensions": 8,
    "shapes": 6,
    "tensor": 5,
    "schur": 3,
    "orthogonality": 5,
    "nu": 5,
    "pairing": 5,
    "recursion": 5,
    "inverse": 5,
    "pipp": 5,
    "orbit": 5,
    "tl-relations": 4,
    "commute": 4,
    "cellular": 4,
    "ei-omega": 5,
    "stability": 5,
    "schur-weyl": 3,
}


@pytest.mark.integration
@pytest.mark.parametrize("name", list(SUITES))
def test_suite_passes(name):
    report = run_suite(name, SMALL_N[name])
    assert report.passed, report.failures[:3]
    assert report.checks_run > 0
    assert report.suite == name
    assert report.wall_time >= 0


@pytest.mark.integration
@pytest.mark.parametrize("name", SPECIALIZABLE)
def test_specialized_at_one(name):
    report = run_suite(name, 4, specialize_at=Fraction(1))
    assert report.passed, report.failures[:3]
    assert report.specialization == "1"


@pytest.mark.integration
def test_shape_restriction():
    report = run_suite("pairing", shape=Shape(3, 2))
    assert report.n == 5
    assert report.shape == "3,2"
    assert report.checks_run == 25


@pytest.mark.integration
def test_plus_sign_is_reported():
    report = run_suite("cellular", shape=Shape(2, 1), delta_sign="plus")
    assert not report.passed
    assert report.delta_sign == "plus"


@pytest.mark.integration
def test_run_all_with_small_caps():
    settings = Settings(suites={name: {"n_max": min(n, 3)} for name, n in SMALL_N.items()})
    reports = run_all(settings)
    assert [r.suite for r in reports] == list(SUITES)
    assert all(r.passed for r in reports)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["orthogonality", "pairing", "inverse", "ei-omega"])
def test_default_caps(name):
    assert run_suite(name).passed


@pytest.mark.unit
def test_unknown_suite():
    with pytest.raises(ConfigError):
        run_suite("nope", 3)


@pytest.mark.unit
def test_recorder_counts_and_specializes():
    rec = CheckRecorder("demo", 2, Fraction(1))
    assert rec.equal("same at v = 1", 2, Fraction(2))
    assert not rec.expect("always false", False, k=1)
    report = rec.finish()
    assert report.checks_run == 2
    assert [f.check for f in report.failures] == ["always false"]
    assert report.failures[0].inputs == {"k": "1"}
    assert not report.passed
