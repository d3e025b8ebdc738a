"""Theorem checks: spot runs per check id, census reports, self-tests."""

import jsonschema
import numpy as np
import pytest

from quandlekit import (
    CHECK_IDS,
    ConstructionSpecError,
    REPORT_SCHEMA,
    Verdict,
    cyclic,
    named_group,
    quaternion8,
    run_census,
    run_check,
    summarize,
    symmetric,
)
from quandlekit.verdicts import combine, make_iff, make_implies, make_skipped


def assert_all_hold(verdicts, context=""):
    for v in verdicts:
        for node in v.walk():
            assert node.holds, f"{context}: {node.render_text()}"


class TestIndividualChecks:
    def test_conj_semidirect_on_quaternion8(self):
        assert_all_hold(run_check("conj-semidirect", quaternion8(), m=1))

    def test_conj_out_symbolic_on_abelian(self):
        verdicts = run_check("conj-out", cyclic(6))
        assert_all_hold(verdicts)
        assert any("symbolic" in node.notes for v in verdicts for node in v.walk())

    def test_conj_out_counted_on_symmetric3(self):
        assert_all_hold(run_check("conj-out", symmetric(3)))

    def test_conj_aaut_criterion_is_two_sided(self):
        # Z4 with m=1: every y^2 is central (abelian), so the intersection
        # must be nonempty; on S3 with m=1 squares are not all central.
        for v in run_check("conj-aaut", cyclic(4), m=1):
            assert v.holds and v.lhs and v.rhs
        for v in run_check("conj-aaut", symmetric(3), m=1):
            assert v.holds

    def test_conj_no_anti_on_symmetric3(self):
        assert_all_hold(run_check("conj-no-anti", symmetric(3), m=1))

    def test_alex_and_semidirect_on_cyclic(self):
        assert_all_hold(run_check("alex", cyclic(5)))
        assert_all_hold(run_check("alex-semidirect", cyclic(5)))

    def test_f_structure_on_quaternion8(self):
        assert_all_hold(run_check("f-structure", quaternion8()))

    def test_core_checks(self):
        for gid in ("Z6", "S3", "Q8"):
            assert_all_hold(run_check("core", named_group(gid)), gid)

    def test_core_corollaries_cyclic_branch(self):
        verdicts = run_check("core-corollaries", cyclic(3))
        assert_all_hold(verdicts)
        assert any(v.lhs for v in verdicts for v in v.walk() if v.lhs is not None)

    def test_core_corollaries_vacuous_branch(self):
        verdicts = run_check("core-corollaries", quaternion8())
        assert all(v.vacuous for v in verdicts)

    def test_dihedral_no_anti_sweep(self):
        assert_all_hold(run_check("dihedral-no-anti"))

    def test_core_semidirect_on_dihedral4(self):
        assert_all_hold(run_check("core-semidirect", named_group("D4")))

    def test_core_abelian_aut_counts_odd_cyclic(self):
        verdicts = run_check("core-abelian-aut", cyclic(5))
        assert_all_hold(verdicts)
        assert not any(v.skipped for v in verdicts)

    def test_core_abelian_aut_skips_even_torsion(self):
        verdicts = run_check("core-abelian-aut", cyclic(4))
        assert all(v.skipped for v in verdicts)

    def test_q_family_on_symmetric3(self):
        assert_all_hold(run_check("q-family", symmetric(3)))

    def test_p_family_on_symmetric3(self):
        assert_all_hold(run_check("p-family-aut", symmetric(3), c=3))
        assert_all_hold(run_check("p-family-anti", symmetric(3), c=3))

    def test_p_family_sweeps_all_points_when_unpinned(self):
        verdicts = run_check("p-family-aut", cyclic(3))
        assert len(verdicts) == 3
        assert_all_hold(verdicts)


class TestRunCheckErrors:
    def test_unknown_id_is_rejected(self):
        with pytest.raises(ConstructionSpecError):
            run_check("goldbach", cyclic(4))

    def test_missing_group_is_rejected(self):
        with pytest.raises(ConstructionSpecError):
            run_check("core")

    def test_group_free_check_accepts_no_group(self):
        assert_all_hold(run_check("dihedral-no-anti", n=5))


class TestCensus:
    def test_small_census_holds_and_validates(self):
        report = run_census([cyclic(3), symmetric(3)])
        jsonschema.validate(report, REPORT_SCHEMA)
        assert report["catalog"] == ["Z3", "S3"]
        assert report["summary"]["failed"] == 0
        assert report["summary"]["total"] > 100

    def test_empty_catalog_still_reports_group_free_checks(self):
        report = run_census([])
        jsonschema.validate(report, REPORT_SCHEMA)
        assert report["summary"]["failed"] == 0
        ids = {check["theorem_id"] for check in report["checks"]}
        assert ids == {"dihedral-no-anti"}

    def test_every_check_id_appears_on_a_rich_group(self):
        report = run_census([symmetric(3)])
        ids = {check["theorem_id"] for check in report["checks"]}
        assert ids == set(CHECK_IDS)


class TestVerdictMechanics:
    def test_iff_failure_keeps_the_counterexample(self):
        v = make_iff("t", "in", True, False, counterexample={"x": 1})
        assert not v.holds and v.counterexample == {"x": 1} and v.witness is None

    def test_implication_is_vacuous_only_when_marked(self):
        v = make_implies("t", "in", False, False, vacuous=True)
        assert v.holds and v.vacuous

    def test_combine_rolls_up_failures(self):
        good = make_iff("t/a", "in", True, True)
        bad = make_iff("t/b", "in", True, False, counterexample=(0,))
        rolled = combine("t", "in", "iff", [good, bad])
        assert not rolled.holds
        assert [n.holds for n in rolled.walk()] == [False, True, False]

    def test_skipped_counts_as_holding(self):
        v = make_skipped("t", "in", "iff", "too large")
        assert v.holds and v.skipped
        assert summarize([v])["skipped"] == 1

    def test_unknown_relationship_is_rejected(self):
        with pytest.raises(ValueError):
            Verdict("t", "in", "correlation", True)

    def test_injected_wrong_predicate_fails_with_counterexample(self, monkeypatch):
        # Invert one group-theoretic predicate inside the harness and
        # confirm the corresponding verdicts fail loudly, carrying a
        # counterexample into the report instead of degrading silently.
        import quandlekit.harness as harness
        from quandlekit import report_json

        real = harness.is_central_automorphism
        monkeypatch.setattr(
            harness, "is_central_automorphism", lambda G, cm: not real(G, cm)
        )
        verdicts = harness.run_check("alex", cyclic(4))
        failing = [n for v in verdicts for n in v.walk() if not n.holds]
        assert failing
        assert any(n.counterexample is not None for n in failing)
        assert report_json(["Z4"], verdicts)["summary"]["failed"] >= 1

    def test_a_wrong_claim_is_not_reported_as_holding(self):
        # Self-test demanded of the harness: hand-build the shape of a check
        # with a deliberately false right-hand side and confirm the failure
        # survives into the report with its counterexample intact.
        Q_order = 4
        wrong = make_iff(
            "self-test",
            "T4",
            lhs=True,
            rhs=Q_order == 5,
            counterexample={"order": Q_order},
        )
        from quandlekit import report_json

        report = report_json(["T4"], [wrong])
        assert report["summary"]["failed"] == 1
        assert report["checks"][0]["counterexample"] == {"order": 4}
