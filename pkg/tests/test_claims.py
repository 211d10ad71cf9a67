"""The claim registry: one runner per checkable statement, reports with
stable ids, and the shipped allowlist of expected refutations."""

import json

import pytest

from pgroups import (
    ClaimReport,
    GroupTooLargeError,
    InvalidInputError,
    VERDICTS,
    all_claim_ids,
    load_allowlist,
    make_group,
    run_claims,
    unexpected_refutations,
)
from pgroups.claims import TRANSITIVITY_MAX_ORDER

# frozen verdicts for Z(2) (+) Z(4): statements whose source formulation
# disagrees with exhaustive computation on this group
SMALL24_REFUTED = [
    "descriptor-rule-as-stated",
    "fundamental-order-iff",
    "ideal-double-dagger-deflation",
    "matrix-distinct-entries",
    "matrix-join-formula",
    "path-subgroup-chain",
    "power-subgroup-dagger",
    "quartering-incomparability",
    "sigma-sum-equality",
    "ulm-position-indexing",
]
# the three table-specific checks need the reference group; the chain check
# needs a homocyclic group
SMALL24_SKIPPED = [
    "homocyclic-ideal-chain",
    "named-collision-pair",
    "path-count-accounting",
    "reference-table-rows",
]

# the reference group additionally trips the checks that need exponent
# spread (alias, segments, paths) and the table errata
REFERENCE_REFUTED = SMALL24_REFUTED + [
    "admissible-minmax-closure",
    "alias-to-marker",
    "named-collision-pair",
    "path-count-accounting",
    "path-realization",
    "reference-table-rows",
    "segment-realizability",
]


@pytest.fixture(scope="module")
def reference_reports(G2):
    return run_claims(G2)


@pytest.fixture(scope="module")
def small_reports(small24):
    return run_claims(small24)


class TestReportType:
    def test_status_vocabulary(self):
        assert VERDICTS == ("verified", "refuted", "skipped")
        with pytest.raises(ValueError):
            ClaimReport(claim_id="x", status="maybe", group="G")

    def test_refutations_must_carry_witnesses(self):
        with pytest.raises(ValueError):
            ClaimReport(claim_id="x", status="refuted", group="G")
        ClaimReport(claim_id="x", status="refuted", group="G", witnesses=[{"a": 1}])

    def test_render_is_deterministic_json(self):
        r = ClaimReport(claim_id="x", status="verified", group="G", checked="n=3")
        line = r.render()
        assert json.loads(line) == {
            "claim_id": "x",
            "status": "verified",
            "group": "G",
            "witnesses": [],
            "checked": "n=3",
        }
        assert r.render() == line

    def test_timing_is_excluded_unless_asked(self):
        a = ClaimReport(claim_id="x", status="verified", group="G", timing=0.5)
        b = ClaimReport(claim_id="x", status="verified", group="G", timing=1.5)
        assert a == b  # timing does not participate in comparison
        assert a.render() == b.render()
        assert "timing_seconds" in a.render(include_timing=True)

    def test_note_appears_only_when_set(self):
        quiet = ClaimReport(claim_id="x", status="verified", group="G")
        loud = ClaimReport(claim_id="x", status="verified", group="G", note="hm")
        assert "note" not in json.loads(quiet.render())
        assert json.loads(loud.render())["note"] == "hm"


class TestRegistry:
    def test_registry_shape(self):
        ids = all_claim_ids()
        assert len(ids) == 53
        assert ids == sorted(ids)
        assert len(set(ids)) == 53

    def test_allowlist_names_real_claims(self):
        allow = load_allowlist()
        assert len(allow) == 18
        assert set(allow) <= set(all_claim_ids())
        assert all(note for note in allow.values())

    def test_unexpected_refutations_filters_by_allowlist(self):
        bad = ClaimReport(
            claim_id="indicator-antitone",
            status="refuted",
            group="G",
            witnesses=[{"x": 1}],
        )
        ok = ClaimReport(
            claim_id="sigma-sum-equality",
            status="refuted",
            group="G",
            witnesses=[{"x": 1}],
        )
        assert unexpected_refutations([bad, ok]) == [bad]
        assert unexpected_refutations([bad], allowlist={"indicator-antitone": "why"}) == []


class TestRunClaims:
    def test_one_report_per_claim_in_id_order(self, reference_reports):
        assert [r.claim_id for r in reference_reports] == all_claim_ids()

    def test_group_field_is_the_description(self, reference_reports, G2):
        assert {r.group for r in reference_reports if "sequence" not in r.group} == {
            G2.describe()
        }

    def test_no_unexpected_refutations_on_reference_group(self, reference_reports):
        assert unexpected_refutations(reference_reports) == []

    def test_reference_group_verdicts(self, reference_reports):
        refuted = sorted(r.claim_id for r in reference_reports if r.status == "refuted")
        skipped = sorted(r.claim_id for r in reference_reports if r.status == "skipped")
        assert refuted == sorted(REFERENCE_REFUTED)
        assert skipped == ["homocyclic-ideal-chain"]

    def test_small_group_verdicts(self, small_reports):
        assert unexpected_refutations(small_reports) == []
        refuted = sorted(r.claim_id for r in small_reports if r.status == "refuted")
        skipped = sorted(r.claim_id for r in small_reports if r.status == "skipped")
        assert refuted == SMALL24_REFUTED
        assert skipped == SMALL24_SKIPPED

    def test_witnesses_iff_refuted(self, reference_reports, small_reports):
        for r in reference_reports + small_reports:
            assert (r.status == "refuted") == bool(r.witnesses)
            if r.status != "refuted":
                assert r.checked  # what was searched, or why it was skipped

    def test_timing_attached_everywhere(self, reference_reports):
        assert all(r.timing is not None for r in reference_reports)

    def test_repeat_runs_are_equal(self, small24, small_reports):
        assert run_claims(small24) == small_reports

    def test_id_filter(self, small24):
        picked = ["indicator-antitone", "sigma-sum-containment"]
        reports = run_claims(small24, ids=picked)
        assert [r.claim_id for r in reports] == picked
        assert all(r.status == "verified" for r in reports)

    def test_unknown_id_rejected(self, small24):
        with pytest.raises(InvalidInputError):
            run_claims(small24, ids=["indicator-antitone", "nope"])

    def test_group_size_cap(self):
        huge = make_group(2, [(30, 1)])
        with pytest.raises(GroupTooLargeError):
            run_claims(huge)  # default cap is 2^20
        with pytest.raises(GroupTooLargeError):
            run_claims(make_group(2, [(2, 1), (4, 1)]), max_group=32)  # |G| = 64
        # the cap is inclusive
        run_claims(make_group(2, [(1, 1)]), ids=["indicator-antitone"], max_group=2)

    def test_tight_budgets_skip_instead_of_failing(self, G2):
        reports = run_claims(G2, max_ring=16, max_ideals=16)
        assert len(reports) == 53
        skipped = [r for r in reports if r.status == "skipped"]
        assert len(skipped) == 29
        assert unexpected_refutations(reports) == []
        # indicator-side checks never need the ring
        untouched = {r.claim_id for r in reports if r.status != "skipped"}
        assert "indicator-antitone" in untouched
        assert "min-admissible-bottom" in untouched

    def test_transitivity_respects_its_order_cap(self, small24):
        assert TRANSITIVITY_MAX_ORDER == 64
        big = make_group(2, [(2, 2), (4, 1)])  # order 256
        (report,) = run_claims(big, ids=["indicator-transitivity"])
        assert report.status == "skipped"
        assert "quadratic-orbit bound 64" in report.checked
        (small,) = run_claims(small24, ids=["indicator-transitivity"])
        assert small.status == "verified"

    def test_homocyclic_chain_runs_on_homocyclic_groups(self, homocyclic44):
        (report,) = run_claims(homocyclic44, ids=["homocyclic-ideal-chain"])
        assert report.status == "verified"
