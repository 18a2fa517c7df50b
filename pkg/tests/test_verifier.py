import json
from fractions import Fraction

import pytest

from subsemi import verifier
from subsemi.catalog import build_named, catalog_ids
from subsemi.order import canonical_form


def test_rank_n5():
    report = verifier.rank(5)
    assert report.values[:5] == (32, 28, 26, 25, 24)
    chain5 = verifier.rank(5).witnesses[32]
    assert len(chain5) == 1
    h5 = build_named("H5").structure
    assert report.witnesses[25] == (canonical_form(h5.poset).code.hex(),)


def test_rank_n6():
    report = verifier.rank(6)
    assert report.values[:6] == (64, 56, 52, 50, 49, 48)
    assert len(report.witnesses[50]) == 2
    assert len(report.witnesses[49]) == 2   # the family member plus the broom
    assert len(report.witnesses[48]) == 3


def test_theorem_n5():
    tv = verifier.verify_theorem(5)
    by_claim = {c.claim: c for c in tv.claims}
    assert by_claim["i"].status == "verified"
    assert by_claim["ii"].status == "size-infeasible"
    assert by_claim["iii"].status == "verified"
    assert "rank adjusted" in by_claim["iii"].notes
    assert tv.all_passed
    assert all(m for _, _, m in tv.top3)


def test_theorem_n6():
    tv = verifier.verify_theorem(6)
    by_claim = {c.claim: c for c in tv.claims}
    assert by_claim["i"].status == "verified"
    assert by_claim["iii"].status == "verified"
    # the 6-element broom (4-chain plus a pendant under the top) also counts 49
    ii = by_claim["ii"]
    assert ii.status == "failed"
    assert ii.value_at_rank
    assert not ii.witnesses_equal_family
    assert len(ii.extra_witnesses) == 1 and not ii.missing_witnesses
    assert not tv.all_passed


def test_theorem_n7_value_intruder():
    tv = verifier.verify_theorem(7)
    by_claim = {c.claim: c for c in tv.claims}
    assert by_claim["i"].status == "verified"
    iii = by_claim["iii"]
    assert iii.status == "failed"
    assert not iii.value_at_rank
    assert iii.count_at_rank == 97          # the 7-element broom: 24.25 * 4
    assert iii.witnesses_equal_family        # the value 96 still has family witnesses
    ii = by_claim["ii"]
    assert ii.value_at_rank and len(ii.extra_witnesses) == 3


def _half_value_class(n):
    """Predicted complete witness class of 24.5 * 2^(n-5): the claimed family
    with a chain inserted at the glue, plus the 6-element broom family."""
    from subsemi.analysis import family_members
    from subsemi.catalog import build_named, chain, glued_sum
    from subsemi.order import Poset, to_semilattice
    h3 = build_named("H3").structure
    b4 = build_named("B4").structure
    codes = set()
    for m in range(1, n - 4):
        core = glued_sum(glued_sum(h3, chain(m)), b4)
        if core.n <= n:
            codes |= {c.hex() for c in family_members(core, n)}
    broom6 = to_semilattice(
        Poset.from_covers(6, [(0, 1), (1, 2), (2, 3), (3, 5), (4, 5)]))
    codes |= {c.hex() for c in family_members(broom6, n)}
    return codes


@pytest.mark.parametrize("n", [6, 7, 8])
def test_half_value_witness_class(n):
    rep = verifier.rank(n)
    expected = 49 * 2 ** (n - 5) // 2
    assert set(rep.witnesses[expected]) == _half_value_class(n)


def test_theorem_n9_at_default_ceiling():
    rep = verifier.rank(9)
    # the broom family values 24 + 2^(5-m) fill in below 24.5
    assert rep.values[:9] == (512, 448, 416, 400, 392, 388, 386, 385, 384)
    assert rep.values.index(384) + 1 == 9
    by_claim = {c.claim: c for c in rep.family_check}
    assert by_claim["i"].status == "verified"
    assert by_claim["ii"].value_at_rank and not by_claim["ii"].witnesses_equal_family
    assert set(rep.witnesses[392]) == _half_value_class(9)
    assert not by_claim["iii"].value_at_rank
    # the stated sixth value still carries exactly the claimed family
    from subsemi.analysis import family_codes
    assert set(rep.witnesses[384]) == {c.hex() for c in family_codes("K3", 9)}


def test_lemma_entries_classifications():
    report = verifier.verify_lemmas()
    cls = {e.location.split(":")[1]: e.classification for e in report.entries}
    assert cls["H5"] == "exact-match"
    assert cls["K3"] == "exact-match"
    assert cls["H3_B4"] == "exact-match"
    assert cls["K"] == cls["N"] == cls["K0"] == "exact-match"
    assert cls["U1"] == "rounding"
    assert cls["U4"] == cls["U5"] == "rounding"
    assert cls["U17"] == "rounding"
    assert cls["H"] == "contradiction"
    for id_ in ("U2", "U3", "U6", "U7", "U10", "U11", "U12", "U13",
                "U14", "U15", "U16", "U18", "U19"):
        assert cls[id_] == "exact-match", id_


def test_lemma_entries_unique_and_complete():
    report = verifier.verify_lemmas()
    locations = [e.location for e in report.entries]
    assert len(locations) == len(set(locations))
    with_printed = {id_ for id_ in catalog_ids() if build_named(id_).reported_sigma5}
    assert {loc.split(":")[1] for loc in locations} == with_printed


def test_lemma_properties_hold():
    report = verifier.verify_lemmas()
    assert report.all_passed
    props = {p.name: p for p in report.properties}
    assert props["monotonicity (subsemilattice)"].instances >= 100
    assert props["trace bound"].instances >= 100
    assert all(p.violations == 0 for p in report.properties)


def test_exact_computed_value_recorded():
    report = verifier.verify_lemmas()
    by_id = {e.location.split(":")[1]: e for e in report.entries}
    assert by_id["U1"].computed == Fraction(343, 16)
    assert by_id["U17"].computed == Fraction(303, 16)
    assert by_id["H"].computed == 26


def test_context_top3():
    assert verifier.context_top3(5) == ((32, 32, True), (28, 28, True), (26, 26, True))
    assert verifier.context_top3(6) == ((64, 64, True), (56, 56, True), (52, 52, True))


def test_reports_serialize_deterministically():
    a = json.dumps(verifier.ranking_to_dict(verifier.rank(6)), sort_keys=True)
    b = json.dumps(verifier.ranking_to_dict(verifier.rank(6)), sort_keys=True)
    assert a == b
    la = json.dumps(verifier.lemmas_to_dict(verifier.verify_lemmas()), sort_keys=True)
    lb = json.dumps(verifier.lemmas_to_dict(verifier.verify_lemmas()), sort_keys=True)
    assert la == lb


def test_no_count_in_excluded_interval_n6():
    # between the sixth and fourth claimed values only the fifth may appear
    report = verifier.rank(6)
    inside = [v for v in report.values if 48 < v < 50]
    assert inside == [49]
