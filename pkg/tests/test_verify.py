import jsonschema
import pytest

from pqextremal import verify
from pqextremal.verify import ClaimRecord, VerifyOptions, load_schema, run


def small(**kw):
    base = dict(placements=2, random_instances=300)
    base.update(kw)
    return VerifyOptions(**base)


def test_theorem6_claims():
    rep = run("theorem6", small(max_p=4))
    assert [c.id for c in rep.claims] == ["theorem6/p3", "theorem6/p4"]
    assert rep.ok and rep.counts == {"pass": 2, "fail": 0, "skipped": 0}


def test_oracle_suite_respects_caps():
    rep = run("oracle", small(max_n=4, max_p=3))
    assert {c.id for c in rep.claims} == {"oracle/k2-n4-p3-q3", "oracle/k3-n4-p3-q3"}
    assert rep.ok


def test_lemma2_suite_counts_members():
    rep = run("lemma2", small(max_n=6, max_p=4))
    assert rep.ok
    first = rep.claims[0]
    assert first.parameters["members_checked"] > 0 and first.computed == 0


def test_lemma3_suite_tallies():
    rep = run("lemma3", small())
    exhaustive, rand = rep.claims
    assert exhaustive.computed["COUNTEREXAMPLE"] == 0 and exhaustive.computed["confirmed"] > 0
    assert rand.computed["instances"] == 300


def test_lemma3_random_instances_depend_only_on_seed():
    a = run("lemma3", small(seed=5)).to_dict()
    b = run("lemma3", small(seed=5, workers=3)).to_dict()
    assert a == b


def test_report_shape_and_schema():
    rep = run("lemma5", small(max_n=5))
    data = rep.to_dict()
    jsonschema.validate(data, load_schema("verify_report"))
    assert data["options"]["max_n"] == 5 and "workers" not in data["options"]
    assert "lemma5/n5" in rep.table()


def test_kneser_suite_marks_end_to_end_corollary_skipped():
    rep = run("kneser", small())
    by_id = {c.id: c for c in rep.claims}
    skipped = by_id["kneser/corollary-end-to-end"]
    assert skipped.status == "skipped" and skipped.reason
    assert by_id["kneser/petersen"].status == "pass"
    assert rep.counts["fail"] == 0
    jsonschema.validate(rep.to_dict(), load_schema("verify_report"))


def test_unknown_suite():
    with pytest.raises(ValueError):
        run("nope")


def test_duplicate_claim_ids_are_rejected(monkeypatch):
    def twice(opts):
        for _ in range(2):
            yield ClaimRecord("dup/x", "dup", "repeated", {}, 0, 0, "pass")
    monkeypatch.setitem(verify.SUITES, "dup", twice)
    with pytest.raises(AssertionError):
        run("dup")


def test_aliases_cover_every_suite():
    assert verify.ALIASES["all"] == verify.ALIASES["paper"] == list(verify.SUITES)


def test_rationals_serialise_as_pairs():
    from fractions import Fraction
    rec = ClaimRecord("x/y", "x", "s", {"v": Fraction(3, 4)}, Fraction(1, 2), [Fraction(2)], "pass")
    d = rec.to_dict()
    assert d["parameters"] == {"v": {"num": 3, "den": 4}}
    assert d["expected"] == {"num": 1, "den": 2} and d["computed"] == [{"num": 2, "den": 1}]
