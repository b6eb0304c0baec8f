import pytest

from src.errors import UnknownName
from src.verification.corpus import build_pair, coset_triples, rotary_pairs
from src.verification.suites import SUITES, collect_checks, run_suite


def test_corpus_sizes():
    triples = coset_triples()
    assert len(triples) >= 50
    assert len({triple.label for triple in triples}) == len(triples)
    assert all(build_pair(case).G.order > 2 for case in rotary_pairs())


def test_unknown_suite():
    with pytest.raises(UnknownName):
        collect_checks("nope")


def test_all_collects_every_suite():
    every = collect_checks("all")
    assert sum(len(build()) for build in SUITES.values()) == len(every)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suite_passes(suite):
    results = run_suite(suite, progress=False)
    assert results
    failed = [result for result in results if not result.passed]
    assert not failed, [(result.check, result.detail) for result in failed]
    assert all(result.check.startswith(f"{suite}.") for result in results)


def test_corpus_covers_s5_and_three_a6():
    labels = {triple.label for triple in coset_triples()}
    assert {f"S5.{i:02d}" for i in range(12)} <= labels
    cover = next(triple for triple in coset_triples() if triple.label == "three-a6")
    assert (cover.G.order, cover.H.order, cover.J.order) == (1080, 15, 2)


def test_crashing_check_is_recorded_as_failure(monkeypatch):
    def crash():
        raise ZeroDivisionError("division by zero")

    def fine():
        return True, {}

    monkeypatch.setitem(SUITES, "broken", lambda: {"broken.crash": crash, "broken.fine": fine})
    results = run_suite("broken", workers=2, progress=False)
    assert [result.check for result in results] == ["broken.crash", "broken.fine"]
    assert not results[0].passed
    assert results[0].detail == {"error": "ZeroDivisionError", "message": "division by zero"}
    assert results[1].passed
