import pytest

from bbdigraph import InputError
from bbdigraph.verify.audit import LEMMAS, lemma_audit, standing_assumptions
from bbdigraph.verify.generate import biased_highdegree_digraph, complete, directed_cycle


def statuses(results):
    return {name: r.status for name, r in results.items()}


def test_directed_cycle():
    s = statuses(lemma_audit(directed_cycle(3), "hamil"))
    assert s == {"lemma1": "vacuous", "lemma2": "vacuous", "lemma3": "confirmed", "lemma4": "vacuous"}


def test_complete():
    s = statuses(lemma_audit(complete(3), "hamil"))
    assert s["lemma3"] == "confirmed" and s["lemma2"] == "vacuous"


def test_unmet_assumptions_are_vacuous():
    from bbdigraph.verify.generate import empty
    assert set(statuses(lemma_audit(empty(3), "hamil")).values()) == {"vacuous"}


def test_bipart_context():
    D = complete(4)
    assert standing_assumptions(D, "bipart", 2)
    s = statuses(lemma_audit(D, "bipart", 2))
    assert s["lemma5"] == "confirmed" and s["remark_2cycle"] == "confirmed"
    assert s["lemma6a"] == "vacuous"  # bipancyclic


def test_bipart_sampled_never_violated():
    for seed in range(200):
        D = biased_highdegree_digraph(5, 7, seed)
        for name, r in lemma_audit(D, "bipart", 2).items():
            assert r.status != "VIOLATED", (name, r.witness)


def test_d0_context_names():
    assert set(lemma_audit(complete(2), "d0")) == set(LEMMAS["d0"])


def test_bad_context():
    with pytest.raises(InputError):
        lemma_audit(complete(2), "nope")
    with pytest.raises(InputError):
        standing_assumptions(complete(4), "bipart")
