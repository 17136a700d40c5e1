"""Smoke tests for the python module: generator formulas, the word problem,
and one end-to-end bundle at n = 1."""

import pytest

import markedfree as mf


def test_generator_values():
    f1, f2 = mf.f1(), mf.f2()
    assert f1("7/3") == "10/3"
    assert f2("1/2") == "1/1"
    assert f2("3/2") == "5/2"
    assert f2("-5/1") == "-5/1"
    assert mf.is_thompson_element(f1)
    assert mf.compose(f1, f2)("0/1") == "2/1"


def test_group_identities():
    f1, f2 = mf.f1(), mf.f2()
    assert mf.compose(f1, mf.invert(f1)).is_identity()
    assert mf.commutator(f1, f1).is_identity()
    # the classical relation of F
    rel = mf.Word("f2 f1^-2 f2^-1 f1^2 f2^-1 f1^-1 f2 f1")
    assert mf.eval_word(rel, [f1, f2]).is_identity()


def test_is_special():
    assert mf.is_special(mf.f2(), "0/1", "1/1")
    assert not mf.is_special(mf.f1(), "0/1", "1/1")


def test_express_roundtrip():
    f1, f2 = mf.f1(), mf.f2()
    w = mf.Word("f1 f2^-1 f1^2 f2")
    element = mf.eval_word(w, [f1, f2])
    expressed = mf.express_word(element)
    assert mf.eval_word(expressed, [f1, f2]) == element


def test_express_rejects_non_members():
    bad = mf.PLMap.from_json(
        '{"breaks": [], "left": {"slope": "1/1", "offset": "1/2"},'
        ' "right": {"slope": "1/1", "offset": "1/2"}}'
    )
    with pytest.raises(ValueError):
        mf.express_word(bad)


def test_transport_roundtrip():
    f2 = mf.f2()
    assert mf.transport_from_unit(mf.transport_to_unit(f2)) == f2


def test_distance_negative_control():
    rep = mf.distance_to_free([mf.f1(), mf.f2()], cutoff=6)
    assert rep["n"] == 4
    assert rep["exact"]
    assert rep["shortest_relation_length"] == 10


def test_bundle_end_to_end():
    bundle = mf.build_marking(1, seed=42)
    assert bundle["n"] == 1
    cert = mf.verify_free_ball(bundle)
    assert cert["verified"]
    assert cert["checked_words"] == 16

    g, h = mf.bundle_maps(bundle)
    report = mf.check_no_relations([g, h], radius=2)
    assert report["verified"]

    witness = mf.generation_witness(bundle)
    assert witness["verified"]
    assert int(witness["expanded_length_p"]) > 0


def test_free_pair():
    a, b, cert = mf.free_pair(1, seed=7)
    assert cert["verified"]
    assert cert["checked_words"] == 4
    assert not a.is_identity()
    assert not b.is_identity()
