from __future__ import annotations

import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from extrilab.conflations import (
    abelian_quotient_probe,
    pseudo_ct_witness,
    split_characterization_check,
    split_sets_agree,
    verify_pseudo_ct,
)

from conftest import context


def _nonsplit(kind):
    cat, en = context("linear4_proj_inj").conflations(kind)
    return cat, [c for c in en["objects"] if not cat.is_split(c)[0]], en


@pytest.mark.parametrize("kind", ["F", "K"])
def test_nonsplit_orbits_found(kind):
    cat, ns, en = _nonsplit(kind)
    assert cat.wic["ok"]
    assert len(ns) == en["stats"]["nonsplit"] == 2
    assert not en["stats"]["capped"]


@pytest.mark.parametrize("kind", ["F", "K"])
def test_witnesses_verify(kind):
    cat, _, en = _nonsplit(kind)
    for c in en["objects"]:
        res = verify_pseudo_ct(cat, pseudo_ct_witness(cat, c))
        assert res["ok"], (c.label, res)


def test_broken_witness_rejected():
    cat, ns, _ = _nonsplit("F")
    w = pseudo_ct_witness(cat, ns[0])
    bad = dataclasses.replace(w, alpha=cat.zero(w.M, w.S0))
    res = verify_pseudo_ct(cat, bad)
    assert not res["ok"] and "preenvelope" in res["failed"]


@pytest.mark.parametrize("kind", ["F", "K"])
def test_split_characterization(kind):
    cat, _, en = _nonsplit(kind)
    seen = set()
    for c in en["objects"]:
        res = split_characterization_check(cat, c)
        assert res["verdict"] == "pass", (c.label, res)
        seen.add(res["criterion"])
    assert seen == {True, False}


def test_split_sets_agree_across_sides():
    catF, enF = context("linear4_proj_inj").conflations("F")
    catK, enK = context("linear4_proj_inj").conflations("K")
    res = split_sets_agree(catF, catK, enF["objects"], enK["objects"])
    assert res["ok"] and res["split_1"] == res["split_2"] > 0


def test_abelian_probe_on_nonsplit():
    cat, _, en = _nonsplit("F")
    res = abelian_quotient_probe(cat, en["objects"], samples=8, seed=0, test_objects=20)
    assert res["ok"] and res["bounded"]
    assert res["found"] == res["sampled"]


def test_identity_and_composition():
    cat, ns, _ = _nonsplit("F")
    M = ns[0]
    e = cat.identity(M)
    assert e.commutes() and cat.is_iso(e)
    for f in cat.hom_basis(M, M):
        assert (f @ e).flat() == f.flat() == (e @ f).flat()


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_hom_closed_under_composition(data):
    cat, _, en = _nonsplit("F")
    objs = en["objects"]
    L, M, N = (data.draw(st.sampled_from(objs)) for _ in range(3))
    b1, b2 = cat.hom_basis(L, M), cat.hom_basis(M, N)
    if not b1 or not b2:
        return
    f = data.draw(st.sampled_from(b1))
    g = data.draw(st.sampled_from(b2))
    gf = g @ f
    assert gf.commutes()
    assert cat.hom(L, N).contains(gf.flat())
