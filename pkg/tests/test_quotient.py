from __future__ import annotations

import json

import pytest

from extrilab.cli import Context, parse_scenario
from extrilab.lincat import Obj

from extrilab.quotient import (
    build_quotient,
    dimension_identity_check,
    ideal_absorption_check,
    ks_structure,
    radical_and_local,
    radical_containment_check,
    sample_retraction_pairs,
    split_retraction_witness,
    verify_retraction_witness,
)

from conftest import SCENARIO_DIR, SMALL, context
from oracles import Nakayama, quotient_hom_dim


def _oracle_for(ctx):
    alg = ctx.model.alg
    ref = Nakayama(alg.shape, alg.m, alg.N)
    kill = [(a.top, a.length) for a in ctx.x.generators]
    if ctx.scenario.model != "mod":
        kill += ref.projectives()
    return ref, kill


@pytest.mark.parametrize("name", SMALL + ["cyclic10_subcat"])
@pytest.mark.parametrize("side", ["vee", "wedge"])
def test_quotient_hom_dims_against_oracle(name, side):
    ctx = context(name)
    q = build_quotient(ctx.model, ctx.x, ctx.n, side)
    ref, kill = _oracle_for(ctx)
    for a in q.objects:
        for b in q.objects:
            expected = quotient_hom_dim(ref, (a.top, a.length), (b.top, b.length), kill)
            assert q.hom_dim(a, b) == expected, (a.label, b.label)


def test_small_quotient_indecomposables(small_ct):
    q = build_quotient(small_ct.model, small_ct.x, 0, "vee")
    assert [a.label for a in q.ind] == ["M[1,1]", "M[3,1]"]
    ks = ks_structure(q)
    assert ks["ok"] and ks["killed"] == ["M[2,1]", "M[4,1]"]


@pytest.mark.parametrize("name", SMALL)
def test_structure_checks(name):
    ctx = context(name)
    for side in ("vee", "wedge"):
        q = build_quotient(ctx.model, ctx.x, ctx.n, side)
        assert dimension_identity_check(q)["ok"]
        assert ideal_absorption_check(q)["ok"]
        assert radical_containment_check(q)["ok"]
        assert ks_structure(q)["ok"]


@pytest.mark.parametrize("name", SMALL)
def test_retraction_pairs_split(name):
    ctx = context(name)
    q = build_quotient(ctx.model, ctx.x, ctx.n, "vee")
    pairs = sample_retraction_pairs(q, 25, seed=1)
    assert pairs
    for f, g in pairs:
        w = split_retraction_witness(q, f, g)
        assert verify_retraction_witness(q, f, g, w)["ok"]


def test_tampered_witness_is_rejected(small_ct):
    q = build_quotient(small_ct.model, small_ct.x, 0, "vee")
    f, g = sample_retraction_pairs(q, 3, seed=2)[0]
    w = split_retraction_witness(q, f, g)
    bad = type(w)(w.X, w.g0, w.triangle, w.mu1.scale(q.field(2)), w.mu2, w.pi1, w.pi2)
    if not w.mu1.is_zero():
        assert not verify_retraction_witness(q, f, g, bad)["ok"]


@pytest.mark.parametrize("p", [2, 5])
def test_locality_over_prime_field_matches_rationals(p):
    doc = json.loads((SCENARIO_DIR / "linear4_proj_inj.json").read_text())
    verdicts = []
    for fld in ("Q", {"Fp": p}):
        doc["field"] = fld
        ctx = Context(parse_scenario(doc))
        q = build_quotient(ctx.model, ctx.x, ctx.n, "vee")
        objs = list(q.objects) + [Obj((a, a)) for a in q.ind]
        verdicts.append([radical_and_local(q, a)["is_local"] for a in objs])
    assert verdicts[0] == verdicts[1]
    assert False in verdicts[0] and True in verdicts[0]
