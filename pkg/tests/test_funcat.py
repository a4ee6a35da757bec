from __future__ import annotations

import json

import pytest

from extrilab.cli import main
from extrilab.funcat import (
    _reduce_mod_frobenius,
    _substitute,
    abelian_case_check,
    direct_sum,
    enough_projective_morphisms,
    exact_structure_check,
    functoriality_check,
    is_injective_functor,
    is_projective_functor,
    isomorphism,
    nat_space,
    proj_inj_of_quotient,
    projective_cover,
    pseudokernel_check,
    representable,
    verify_dense,
    verify_fully_faithful,
)
from extrilab.lincat import Obj

from conftest import SCENARIO_DIR, SMALL, context
from oracles import Nakayama, ext1_dim


def _ref(ctx):
    alg = ctx.model.alg
    return Nakayama(alg.shape, alg.m, alg.N)


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("kind", ["F", "K"])
def test_functor_values_match_ext_oracle(name, kind):
    ctx = context(name)
    side = ctx.side(kind)
    ref = _ref(ctx)
    for m in ctx.model.objects:
        F = side.functor(m)
        for z in side.base.objects:
            a, b = (z, m) if kind == "F" else (m, z)
            assert F.dim(z) == ext1_dim(ref, (a.top, a.length), (b.top, b.length))


@pytest.mark.parametrize("name", SMALL)
@pytest.mark.parametrize("kind", ["F", "K"])
def test_functor_checks(name, kind):
    side = context(name).side(kind)
    assert verify_fully_faithful(side)["ok"]
    assert functoriality_check(side, samples=15)["ok"]
    assert verify_dense(side, dim_cap=6)["verdict"] == "pass"
    assert exact_structure_check(side, samples=10)["ok"]
    assert pseudokernel_check(side)["ok"]
    assert enough_projective_morphisms(side)["ok"]


def test_small_ct_is_semisimple(small_ct):
    side = small_ct.side("F")
    res = abelian_case_check(side)
    assert res["verdict"] == "pass" and res["semisimple"]
    pi = proj_inj_of_quotient(side)
    assert pi["verdict"] == "pass"
    assert pi["projective"] == pi["injective"] == ["M[1,1]", "M[3,1]"]


def test_proj_inj_requires_f_side(small_ct):
    with pytest.raises(ValueError):
        proj_inj_of_quotient(small_ct.side("K"))


def test_representables_are_projective(small_ct):
    base = small_ct.side("F").base
    for a in base.objects:
        P = representable(base, [a])
        assert P.check_functor()["ok"]
        assert is_projective_functor(P)
        assert projective_cover(P).cover.dimvec() == P.dimvec()


def test_yoneda_dimension(small_ct):
    base = small_ct.side("F").base
    for a in base.objects:
        for b in base.objects:
            assert nat_space(representable(base, [a]), representable(base, [b])).space.dim == base.dim(a, b)


def test_isomorphism_of_sums(small_ct):
    base = small_ct.side("F").base
    a, b = base.objects
    P, Q = representable(base, [a]), representable(base, [b])
    ok, iso = isomorphism(direct_sum([P, Q]), direct_sum([Q, P]))
    assert ok and iso is not None
    assert not isomorphism(direct_sum([P, P]), direct_sum([Q, Q]))[0]
    assert is_injective_functor(P)


def test_functor_is_additive(small_ct):
    side = small_ct.side("F")
    objs = [m for m in small_ct.model.objects if not side.functor(m).is_zero()]
    m1, m2 = objs[0], objs[-1]
    summed = side.functor(Obj((m1, m2)))
    assert isomorphism(summed, direct_sum([side.functor(m1), side.functor(m2)]))[0]


def test_frobenius_reduction_detects_vanishing_polynomials():
    # t^2 - t vanishes on F_2 although it is a nonzero polynomial
    assert _reduce_mod_frobenius({(2,): 1, (1,): -1}, 2) == {}
    # t0 t1 + 1 over F_2 has the nonroot (0, 0)
    terms = _reduce_mod_frobenius({(1, 1): 1, (0, 0): 1}, 2)
    assert _substitute(_substitute(terms, 0, 0, 2), 1, 0, 2) == {(0, 0): 1}


@pytest.mark.parametrize("p", [2, 3])
def test_prime_field_functor_suite(p, tmp_path):
    doc = json.loads((SCENARIO_DIR / "linear4_proj_inj.json").read_text())
    doc["field"] = {"Fp": p}
    path = tmp_path / "fp.json"
    path.write_text(json.dumps(doc))
    out = tmp_path / "report.json"
    assert main(["functor", "verify", str(path), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["summary"]["counts"]["fail"] == 0
