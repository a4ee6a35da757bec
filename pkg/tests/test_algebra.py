from __future__ import annotations

import pytest

from extrilab.algebra import Indec, NakayamaAlgebra, decompose, ext_dim, hom_dim_overlap, modcat, parse_label
from extrilab.lincat import Obj

from oracles import Nakayama, ext_dim as oracle_ext, hom_dim as oracle_hom

CASES = [("cyclic", 4, 2), ("cyclic", 5, 3), ("linear", 3, 2), ("linear", 4, 3)]


def test_parse_label_roundtrip():
    a = parse_label("M[3,2]")
    assert a == Indec(3, 2) and a.label == "M[3,2]"
    with pytest.raises(ValueError):
        parse_label("M(3,2)")


@pytest.mark.parametrize("shape,m,N", CASES)
def test_indecomposables_and_projectives(shape, m, N):
    alg = NakayamaAlgebra(shape, m, N)
    ref = Nakayama(shape, m, N)
    assert sorted(alg.indecomposables()) == sorted(Indec(*a) for a in ref.modules())
    assert sorted(alg.projectives()) == sorted(Indec(*a) for a in ref.projectives())
    assert sorted(alg.injectives()) == sorted(Indec(*a) for a in ref.injectives())


@pytest.mark.parametrize("shape,m,N", CASES)
def test_hom_dims_three_ways(shape, m, N):
    alg = NakayamaAlgebra(shape, m, N)
    ref = Nakayama(shape, m, N)
    mc = modcat(alg)
    for a in ref.modules():
        for b in ref.modules():
            d = oracle_hom(ref, a, b)
            assert mc.dim(Indec(*a), Indec(*b)) == d
            assert hom_dim_overlap(alg, Indec(*a), Indec(*b)) == d


@pytest.mark.parametrize("shape,m,N", CASES)
def test_ext_dims_against_oracle(shape, m, N):
    alg = NakayamaAlgebra(shape, m, N)
    ref = Nakayama(shape, m, N)
    for i in (1, 2):
        for a in ref.modules():
            for b in ref.modules():
                assert ext_dim(alg, i, Indec(*a), Indec(*b)) == oracle_ext(ref, i, a, b)


def test_syzygy_of_simple():
    alg = NakayamaAlgebra("cyclic", 4, 2)
    assert alg.syzygy(Indec(2, 1)) == Indec(1, 1)
    assert alg.cosyzygy(Indec(2, 1)) == Indec(3, 1)


def test_decompose_direct_sum():
    alg = NakayamaAlgebra("linear", 3, 2)
    rep = alg.rep_of(Obj.of(Indec(2, 2), Indec(1, 1)))
    obj, _ = decompose(alg, rep)
    assert sorted(obj) == [Indec(1, 1), Indec(2, 2)]
