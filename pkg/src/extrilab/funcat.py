"""Functor categories over (co)stable categories and the functors 𝔽 and 𝕂.

A finite linear category is held as composition tables in fixed bases, and
a finitely presented functor is stored as a whole representation: one value
space per object and one matrix per hom-basis element.  Over a finite linear
category every finite-dimensional functor is finitely presented, so nothing
is lost and natural transformations become a single linear solve.

Everything here is written for contravariant functors.  Covariant functors
on the co-stable category of ``𝒳_n^∧`` (the target of 𝕂) are handled as
contravariant functors on its opposite, built by :meth:`FiniteLinCat.op`.

Membership in ``R_𝒳^n`` is decided on the minimal projective presentation:
if some presentation ``Hom(-,X₀) -> Hom(-,X₁) -> g -> 0`` has ``X₀`` in
``add 𝒳``, then the kernel of the projective cover of ``g`` is a quotient of
a summand shift of ``Hom(-,X₀)`` and so is generated by its values on
objects of 𝒳; conversely 𝒳-generation of that kernel yields a presentation
with ``X₀ ∈ add 𝒳``.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

import sympy

from .algebra import Indec
from .exactlin import Matrix, Subspace, image_basis, inverse, kernel_basis, quotient_basis, rank, solve
from .extri import (
    ETriangle,
    ExtriModel,
    _connecting_co,
    _connecting_contra,
    _higher_connecting_co,
    _higher_connecting_contra,
)
from .homdim import Subcat, dim_table, direct_sum_triangles, is_rigid, xvee, xwedge
from .lincat import LinCat, Morphism, Obj, QuotientCat, ideal_through, local_radical
from .quotient import XQuotient, build_quotient

__all__ = [
    "FiniteLinCat",
    "FpFunctor",
    "NatSpace",
    "FunctorSide",
    "build_stable_cat",
    "build_costable_cat",
    "functor_side",
    "functor_F",
    "functor_K",
    "representable",
    "direct_sum",
    "nat_space",
    "is_natural",
    "kernel_functor",
    "cokernel_functor",
    "projective_cover",
    "is_projective_functor",
    "is_injective_functor",
    "isomorphism",
    "in_class",
    "in_R",
    "in_L",
    "presentation_of_F",
    "verify_fully_faithful",
    "verify_dense",
    "eps_conflations",
    "abelian_case_check",
    "proj_inj_of_quotient",
    "pseudokernel_check",
    "extension_closure_check",
    "ideal_agreement",
    "enough_projective_morphisms",
    "enumerate_class",
    "functoriality_check",
    "exact_structure_check",
    "connecting_maps_vanish",
    "ambient_conflations",
    "ConflationTester",
    "epi_witness",
]


# ----------------------------------------------------------------------
# finite linear categories


class FiniteLinCat:
    """A finite linear category given by a :class:`LinCat` and an object list.

    With ``opposite=True`` the category is the opposite of ``source``:
    ``Hom_op(a, b) = Hom(b, a)`` with the same bases.
    """

    def __init__(self, source: LinCat, objects: Sequence, opposite: bool = False, name: str = "") -> None:
        self.source = source
        self.objects = tuple(objects)
        self.opposite = opposite
        self.name = name
        self.field = source.field

    def op(self) -> FiniteLinCat:
        return FiniteLinCat(self.source, self.objects, not self.opposite, self.name + "^op")

    def dim(self, a, b) -> int:
        return self.source.dim(b, a) if self.opposite else self.source.dim(a, b)

    def identity_coords(self, a) -> tuple:
        return self.source.identity_coords(a)

    def compose_coords(self, a, b, c, g: Sequence, f: Sequence) -> tuple:
        """``g o f`` for f in Hom(a, b), g in Hom(b, c)."""
        if self.opposite:
            return self.source.compose_coords(c, b, a, f, g)
        return self.source.compose_coords(a, b, c, g, f)

    def basis(self, a, b) -> list[tuple]:
        n = self.dim(a, b)
        zero, one = self.field.zero, self.field.one
        return [tuple(one if k == p else zero for k in range(n)) for p in range(n)]

    def radical(self, a, b) -> Subspace:
        """``rad(a, b)``; the radical of ``End(a)^op`` equals that of ``End(a)``."""
        if a != b:
            return Subspace.full(self.dim(a, b), self.field)
        return local_radical(self.source, a)

    def source_morphism(self, a, b, coords: Sequence) -> Morphism:
        """The morphism of ``source`` represented by ``coords`` in ``Hom(a, b)``."""
        if self.opposite:
            return Morphism.indec(self.source, b, a, coords)
        return Morphism.indec(self.source, a, b, coords)

    def hom_table(self) -> list[list[int]]:
        return [[self.dim(a, b) for b in self.objects] for a in self.objects]

    def check_axioms(self, samples: int = 50, seed: int = 0) -> dict:
        """Randomized exact checks of associativity and unitality."""
        rng = random.Random(seed)
        objs = self.objects
        problems = []
        for a in objs:
            e = self.identity_coords(a)
            for b in objs:
                for f in self.basis(a, b):
                    if self.compose_coords(a, b, b, self.identity_coords(b), f) != f:
                        problems.append({"unital": "left", "src": str(a), "dst": str(b)})
                    if self.compose_coords(a, a, b, f, e) != f:
                        problems.append({"unital": "right", "src": str(a), "dst": str(b)})
        if objs:
            for _ in range(samples):
                a, b, c, d = (rng.choice(objs) for _ in range(4))
                f = _random_vec(self.field, self.dim(a, b), rng)
                g = _random_vec(self.field, self.dim(b, c), rng)
                h = _random_vec(self.field, self.dim(c, d), rng)
                left = self.compose_coords(a, c, d, h, self.compose_coords(a, b, c, g, f))
                right = self.compose_coords(a, b, d, self.compose_coords(b, c, d, h, g), f)
                if left != right:
                    problems.append({"associative": [str(a), str(b), str(c), str(d)]})
        return {"ok": not problems, "problems": problems}


def _random_vec(fld, n: int, rng: random.Random, lo: int = -3, hi: int = 3) -> tuple:
    return tuple(fld(rng.randint(lo, hi)) for _ in range(n))


def _nonzero_objects(cat: LinCat, objects: Sequence) -> list:
    return [a for a in objects if cat.dim(a, a) > 0]


def build_stable_cat(model: ExtriModel, x: Subcat, n: int) -> FiniteLinCat:
    """The stable category ``𝒳_n^∨`` modulo 𝔼-projective morphisms."""
    _require_rigid(model, x, n)
    objs = xvee(model, x, n)
    q = QuotientCat(model.cat, model.p1_ideal)
    return FiniteLinCat(q, _nonzero_objects(q, objs), name=f"stable X_{n}^vee")


def build_costable_cat(model: ExtriModel, x: Subcat, n: int) -> FiniteLinCat:
    """The co-stable category ``𝒳_n^∧`` modulo 𝔼-injective morphisms."""
    _require_rigid(model, x, n)
    objs = xwedge(model, x, n)
    q = QuotientCat(model.cat, model.i1_ideal)
    return FiniteLinCat(q, _nonzero_objects(q, objs), name=f"costable X_{n}^wedge")


def _require_rigid(model: ExtriModel, x: Subcat, n: int) -> None:
    ok, bad = is_rigid(model, x, n)
    if not ok:
        raise ValueError(f"subcategory is not rigid at level {n}: {bad[:3]}")


def ideal_agreement(model: ExtriModel, objects: Sequence[Indec] | None = None) -> dict:
    """Compare 𝒫₁ with ``[𝒫_𝔼]`` and ℐ₁ with ``[ℐ_𝔼]`` on every pair."""
    objs = list(model.objects if objects is None else objects)
    cat = model.cat
    proj, inj = model.e_projectives(), model.e_injectives()
    mismatches = []
    for a in objs:
        for b in objs:
            if cat.dim(a, b) == 0:
                continue
            p_def, p_gen = model.p1_ideal(a, b), ideal_through(cat, proj, a, b)
            i_def, i_gen = model.i1_ideal(a, b), ideal_through(cat, inj, a, b)
            if p_def.basis != p_gen.basis:
                mismatches.append({"ideal": "P1", "src": a.label, "dst": b.label, "definitional": p_def.dim, "generated": p_gen.dim})
            if i_def.basis != i_gen.basis:
                mismatches.append({"ideal": "I1", "src": a.label, "dst": b.label, "definitional": i_def.dim, "generated": i_gen.dim})
    return {"ok": not mismatches, "pairs": len(objs) ** 2, "mismatches": mismatches}


# ----------------------------------------------------------------------
# functors as representations


@dataclass
class FpFunctor:
    """A contravariant functor on ``base``: value dimensions and actions.

    ``act[(a, b)][p]`` is the matrix of ``F(f_p): F(b) -> F(a)`` for the
    p-th basis morphism ``f_p: a -> b``.  ``variance`` records how the
    functor reads on the category the user cares about (a covariant functor
    on C is stored as a contravariant one on ``C^op``).
    """

    base: FiniteLinCat
    dims: dict
    act: dict
    variance: str = "contravariant"
    label: str = ""

    def dim(self, a) -> int:
        return self.dims[a]

    def total(self) -> int:
        return sum(self.dims.values())

    def dimvec(self) -> tuple:
        return tuple(self.dims[a] for a in self.base.objects)

    def is_zero(self) -> bool:
        return self.total() == 0

    def action(self, a, b, coords: Sequence) -> Matrix:
        fld = self.base.field
        out = Matrix.zeros(self.dims[a], self.dims[b], fld)
        for c, m in zip(coords, self.act.get((a, b), ())):
            if c:
                out = out + m.scale(c)
        return out

    def check_functor(self) -> dict:
        """Identities act as identities and ``F(g o f) = F(f) F(g)`` on basis pairs."""
        base = self.base
        problems = []
        for a in base.objects:
            if not self.action(a, a, base.identity_coords(a)).is_identity():
                problems.append({"identity": str(a)})
        for a in base.objects:
            for b in base.objects:
                for p, f in enumerate(base.basis(a, b)):
                    ff = self.act[(a, b)][p]
                    for c in base.objects:
                        for q, g in enumerate(base.basis(b, c)):
                            gf = base.compose_coords(a, b, c, g, f)
                            if self.action(a, c, gf) != ff @ self.act[(b, c)][q]:
                                problems.append({"composition": [str(a), str(b), str(c), p, q]})
        return {"ok": not problems, "problems": problems}

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "variance": self.variance,
            "objects": [getattr(a, "label", str(a)) for a in self.base.objects],
            "dims": list(self.dimvec()),
        }


def _functor(base: FiniteLinCat, value, action, variance: str = "contravariant", label: str = "") -> FpFunctor:
    dims = {a: value(a) for a in base.objects}
    act = {}
    for a in base.objects:
        for b in base.objects:
            act[(a, b)] = [action(a, b, f) for f in base.basis(a, b)]
    return FpFunctor(base, dims, act, variance, label)


def representable(base: FiniteLinCat, obj: Obj | Sequence) -> FpFunctor:
    """``Hom(-, obj)`` for an object given as a list of base indecomposables."""
    # summands are tagged so repeated objects get separate blocks
    summands = [_Tagged(x, k) for k, x in enumerate(obj)]

    def value_t(z):
        return sum(base.dim(z, t.obj) for t in summands)

    def action_t(a, b, f):
        rows = value_t(a)
        cols = []
        for t in summands:
            for h in base.basis(b, t.obj):
                col = []
                for u in summands:
                    if u is t:
                        col.extend(base.compose_coords(a, b, t.obj, h, f))
                    else:
                        col.extend([base.field.zero] * base.dim(a, u.obj))
                cols.append(col)
        return Matrix.from_columns(cols, rows, base.field) if cols else Matrix.zeros(rows, 0, base.field)

    label = "Hom(-," + "+".join(getattr(t.obj, "label", str(t.obj)) for t in summands) + ")"
    return _functor(base, value_t, action_t, label=label)


@dataclass(frozen=True)
class _Tagged:
    obj: object
    tag: int


def direct_sum(functors: Sequence[FpFunctor]) -> FpFunctor:
    if not functors:
        raise ValueError("direct sum of an empty list needs a base")
    base = functors[0].base
    dims = {a: sum(F.dims[a] for F in functors) for a in base.objects}
    act = {}
    for key in functors[0].act:
        act[key] = [Matrix.block_diag([F.act[key][p] for F in functors], base.field) for p in range(len(functors[0].act[key]))]
    return FpFunctor(base, dims, act, functors[0].variance, "+".join(F.label for F in functors))


def zero_functor(base: FiniteLinCat) -> FpFunctor:
    return _functor(base, lambda a: 0, lambda a, b, f: Matrix.zeros(0, 0, base.field), label="0")


# ----------------------------------------------------------------------
# natural transformations


@dataclass
class NatSpace:
    """Natural transformations ``source -> target`` as a subspace of flat vectors.

    A flat vector lists ``η_a`` row-major for the objects in base order.
    """

    source: FpFunctor
    target: FpFunctor
    space: Subspace
    offsets: dict

    @property
    def dim(self) -> int:
        return self.space.dim

    def unflatten(self, vec: Sequence) -> dict:
        out = {}
        for a, (off, r, c) in self.offsets.items():
            out[a] = Matrix(r, c, list(vec[off : off + r * c]), self.source.base.field)
        return out

    @property
    def basis(self) -> list[dict]:
        return [self.unflatten(v) for v in self.space.vectors()]

    def contains(self, eta: dict) -> bool:
        return self.space.contains(flatten_nat(self.source.base, eta))


def _nat_offsets(F: FpFunctor, G: FpFunctor) -> tuple[dict, int]:
    offsets, off = {}, 0
    for a in F.base.objects:
        r, c = G.dims[a], F.dims[a]
        offsets[a] = (off, r, c)
        off += r * c
    return offsets, off


def flatten_nat(base: FiniteLinCat, eta: dict) -> tuple:
    out = []
    for a in base.objects:
        out.extend(eta[a].entries)
    return tuple(out)


def nat_space(F: FpFunctor, G: FpFunctor) -> NatSpace:
    """Solve the naturality squares ``η_a F(f) = G(f) η_b`` for every basis f."""
    base = F.base
    fld = base.field
    offsets, total = _nat_offsets(F, G)
    rows = []
    for a in base.objects:
        oa, ra, ca = offsets[a]
        for b in base.objects:
            ob, rb, cb = offsets[b]
            for p in range(base.dim(a, b)):
                Ff, Gf = F.act[(a, b)][p], G.act[(a, b)][p]
                # entry (i, j) of η_a F(f) - G(f) η_b, i < dim G(a), j < dim F(b)
                for i in range(ra):
                    for j in range(cb):
                        row = [fld.zero] * total
                        for k in range(ca):
                            v = Ff[k, j]
                            if v:
                                row[oa + i * ca + k] = row[oa + i * ca + k] + v
                        for k in range(rb):
                            v = Gf[i, k]
                            if v:
                                row[ob + k * cb + j] = row[ob + k * cb + j] - v
                        if any(row):
                            rows.append(row)
    if total == 0:
        return NatSpace(F, G, Subspace.zero(0, fld), offsets)
    if not rows:
        return NatSpace(F, G, Subspace.full(total, fld), offsets)
    return NatSpace(F, G, kernel_basis(Matrix(len(rows), total, [v for r in rows for v in r], fld)), offsets)


def is_natural(F: FpFunctor, G: FpFunctor, eta: dict) -> bool:
    base = F.base
    for a in base.objects:
        for b in base.objects:
            for p in range(base.dim(a, b)):
                if eta[a] @ F.act[(a, b)][p] != G.act[(a, b)][p] @ eta[b]:
                    return False
    return True


def compose_nat(base: FiniteLinCat, theta: dict, eta: dict) -> dict:
    """``θ o η``."""
    return {a: theta[a] @ eta[a] for a in base.objects}


def _cols_basis(sub: Subspace, n: int, fld) -> Matrix:
    vecs = sub.vectors()
    return Matrix.from_columns(vecs, n, fld) if vecs else Matrix.zeros(n, 0, fld)


def kernel_functor(F: FpFunctor, G: FpFunctor, eta: dict) -> tuple[FpFunctor, dict]:
    """Kernel of ``η: F -> G`` with its inclusion into F."""
    base = F.base
    fld = base.field
    incl = {a: _cols_basis(kernel_basis(eta[a]) if eta[a].rows else Subspace.full(F.dims[a], fld), F.dims[a], fld) for a in base.objects}
    dims = {a: incl[a].cols for a in base.objects}
    act = {}
    for a in base.objects:
        for b in base.objects:
            mats = []
            for p in range(base.dim(a, b)):
                rhs = F.act[(a, b)][p] @ incl[b]
                sol = solve(incl[a], rhs) if incl[a].rows else Matrix.zeros(dims[a], dims[b], fld)
                if sol is None:
                    raise ArithmeticError("kernel is not a subfunctor")
                mats.append(sol)
            act[(a, b)] = mats
    return FpFunctor(base, dims, act, F.variance, f"ker({F.label})"), incl


def cokernel_functor(F: FpFunctor, G: FpFunctor, eta: dict) -> tuple[FpFunctor, dict]:
    """Cokernel of ``η: F -> G`` with the projection from G."""
    base = F.base
    fld = base.field
    proj, sect = {}, {}
    for a in base.objects:
        im = image_basis(eta[a]) if eta[a].cols else Subspace.zero(G.dims[a], fld)
        proj[a], sect[a] = quotient_basis(G.dims[a], im)
    dims = {a: proj[a].rows for a in base.objects}
    act = {(a, b): [proj[a] @ G.act[(a, b)][p] @ sect[b] for p in range(base.dim(a, b))] for a in base.objects for b in base.objects}
    return FpFunctor(base, dims, act, G.variance, f"coker({G.label})"), proj


def subfunctor_generated(F: FpFunctor, gens: dict) -> dict:
    """Smallest subfunctor containing the given subspaces ``gens[a] ⊆ F(a)``."""
    base = F.base
    fld = base.field
    out = {}
    for z in base.objects:
        vecs = list(gens.get(z, Subspace.zero(F.dims[z], fld)).vectors())
        for b, sub in gens.items():
            for p in range(base.dim(z, b)):
                m = F.act[(z, b)][p]
                vecs.extend(m.apply(v) for v in sub.vectors())
        out[z] = Subspace.span(vecs, F.dims[z], fld)
    return out


# ----------------------------------------------------------------------
# radical, top, socle, projective cover


def radical_values(F: FpFunctor) -> dict:
    base = F.base
    fld = base.field
    out = {}
    for a in base.objects:
        vecs = []
        for b in base.objects:
            rad = base.radical(a, b)
            for f in rad.vectors():
                m = F.action(a, b, f)
                vecs.extend(m.columns())
        out[a] = Subspace.span(vecs, F.dims[a], fld)
    return out


def socle_values(F: FpFunctor) -> dict:
    """``soc F(a)``: vectors killed by every radical morphism into a."""
    base = F.base
    fld = base.field
    out = {}
    for a in base.objects:
        blocks = []
        for b in base.objects:
            for f in base.radical(b, a).vectors():
                blocks.append(F.action(b, a, f))
        blocks = [m for m in blocks if m.rows]
        if not blocks:
            out[a] = Subspace.full(F.dims[a], fld)
        else:
            out[a] = kernel_basis(blocks[0].vstack(*blocks[1:]))
    return out


@dataclass
class ProjectiveCover:
    functor: FpFunctor
    cover: FpFunctor
    summands: list
    epi: dict


def projective_cover(F: FpFunctor) -> ProjectiveCover:
    """``⊕ Hom(-, a)^{t_a} -> F`` with ``t_a = dim (F/rad F)(a)``."""
    base = F.base
    fld = base.field
    rad = radical_values(F)
    summands, gens = [], []
    for a in base.objects:
        _, sect = quotient_basis(F.dims[a], rad[a])
        for k in range(sect.cols):
            summands.append(a)
            gens.append(sect.col(k))
    P = representable(base, summands) if summands else zero_functor(base)
    epi = {}
    for z in base.objects:
        cols = []
        for a, v in zip(summands, gens):
            for f in base.basis(z, a):
                cols.append(F.action(z, a, f).apply(v))
        epi[z] = Matrix.from_columns(cols, F.dims[z], fld) if cols else Matrix.zeros(F.dims[z], 0, fld)
    return ProjectiveCover(F, P, summands, epi)


def is_projective_functor(F: FpFunctor) -> bool:
    pc = projective_cover(F)
    return pc.cover.total() == F.total()


def is_injective_functor(F: FpFunctor) -> bool:
    base = F.base
    soc = socle_values(F)
    env = sum(soc[a].dim * sum(base.dim(a, z) for z in base.objects) for a in base.objects)
    return env == F.total()


# ----------------------------------------------------------------------
# isomorphism


def isomorphism(F: FpFunctor, G: FpFunctor, seed: int = 0, tries: int = 24) -> tuple[bool, dict | None]:
    """Decide ``F ≅ G``; positives carry mutually inverse transformations.

    Random elements of ``Nat(F, G)`` are tried first.  If none is invertible
    the product of the component determinants is expanded symbolically in
    the Nat coordinates and an invertible element exists iff that product
    has a nonroot, which is decided exactly over Q and over F_p.
    """
    base = F.base
    if F.dimvec() != G.dimvec():
        return False, None
    if F.total() == 0:
        return True, {"forward": {a: Matrix.zeros(0, 0, base.field) for a in base.objects}, "backward": {a: Matrix.zeros(0, 0, base.field) for a in base.objects}}
    ns = nat_space(F, G)
    basis = ns.space.vectors()
    if not basis:
        return False, None
    rng = random.Random(seed)
    fld = base.field
    objs = [a for a in base.objects if F.dims[a]]

    def attempt(coeffs):
        vec = [fld.zero] * ns.space.ambient_dim
        for c, v in zip(coeffs, basis):
            if c:
                vec = [x + c * y for x, y in zip(vec, v)]
        eta = ns.unflatten(vec)
        inv = {}
        for a in base.objects:
            if F.dims[a] == 0:
                inv[a] = Matrix.zeros(0, 0, fld)
                continue
            m = inverse(eta[a])
            if m is None:
                return None
            inv[a] = m
        return eta, inv

    for k in range(tries):
        spread = 2 + k
        coeffs = [fld(rng.randint(-spread, spread)) for _ in basis]
        got = attempt(coeffs)
        if got is not None:
            eta, inv = got
            if is_natural(G, F, inv):
                return True, {"forward": eta, "backward": inv}
    point = _det_nonroot(ns, basis, objs, fld)
    if point is None:
        return False, None
    got = attempt([fld(v) for v in point])
    if got is None:
        raise ArithmeticError("determinant nonroot did not give an invertible transformation")
    eta, inv = got
    return True, {"forward": eta, "backward": inv}


def _sym(c):
    if hasattr(c, "p"):
        return sympy.Integer(c.v)
    return sympy.Rational(c.numerator, c.denominator)


def _det_nonroot(ns: NatSpace, basis: list, objs: list, fld) -> tuple | None:
    """A coordinate point where every component determinant is nonzero.

    Over Q a nonzero product polynomial has a nonroot among small integer
    points.  Over F_p the polynomial is reduced modulo ``t^p = t``; the
    reduced form is zero iff the polynomial vanishes on all of F_p^d, and a
    nonroot is then found one coordinate at a time.
    """
    t = sympy.symbols(f"t0:{len(basis)}")
    poly = sympy.Integer(1)
    for a in objs:
        off, r, c = ns.offsets[a]
        entries = [sum(_sym(v[off + i]) * t[j] for j, v in enumerate(basis) if v[off + i]) for i in range(r * c)]
        poly = sympy.expand(poly * sympy.Matrix(r, c, entries).det(method="berkowitz"))
        if poly == 0:
            return None
    p = fld.characteristic
    if p == 0:
        degree = sympy.Poly(poly, *t).total_degree()
        for point in itertools.product(range(degree + 1), repeat=len(basis)):
            if poly.subs(dict(zip(t, point))) != 0:
                return point
        raise ArithmeticError("nonzero determinant polynomial without a nonroot")
    terms = _reduce_mod_frobenius(sympy.Poly(poly, *t).as_dict(), p)
    if not terms:
        return None
    point = []
    for j in range(len(basis)):
        for value in range(p):
            sub = _substitute(terms, j, value, p)
            if sub:
                terms = sub
                point.append(value)
                break
        else:
            raise ArithmeticError("reduced polynomial lost all nonroots")
    return tuple(point)


def _reduce_mod_frobenius(terms: dict, p: int) -> dict:
    """Coefficients mod p and exponents reduced by ``t^p = t``."""
    out: dict = {}
    for mono, coeff in terms.items():
        key = tuple(0 if e == 0 else (e - 1) % (p - 1) + 1 for e in mono)
        out[key] = (out.get(key, 0) + int(coeff)) % p
    return {k: v for k, v in out.items() if v}


def _substitute(terms: dict, j: int, value: int, p: int) -> dict:
    out: dict = {}
    for mono, coeff in terms.items():
        key = mono[:j] + (0,) + mono[j + 1 :]
        out[key] = (out.get(key, 0) + coeff * pow(value, mono[j], p)) % p
    return {k: v for k, v in out.items() if v}


# ----------------------------------------------------------------------
# the functors 𝔽 and 𝕂


class FunctorSide:
    """Data for one side: 𝔽 on the stable category, or 𝕂 on the co-stable one.

    ``base`` is the category the stored (contravariant) functors live on:
    the stable category of ``𝒳_n^∨`` for 𝔽, the opposite of the co-stable
    category of ``𝒳_n^∧`` for 𝕂.  ``quotient`` is ``𝒳_{n+1}^∨/[𝒳]`` or
    ``𝒳_{n+1}^∧/[𝒳]``.
    """

    def __init__(self, model: ExtriModel, x: Subcat, n: int, kind: str = "F") -> None:
        if kind not in ("F", "K"):
            raise ValueError("kind must be 'F' or 'K'")
        self.model = model
        self.x = x
        self.n = n
        self.kind = kind
        if kind == "F":
            self.category = build_stable_cat(model, x, n)
            self.base = self.category
            self.quotient: XQuotient = build_quotient(model, x, n, "vee")
        else:
            self.category = build_costable_cat(model, x, n)
            self.base = self.category.op()
            self.quotient = build_quotient(model, x, n, "wedge")
        self._cache: dict = {}

    @property
    def variance(self) -> str:
        return "contravariant" if self.kind == "F" else "covariant"

    @property
    def generators(self) -> list:
        """Objects of 𝒳 that survive in the base category."""
        return [a for a in self.base.objects if a in self.x]

    @property
    def objects(self) -> list[Indec]:
        """Ambient indecomposables of the quotient category."""
        return list(self.quotient.objects)

    @property
    def ind(self) -> list[Indec]:
        return self.quotient.ind

    def _lift(self, a, b, f) -> Morphism:
        return self.category.source.lift(self.base.source_morphism(a, b, f))

    def functor(self, M: Obj | Indec) -> FpFunctor:
        M = M if isinstance(M, Obj) else Obj((M,))
        got = self._cache.get(M)
        if got is not None:
            return got
        model = self.model
        if self.kind == "F":
            value = lambda z: model.ext_space_dim(Obj((z,)), M)
            action = lambda a, b, f: model.ext_pull(self._lift(a, b, f), M)
        else:
            value = lambda z: model.ext_space_dim(M, Obj((z,)))
            action = lambda a, b, f: model.ext_push(self._lift(a, b, f), M)
        F = _functor(self.base, value, action, self.variance, ("F(" if self.kind == "F" else "K(") + M.label + ")")
        self._cache[M] = F
        return F

    def on_morphism(self, h: Morphism) -> dict:
        """Components of 𝔽(h): 𝔽A -> 𝔽B, or 𝕂(h): 𝕂B -> 𝕂A."""
        model = self.model
        if self.kind == "F":
            return {z: model.ext_push(h, Obj((z,))) for z in self.base.objects}
        return {z: model.ext_pull(h, Obj((z,))) for z in self.base.objects}

    def nat_source_target(self, h: Morphism) -> tuple[FpFunctor, FpFunctor]:
        if self.kind == "F":
            return self.functor(h.src), self.functor(h.dst)
        return self.functor(h.dst), self.functor(h.src)

    def well_defined(self, M: Obj | Indec) -> bool:
        """Ideal morphisms of the base act by zero on the functor values."""
        M = M if isinstance(M, Obj) else Obj((M,))
        src = self.category.source
        for a in self.category.objects:
            for b in self.category.objects:
                for v in src.ideal(a, b).vectors():
                    f = Morphism.indec(src.base, a, b, v)
                    m = self.model.ext_pull(f, M) if self.kind == "F" else self.model.ext_push(f, M)
                    if not m.is_zero():
                        return False
        return True

    def morphism_matrix(self, A: Obj, B: Obj) -> tuple[Matrix, list[Morphism]]:
        """Columns: flattened 𝔽/𝕂 images of the ambient basis of ``Hom(A, B)``."""
        basis = self.model.cat.hom_basis(A, B)
        cols = [flatten_nat(self.base, self.on_morphism(h)) for h in basis]
        F, G = self.nat_source_target(Morphism.zero(self.model.cat, A, B))
        _, total = _nat_offsets(F, G)
        fld = self.model.field
        mat = Matrix.from_columns(cols, total, fld) if cols else Matrix.zeros(total, 0, fld)
        return mat, basis

    def preimage(self, A: Obj, B: Obj, eta: dict) -> Morphism | None:
        """A morphism ``h: A -> B`` with 𝔽(h) = η (fullness, solved linearly)."""
        mat, basis = self.morphism_matrix(A, B)
        target = flatten_nat(self.base, eta)
        if not basis:
            return Morphism.zero(self.model.cat, A, B) if not any(target) else None
        sol = solve(mat, Matrix(len(target), 1, list(target), self.model.field))
        if sol is None:
            return None
        return Morphism.from_flat(self.model.cat, A, B, sol.col(0))

    def find_object(self, g: FpFunctor, seed: int = 0, max_terms: int = 8) -> tuple[Obj, dict] | None:
        """Search ``M`` in ``add`` of the quotient with ``𝔽(M) ≅ g``."""
        target = g.dimvec()
        if not any(target):
            return Obj.zero(), isomorphism(self.functor(Obj.zero()), g)[1]
        cands = [(a, self.functor(a).dimvec()) for a in self.ind]
        cands = [(a, v) for a, v in cands if any(v)]
        found = []

        def dfs(start: int, chosen: list, acc: tuple) -> bool:
            if acc == target:
                M = Obj.from_iter(chosen)
                ok, iso = isomorphism(self.functor(M), g, seed=seed)
                if ok:
                    found.append((M, iso))
                    return True
                return False
            if len(chosen) >= max_terms:
                return False
            for k in range(start, len(cands)):
                a, v = cands[k]
                nxt = tuple(s + t for s, t in zip(acc, v))
                if all(s <= t for s, t in zip(nxt, target)):
                    if dfs(k, chosen + [a], nxt):
                        return True
            return False

        dfs(0, [], tuple(0 for _ in target))
        return found[0] if found else None


def functor_side(model: ExtriModel, x: Subcat, n: int, kind: str = "F") -> FunctorSide:
    return FunctorSide(model, x, n, kind)


def functor_F(model: ExtriModel, x: Subcat, n: int, m_obj: Obj | Indec, side: FunctorSide | None = None) -> FpFunctor:
    side = side or FunctorSide(model, x, n, "F")
    return side.functor(m_obj)


def functor_K(model: ExtriModel, x: Subcat, n: int, m_obj: Obj | Indec, side: FunctorSide | None = None) -> FpFunctor:
    side = side or FunctorSide(model, x, n, "K")
    return side.functor(m_obj)


# ----------------------------------------------------------------------
# presentations and the classes R / L


def _flat_ideal(cat: QuotientCat, src: Obj, dst: Obj) -> Subspace:
    """The ideal of ``cat`` on ``Hom(src, dst)`` in flat base coordinates."""
    base = cat.base
    total = base.hom_space_dim(src, dst)
    vecs, offset = [], 0
    for d in dst:
        for s in src:
            n = base.dim(s, d)
            for v in cat.ideal(s, d).vectors():
                full = [base.field.zero] * total
                full[offset : offset + n] = v
                vecs.append(full)
            offset += n
    return Subspace.span(vecs, total, base.field)


def presentation_of_F(side: FunctorSide, tri: ETriangle) -> dict:
    """Exactness of ``S(-,X₀) -> S(-,X₁) -> 𝔽(C) -> 0`` from ``C -> X₀ -> X₁``.

    At each base object Z the map ``S(Z, X₁) -> 𝔼(Z, C)`` is ``h -> δ·h``;
    its kernel must be the image of ``y_*`` plus the 𝔼-projective ideal,
    and it must be onto.
    """
    if side.kind != "F":
        raise ValueError("presentation_of_F is stated for the 𝔽 side")
    model = side.model
    cat = model.cat
    C, X0, X1 = tri.A, tri.B, tri.C
    fld = model.field
    rows, problems = [], []
    for z in side.base.objects:
        Z = Obj((z,))
        basis = cat.hom_basis(Z, X1)
        ez = model.ext_space_dim(Z, C)
        cols = [model.pull(tri.delta, h, C) for h in basis]
        D = Matrix.from_columns(cols, ez, fld) if cols else Matrix.zeros(ez, 0, fld)
        ideal = _flat_ideal(side.category.source, Z, X1)
        ymat = cat.post_matrix(tri.y, Z)
        im = Subspace.span(list(image_basis(ymat).vectors()) + list(ideal.vectors()), len(basis), fld) if basis else Subspace.zero(0, fld)
        ker = kernel_basis(D) if D.rows else Subspace.full(len(basis), fld)
        exact = ker.basis == im.basis
        onto = rank(D) == ez if D.cols else ez == 0
        rows.append({"object": z.label, "exact_middle": exact, "onto": onto})
        if not (exact and onto):
            problems.append(z.label)
    return {
        "ok": not problems and side.x.contains(X0),
        "X0_in_X": side.x.contains(X0),
        "rows": rows,
        "problems": problems,
    }


def in_class(side: FunctorSide, g: FpFunctor) -> tuple[bool, dict]:
    """Membership in ``R_𝒳^n`` (𝔽 side) or ``L_𝒳^n`` (𝕂 side).

    The kernel of the projective cover must be generated by its values on
    the objects of 𝒳; the witness records the cover and the generation
    dimensions.
    """
    pc = projective_cover(g)
    base = g.base
    P = pc.cover
    K, incl = kernel_functor(P, g, pc.epi)
    gens = {x: Subspace.full(K.dims[x], base.field) for x in side.generators}
    generated = subfunctor_generated(K, gens)
    missing = {getattr(z, "label", str(z)): K.dims[z] - generated[z].dim for z in base.objects if generated[z].dim != K.dims[z]}
    witness = {
        "cover": [getattr(a, "label", str(a)) for a in pc.summands],
        "kernel_dims": list(K.dimvec()),
        "ungenerated": missing,
    }
    return not missing, witness


def in_R(side: FunctorSide, g: FpFunctor) -> tuple[bool, dict]:
    if side.kind != "F":
        raise ValueError("in_R needs the 𝔽 side")
    return in_class(side, g)


def in_L(side: FunctorSide, g: FpFunctor) -> tuple[bool, dict]:
    if side.kind != "K":
        raise ValueError("in_L needs the 𝕂 side")
    return in_class(side, g)


# ----------------------------------------------------------------------
# full, faithful, kernel


def verify_fully_faithful(side: FunctorSide) -> dict:
    """For all pairs: ``dim Hom_D = dim Nat`` and ``ker = [𝒳]`` exactly."""
    model = side.model
    cat = model.cat
    objs = side.objects
    cells, failures = [], 0
    for a in objs:
        for b in objs:
            A, B = Obj((a,)), Obj((b,))
            mat, basis = side.morphism_matrix(A, B)
            F, G = side.nat_source_target(Morphism.zero(cat, A, B))
            ns = nat_space(F, G)
            ker = kernel_basis(mat) if mat.rows else Subspace.full(len(basis), model.field)
            ideal = ideal_through(cat, side.x.generators, a, b)
            natural = all(ns.space.contains(c) for c in mat.columns())
            hom_d = side.quotient.hom_dim(a, b)
            ok = ker.basis == ideal.basis and ns.dim == hom_d and rank(mat) == hom_d and natural
            failures += not ok
            cells.append({
                "src": a.label,
                "dst": b.label,
                "hom_D": hom_d,
                "nat": ns.dim,
                "kernel_equals_ideal": ker.basis == ideal.basis,
                "images_natural": natural,
                "ok": ok,
            })
    return {"ok": failures == 0, "side": side.kind, "pairs": len(cells), "failures": failures, "cells": cells}


def functoriality_check(side: FunctorSide, samples: int = 30, seed: int = 0) -> dict:
    """``𝔽(g f) = 𝔽(g) 𝔽(f)`` (or reversed for 𝕂) on random composable pairs."""
    rng = random.Random(seed)
    cat = side.model.cat
    objs = side.objects
    bad = 0
    for _ in range(samples):
        a, b, c = (Obj((rng.choice(objs),)) for _ in range(3))
        f = Morphism.from_flat(cat, a, b, _random_vec(cat.field, cat.hom_space_dim(a, b), rng))
        g = Morphism.from_flat(cat, b, c, _random_vec(cat.field, cat.hom_space_dim(b, c), rng))
        gf = side.on_morphism(g @ f)
        Ff, Fg = side.on_morphism(f), side.on_morphism(g)
        for z in side.base.objects:
            expect = Fg[z] @ Ff[z] if side.kind == "F" else Ff[z] @ Fg[z]
            if gf[z] != expect:
                bad += 1
                break
    return {"ok": bad == 0, "samples": samples, "failures": bad}


# ----------------------------------------------------------------------
# density


def enough_projective_morphisms(side: FunctorSide) -> dict:
    """Each base object receives an 𝔼-projective deflation (dually inflation)."""
    model = side.model
    bad = []
    for c in side.base.objects:
        tri = model.omega(c) if side.kind == "F" else model.sigma(c)
        if tri is None:
            bad.append(c.label)
            continue
        m = tri[1].y if side.kind == "F" else tri[1].x
        ok = model.is_e_projective_morphism(m) if side.kind == "F" else model.is_e_injective_morphism(m)
        if not ok:
            bad.append(c.label)
    return {"ok": not bad, "failing": bad}


def _postcompose_nat(base: FiniteLinCat, X0: list, X1: list, alpha: dict) -> dict:
    """``Hom(-, X₀) -> Hom(-, X₁)`` induced by ``α``; ``alpha[(j, i)]`` in Hom(X₀_i, X₁_j)."""
    fld = base.field
    out = {}
    for z in base.objects:
        rows = sum(base.dim(z, y) for y in X1)
        cols = []
        for i, x in enumerate(X0):
            for h in base.basis(z, x):
                col = []
                for j, y in enumerate(X1):
                    a = alpha.get((j, i))
                    if a is None:
                        col.extend([fld.zero] * base.dim(z, y))
                    else:
                        col.extend(base.compose_coords(z, x, y, a, h))
                cols.append(col)
        out[z] = Matrix.from_columns(cols, rows, fld) if cols else Matrix.zeros(rows, 0, fld)
    return out


def enumerate_class(side: FunctorSide, dim_cap: int = 8, max_x1: int = 2, max_x0: int = 2, max_presentations: int = 4000, seed: int = 0) -> dict:
    """Members of ``R_𝒳^n`` / ``L_𝒳^n`` as cokernels ``Hom(-,α)``, up to iso.

    ``α: X₀ -> X₁`` runs over ``X₁`` with at most ``max_x1`` summands,
    ``X₀ ∈ add 𝒳`` with at most ``max_x0`` summands, and block entries that
    are zero, a basis morphism or the sum of all basis morphisms.
    """
    base = side.base
    fld = base.field
    objs, gens = list(base.objects), side.generators
    reps: dict = {}
    stats = {"presentations": 0, "above_cap": 0, "capped": False}
    zero = zero_functor(base)
    reps.setdefault(zero.dimvec(), []).append(zero)
    for s1 in range(1, max_x1 + 1):
        for X1 in itertools.combinations_with_replacement(objs, s1):
            for s0 in range(0, max_x0 + 1):
                for X0 in itertools.combinations_with_replacement(gens, s0):
                    choices = []
                    for j, y in enumerate(X1):
                        for i, x in enumerate(X0):
                            opts = [None] + base.basis(x, y)
                            if base.dim(x, y) > 1:
                                opts.append(tuple(fld.one for _ in range(base.dim(x, y))))
                            choices.append(((j, i), opts))
                    for pick in itertools.product(*[c[1] for c in choices]):
                        if stats["presentations"] >= max_presentations:
                            stats["capped"] = True
                            break
                        stats["presentations"] += 1
                        alpha = {key: v for (key, _), v in zip(choices, pick) if v is not None}
                        P0 = representable(base, list(X0)) if X0 else zero
                        P1 = representable(base, list(X1))
                        eta = _postcompose_nat(base, list(X0), list(X1), alpha)
                        Q, _ = cokernel_functor(P0, P1, eta)
                        if Q.total() > dim_cap:
                            stats["above_cap"] += 1
                            continue
                        bucket = reps.setdefault(Q.dimvec(), [])
                        if not any(isomorphism(Q, R, seed=seed)[0] for R in bucket):
                            bucket.append(Q)
    members = [F for dv in sorted(reps) for F in reps[dv]]
    stats["classes"] = len(members)
    return {"members": members, "stats": stats}


def verify_dense(side: FunctorSide, dim_cap: int = 8, seed: int = 0, **enum_kw) -> dict:
    """Every enumerated member of R (or L) is ``𝔽(M)`` (or ``𝕂(M)``) for some M."""
    hyp = enough_projective_morphisms(side)
    if not hyp["ok"]:
        return {"verdict": "not-applicable", "reason": "missing 𝔼-projective deflations", "failing": hyp["failing"]}
    enum = enumerate_class(side, dim_cap=dim_cap, seed=seed, **enum_kw)
    hits, misses = [], []
    for g in enum["members"]:
        found = side.find_object(g, seed=seed)
        if found is None:
            misses.append(list(g.dimvec()))
        else:
            hits.append({"dims": list(g.dimvec()), "object": found[0].label})
    # images of indecomposables lie in the class
    image_check = {}
    for a in side.ind:
        ok, _ = in_class(side, side.functor(a))
        image_check[a.label] = ok
    ok = not misses and all(image_check.values())
    return {
        "verdict": ("capped" if enum["stats"]["capped"] and ok else "pass") if ok else "fail",
        "side": side.kind,
        "dim_cap": dim_cap,
        "stats": enum["stats"],
        "coverage": f"{len(hits)}/{len(hits) + len(misses)}",
        "hits": hits,
        "misses": misses,
        "images_in_class": image_check,
    }


def extension_closure_check(side: FunctorSide, samples: int = 20, seed: int = 0, dim_cap: int = 8) -> dict:
    """Extensions of class members (pushouts of projective covers) stay in the class."""
    rng = random.Random(seed)
    members = [F for F in enumerate_class(side, dim_cap=dim_cap, max_x1=2, max_x0=1, seed=seed)["members"] if not F.is_zero()]
    base = side.base
    tested, bad = 0, 0
    if not members:
        return {"ok": True, "tested": 0}
    attempts = 0
    while tested < samples and attempts < samples * 20:
        attempts += 1
        F1, F3 = rng.choice(members), rng.choice(members)
        pc = projective_cover(F3)
        K, incl = kernel_functor(pc.cover, F3, pc.epi)
        ns = nat_space(K, F1)
        vecs = ns.space.vectors()
        if not vecs:
            continue
        coeffs = _random_vec(base.field, len(vecs), rng)
        flat = [base.field.zero] * ns.space.ambient_dim
        for c, v in zip(coeffs, vecs):
            flat = [p + c * q for p, q in zip(flat, v)]
        phi = ns.unflatten(flat)
        target = direct_sum([F1, pc.cover])
        eta = {z: phi[z].vstack(incl[z].scale(-1)) for z in base.objects}
        E, _ = cokernel_functor(K, target, eta)
        tested += 1
        ok, _ = in_class(side, E)
        bad += not ok
    return {"ok": bad == 0, "tested": tested, "failures": bad}


def pseudokernel_check(side: FunctorSide) -> dict:
    """Every basis morphism of the base category has a pseudokernel.

    The candidate is the sum over objects z of the kernel of
    ``Hom(z, a) -> Hom(z, b)``; its image at each z is compared with that
    kernel.
    """
    base = side.base
    bad = []
    for a in base.objects:
        for b in base.objects:
            for f in base.basis(a, b):
                gens = []
                for z in base.objects:
                    cols = [base.compose_coords(z, a, b, f, h) for h in base.basis(z, a)]
                    if not cols:
                        continue
                    m = Matrix.from_columns(cols, base.dim(z, b), base.field)
                    ker = kernel_basis(m) if m.rows else Subspace.full(len(cols), base.field)
                    gens.extend((z, v) for v in ker.vectors())
                for z in base.objects:
                    cols = [base.compose_coords(z, a, b, f, h) for h in base.basis(z, a)]
                    if not cols:
                        continue
                    m = Matrix.from_columns(cols, base.dim(z, b), base.field)
                    ker = kernel_basis(m) if m.rows else Subspace.full(len(cols), base.field)
                    img = []
                    for w, k in gens:
                        for h in base.basis(z, w):
                            img.append(base.compose_coords(z, w, a, k, h))
                    if Subspace.span(img, base.dim(z, a), base.field).basis != ker.basis:
                        bad.append([str(a), str(b), str(z)])
    return {"ok": not bad, "failures": bad}


# ----------------------------------------------------------------------
# the exact structure ε_𝔽 / ε_𝕂


def _short_exact(first: Matrix, second: Matrix) -> bool:
    """``0 -> U --first--> V --second--> W -> 0`` exact."""
    if (second @ first).entries and not (second @ first).is_zero():
        return False
    mono = rank(first) == first.cols if first.cols else True
    epi = rank(second) == second.rows if second.rows else True
    middle = rank(first) + rank(second) == first.rows if first.rows else True
    return mono and epi and middle


class ConflationTester:
    """``is_conflation(i, p)`` by exactness of the functor images."""

    def __init__(self, side: FunctorSide) -> None:
        self.side = side

    def is_conflation(self, i: Morphism, p: Morphism) -> bool:
        side = self.side
        if i.dst != p.src:
            return False
        Fi, Fp = side.on_morphism(i), side.on_morphism(p)
        for z in side.base.objects:
            if side.kind == "F":
                ok = _short_exact(Fi[z], Fp[z])
            else:
                ok = _short_exact(Fp[z], Fi[z])
            if not ok:
                return False
        return True

    def __call__(self, i: Morphism, p: Morphism) -> bool:
        return self.is_conflation(i, p)


def eps_conflations(side: FunctorSide) -> ConflationTester:
    return ConflationTester(side)


def ambient_conflations(side: FunctorSide, count: int, seed: int = 0, max_summands: int = 2) -> list[ETriangle]:
    """Random ambient triangles with all three terms in the quotient universe."""
    model = side.model
    rng = random.Random(seed)
    objs = side.objects
    out = []
    attempts = 0
    while len(out) < count and attempts < count * 30:
        attempts += 1
        A = Obj.from_iter(rng.choice(objs) for _ in range(rng.randint(1, max_summands)))
        C = Obj.from_iter(rng.choice(objs) for _ in range(rng.randint(1, max_summands)))
        d = model.ext_space_dim(C, A)
        delta = _random_vec(model.field, d, rng)
        tri = model.realize(C, A, delta)
        if tri is None or not all(b in side.quotient.objects for b in tri.B):
            continue
        out.append(tri)
    return out


def connecting_maps_vanish(side: FunctorSide, tri: ETriangle) -> bool:
    """Both connecting maps around the functor images vanish at every base object.

    By the long exact sequences this is equivalent to the image of ``tri``
    being short exact, and gives an independent route to ``is_conflation``.
    """
    model = side.model
    for z in side.base.objects:
        Z = Obj((z,))
        if side.kind == "F":
            first, second = _connecting_co(model, tri, Z), _higher_connecting_co(model, tri, z)
        else:
            first, second = _connecting_contra(model, tri, Z), _higher_connecting_contra(model, tri, z)
        if second is None:
            raise ValueError(f"no higher connecting map at {z.label}")
        if not first.is_zero() or not second.is_zero():
            return False
    return True


def exact_structure_check(side: FunctorSide, samples: int = 20, seed: int = 0) -> dict:
    """Spot checks of the exact-category axioms on sampled conflations.

    Ambient conflations inside the universe and split pairs must test as
    conflations, non-exact pairs must be rejected, and pushouts along random
    morphisms must be realized inside the quotient universe.
    """
    model = side.model
    cat = model.cat
    rng = random.Random(seed)
    tester = eps_conflations(side)
    tris = ambient_conflations(side, samples, seed=seed)
    report = {"ambient": 0, "ambient_in_eps": 0, "ambient_agree": 0, "split_ok": 0, "rejected_ok": 0, "pushouts": 0, "pushouts_ok": 0}
    for tri in tris:
        report["ambient"] += 1
        member = tester(tri.x, tri.y)
        report["ambient_in_eps"] += member
        report["ambient_agree"] += member == connecting_maps_vanish(side, tri)
        A, C = tri.A, tri.C
        sp = model.split_triangle(C, A)
        report["split_ok"] += tester(sp.x, sp.y)
        # (1, 1) on A with nonzero 𝔽A is not exact
        if not side.functor(A).is_zero():
            report["rejected_ok"] += not tester(cat.identity(A), cat.identity(A))
        else:
            report["rejected_ok"] += 1
        if not member:
            continue
        # pushout along f: A -> A'
        a2 = Obj((rng.choice(side.ind or side.objects),))
        f = Morphism.from_flat(cat, A, a2, _random_vec(model.field, cat.hom_space_dim(A, a2), rng))
        Ff = side.on_morphism(f)
        Fi = side.on_morphism(tri.x)
        FA, FA2, FB = side.functor(A), side.functor(a2), side.functor(tri.B)
        report["pushouts"] += 1
        if side.kind == "F":
            eta = {z: Ff[z].vstack(Fi[z].scale(-1)) for z in side.base.objects}
            E, _ = cokernel_functor(FA, direct_sum([FA2, FB]), eta)
        else:
            # dual: pushout in D becomes a pullback of 𝕂-values, a kernel
            eta = {z: Ff[z].hstack(Fi[z].scale(-1)) for z in side.base.objects}
            E, _ = kernel_functor(direct_sum([FA2, FB]), FA, eta)
        report["pushouts_ok"] += side.find_object(E, seed=seed) is not None
    ok = (
        report["ambient_agree"] == report["ambient"]
        and report["split_ok"] == report["ambient"]
        and report["rejected_ok"] == report["ambient"]
        and report["pushouts_ok"] == report["pushouts"]
    )
    report["ok"] = ok
    return report


# ----------------------------------------------------------------------
# abelian case, projectives and injectives


def abelian_case_check(side: FunctorSide, seed: int = 0) -> dict:
    """When ``𝒳_n^∨ = 𝒳``: kernels and cokernels of basis morphisms exist in D."""
    model, x, n = side.model, side.x, side.n
    level = xvee(model, x, n) if side.kind == "F" else xwedge(model, x, n)
    extra = [a.label for a in level if a not in x]
    if extra:
        return {"verdict": "not-applicable", "reason": "X_n differs from X", "outside_X": extra}
    cat = model.cat
    rows, failures = [], 0
    for a in side.ind:
        for b in side.ind:
            A, B = Obj((a,)), Obj((b,))
            for h in cat.hom_basis(A, B):
                if side.quotient.cat.in_ideal(h):
                    continue
                F, G = side.nat_source_target(h)
                eta = side.on_morphism(h)
                K, _ = kernel_functor(F, G, eta)
                Q, _ = cokernel_functor(F, G, eta)
                k = side.find_object(K, seed=seed)
                c = side.find_object(Q, seed=seed)
                ok = k is not None and c is not None
                failures += not ok
                rows.append({
                    "src": a.label,
                    "dst": b.label,
                    "kernel": None if k is None else k[0].label,
                    "cokernel": None if c is None else c[0].label,
                    "ok": ok,
                })
    simple = [a.label for a in side.ind if all(side.quotient.hom_dim(a, b) == (1 if a == b else 0) for b in side.ind)]
    semisimple = len(simple) == len(side.ind)
    return {
        "verdict": "pass" if failures == 0 else "fail",
        "morphisms": len(rows),
        "failures": failures,
        "rows": rows,
        "semisimple": semisimple,
        "simples": simple if semisimple else [],
    }


def _summands(objs) -> list[Indec]:
    return sorted({s for o in objs for s in o})


def proj_inj_of_quotient(side: FunctorSide, seed: int = 0) -> dict:
    """Ω(𝒳)/[𝒳], Σ(𝒳)/[𝒳] against projective and injective objects of D.

    Projectivity and injectivity are read off the functor images; in the
    abelian case the quotient is equivalent to the functor category, and in
    general a projective functor image certifies projectivity in ε_𝔽.
    """
    if side.kind != "F":
        raise ValueError("projectives and injectives are computed on the 𝔽 side")
    model, x, n = side.model, side.x, side.n
    proj = model.e_projectives()
    if not all(p in x for p in proj):
        return {"verdict": "not-applicable", "reason": "some 𝔼-projective lies outside X"}
    omega_x, sigma_x = [], []
    inj = model.e_injectives()
    for g in x.generators:
        om = None if g in proj else model.omega(g)
        sg = None if g in inj else model.sigma(g)
        if (om is None and g not in proj) or (sg is None and g not in inj):
            return {"verdict": "not-applicable", "reason": f"no syzygy or cosyzygy for {g.label}"}
        if om is not None:
            omega_x.append(om[0])
        if sg is not None:
            sigma_x.append(sg[0])
    omega_mod = [a for a in _summands(omega_x) if a not in x]
    sigma_mod = [a for a in _summands(sigma_x) if a not in x]
    projective = [a for a in side.ind if is_projective_functor(side.functor(a))]
    injective = [a for a in side.ind if is_injective_functor(side.functor(a))]
    omega_level = []
    for c in xvee(model, x, n):
        if c in proj:
            continue
        om = model.omega(c)
        if om is not None:
            omega_level.append(om[0])
    omega_level_mod = [a for a in _summands(omega_level) if a not in x]
    containment = all(a in projective for a in omega_level_mod)
    abelian = all(a in x for a in xvee(model, x, n))
    result = {
        "omega_X": [a.label for a in omega_mod],
        "sigma_X": [a.label for a in sigma_mod],
        "projective": [a.label for a in projective],
        "injective": [a.label for a in injective],
        "omega_level_contained": containment,
        "abelian_case": abelian,
    }
    checks = [containment]
    if abelian:
        result["proj_equal"] = sorted(projective) == sorted(omega_mod)
        result["inj_equal"] = sorted(injective) == sorted(sigma_mod)
        checks += [result["proj_equal"], result["inj_equal"]]
    epi = [epi_witness(side, c) for c in side.ind]
    result["epi_witnesses"] = epi
    checks += [w["ok"] for w in epi]
    result["verdict"] = "pass" if all(checks) else "fail"
    return result


def epi_witness(side: FunctorSide, c: Indec) -> dict:
    """A triangle ``Y₀ -> Y -> C`` with ``Y₀ ∈ 𝒳₁^∨`` and ``[β]`` epic in D.

    Start from the first coresolution step ``C -a-> X₀ -b-> X₁``, cover
    ``X₀`` by the 𝔼-projective deflation ``p: P -> X₀``, take the cocone
    ``Y -> P`` of ``b p`` and factor ``p r`` through ``a``.  Epi-ness in D
    is certified by surjectivity of ``𝔽(β)`` at every base object, since 𝔽
    is faithful on D.
    """
    model, x = side.model, side.x
    table = dim_table(model, x, side.n + 1)
    tri = table.step.get(c)
    if tri is None:
        return {"object": c.label, "ok": True, "note": "C lies in X"}
    a, b = tri.x, tri.y
    X0 = tri.B
    parts = []
    for s in X0:
        om = model.omega(s)
        if om is None:
            return {"object": c.label, "ok": False, "note": f"no syzygy for {s.label}"}
        parts.append(om[1])
    ptri = direct_sum_triangles(model, parts) if parts else model.split_triangle(Obj.zero(), Obj.zero())
    p = ptri.y
    yt = model.cocone(b @ p)
    if yt is None:
        return {"object": c.label, "ok": False, "note": "no cocone of b p"}
    beta = left_completion(model, yt, tri, p, model.cat.identity(tri.C))
    if beta is None:
        return {"object": c.label, "ok": False, "note": "no morphism of triangles"}
    t0 = model.cocone(beta)
    if t0 is None:
        return {"object": c.label, "ok": False, "note": "beta is not a deflation"}
    Y0 = t0.A
    y0_ok = table.dim_of(Y0) is not None and table.dim_of(Y0) <= 1
    Fb = side.on_morphism(beta)
    epic = all(rank(Fb[z]) == Fb[z].rows for z in side.base.objects if Fb[z].rows)
    return {"object": c.label, "Y": yt.A.label, "Y0": Y0.label, "Y0_in_X1": y0_ok, "epic": epic, "ok": y0_ok and epic}


def left_completion(model: ExtriModel, t1: ETriangle, t2: ETriangle, b: Morphism, c: Morphism) -> Morphism | None:
    """``α: A₁ -> A₂`` with ``x₂ α = b x₁`` and ``α·δ₁ = δ₂·c``.

    Given the middle and right components, this completes a morphism of
    𝔼-triangles on the left; both conditions are linear in α.
    """
    cat = model.cat
    A1, A2 = t1.A, t2.A
    basis = cat.hom_basis(A1, A2)
    rhs1 = (b @ t1.x).flat()
    rhs2 = model.pull(t2.delta, c, A2)
    fld = model.field
    if not basis:
        ok = not any(rhs1) and not any(rhs2)
        return Morphism.zero(cat, A1, A2) if ok else None
    cols = []
    for h in basis:
        cols.append(tuple((t2.x @ h).flat()) + tuple(model.push(t1.delta, h, t1.C)))
    mat = Matrix.from_columns(cols, len(cols[0]), fld)
    sol = solve(mat, Matrix(mat.rows, 1, list(rhs1) + list(rhs2), fld))
    if sol is None:
        return None
    return Morphism.from_flat(cat, A1, A2, sol.col(0))
