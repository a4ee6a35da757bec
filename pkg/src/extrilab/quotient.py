"""Ideal quotients ``𝒴/[𝒳]`` of a model by the morphisms factoring through 𝒳.

``𝒴`` is an add-closed set of model objects (typically ``𝒳_{n+1}^∨`` or
``𝒳_{n+1}^∧``).  Hom spaces of the quotient are cached with projection and
section matrices; weak idempotent completeness and the Krull-Schmidt
structure are established by explicit witnesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

import sympy

from .algebra import Indec
from .exactlin import Matrix, Subspace, quotient_basis, rank, solve
from .extri import ETriangle, ExtriModel
from .homdim import Subcat, xvee, xwedge
from .lincat import (
    Morphism,
    Obj,
    QuotientCat,
    factor_after,
    factor_through,
    ideal_through,
    local_radical,
    merge,
    minimal_right_approximation,
    trace_form_radical,
)

__all__ = [
    "IdealSpan",
    "XQuotient",
    "build_quotient",
    "ideal_span",
    "quotient_hom",
    "factor_through_subcat",
    "split_retraction_witness",
    "verify_retraction_witness",
    "sample_retraction_pairs",
    "radical_and_local",
    "ks_structure",
    "ideal_absorption_check",
    "dimension_identity_check",
    "radical_containment_check",
]


@dataclass(frozen=True)
class IdealSpan:
    src: Obj
    dst: Obj
    subspace: Subspace

    @property
    def dim(self) -> int:
        return self.subspace.dim


def ideal_span(model: ExtriModel, x: Subcat, a: Obj, b: Obj) -> IdealSpan:
    """Morphisms ``a -> b`` factoring through ``add 𝒳``, in flat coordinates.

    The ideal is a sub-bimodule, so on direct sums it is the direct sum of
    the blockwise spans of composites through single generators.
    """
    cat = model.cat
    total = cat.hom_space_dim(a, b)
    vecs = []
    offset = 0
    for d in b:
        for s in a:
            n = cat.dim(s, d)
            for v in ideal_through(cat, x.generators, s, d).vectors():
                full = [cat.field.zero] * total
                full[offset : offset + n] = v
                vecs.append(full)
            offset += n
    return IdealSpan(a, b, Subspace.span(vecs, total, cat.field))


class XQuotient:
    """The quotient ``𝒴/[𝒳]`` on a chosen set of ambient indecomposables."""

    def __init__(self, model: ExtriModel, x: Subcat, objects: Sequence[Indec], side: str = "vee", n: int | None = None) -> None:
        self.model = model
        self.x = x
        self.side = side
        self.n = n
        self.objects = tuple(sorted(set(objects)))
        self.field = model.field
        gens = x.generators
        base = model.cat
        self.cat = QuotientCat(base, lambda a, b: ideal_through(base, gens, a, b))

    @property
    def ind(self) -> list[Indec]:
        """Indecomposables surviving in the quotient (by the set difference)."""
        return [o for o in self.objects if o not in self.x]

    def contains(self, obj: Obj) -> bool:
        return all(a in self.objects for a in obj)

    def hom_dim(self, a: Indec, b: Indec) -> int:
        return self.cat.dim(a, b)

    def ideal_dim(self, a: Indec, b: Indec) -> int:
        return self.cat.ideal(a, b).dim

    def project(self, f: Morphism) -> Morphism:
        return self.cat.project(f)

    def lift(self, f: Morphism) -> Morphism:
        return self.cat.lift(f)

    def table(self, objs: Sequence[Indec] | None = None) -> dict:
        objs = list(self.ind if objs is None else objs)
        return {
            "objects": [o.label for o in objs],
            "hom": [[self.hom_dim(a, b) for b in objs] for a in objs],
            "ideal": [[self.ideal_dim(a, b) for b in objs] for a in objs],
            "ambient": [[self.model.cat.dim(a, b) for b in objs] for a in objs],
        }


def build_quotient(model: ExtriModel, x: Subcat, n: int, side: str = "vee") -> XQuotient:
    """``𝒳_{n+1}^∨/[𝒳]`` (``side="vee"``) or ``𝒳_{n+1}^∧/[𝒳]`` (``side="wedge"``)."""
    if side == "vee":
        objs = xvee(model, x, n + 1)
    elif side == "wedge":
        objs = xwedge(model, x, n + 1)
    else:
        raise ValueError(f"unknown side {side!r}")
    return XQuotient(model, x, objs, side=side, n=n)


def quotient_hom(q: XQuotient, a: Indec, b: Indec) -> tuple[int, Matrix]:
    """Dimension of ``Hom_D(a, b)`` and the projection from ambient coordinates."""
    _, proj, _ = q.cat._quot(a, b)
    return proj.rows, proj


# ----------------------------------------------------------------------
# weak idempotent completeness


def factor_through_subcat(model: ExtriModel, x: Subcat, phi: Morphism) -> tuple[Obj, Morphism, Morphism] | None:
    """Write ``phi = t s`` with ``s: A -> X0``, ``t: X0 -> B``, ``X0 ∈ add 𝒳``.

    ``s`` collects a basis of every ``Hom(A, x)``; a morphism lies in the
    ideal exactly when it factors through this universal map.
    """
    cat = model.cat
    A = phi.src
    parts = []
    for g in x.generators:
        parts.extend(cat.hom_basis(A, Obj((g,))))
    if not parts:
        if phi.is_zero():
            return Obj.zero(), Morphism.zero(cat, A, Obj.zero()), Morphism.zero(cat, Obj.zero(), phi.dst)
        return None
    s = Morphism.column(cat, parts)
    t = factor_after(s, phi)
    if t is None:
        return None
    return s.dst, s, t


def _deflation_from(model: ExtriModel, x: Subcat, A: Obj) -> Morphism | None:
    """A deflation ``X1 -> A`` with ``X1 ∈ add 𝒳``: the minimal right approximation."""
    cat = model.cat
    if A.is_zero():
        return Morphism.zero(cat, Obj.zero(), A)
    parts = [minimal_right_approximation(cat, a, x.generators) for a in A]
    grid = [[parts[r] if r == c else None for c in range(len(A))] for r in range(len(A))]
    p = Morphism.assemble(cat, [m.src for m in parts], [Obj((a,)) for a in A], grid)
    if model.cocone(p) is None:
        return None
    return p


@dataclass
class RetractionWitness:
    X: Obj
    g0: Morphism
    triangle: ETriangle
    mu1: Morphism
    mu2: Morphism
    pi1: Morphism
    pi2: Morphism

    @property
    def K(self) -> Obj:
        return self.triangle.A

    def to_json(self) -> dict:
        return {
            "X": self.X.label,
            "K": self.K.label,
            "g0": self.g0.to_json(),
            "mu1": self.mu1.to_json(),
            "mu2": self.mu2.to_json(),
            "pi1": self.pi1.to_json(),
            "pi2": self.pi2.to_json(),
        }


def split_retraction_witness(q: XQuotient, f: Morphism, g: Morphism) -> RetractionWitness:
    """Splitting data ``K -> B⊕X -> A`` for ``[g][f] = [1_A]``.

    With ``gf - 1 = t s`` through ``X0`` and a deflation ``p: X1 -> A``,
    take ``X = X0 ⊕ X1``, ``g0 = (t p)`` and ``r = (-s; 0)``; then
    ``(g g0)(f; r) = 1`` and the cocone of ``(g g0)`` splits.
    """
    model = q.model
    cat = model.cat
    A, B = f.src, f.dst
    if g.src != B or g.dst != A:
        raise ValueError("f and g are not composable back to A")
    phi = (g @ f) - cat.identity(A)
    fac = factor_through_subcat(model, q.x, phi)
    if fac is None:
        raise ValueError("[g][f] != [1_A] in the quotient")
    X0, s, t = fac
    p = _deflation_from(model, q.x, A)
    if p is None:
        raise ValueError(f"no deflation from add X onto {A.label}")
    X1 = p.src
    g0 = Morphism.row(cat, [t, p])
    X = g0.src
    r = Morphism.column(cat, [-s, Morphism.zero(cat, A, X1)])
    pi2 = Morphism.row(cat, [g, g0])
    mu2 = Morphism.column(cat, [f, r])
    tri = model.cocone(pi2)
    if tri is None:
        raise ValueError("(g g0) is not a deflation")
    mu1 = tri.x
    e = cat.identity(pi2.src) - mu2 @ pi2
    pi1 = factor_through(mu1, e)
    if pi1 is None:
        raise ArithmeticError("the cocone does not split")
    w = RetractionWitness(X, g0, tri, mu1, mu2, pi1, pi2)
    check = verify_retraction_witness(q, f, g, w)
    if not check["ok"]:
        raise ArithmeticError(f"splitting witness failed: {check['failed']}")
    return w


def verify_retraction_witness(q: XQuotient, f: Morphism, g: Morphism, w: RetractionWitness) -> dict:
    """Re-check all splitting identities from the witness alone."""
    cat = q.model.cat
    K, A = w.K, f.src
    E = w.pi2.src
    checks = {
        "X_in_subcat": q.x.contains(w.X),
        "pi2_is_(g g0)": w.pi2 == Morphism.row(cat, [g, w.g0]),
        "pi2_mu2": (w.pi2 @ w.mu2) == cat.identity(A),
        "pi1_mu1": (w.pi1 @ w.mu1) == cat.identity(K),
        "pi1_mu2": (w.pi1 @ w.mu2).is_zero(),
        "pi2_mu1": (w.pi2 @ w.mu1).is_zero(),
        "sum": (w.mu1 @ w.pi1 + w.mu2 @ w.pi2) == cat.identity(E),
        "mu2_top": w.mu2.restrict(range(len(A)), merge(f.dst, w.X)[1][0]) == f,
        "K_in_Y": q.contains(q.model.normalize(K)),
    }
    failed = [k for k, v in checks.items() if not v]
    return {"ok": not failed, "failed": failed}


def sample_retraction_pairs(q: XQuotient, count: int, seed: int = 0, max_summands: int = 2) -> list[tuple[Morphism, Morphism]]:
    """Pairs ``(f, g)`` with ``[g][f] = [1]``: perturbed split inclusions and projections."""
    model = q.model
    cat = model.cat
    rng = random.Random(seed)
    objs = list(q.objects)
    f_ = model.field

    def rand_in(sub: Subspace) -> tuple:
        v = [f_.zero] * sub.ambient_dim
        for b in sub.vectors():
            c = f_(rng.randint(-2, 2))
            v = [p + c * bb for p, bb in zip(v, b)]
        return tuple(v)

    def rand_ideal(a: Obj, b: Obj) -> Morphism:
        return Morphism.from_flat(cat, a, b, rand_in(ideal_span(model, q.x, a, b).subspace))

    def rand_any(a: Obj, b: Obj) -> Morphism:
        return Morphism.from_flat(cat, a, b, tuple(f_(rng.randint(-2, 2)) for _ in range(cat.hom_space_dim(a, b))))

    out = []
    while len(out) < count:
        A = Obj.from_iter(rng.choice(objs) for _ in range(rng.randint(1, max_summands)))
        Y = Obj.from_iter(rng.choice(objs) for _ in range(rng.randint(0, max_summands)))
        one = cat.identity(A)
        u = rand_any(A, Y) if len(Y) else Morphism.zero(cat, A, Y)
        w = rand_ideal(Y, A) if len(Y) else Morphism.zero(cat, Y, A)
        if rng.random() < 0.5 and len(Y):
            u, w = rand_ideal(A, Y), rand_any(Y, A)
        f = Morphism.column(cat, [one + rand_ideal(A, A), u])
        g = Morphism.row(cat, [one + rand_ideal(A, A), w])
        out.append((f, g))
    return out


# ----------------------------------------------------------------------
# endomorphism rings


def _min_poly(m: Matrix) -> list:
    """Coefficients (constant first, monic) of the minimal polynomial of ``m``."""
    n = m.rows
    field = m.field
    powers = [Matrix.identity(n, field)]
    while True:
        cur = powers[-1] @ m
        cols = [p.entries for p in powers]
        a = Matrix.from_columns(cols, n * n, field)
        sol = solve(a, Matrix(n * n, 1, list(cur.entries), field))
        if sol is not None:
            return [-c for c in sol.col(0)] + [field.one]
        powers.append(cur)


def _has_reducible_min_poly(mats: list[Matrix]) -> bool:
    x = sympy.Symbol("x")
    for m in mats:
        coeffs = _min_poly(m)
        if len(coeffs) <= 2:
            continue
        poly = sympy.Poly(list(reversed([sympy.Rational(c.numerator, c.denominator) for c in coeffs])), x)
        _, factors = sympy.factor_list(poly.as_expr(), x)
        if len(factors) > 1 or any(e > 1 for _, e in factors):
            return True
    return False


def _eigenvalues(m: Matrix, fld) -> list:
    """Eigenvalues of ``m`` in the prime field, by exhaustive rank tests."""
    n = m.rows
    ident = Matrix.identity(n, fld)
    return [fld(c) for c in range(fld.characteristic) if rank(m - ident.scale(fld(c))) < n]


def _split_local_prime(cat, y: Obj, d: int) -> dict:
    """Split-locality over F_p without a trace form.

    Each basis element ``x`` must act with a single eigenvalue ``λ_x``; then
    ``J = span(x - λ_x 1)`` is tested to be a codimension-one nilpotent
    two-sided ideal, which makes ``End = k 1 ⊕ J`` split local.  Two distinct
    eigenvalues give a nontrivial idempotent, so the ring is not local.
    """
    fld = cat.field
    rec = {"object": y.label, "dim": d}
    if fld.characteristic > 1000:
        return {**rec, "rad": None, "is_local": "unknown"}
    one = cat.identity(y).flat()
    basis = [tuple(fld.one if i == k else fld.zero for i in range(d)) for k in range(d)]
    gens = []
    for v in basis:
        left = cat.post_matrix(Morphism.from_flat(cat, y, y, v), y)
        lams = _eigenvalues(left, fld)
        if len(lams) > 1:
            return {**rec, "rad": None, "is_local": False}
        if not lams:
            return {**rec, "rad": None, "is_local": "unknown"}
        gens.append(tuple(a - lams[0] * b for a, b in zip(v, one)))
    J = Subspace.span(gens, d, fld)
    if J.dim != d - 1 or J.contains(one):
        return {**rec, "rad": J.dim, "is_local": "unknown"}
    mults = [Morphism.from_flat(cat, y, y, v) for v in basis]
    for e in mults:
        for side in (cat.post_matrix(e, y), cat.pre_matrix(e, y)):
            if not all(J.contains(side.apply(j)) for j in J.vectors()):
                return {**rec, "rad": J.dim, "is_local": "unknown"}
    power = J
    for _ in range(d + 1):
        if power.dim == 0:
            return {**rec, "rad": J.dim, "is_local": True}
        prods = [cat.post_matrix(Morphism.from_flat(cat, y, y, j), y).apply(w) for j in J.vectors() for w in power.vectors()]
        power = Subspace.span(prods, d, fld)
    return {**rec, "rad": J.dim, "is_local": "unknown"}


def radical_and_local(q: XQuotient, y: Obj | Indec) -> dict:
    """Radical dimension of ``End_D(y)`` and whether it is (split-)local.

    ``is_local`` is ``True`` when ``End/rad`` is one-dimensional, ``False``
    for the zero ring or when some element of ``End/rad`` has a reducible
    minimal polynomial (a zero divisor or a nontrivial idempotent), and
    ``"unknown"`` otherwise.  Over a prime field a trace-free route is used.
    """
    y = y if isinstance(y, Obj) else Obj((y,))
    cat = q.cat
    d = cat.hom_space_dim(y, y)
    if d == 0:
        return {"object": y.label, "dim": 0, "rad": 0, "is_local": False}
    if q.field.characteristic != 0:
        return _split_local_prime(cat, y, d)
    rad = trace_form_radical(cat, y)
    top = d - rad.dim
    if top == 1:
        return {"object": y.label, "dim": d, "rad": rad.dim, "is_local": True}
    # left multiplication on End/rad
    proj, sect = quotient_basis(d, rad)
    mats = []
    for k in range(top):
        e = Morphism.from_flat(cat, y, y, sect.col(k))
        left = cat.post_matrix(e, y)
        mats.append(proj @ left @ sect)
    verdict = False if _has_reducible_min_poly(mats) else "unknown"
    return {"object": y.label, "dim": d, "rad": rad.dim, "is_local": verdict}


def ks_structure(q: XQuotient) -> dict:
    """``ind(D) = ind(𝒴) - 𝒳`` with every survivor split-local and the rest killed."""
    survivors = q.ind
    records = [radical_and_local(q, a) for a in survivors]
    killed = [a for a in q.objects if a in q.x]
    killed_ok = all(q.hom_dim(a, a) == 0 for a in killed)
    local_ok = all(r["is_local"] is True for r in records)
    return {
        "ind": [a.label for a in survivors],
        "killed": [a.label for a in killed],
        "killed_zero": killed_ok,
        "local": records,
        "ok": killed_ok and local_ok,
    }


def ideal_absorption_check(q: XQuotient, samples: int = 50, seed: int = 0) -> dict:
    """``g ∈ [𝒳]`` implies ``g f`` and ``h g`` in ``[𝒳]`` on sampled triples."""
    model = q.model
    cat = model.cat
    rng = random.Random(seed)
    objs = list(q.objects)
    failures = 0
    checked = 0
    for _ in range(samples):
        a, b, c = (rng.choice(objs) for _ in range(3))
        A, B, C = Obj((a,)), Obj((b,)), Obj((c,))
        sub = q.cat.ideal(b, c)
        if sub.dim == 0:
            continue
        v = [model.field.zero] * sub.ambient_dim
        for vec in sub.vectors():
            k = model.field(rng.randint(-3, 3))
            v = [p + k * t for p, t in zip(v, vec)]
        g = Morphism.from_flat(cat, B, C, v)
        f = Morphism.from_flat(cat, A, B, tuple(model.field(rng.randint(-3, 3)) for _ in range(cat.dim(a, b))))
        h = Morphism.from_flat(cat, C, A, tuple(model.field(rng.randint(-3, 3)) for _ in range(cat.dim(c, a))))
        checked += 1
        if not q.cat.in_ideal(g @ f) or not q.cat.in_ideal(h @ g):
            failures += 1
    return {"checked": checked, "failures": failures, "ok": failures == 0}


def dimension_identity_check(q: XQuotient) -> dict:
    """``dim Hom_D + dim [𝒳] = dim Hom`` on all pairs of 𝒴."""
    bad = []
    for a in q.objects:
        for b in q.objects:
            if q.hom_dim(a, b) + q.ideal_dim(a, b) != q.model.cat.dim(a, b):
                bad.append((a.label, b.label))
    return {"pairs": len(q.objects) ** 2, "failures": bad, "ok": not bad}


def radical_containment_check(q: XQuotient) -> dict:
    """For local ``Y ∉ 𝒳``: ``[𝒳](Y, Y) ⊆ rad End(Y)``; for ``Y ∈ 𝒳`` the identity is in the ideal."""
    out = []
    for a in q.objects:
        ideal = q.cat.ideal(a, a)
        rad = local_radical(q.model.cat, a)
        inside = rad.contains_subspace(ideal)
        out.append({"object": a.label, "in_X": a in q.x, "ideal_in_radical": inside})
    ok = all(r["ideal_in_radical"] != r["in_X"] for r in out)
    return {"rows": out, "ok": ok}

