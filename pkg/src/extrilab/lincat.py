"""Hom-finite additive categories presented by their indecomposables.

An object is a sorted multiset of indecomposables (:class:`Obj`).  A
category (:class:`LinCat`) only needs to supply, for indecomposables
``a, b, c``, the dimension of ``Hom(a, b)``, the coordinates of identities
and the composition tensor ``Hom(a, b) x Hom(b, c) -> Hom(a, c)`` in fixed
bases.  Morphisms between direct sums are block matrices of coordinate
vectors, and all linear questions (factorization, sections, kernels of
induced maps) reduce to :mod:`extrilab.exactlin`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from .exactlin import (
    Field,
    Matrix,
    Subspace,
    kernel_basis,
    quotient_basis,
    rank,
    solve,
)

__all__ = [
    "Obj",
    "merge",
    "LinCat",
    "Morphism",
    "QuotientCat",
    "ideal_through",
    "local_radical",
    "minimal_left_approximation",
    "minimal_right_approximation",
]


@dataclass(frozen=True)
class Obj:
    """A direct sum of indecomposables in canonical (sorted) order."""

    summands: tuple

    @classmethod
    def of(cls, *indecs) -> Obj:
        return cls(tuple(sorted(indecs)))

    @classmethod
    def from_iter(cls, indecs: Iterable) -> Obj:
        return cls(tuple(sorted(indecs)))

    @classmethod
    def zero(cls) -> Obj:
        return cls(())

    def __iter__(self):
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __getitem__(self, i: int):
        return self.summands[i]

    def __add__(self, other: Obj) -> Obj:
        return Obj(tuple(sorted(self.summands + other.summands)))

    def is_zero(self) -> bool:
        return not self.summands

    def multiplicity(self, indec) -> int:
        return self.summands.count(indec)

    def distinct(self) -> tuple:
        return tuple(sorted(set(self.summands)))

    def without(self, drop: Callable[[object], bool]) -> Obj:
        return Obj(tuple(s for s in self.summands if not drop(s)))

    @property
    def label(self) -> str:
        if not self.summands:
            return "0"
        return "+".join(s.label for s in self.summands)

    def __repr__(self) -> str:
        return f"Obj({self.label})"


def merge(*objs: Obj) -> tuple[Obj, list[list[int]]]:
    """Direct sum of ``objs`` with the positions of each piece in the result.

    Equal summands keep their relative order, with earlier pieces first.
    """
    tagged = []
    for k, o in enumerate(objs):
        for i, s in enumerate(o.summands):
            tagged.append((s, k, i))
    tagged.sort(key=lambda t: (t[0], t[1], t[2]))
    positions = [[0] * len(o) for o in objs]
    for pos, (_, k, i) in enumerate(tagged):
        positions[k][i] = pos
    return Obj(tuple(t[0] for t in tagged)), positions


class LinCat:
    """Base class for a hom-finite linear category on indecomposables."""

    field: Field

    def hom_dim(self, a: Hashable, b: Hashable) -> int:
        raise NotImplementedError

    def _identity(self, a: Hashable) -> tuple:
        raise NotImplementedError

    def _comp(self, a: Hashable, b: Hashable, c: Hashable) -> list:
        """``T[p][q]`` = coordinates of ``g_q o f_p`` in ``Hom(a, c)``."""
        raise NotImplementedError

    # caching wrappers

    @cached_property
    def _comp_cache(self) -> dict:
        return {}

    @cached_property
    def _id_cache(self) -> dict:
        return {}

    @cached_property
    def _dim_cache(self) -> dict:
        return {}

    def dim(self, a: Hashable, b: Hashable) -> int:
        key = (a, b)
        d = self._dim_cache.get(key)
        if d is None:
            d = self.hom_dim(a, b)
            self._dim_cache[key] = d
        return d

    def comp(self, a: Hashable, b: Hashable, c: Hashable) -> list:
        key = (a, b, c)
        t = self._comp_cache.get(key)
        if t is None:
            if self.dim(a, b) == 0 or self.dim(b, c) == 0:
                t = []
            else:
                t = self._comp(a, b, c)
            self._comp_cache[key] = t
        return t

    def identity_coords(self, a: Hashable) -> tuple:
        t = self._id_cache.get(a)
        if t is None:
            t = tuple(self._identity(a))
            self._id_cache[a] = t
        return t

    def compose_coords(self, a, b, c, g: Sequence, f: Sequence) -> tuple:
        """Coordinates of ``g o f`` for f in Hom(a, b), g in Hom(b, c)."""
        zero = self.field.zero
        dac = self.dim(a, c)
        out = [zero] * dac
        if dac == 0:
            return tuple(out)
        fnz = [(p, v) for p, v in enumerate(f) if v]
        gnz = [(q, w) for q, w in enumerate(g) if w]
        if not fnz or not gnz:
            return tuple(out)
        t = self.comp(a, b, c)
        for p, v in fnz:
            tp = t[p]
            for q, w in gnz:
                vw = v * w
                for k, x in enumerate(tp[q]):
                    if x:
                        out[k] = out[k] + vw * x
        return tuple(out)

    # object-level helpers

    def hom_space_dim(self, src: Obj, dst: Obj) -> int:
        return sum(self.dim(s, d) for d in dst for s in src)

    def layout(self, src: Obj, dst: Obj) -> list[list[tuple[int, int]]]:
        """Offsets ``(start, length)`` of block ``(j, i)`` in the flat vector."""
        out = []
        pos = 0
        for d in dst:
            row = []
            for s in src:
                n = self.dim(s, d)
                row.append((pos, n))
                pos += n
            out.append(row)
        return out

    def identity(self, obj: Obj) -> Morphism:
        return Morphism.identity(self, obj)

    def zero(self, src: Obj, dst: Obj) -> Morphism:
        return Morphism.zero(self, src, dst)

    def hom_basis(self, src: Obj, dst: Obj) -> list[Morphism]:
        n = self.hom_space_dim(src, dst)
        out = []
        for k in range(n):
            v = [self.field.zero] * n
            v[k] = self.field.one
            out.append(Morphism.from_flat(self, src, dst, v))
        return out

    def post_matrix(self, g: Morphism, src: Obj) -> Matrix:
        """Matrix of ``Hom(src, g.src) -> Hom(src, g.dst)``, h -> g o h."""
        return _induced_matrix(self, g, src, post=True)

    def pre_matrix(self, f: Morphism, dst: Obj) -> Matrix:
        """Matrix of ``Hom(f.dst, dst) -> Hom(f.src, dst)``, h -> h o f."""
        return _induced_matrix(self, f, dst, post=False)

    def is_iso(self, f: Morphism) -> bool:
        if f.src == f.dst and len(f.src) == 0:
            return True
        n1 = self.hom_space_dim(f.dst, f.src)
        if n1 == 0:
            return False
        a = self.post_matrix(f, f.dst)  # Hom(dst, src) -> Hom(dst, dst)
        target = Matrix(a.rows, 1, list(self.identity(f.dst).flat()), self.field)
        sol = solve(a, target)
        if sol is None:
            return False
        g = Morphism.from_flat(self, f.dst, f.src, sol.col(0))
        return (g @ f) == self.identity(f.src)

    def inverse(self, f: Morphism) -> Morphism | None:
        a = self.post_matrix(f, f.dst)
        if a.rows == 0 and a.cols == 0:
            return Morphism.zero(self, f.dst, f.src) if not f.src.summands and not f.dst.summands else None
        target = Matrix(a.rows, 1, list(self.identity(f.dst).flat()), self.field)
        sol = solve(a, target)
        if sol is None:
            return None
        g = Morphism.from_flat(self, f.dst, f.src, sol.col(0))
        if (g @ f) != self.identity(f.src):
            return None
        return g


def _induced_matrix(cat: LinCat, m: Morphism, other: Obj, post: bool) -> Matrix:
    zero = cat.field.zero
    if post:
        src_obj, mid_obj, dst_obj = other, m.src, m.dst
        dom_layout = cat.layout(other, m.src)
        cod_layout = cat.layout(other, m.dst)
    else:
        src_obj, mid_obj, dst_obj = m.src, m.dst, other
        dom_layout = cat.layout(m.dst, other)
        cod_layout = cat.layout(m.src, other)
    ndom = sum(n for row in dom_layout for _, n in row)
    ncod = sum(n for row in cod_layout for _, n in row)
    cols = [[zero] * ncod for _ in range(ndom)]
    if post:
        # h in block (i -> k) of Hom(other, m.src); g_{jk} o h lands in block (i -> j)
        for k, mk in enumerate(mid_obj):
            for i, si in enumerate(src_obj):
                start, n = dom_layout[k][i]
                if n == 0:
                    continue
                for j, dj in enumerate(dst_obj):
                    g = m.blocks[j][k]
                    if not any(g):
                        continue
                    cstart, cn = cod_layout[j][i]
                    if cn == 0:
                        continue
                    t = cat.comp(si, mk, dj)
                    gnz = [(q, w) for q, w in enumerate(g) if w]
                    for p in range(n):
                        col = cols[start + p]
                        tp = t[p]
                        for q, w in gnz:
                            for r, x in enumerate(tp[q]):
                                if x:
                                    col[cstart + r] = col[cstart + r] + w * x
    else:
        # h in block (k -> j) of Hom(m.dst, other); h o f_{ki} lands in block (i -> j)
        for j, dj in enumerate(dst_obj):
            for k, mk in enumerate(mid_obj):
                start, n = dom_layout[j][k]
                if n == 0:
                    continue
                for i, si in enumerate(src_obj):
                    f = m.blocks[k][i]
                    if not any(f):
                        continue
                    cstart, cn = cod_layout[j][i]
                    if cn == 0:
                        continue
                    t = cat.comp(si, mk, dj)
                    fnz = [(p, v) for p, v in enumerate(f) if v]
                    for q in range(n):
                        col = cols[start + q]
                        for p, v in fnz:
                            for r, x in enumerate(t[p][q]):
                                if x:
                                    col[cstart + r] = col[cstart + r] + v * x
    return Matrix.from_columns(cols, ncod, cat.field)


class Morphism:
    """A morphism between direct sums, stored as coordinate blocks.

    ``blocks[j][i]`` holds the coordinates of the component
    ``src[i] -> dst[j]`` in the category's basis of that hom space.
    """

    __slots__ = ("cat", "src", "dst", "blocks")

    def __init__(self, cat: LinCat, src: Obj, dst: Obj, blocks) -> None:
        self.cat = cat
        self.src = src
        self.dst = dst
        self.blocks = tuple(tuple(tuple(b) for b in row) for row in blocks)

    # constructors

    @classmethod
    def zero(cls, cat: LinCat, src: Obj, dst: Obj) -> Morphism:
        z = cat.field.zero
        return cls(cat, src, dst, [[(z,) * cat.dim(s, d) for s in src] for d in dst])

    @classmethod
    def identity(cls, cat: LinCat, obj: Obj) -> Morphism:
        z = cat.field.zero
        blocks = []
        for j, d in enumerate(obj):
            row = []
            for i, s in enumerate(obj):
                row.append(cat.identity_coords(s) if i == j else (z,) * cat.dim(s, d))
            blocks.append(row)
        return cls(cat, obj, obj, blocks)

    @classmethod
    def from_flat(cls, cat: LinCat, src: Obj, dst: Obj, vec: Sequence) -> Morphism:
        blocks = []
        pos = 0
        for d in dst:
            row = []
            for s in src:
                n = cat.dim(s, d)
                row.append(tuple(vec[pos : pos + n]))
                pos += n
            blocks.append(row)
        if pos != len(vec):
            raise ValueError("flat vector has the wrong length")
        return cls(cat, src, dst, blocks)

    @classmethod
    def indec(cls, cat: LinCat, a, b, coords: Sequence) -> Morphism:
        return cls(cat, Obj((a,)), Obj((b,)), [[tuple(coords)]])

    @classmethod
    def assemble(cls, cat: LinCat, srcs: Sequence[Obj], dsts: Sequence[Obj], grid) -> Morphism:
        """Block matrix ``grid[r][c]: srcs[c] -> dsts[r]`` as one morphism.

        Entries of ``grid`` may be None for zero blocks.
        """
        src, spos = merge(*srcs)
        dst, dpos = merge(*dsts)
        z = cat.field.zero
        blocks = [[(z,) * cat.dim(s, d) for s in src] for d in dst]
        for r, row in enumerate(grid):
            for c, m in enumerate(row):
                if m is None:
                    continue
                if m.src != srcs[c] or m.dst != dsts[r]:
                    raise ValueError("block shape does not match")
                for jj, j in enumerate(dpos[r]):
                    for ii, i in enumerate(spos[c]):
                        blocks[j][i] = m.blocks[jj][ii]
        return cls(cat, src, dst, blocks)

    @classmethod
    def row(cls, cat: LinCat, parts: Sequence[Morphism]) -> Morphism:
        """``(f_1 f_2 ...)``: the sum of sources to a common target."""
        dst = parts[0].dst
        return cls.assemble(cat, [p.src for p in parts], [dst], [list(parts)])

    @classmethod
    def column(cls, cat: LinCat, parts: Sequence[Morphism]) -> Morphism:
        """``(f_1; f_2; ...)``: a common source to the sum of targets."""
        src = parts[0].src
        return cls.assemble(cat, [src], [p.dst for p in parts], [[p] for p in parts])

    @classmethod
    def diag(cls, cat: LinCat, parts: Sequence[Morphism]) -> Morphism:
        n = len(parts)
        grid = [[parts[r] if r == c else None for c in range(n)] for r in range(n)]
        return cls.assemble(cat, [p.src for p in parts], [p.dst for p in parts], grid)

    @classmethod
    def inclusion(cls, cat: LinCat, pieces: Sequence[Obj], k: int) -> Morphism:
        """Inclusion of ``pieces[k]`` into the direct sum of ``pieces``."""
        grid = [[cat.identity(pieces[k]) if r == k else None] for r in range(len(pieces))]
        return cls.assemble(cat, [pieces[k]], list(pieces), grid)

    @classmethod
    def projection(cls, cat: LinCat, pieces: Sequence[Obj], k: int) -> Morphism:
        grid = [[cat.identity(pieces[k]) if c == k else None for c in range(len(pieces))]]
        return cls.assemble(cat, list(pieces), [pieces[k]], grid)

    # algebra

    def flat(self) -> tuple:
        return tuple(v for row in self.blocks for b in row for v in b)

    def block(self, j: int, i: int) -> tuple:
        return self.blocks[j][i]

    def _check_same(self, other: Morphism) -> None:
        if self.src != other.src or self.dst != other.dst:
            raise ValueError(f"morphism shapes differ: {self} vs {other}")

    def __add__(self, other: Morphism) -> Morphism:
        self._check_same(other)
        return Morphism(
            self.cat,
            self.src,
            self.dst,
            [
                [tuple(x + y for x, y in zip(a, b)) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.blocks, other.blocks)
            ],
        )

    def __sub__(self, other: Morphism) -> Morphism:
        return self + (-other)

    def __neg__(self) -> Morphism:
        return Morphism(self.cat, self.src, self.dst, [[tuple(-x for x in b) for b in row] for row in self.blocks])

    def scale(self, c) -> Morphism:
        return Morphism(self.cat, self.src, self.dst, [[tuple(c * x for x in b) for b in row] for row in self.blocks])

    def __matmul__(self, other: Morphism) -> Morphism:
        """Composition ``self o other``."""
        if other.dst != self.src:
            raise ValueError(f"cannot compose {self} after {other}")
        cat = self.cat
        z = cat.field.zero
        blocks = []
        for j, d in enumerate(self.dst):
            row = []
            for i, s in enumerate(other.src):
                acc = [z] * cat.dim(s, d)
                if acc:
                    for k, mk in enumerate(self.src):
                        g = self.blocks[j][k]
                        f = other.blocks[k][i]
                        if any(g) and any(f):
                            c = cat.compose_coords(s, mk, d, g, f)
                            acc = [x + y for x, y in zip(acc, c)]
                row.append(tuple(acc))
            blocks.append(row)
        return Morphism(cat, other.src, self.dst, blocks)

    def is_zero(self) -> bool:
        return not any(v for row in self.blocks for b in row for v in b)

    def restrict(self, src_idx: Sequence[int], dst_idx: Sequence[int]) -> Morphism:
        """Submatrix on the chosen summand positions."""
        return Morphism(
            self.cat,
            Obj(tuple(self.src[i] for i in src_idx)),
            Obj(tuple(self.dst[j] for j in dst_idx)),
            [[self.blocks[j][i] for i in src_idx] for j in dst_idx],
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.src == other.src
            and self.dst == other.dst
            and all(x == y for x, y in zip(self.flat(), other.flat()))
        )

    def __hash__(self) -> int:
        return hash((self.src, self.dst, tuple(str(v) for v in self.flat())))

    def __repr__(self) -> str:
        return f"Morphism({self.src.label} -> {self.dst.label}: {[str(v) for v in self.flat()]})"

    def to_json(self) -> dict:
        return {
            "src": [s.label for s in self.src],
            "dst": [d.label for d in self.dst],
            "coords": [str(v) for v in self.flat()],
        }


def solve_morphism(a: Matrix, target: Morphism, src: Obj, dst: Obj) -> Morphism | None:
    """Solve ``a x = target.flat()`` and wrap x as a morphism ``src -> dst``."""
    cat = target.cat
    sol = solve(a, Matrix(a.rows, 1, list(target.flat()), cat.field))
    if sol is None:
        return None
    return Morphism.from_flat(cat, src, dst, sol.col(0))


def factor_through(g: Morphism, h: Morphism) -> Morphism | None:
    """Find ``f`` with ``g o f = h`` (g: B -> C, h: A -> C), or None."""
    return solve_morphism(g.cat.post_matrix(g, h.src), h, h.src, g.src)


def factor_after(f: Morphism, h: Morphism) -> Morphism | None:
    """Find ``g`` with ``g o f = h`` (f: A -> B, h: A -> C), or None."""
    return solve_morphism(f.cat.pre_matrix(f, h.dst), h, f.dst, h.dst)


def ideal_through(cat: LinCat, gens: Sequence, a, b) -> Subspace:
    """Span of all composites ``a -> x -> b`` with ``x`` among ``gens``."""
    n = cat.dim(a, b)
    vecs = []
    if n:
        for x in gens:
            dax, dxb = cat.dim(a, x), cat.dim(x, b)
            if dax == 0 or dxb == 0:
                continue
            t = cat.comp(a, x, b)
            for p in range(dax):
                for q in range(dxb):
                    vecs.append(t[p][q])
    return Subspace.span(vecs, n, cat.field)


class QuotientCat(LinCat):
    """The quotient of ``base`` by an ideal given pairwise as subspaces."""

    def __init__(self, base: LinCat, ideal: Callable[[Hashable, Hashable], Subspace]) -> None:
        self.base = base
        self.field = base.field
        self._ideal = ideal
        self._q: dict = {}

    def ideal(self, a, b) -> Subspace:
        return self._quot(a, b)[0]

    def _quot(self, a, b):
        key = (a, b)
        q = self._q.get(key)
        if q is None:
            sub = self._ideal(a, b)
            proj, sect = quotient_basis(self.base.dim(a, b), sub)
            q = (sub, proj, sect)
            self._q[key] = q
        return q

    def hom_dim(self, a, b) -> int:
        _, proj, _ = self._quot(a, b)
        return proj.rows

    def project_coords(self, a, b, coords: Sequence) -> tuple:
        _, proj, _ = self._quot(a, b)
        return proj.apply(coords)

    def lift_coords(self, a, b, coords: Sequence) -> tuple:
        _, _, sect = self._quot(a, b)
        return sect.apply(coords)

    def _identity(self, a) -> tuple:
        return self.project_coords(a, a, self.base.identity_coords(a))

    def _comp(self, a, b, c) -> list:
        _, _, sab = self._quot(a, b)
        _, _, sbc = self._quot(b, c)
        _, pac, _ = self._quot(a, c)
        out = []
        for p in range(sab.cols):
            f = sab.col(p)
            row = []
            for q in range(sbc.cols):
                g = sbc.col(q)
                row.append(pac.apply(self.base.compose_coords(a, b, c, g, f)))
            out.append(row)
        return out

    def project(self, m: Morphism) -> Morphism:
        """Image of a base morphism in the quotient."""
        return Morphism(
            self,
            m.src,
            m.dst,
            [[self.project_coords(s, d, m.blocks[j][i]) for i, s in enumerate(m.src)] for j, d in enumerate(m.dst)],
        )

    def lift(self, m: Morphism) -> Morphism:
        """Canonical representative in the base category."""
        return Morphism(
            self.base,
            m.src,
            m.dst,
            [[self.lift_coords(s, d, m.blocks[j][i]) for i, s in enumerate(m.src)] for j, d in enumerate(m.dst)],
        )

    def in_ideal(self, m: Morphism) -> bool:
        """Whether a base morphism vanishes in the quotient."""
        return self.project(m).is_zero()


def endo_left_matrices(cat: LinCat, obj: Obj) -> list[Matrix]:
    """Left multiplication matrices of the basis of ``End(obj)``."""
    return [cat.post_matrix(e, obj) for e in cat.hom_basis(obj, obj)]


def trace_form_radical(cat: LinCat, obj: Obj) -> Subspace:
    """Jacobson radical of ``End(obj)`` as the kernel of the trace form.

    Valid in characteristic zero only.
    """
    if cat.field.characteristic != 0:
        raise ValueError("trace-form radical requires characteristic zero")
    ls = endo_left_matrices(cat, obj)
    d = len(ls)
    gram = Matrix(d, d, [(ls[i] @ ls[j]).trace() for i in range(d) for j in range(d)], cat.field)
    return kernel_basis(gram)


def local_radical(cat: LinCat, a) -> Subspace:
    """Radical of the local algebra ``End(a)`` for an indecomposable ``a``.

    In a split local algebra of dimension d the trace of left multiplication
    by x equals d times the residue of x, so the radical is the kernel of
    that functional.  Each kernel vector is checked to be nilpotent.
    """
    obj = Obj((a,))
    d = cat.dim(a, a)
    if d == 0:
        return Subspace.zero(0, cat.field)
    if cat.field.characteristic and d % cat.field.characteristic == 0:
        raise ValueError("residue functional undefined: characteristic divides dim End")
    ls = endo_left_matrices(cat, obj)
    functional = Matrix(1, d, [m.trace() for m in ls], cat.field)
    rad = kernel_basis(functional)
    for v in rad.vectors():
        m = Matrix.zeros(d, d, cat.field)
        for c, l in zip(v, ls):
            if c:
                m = m + l.scale(c)
        p = m
        for _ in range(d):
            p = p @ m
        if not p.is_zero():
            raise ValueError(f"End({a!r}) is not split local")
    return rad


def radical_morphisms(cat: LinCat, a, b) -> Subspace:
    """``rad(a, b)`` for indecomposables: everything unless ``a == b``."""
    if a != b:
        return Subspace.full(cat.dim(a, b), cat.field)
    return local_radical(cat, a)


def minimal_left_approximation(cat: LinCat, a, targets: Sequence) -> Morphism:
    """Minimal left ``add(targets)``-approximation of the indecomposable ``a``.

    For each target t the components are a basis of a complement of the
    maps ``a -> t`` that factor through a radical map ``t' -> t``.
    """
    targets = sorted(set(targets))
    comps = []
    for t in targets:
        n = cat.dim(a, t)
        if n == 0:
            continue
        vecs = []
        for t2 in targets:
            d1 = cat.dim(a, t2)
            if d1 == 0 or cat.dim(t2, t) == 0:
                continue
            rad = radical_morphisms(cat, t2, t)
            for r in rad.vectors():
                for p in range(d1):
                    e = [cat.field.zero] * d1
                    e[p] = cat.field.one
                    vecs.append(cat.compose_coords(a, t2, t, r, e))
        sub = Subspace.span(vecs, n, cat.field)
        _, sect = quotient_basis(n, sub)
        for k in range(sect.cols):
            comps.append(Morphism.indec(cat, a, t, sect.col(k)))
    if not comps:
        return Morphism.zero(cat, Obj((a,)), Obj.zero())
    return Morphism.column(cat, comps)


def minimal_right_approximation(cat: LinCat, a, sources: Sequence) -> Morphism:
    """Minimal right ``add(sources)``-approximation of the indecomposable ``a``."""
    sources = sorted(set(sources))
    comps = []
    for s in sources:
        n = cat.dim(s, a)
        if n == 0:
            continue
        vecs = []
        for s2 in sources:
            d1 = cat.dim(s2, a)
            if d1 == 0 or cat.dim(s, s2) == 0:
                continue
            rad = radical_morphisms(cat, s, s2)
            for r in rad.vectors():
                for p in range(d1):
                    e = [cat.field.zero] * d1
                    e[p] = cat.field.one
                    vecs.append(cat.compose_coords(s, s2, a, e, r))
        sub = Subspace.span(vecs, n, cat.field)
        _, sect = quotient_basis(n, sub)
        for k in range(sect.cols):
            comps.append(Morphism.indec(cat, s, a, sect.col(k)))
    if not comps:
        return Morphism.zero(cat, Obj.zero(), Obj((a,)))
    return Morphism.row(cat, comps)


def is_split_epi(g: Morphism) -> Morphism | None:
    """A section ``s`` with ``g o s = 1``, or None."""
    cat = g.cat
    return factor_through(g, cat.identity(g.dst))


def is_split_mono(f: Morphism) -> Morphism | None:
    """A retraction ``r`` with ``r o f = 1``, or None."""
    cat = f.cat
    return factor_after(f, cat.identity(f.src))


def hom_rank(cat: LinCat, m: Matrix) -> int:
    return rank(m)
