"""Nakayama algebras, their interval modules, and module homomorphisms.

Conventions.  Vertices are ``1..m``.  Arrows go ``i -> i-1`` (cyclically
for the self-injective shape, stopping at the sink ``1`` for the linear
shape).  The interval module ``M[t,l]`` has top ``S_t``, length ``l`` and
composition factors ``t, t-1, ..., t-l+1`` read from top to socle.  As a
representation it has basis ``e_0, ..., e_{l-1}`` with ``e_k`` at vertex
``t-k`` and the arrow action ``x e_k = e_{k+1}``.

Module homomorphisms are vertex-graded matrices ``F`` with ``F x = x' F``;
hom bases are computed by solving that intertwiner system exactly, and an
independent interval-overlap count serves as a cross-check.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

from .exactlin import QQ, Field, Matrix, Subspace, kernel_basis, quotient_basis, rank, solve
from .lincat import LinCat, Morphism, Obj

__all__ = [
    "Indec",
    "NakayamaAlgebra",
    "Rep",
    "ModCat",
    "modcat",
    "hom_basis",
    "hom_dim_overlap",
    "compose",
    "syzygy",
    "cosyzygy",
    "ext_dim",
    "decompose",
    "parse_label",
]

_LABEL = re.compile(r"^\s*M\[\s*(\d+)\s*,\s*(\d+)\s*\]\s*$")


@total_ordering
@dataclass(frozen=True)
class Indec:
    """The interval module ``M[top, length]``."""

    top: int
    length: int

    @property
    def label(self) -> str:
        return f"M[{self.top},{self.length}]"

    def __lt__(self, other: Indec) -> bool:
        return (self.top, self.length) < (other.top, other.length)

    def __repr__(self) -> str:
        return self.label


def parse_label(label: str) -> Indec:
    m = _LABEL.match(label)
    if not m:
        raise ValueError(f"cannot parse module label {label!r}; expected M[t,l]")
    return Indec(int(m.group(1)), int(m.group(2)))


@dataclass(frozen=True)
class Rep:
    """A representation: vertex of each basis vector plus the arrow action."""

    verts: tuple[int, ...]
    x: Matrix

    @property
    def dim(self) -> int:
        return len(self.verts)

    @classmethod
    def direct_sum(cls, reps: list[Rep], field: Field) -> Rep:
        verts = tuple(v for r in reps for v in r.verts)
        return cls(verts, Matrix.block_diag([r.x for r in reps], field))


class NakayamaAlgebra:
    """A cyclic (self-injective) or linear Nakayama algebra ``kQ / rad^N``."""

    def __init__(self, shape: str, vertices: int, loewy: int, field: Field = QQ) -> None:
        if shape not in ("cyclic", "linear"):
            raise ValueError(f"shape must be 'cyclic' or 'linear', got {shape!r}")
        if vertices < 1 or loewy < 1:
            raise ValueError("vertices and Loewy length must be positive")
        self.shape = shape
        self.m = vertices
        self.N = loewy
        self.field = field
        self._reps: dict[Indec, Rep] = {}

    def __repr__(self) -> str:
        return f"NakayamaAlgebra({self.shape}, m={self.m}, N={self.N}, {self.field.name})"

    @property
    def self_injective(self) -> bool:
        return self.shape == "cyclic"

    def vertex(self, v: int) -> int:
        return (v - 1) % self.m + 1

    def max_length(self, top: int) -> int:
        return self.N if self.shape == "cyclic" else min(self.N, top)

    def is_valid(self, a: Indec) -> bool:
        return 1 <= a.top <= self.m and 1 <= a.length <= self.max_length(a.top)

    def normalize(self, top: int, length: int) -> Indec:
        a = Indec(self.vertex(top) if self.shape == "cyclic" else top, length)
        if not self.is_valid(a):
            raise ValueError(f"{a.label} is not a module over {self}")
        return a

    def indecomposables(self) -> list[Indec]:
        return [Indec(t, l) for t in range(1, self.m + 1) for l in range(1, self.max_length(t) + 1)]

    def socle(self, a: Indec) -> int:
        s = a.top - a.length + 1
        return self.vertex(s) if self.shape == "cyclic" else s

    def dim(self, a: Indec) -> int:
        return a.length

    # projectives and injectives

    def projective_cover(self, a: Indec) -> Indec:
        return Indec(a.top, self.max_length(a.top))

    def injective_length(self, socle: int) -> int:
        return self.N if self.shape == "cyclic" else min(self.N, self.m - socle + 1)

    def injective_envelope(self, a: Indec) -> Indec:
        s = self.socle(a)
        length = self.injective_length(s)
        top = s + length - 1
        return Indec(self.vertex(top) if self.shape == "cyclic" else top, length)

    def is_projective(self, a: Indec) -> bool:
        return a.length == self.max_length(a.top)

    def is_injective(self, a: Indec) -> bool:
        return a.length == self.injective_length(self.socle(a))

    def projectives(self) -> list[Indec]:
        return [a for a in self.indecomposables() if self.is_projective(a)]

    def injectives(self) -> list[Indec]:
        return [a for a in self.indecomposables() if self.is_injective(a)]

    def syzygy(self, a: Indec) -> Indec | None:
        """Kernel of the projective cover (None when ``a`` is projective)."""
        p = self.projective_cover(a)
        if p.length == a.length:
            return None
        return self.normalize(a.top - a.length, p.length - a.length)

    def cosyzygy(self, a: Indec) -> Indec | None:
        """Cokernel of the injective envelope (None when ``a`` is injective)."""
        i = self.injective_envelope(a)
        if i.length == a.length:
            return None
        return self.normalize(i.top, i.length - a.length)

    def tau(self, a: Indec) -> Indec | None:
        """Auslander-Reiten translate of a non-projective indecomposable."""
        if self.is_projective(a):
            return None
        if self.shape == "cyclic":
            return self.normalize(a.top - 1, a.length)
        b = Indec(a.top - 1, a.length)
        return b if self.is_valid(b) else None

    # representations

    def rep(self, a: Indec) -> Rep:
        r = self._reps.get(a)
        if r is None:
            if not self.is_valid(a):
                raise ValueError(f"{a.label} is not a module over {self}")
            n = a.length
            verts = tuple(self.vertex(a.top - k) for k in range(n))
            x = [[self.field.zero] * n for _ in range(n)]
            for k in range(n - 1):
                x[k + 1][k] = self.field.one
            r = Rep(verts, Matrix(n, n, [v for row in x for v in row], self.field))
            self._reps[a] = r
        return r

    def rep_of(self, obj: Obj) -> Rep:
        return Rep.direct_sum([self.rep(a) for a in obj], self.field)


def hom_dim_overlap(alg: NakayamaAlgebra, a: Indec, b: Indec) -> int:
    """Hom dimension by counting image lengths (interval-overlap oracle).

    A nonzero map ``M[t,l] -> M[t',l']`` has image of some length k which is
    both the length-k quotient of the source and the length-k submodule of
    the target, so it exists for each k <= min(l, l') with
    ``t = t' - l' + k`` as vertices.
    """
    count = 0
    for k in range(1, min(a.length, b.length) + 1):
        sub_top = b.top - b.length + k
        if alg.shape == "cyclic":
            if (a.top - sub_top) % alg.m == 0:
                count += 1
        elif a.top == sub_top:
            count += 1
    return count


@dataclass(frozen=True)
class _HomData:
    basis: tuple[Matrix, ...]
    unknowns: tuple[tuple[int, int], ...]
    pivots: tuple[int, ...]


def _hom_data(alg: NakayamaAlgebra, ra: Rep, rb: Rep) -> _HomData:
    field = alg.field
    unknowns = [(i, j) for i in range(rb.dim) for j in range(ra.dim) if rb.verts[i] == ra.verts[j]]
    index = {u: k for k, u in enumerate(unknowns)}
    eqs = []
    xa, xb = ra.x, rb.x
    for r in range(rb.dim):
        for s in range(ra.dim):
            row = [field.zero] * len(unknowns)
            nonzero = False
            # (F xa)[r][s] = sum_j F[r][j] xa[j][s]
            for j in range(ra.dim):
                c = xa[j, s]
                if c and (r, j) in index:
                    row[index[(r, j)]] += c
                    nonzero = True
            # (xb F)[r][s] = sum_i xb[r][i] F[i][s]
            for i in range(rb.dim):
                c = xb[r, i]
                if c and (i, s) in index:
                    row[index[(i, s)]] -= c
                    nonzero = True
            if nonzero:
                eqs.append(row)
    if eqs:
        ker = kernel_basis(Matrix(len(eqs), len(unknowns), [v for row in eqs for v in row], field))
    else:
        ker = Subspace.full(len(unknowns), field)
    basis = []
    for vec in ker.vectors():
        f = [[field.zero] * ra.dim for _ in range(rb.dim)]
        for k, (i, j) in enumerate(unknowns):
            f[i][j] = vec[k]
        basis.append(Matrix(rb.dim, ra.dim, [v for row in f for v in row], field))
    return _HomData(tuple(basis), tuple(unknowns), tuple(ker.pivots))


class ModCat(LinCat):
    """The module category of a Nakayama algebra on interval modules."""

    def __init__(self, alg: NakayamaAlgebra) -> None:
        self.alg = alg
        self.field = alg.field
        self._homs: dict[tuple[Indec, Indec], _HomData] = {}

    def hom_data(self, a: Indec, b: Indec) -> _HomData:
        key = (a, b)
        h = self._homs.get(key)
        if h is None:
            h = _hom_data(self.alg, self.alg.rep(a), self.alg.rep(b))
            self._homs[key] = h
        return h

    def hom_dim(self, a: Indec, b: Indec) -> int:
        return len(self.hom_data(a, b).basis)

    def coords(self, a: Indec, b: Indec, f: Matrix, check: bool = True) -> tuple:
        """Coordinates of an intertwiner in the fixed basis of ``Hom(a, b)``."""
        h = self.hom_data(a, b)
        c = tuple(f[h.unknowns[p]] for p in h.pivots)
        if check and self.matrix(a, b, c) != f:
            raise ValueError(f"matrix is not a homomorphism {a.label} -> {b.label}")
        return c

    def matrix(self, a: Indec, b: Indec, coords) -> Matrix:
        h = self.hom_data(a, b)
        m = Matrix.zeros(b.length, a.length, self.field)
        for c, bm in zip(coords, h.basis):
            if c:
                m = m + bm.scale(c)
        return m

    def _identity(self, a: Indec) -> tuple:
        return self.coords(a, a, Matrix.identity(a.length, self.field))

    def _comp(self, a: Indec, b: Indec, c: Indec) -> list:
        fb = self.hom_data(a, b).basis
        gb = self.hom_data(b, c).basis
        return [[self.coords(a, c, g @ f, check=False) for g in gb] for f in fb]

    # object-level conversion

    def to_matrix(self, f: Morphism) -> Matrix:
        """Total-space matrix of a morphism between direct sums."""
        rows = []
        src_sizes = [a.length for a in f.src]
        for j, d in enumerate(f.dst):
            blocks = [self.matrix(s, d, f.blocks[j][i]) for i, s in enumerate(f.src)]
            for r in range(d.length):
                row = []
                for blk in blocks:
                    row.extend(blk.row(r))
                rows.append(row)
        return Matrix(sum(a.length for a in f.dst), sum(src_sizes), [v for row in rows for v in row], self.field)

    def from_matrix(self, src: Obj, dst: Obj, m: Matrix) -> Morphism:
        """Morphism of direct sums from a total-space intertwiner."""
        soff = _offsets([a.length for a in src])
        doff = _offsets([b.length for b in dst])
        blocks = []
        for j, d in enumerate(dst):
            row = []
            for i, s in enumerate(src):
                sub = m.submatrix(range(doff[j], doff[j] + d.length), range(soff[i], soff[i] + s.length))
                row.append(self.coords(s, d, sub))
            blocks.append(row)
        return Morphism(self, src, dst, blocks)

    # canonical structure maps

    def _embed(self, a: Indec, b: Indec, shift: int) -> Morphism:
        """The map sending ``e_k`` to ``e_{k+shift}`` (zero past the end)."""
        m = [[self.field.zero] * a.length for _ in range(b.length)]
        for k in range(a.length):
            if 0 <= k + shift < b.length:
                m[k + shift][k] = self.field.one
        mat = Matrix(b.length, a.length, [v for row in m for v in row], self.field)
        return Morphism.indec(self, a, b, self.coords(a, b, mat))

    def cover(self, a: Indec) -> Morphism:
        """Projective cover ``P(a) -> a``."""
        return self._embed(self.alg.projective_cover(a), a, 0)

    def syzygy_inclusion(self, a: Indec) -> Morphism | None:
        """``Omega a -> P(a)``, or None when ``a`` is projective."""
        om = self.alg.syzygy(a)
        if om is None:
            return None
        return self._embed(om, self.alg.projective_cover(a), a.length)

    def envelope(self, a: Indec) -> Morphism:
        """Injective envelope ``a -> I(a)``."""
        i = self.alg.injective_envelope(a)
        return self._embed(a, i, i.length - a.length)

    def cosyzygy_projection(self, a: Indec) -> Morphism | None:
        """``I(a) -> Sigma a``, or None when ``a`` is injective."""
        sg = self.alg.cosyzygy(a)
        if sg is None:
            return None
        return self._embed(self.alg.injective_envelope(a), sg, 0)

    def projective_ideal(self, a: Indec, b: Indec) -> Subspace:
        """Maps ``a -> b`` factoring through a projective module."""
        from .lincat import ideal_through

        return ideal_through(self, self.alg.projectives(), a, b)


def _offsets(sizes: list[int]) -> list[int]:
    out, pos = [], 0
    for s in sizes:
        out.append(pos)
        pos += s
    return out


_MODCATS: dict[tuple, ModCat] = {}


def modcat(alg: NakayamaAlgebra) -> ModCat:
    key = (alg.shape, alg.m, alg.N, alg.field)
    c = _MODCATS.get(key)
    if c is None or c.alg is not alg:
        c = ModCat(alg)
        _MODCATS[key] = c
    return c


def hom_basis(alg: NakayamaAlgebra, a: Indec, b: Indec) -> list[Matrix]:
    """Basis of ``Hom(a, b)`` as intertwiner matrices."""
    return list(modcat(alg).hom_data(a, b).basis)


def compose(g: Matrix, f: Matrix) -> Matrix:
    return g @ f


def syzygy(alg: NakayamaAlgebra, a: Indec) -> Indec | None:
    return alg.syzygy(a)


def cosyzygy(alg: NakayamaAlgebra, a: Indec) -> Indec | None:
    return alg.cosyzygy(a)


def ext_dim(alg: NakayamaAlgebra, i: int, a: Indec, b: Indec) -> int:
    """``dim Ext^i(a, b)`` as cohomology of ``Hom(P_*, b)``.

    The minimal projective resolution has ``P_k = P(Omega^k a)`` with
    differential ``P_k -> Omega^k a -> P_{k-1}``.
    """
    if i < 0:
        raise ValueError("negative degree")
    cat = modcat(alg)
    # syzygies Omega^0 a, ..., Omega^{i+1} a
    syz: list[Indec | None] = [a]
    for _ in range(i + 1):
        prev = syz[-1]
        syz.append(None if prev is None else alg.syzygy(prev))
    terms = [None if s is None else alg.projective_cover(s) for s in syz]

    def differential(k: int) -> Morphism | None:
        # d_k : P_k -> P_{k-1}, k >= 1
        if terms[k] is None or terms[k - 1] is None:
            return None
        return cat.syzygy_inclusion(syz[k - 1]) @ cat.cover(syz[k])

    def hom_dim_term(k: int) -> int:
        return 0 if terms[k] is None else cat.dim(terms[k], b)

    def coboundary_rank(k: int) -> int:
        # d_k^* : Hom(P_{k-1}, b) -> Hom(P_k, b)
        if k == 0:
            return 0
        d = differential(k)
        if d is None:
            return 0
        return rank(cat.pre_matrix(d, Obj((b,))))

    cocycles = hom_dim_term(i) - coboundary_rank(i + 1)
    return cocycles - coboundary_rank(i)


# ---------------------------------------------------------------------------
# representations: kernels, cokernels and Krull-Schmidt decomposition


def cokernel(target: Rep, f: Matrix, field: Field) -> tuple[Rep, Matrix]:
    """Cokernel of a graded map into ``target``; returns (rep, projection)."""
    from .exactlin import image_basis

    img = image_basis(f) if f.cols else Subspace.zero(target.dim, field)
    proj, sect = quotient_basis(target.dim, img)
    free = [j for j in range(target.dim) if j not in set(img.pivots)]
    x = proj @ target.x @ sect
    return Rep(tuple(target.verts[j] for j in free), x), proj


def kernel(source: Rep, f: Matrix, field: Field) -> tuple[Rep, Matrix]:
    """Kernel of a graded map out of ``source``; returns (rep, inclusion)."""
    ker = kernel_basis(f)
    incl = Matrix.from_columns(ker.vectors(), source.dim, field) if ker.dim else Matrix.zeros(source.dim, 0, field)
    xk_cols = []
    for v in ker.vectors():
        w = source.x.apply(v)
        xk_cols.append(tuple(w[p] for p in ker.pivots))
    x = Matrix.from_columns(xk_cols, ker.dim, field) if ker.dim else Matrix.zeros(0, 0, field)
    return Rep(tuple(source.verts[p] for p in ker.pivots), x), incl


def decompose(alg: NakayamaAlgebra, rep: Rep) -> tuple[Obj, Matrix]:
    """Krull-Schmidt decomposition of a representation.

    Returns ``(obj, T)`` where the columns of ``T`` map the standard basis of
    ``obj`` isomorphically onto ``rep``: ``rep.x @ T == T @ std.x``.
    Uses graded Jordan chains: for each length k from the top down, chain
    heads are chosen as a complement of ``ker x^{k-1} + x ker x^{k+1}`` in
    ``ker x^k``, vertex by vertex.
    """
    field = alg.field
    n = rep.dim
    if n == 0:
        return Obj.zero(), Matrix.zeros(0, 0, field)
    powers = [Matrix.identity(n, field)]
    while not powers[-1].is_zero():
        powers.append(powers[-1] @ rep.x)
    top = len(powers) - 1  # x^top == 0
    by_vertex: dict[int, list[int]] = {}
    for i, v in enumerate(rep.verts):
        by_vertex.setdefault(v, []).append(i)

    def graded_kernel(k: int, v: int) -> list[tuple]:
        idx = by_vertex[v]
        if k >= len(powers):
            k = top
        sub = powers[k].submatrix(range(n), idx)
        ker = kernel_basis(sub)
        out = []
        for vec in ker.vectors():
            full = [field.zero] * n
            for c, i in zip(vec, idx):
                full[i] = c
            out.append(tuple(full))
        return out

    chains: list[tuple[Indec, list[tuple]]] = []
    for k in range(top, 0, -1):
        for v in sorted(by_vertex):
            kk = graded_kernel(k, v)
            if not kk:
                continue
            lower = graded_kernel(k - 1, v) if k > 1 else []
            prev = alg.vertex(v + 1) if alg.shape == "cyclic" else v + 1
            higher = []
            if prev in by_vertex:
                for w in graded_kernel(k + 1, prev):
                    higher.append(rep.x.apply(w))
            # existing chain vectors at this vertex of depth >= k also lie in lower+higher
            base = Subspace.span(lower + higher, n, field)
            for vec in kk:
                if base.contains(vec):
                    continue
                base = base + Subspace.span([vec], n, field)
                chain = [vec]
                for _ in range(k - 1):
                    chain.append(rep.x.apply(chain[-1]))
                chains.append((alg.normalize(v, k), chain))
    chains.sort(key=lambda c: c[0])
    obj = Obj(tuple(c[0] for c in chains))
    cols = [vec for _, chain in chains for vec in chain]
    if len(cols) != n:
        raise ArithmeticError("decomposition did not produce a basis")
    t = Matrix.from_columns(cols, n, field)
    if rank(t) != n:
        raise ArithmeticError("decomposition chains are dependent")
    return obj, t


def decompose_map_check(alg: NakayamaAlgebra, rep: Rep, obj: Obj, t: Matrix) -> bool:
    std = alg.rep_of(obj)
    return rep.x @ t == t @ std.x


def solve_matrix(a: Matrix, b: Matrix) -> Matrix | None:
    return solve(a, b)
