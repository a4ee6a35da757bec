"""Brute-force reference computations, independent of the engine.

Modules over a Nakayama algebra are built directly as graded vector spaces
with a nilpotent arrow action, and homomorphism spaces are sympy nullspaces
of the intertwining equations.  Nothing here imports engine arithmetic.
"""

from __future__ import annotations

from functools import lru_cache

import sympy


class Nakayama:
    """Vertices 1..m, arrows i -> i-1 (cyclic: 1 -> m), relations of length N."""

    def __init__(self, shape: str, m: int, N: int) -> None:
        self.shape, self.m, self.N = shape, m, N

    def wrap(self, v: int) -> int:
        return (v - 1) % self.m + 1

    def proj_length(self, t: int) -> int:
        return self.N if self.shape == "cyclic" else min(self.N, t)

    def modules(self) -> list[tuple[int, int]]:
        return [(t, l) for t in range(1, self.m + 1) for l in range(1, self.proj_length(t) + 1)]

    def projectives(self) -> list[tuple[int, int]]:
        return [(t, self.proj_length(t)) for t in range(1, self.m + 1)]

    def injectives(self) -> list[tuple[int, int]]:
        """``M[t,l]`` is injective iff it cannot be extended at the top."""
        out = []
        for t, l in self.modules():
            up = t + 1
            if self.shape == "linear" and up > self.m:
                out.append((t, l))
            elif l + 1 > self.proj_length(self.wrap(up)):
                out.append((t, l))
        return out

    def verts(self, a: tuple[int, int]) -> list[int]:
        t, l = a
        return [self.wrap(t - k) for k in range(l)]

    def arrow(self, a: tuple[int, int]) -> sympy.Matrix:
        l = a[1]
        x = sympy.zeros(l, l)
        for k in range(l - 1):
            x[k + 1, k] = 1
        return x

    def syzygy(self, c: tuple[int, int]) -> tuple[int, int] | None:
        t, l = c
        L = self.proj_length(t)
        if L == l:
            return None
        return (self.wrap(t - l), L - l)

    def cosyzygy(self, a: tuple[int, int]) -> tuple[int, int] | None:
        """Cokernel of the injective envelope; cyclic (self-injective) case only."""
        t, l = a
        if self.shape != "cyclic" or l == self.N:
            return None
        return (self.wrap(t - l + self.N), self.N - l)


@lru_cache(maxsize=None)
def hom_basis(alg: Nakayama, a: tuple, b: tuple) -> tuple:
    """Basis of Hom(a, b) as sympy matrices, from the intertwining equations."""
    va, vb = alg.verts(a), alg.verts(b)
    slots = [(i, j) for i in range(len(vb)) for j in range(len(va)) if vb[i] == va[j]]
    if not slots:
        return ()
    xa, xb = alg.arrow(a), alg.arrow(b)
    rows = []
    for i in range(len(vb)):
        for j in range(len(va)):
            row = []
            for (p, q) in slots:
                # (F xa - xb F)[i, j] as a linear form in F[p, q]
                c = (xa[q, j] if p == i else 0) - (xb[i, p] if q == j else 0)
                row.append(c)
            rows.append(row)
    null = sympy.Matrix(rows).nullspace()
    out = []
    for v in null:
        F = sympy.zeros(len(vb), len(va))
        for k, (p, q) in enumerate(slots):
            F[p, q] = v[k]
        out.append(F)
    return tuple(out)


def hom_dim(alg: Nakayama, a: tuple, b: tuple) -> int:
    return len(hom_basis(alg, a, b))


def _span_dim(mats: list) -> int:
    if not mats:
        return 0
    return sympy.Matrix([list(m) for m in mats]).rank()


def through_dim(alg: Nakayama, a: tuple, b: tuple, objs: list) -> int:
    """Dimension of the maps a -> b factoring through direct sums of ``objs``."""
    mats = [g * f for o in objs for f in hom_basis(alg, a, o) for g in hom_basis(alg, o, b)]
    return _span_dim(mats)


def quotient_hom_dim(alg: Nakayama, a: tuple, b: tuple, objs: list) -> int:
    return hom_dim(alg, a, b) - through_dim(alg, a, b, objs)


def stable_hom_dim(alg: Nakayama, a: tuple, b: tuple) -> int:
    return quotient_hom_dim(alg, a, b, alg.projectives())


def ext1_dim(alg: Nakayama, c: tuple, a: tuple) -> int:
    """Ext^1(c, a) = Hom(Ωc, a) modulo the maps extending to the projective cover."""
    om = alg.syzygy(c)
    if om is None:
        return 0
    P = (c[0], alg.proj_length(c[0]))
    shift = c[1]
    incl = sympy.zeros(P[1], om[1])
    for k in range(om[1]):
        incl[k + shift, k] = 1
    restricted = [g * incl for g in hom_basis(alg, P, a)]
    return hom_dim(alg, om, a) - _span_dim(restricted)


def ext_dim(alg: Nakayama, i: int, c: tuple, a: tuple) -> int:
    """Ext^i by dimension shifting along syzygies."""
    for _ in range(i - 1):
        c = alg.syzygy(c)
        if c is None:
            return 0
    return ext1_dim(alg, c, a)


def label(a: tuple) -> str:
    return f"M[{a[0]},{a[1]}]"
