"""Exact verification of extriangulated-category constructions.

Nakayama-algebra module categories, their stable categories and
extension-closed subcategories serve as concrete models.  On top of them
the package computes higher extension groups, (co)resolution dimensions,
quotients by rigid subcategories, finitely presented functors and the
category of conflations, all over exact rational (or prime-field) arithmetic.
"""

from __future__ import annotations

from .algebra import Indec, NakayamaAlgebra, parse_label
from .exactlin import GF, QQ, Field, Matrix, Subspace
from .extri import ETriangle, ExtriModel, build_model
from .homdim import Subcat, is_cluster_tilting, is_rigid, search_ct, xvee, xwedge
from .lincat import LinCat, Morphism, Obj, QuotientCat

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "Field",
    "QQ",
    "GF",
    "Matrix",
    "Subspace",
    "Obj",
    "Morphism",
    "LinCat",
    "QuotientCat",
    "Indec",
    "NakayamaAlgebra",
    "parse_label",
    "ExtriModel",
    "ETriangle",
    "build_model",
    "Subcat",
    "is_rigid",
    "is_cluster_tilting",
    "search_ct",
    "xvee",
    "xwedge",
]
