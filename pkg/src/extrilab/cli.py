"""Scenario loading, command dispatch and JSON reports.

Usage::

    extrilab <command> [<subcommand>] <scenario.json> [--out report.json]
             [--seed N] [--cap-coresdim K] [--cap-dim K] [--jobs N]

A report is a JSON document with schema ``extrilab.report/1``.  Each check
record carries a verdict in ``pass``/``fail``/``not-applicable``/``capped``
and a witness payload.  Reports contain no timings unless ``--timing`` is
given, so identical inputs give byte-identical output.  The exit code is 0
iff no check failed; ``capped`` never changes it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .algebra import Indec, NakayamaAlgebra, parse_label
from .exactlin import field_from_spec
from .extri import ExtriModel, build_model, les_check
from .homdim import (
    Subcat,
    closure_checks,
    cone_identity_check,
    cut_cotorsion_check,
    higher_ext_comparison,
    is_cluster_tilting,
    is_rigid,
    search_ct,
    vanishing_grid,
    xvee,
    xwedge,
)
from .lincat import Obj

__all__ = [
    "SCHEMA",
    "VERDICTS",
    "COMMANDS",
    "Scenario",
    "ScenarioError",
    "Context",
    "load_scenario",
    "parse_scenario",
    "run_checks",
    "build_report",
    "main",
]

SCHEMA = "extrilab.report/1"
VERDICTS = ("pass", "fail", "not-applicable", "capped")
SHAPES = ("linear", "cyclic")
MODELS = ("mod", "stable", "stable-subcat")


class ScenarioError(ValueError):
    """A scenario that does not parse or validate; carries a structured record."""

    def __init__(self, kind: str, message: str, where: str | None = None) -> None:
        super().__init__(message)
        self.record = {"error": kind, "message": message, "where": where}


@dataclass(frozen=True)
class Scenario:
    shape: str
    vertices: int
    loewy: int
    field: object
    model: str
    X: tuple
    n: int
    subcat_C: tuple = ()
    caps: dict = field(default_factory=dict)
    seed: int = 0
    name: str = ""

    def cap(self, key: str, default: int) -> int:
        return int(self.caps.get(key, default))

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "algebra": {"shape": self.shape, "vertices": self.vertices, "loewy": self.loewy},
            "field": self.field,
            "model": self.model,
            "X": list(self.X),
            "n": self.n,
            "caps": dict(sorted(self.caps.items())),
            "seed": self.seed,
        }
        if self.model == "stable-subcat":
            out["subcat_C"] = list(self.subcat_C)
        return out


def _require(data: dict, key: str, kind: type | tuple, where: str = "") -> object:
    if key not in data:
        raise ScenarioError("missing-field", f"missing field {key!r}", where + key)
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise ScenarioError("bad-type", f"field {key!r} has the wrong type", where + key)
    return value


def _labels(values: list, where: str) -> tuple:
    if not isinstance(values, list):
        raise ScenarioError("bad-type", "expected a list of labels", where)
    out = []
    for k, s in enumerate(values):
        try:
            parse_label(s)
        except (ValueError, TypeError) as e:
            raise ScenarioError("bad-label", str(e), f"{where}[{k}]") from None
        out.append(s)
    return tuple(out)


def parse_scenario(data: dict, name: str = "") -> Scenario:
    """Validate the scenario document shape (not yet the model contents)."""
    if not isinstance(data, dict):
        raise ScenarioError("bad-type", "scenario must be a JSON object", None)
    alg = _require(data, "algebra", dict)
    shape = _require(alg, "shape", str, "algebra.")
    if shape not in SHAPES:
        raise ScenarioError("bad-value", f"unknown shape {shape!r}", "algebra.shape")
    vertices = _require(alg, "vertices", int, "algebra.")
    loewy = _require(alg, "loewy", int, "algebra.")
    if vertices < 1 or loewy < 1:
        raise ScenarioError("bad-value", "vertices and loewy must be positive", "algebra")
    fld = data.get("field", "Q")
    try:
        field_from_spec(fld)
    except ValueError as e:
        raise ScenarioError("bad-value", str(e), "field") from None
    model = _require(data, "model", str)
    if model not in MODELS:
        raise ScenarioError("bad-value", f"unknown model {model!r}", "model")
    if model != "mod" and shape != "cyclic":
        raise ScenarioError("bad-value", "stable models need a cyclic (self-injective) algebra", "model")
    subcat = ()
    if model == "stable-subcat":
        subcat = _labels(_require(data, "subcat_C", list), "subcat_C")
    X = _labels(_require(data, "X", list), "X")
    n = _require(data, "n", int)
    if n < 0:
        raise ScenarioError("bad-value", "n must be non-negative", "n")
    caps = data.get("caps", {})
    if not isinstance(caps, dict) or not all(isinstance(v, int) for v in caps.values()):
        raise ScenarioError("bad-type", "caps must map names to integers", "caps")
    seed = data.get("seed", 0)
    if not isinstance(seed, int):
        raise ScenarioError("bad-type", "seed must be an integer", "seed")
    return Scenario(shape, vertices, loewy, fld, model, X, n, subcat, dict(caps), seed, data.get("name", name))


def load_scenario(path: str) -> Scenario:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as e:
        raise ScenarioError("io", str(e), path) from None
    except json.JSONDecodeError as e:
        raise ScenarioError("json", f"{e.msg} at line {e.lineno} column {e.colno}", path) from None
    return parse_scenario(data, os.path.splitext(os.path.basename(path))[0])


class Context:
    """Model, 𝒳 and lazily built per-side data for one scenario."""

    def __init__(self, sc: Scenario) -> None:
        self.scenario = sc
        self.seed = sc.seed
        alg = NakayamaAlgebra(sc.shape, sc.vertices, sc.loewy, field_from_spec(sc.field))
        members = None
        if sc.model == "stable-subcat":
            members = [parse_label(s) for s in sc.subcat_C]
            for k, a in enumerate(members):
                if not alg.is_valid(a):
                    raise ScenarioError("bad-label", f"{a.label} is not a module of the algebra", f"subcat_C[{k}]")
        try:
            self.model: ExtriModel = build_model(alg, sc.model, members, seed=sc.seed)
        except ValueError as e:
            raise ScenarioError("bad-model", str(e), "model") from None
        if sc.model == "stable-subcat":
            rep = self.model.extension_closure_report()
            if not rep["closed"]:
                raise ScenarioError("not-extension-closed", json.dumps(rep["failures"][:3]), "subcat_C")
        gens = []
        for k, s in enumerate(sc.X):
            a = parse_label(s)
            if not self.model.is_object(a):
                raise ScenarioError("bad-label", f"{s} is not an object of the model", f"X[{k}]")
            gens.append(a)
        self.x = Subcat.of(gens)
        self.n = sc.n
        self._sides: dict = {}
        self._confl: dict = {}

    def side(self, kind: str):
        from .funcat import FunctorSide

        if kind not in self._sides:
            self._sides[kind] = FunctorSide(self.model, self.x, self.n, kind)
        return self._sides[kind]

    def conflations(self, kind: str):
        from .conflations import ConflCategory, enumerate_conflations

        if kind not in self._confl:
            cat = ConflCategory(self.side(kind))
            cat.certify_wic(seed=self.seed)
            en = enumerate_conflations(cat, self.scenario.cap("orbit_cap", 200), seed=self.seed)
            self._confl[kind] = (cat, en)
        return self._confl[kind]


# ----------------------------------------------------------------------
# checks; each returns (verdict, payload)


def _v(ok: bool) -> str:
    return "pass" if ok else "fail"


def _labels_of(objs) -> list:
    return [a.label for a in objs]


def check_rigid(ctx: Context) -> tuple:
    ok, viol = is_rigid(ctx.model, ctx.x, ctx.n)
    return _v(ok), {"n": ctx.n, "degrees": f"1..{ctx.n + 1}", "violations": viol}


def check_vanishing_grid(ctx: Context) -> tuple:
    ok, cells = vanishing_grid(ctx.model, ctx.x, ctx.n)
    return _v(ok), {"cells": cells}


def check_cluster_tilting(ctx: Context) -> tuple:
    ok, data = is_cluster_tilting(ctx.model, ctx.x, ctx.n)
    return _v(ok), data


def check_ct_equalities(ctx: Context) -> tuple:
    """The whole category equals ``𝒳_{n+1}^∨`` and ``𝒳_{n+1}^∧``."""
    objs = sorted(ctx.model.objects)
    vee = sorted(xvee(ctx.model, ctx.x, ctx.n + 1))
    wedge = sorted(xwedge(ctx.model, ctx.x, ctx.n + 1))
    payload = {
        "objects": len(objs),
        "xvee": len(vee),
        "xwedge": len(wedge),
        "missing_vee": _labels_of(sorted(set(objs) - set(vee))),
        "missing_wedge": _labels_of(sorted(set(objs) - set(wedge))),
    }
    ct_ok, _ = is_cluster_tilting(ctx.model, ctx.x, ctx.n)
    if not ct_ok:
        return "not-applicable", payload
    return _v(vee == objs and wedge == objs), payload


def check_dim_table(ctx: Context) -> tuple:
    """Coresolution and resolution dimensions of every object up to the cap."""
    from .homdim import dim_table

    cap = ctx.scenario.cap("coresdim_cap", ctx.n + 2)
    bound = ctx.scenario.cap("multiplicity_bound", 3)
    out, unknown = {}, []
    for name, dual in (("coresdim", False), ("resdim", True)):
        t = dim_table(ctx.model, ctx.x, cap, dual=dual, bound=bound)
        row = {}
        for c in sorted(ctx.model.objects):
            lv = t.level.get(c)
            row[c.label] = lv
            if lv is None:
                unknown.append(f"{name}:{c.label}")
        out[name] = row
    return ("capped" if unknown else "pass"), {"cap": cap, "multiplicity_bound": bound, "tables": out, "beyond_cap": unknown}


def check_e_proj_inj(ctx: Context) -> tuple:
    m = ctx.model
    proj, inj = sorted(m.e_projectives()), sorted(m.e_injectives())
    payload = {"projectives": _labels_of(proj), "injectives": _labels_of(inj)}
    enough_p = all(m.omega(c) is not None for c in m.objects)
    enough_i = all(m.sigma(a) is not None for a in m.objects)
    payload.update({"enough_projectives": enough_p, "enough_injectives": enough_i})
    return _v(enough_p and enough_i), payload


def check_self_orthogonality(ctx: Context) -> tuple:
    from .homdim import self_orthogonality_check

    r = self_orthogonality_check(ctx.model, ctx.x, ctx.n)
    return _v(r["ok"]), r


def check_cotorsion_cut(ctx: Context) -> tuple:
    m, x, n = ctx.model, ctx.x, ctx.n
    wn, wn1 = Subcat.of(xwedge(m, x, n)), xwedge(m, x, n + 1)
    vn, vn1 = Subcat.of(xvee(m, x, n)), xvee(m, x, n + 1)
    left = cut_cotorsion_check(m, x, wn, wn1, 0)
    right = cut_cotorsion_check(m, vn, x, vn1, 0)
    payload = {
        "left_pair_on_xwedge": {k: left[k] for k in ("left", "left_vanishing_violations", "left_incomplete", "left_witnesses")},
        "right_pair_on_xvee": {k: right[k] for k in ("right", "right_vanishing_violations", "right_incomplete", "right_witnesses")},
    }
    rigid, _ = is_rigid(m, x, n)
    if not rigid:
        return "not-applicable", payload
    return _v(left["left"] and right["right"]), payload


def check_closure(ctx: Context) -> tuple:
    r = closure_checks(ctx.model, ctx.x, ctx.n, seed=ctx.seed)
    c = cone_identity_check(ctx.model, ctx.x, ctx.n)
    return _v(r["ok"] and c["ok"]), {"closure": r, "cone_identities": c}


def _quotient_table(q) -> dict:
    objs = list(q.objects)
    return {
        "objects": _labels_of(objs),
        "ind": _labels_of(q.ind),
        "hom_dims": [[q.hom_dim(a, b) for b in objs] for a in objs],
    }


def check_quotient_table(ctx: Context) -> tuple:
    from .quotient import build_quotient, dimension_identity_check, ideal_absorption_check

    out, ok = {}, True
    for side in ("vee", "wedge"):
        q = build_quotient(ctx.model, ctx.x, ctx.n, side)
        d = dimension_identity_check(q)
        a = ideal_absorption_check(q, seed=ctx.seed)
        ok = ok and d["ok"] and a["ok"]
        out[side] = dict(_quotient_table(q), dimension_identity=d["ok"], ideal_absorption=a["ok"])
    return _v(ok), out


def check_krull_schmidt(ctx: Context) -> tuple:
    from .quotient import build_quotient, ks_structure, radical_containment_check

    out, ok = {}, True
    for side in ("vee", "wedge"):
        q = build_quotient(ctx.model, ctx.x, ctx.n, side)
        ks, rc = ks_structure(q), radical_containment_check(q)
        ok = ok and ks["ok"] and rc["ok"]
        out[side] = {"ks": ks, "radical_containment": rc["ok"]}
    return _v(ok), out


def check_wic(ctx: Context) -> tuple:
    from .quotient import build_quotient, sample_retraction_pairs, split_retraction_witness, verify_retraction_witness

    count = ctx.scenario.cap("wic_samples", 100)
    out, ok = {}, True
    for side in ("vee", "wedge"):
        q = build_quotient(ctx.model, ctx.x, ctx.n, side)
        pairs = sample_retraction_pairs(q, count, seed=ctx.seed)
        good = 0
        for f, g in pairs:
            try:
                w = split_retraction_witness(q, f, g)
            except (ValueError, ArithmeticError):
                continue
            good += bool(verify_retraction_witness(q, f, g, w)["ok"])
        ok = ok and good == len(pairs)
        out[side] = {"samples": len(pairs), "verified": good}
    return _v(ok), out


def check_oracles(ctx: Context) -> tuple:
    """Hom, Ext and 𝒫₁ computed two ways on every pair."""
    from .algebra import hom_dim_overlap
    from .funcat import ideal_agreement

    m = ctx.model
    alg = m.alg
    mods = alg.indecomposables()
    hom_bad = [(a.label, b.label) for a in mods for b in mods if m.mc.dim(a, b) != hom_dim_overlap(alg, a, b)]
    ext = higher_ext_comparison(m, 1)
    ideals = ideal_agreement(m)
    payload = {"hom_pairs": len(mods) ** 2, "hom_mismatches": hom_bad, "ext": ext, "ideals": {"pairs": ideals["pairs"], "mismatches": ideals["mismatches"]}}
    return _v(not hom_bad and ext["agree"] and ideals["ok"]), payload


def _side_check(fn: Callable, kind: str) -> Callable:
    def run(ctx: Context) -> tuple:
        return fn(ctx, ctx.side(kind))

    run.__name__ = f"{fn.__name__}_{kind}"
    return run


def _full_faithful(ctx: Context, side) -> tuple:
    from .funcat import verify_fully_faithful

    r = verify_fully_faithful(side)
    return _v(r["ok"]), {k: r[k] for k in ("side", "pairs", "failures")} | {"cells": r["cells"]}


def _dense(ctx: Context, side) -> tuple:
    from .funcat import verify_dense

    r = verify_dense(side, dim_cap=ctx.scenario.cap("dim_cap", 8), seed=ctx.seed)
    return r["verdict"], r


def _exact_structure(ctx: Context, side) -> tuple:
    from .funcat import exact_structure_check, functoriality_check

    r = exact_structure_check(side, seed=ctx.seed)
    f = functoriality_check(side)
    return _v(r["ok"] and f["ok"]), {"exact_structure": r, "functoriality": f}


def _abelian_case(ctx: Context, side) -> tuple:
    from .funcat import abelian_case_check

    r = abelian_case_check(side)
    return r["verdict"], r


def _presentations(ctx: Context, side) -> tuple:
    from .funcat import enough_projective_morphisms, extension_closure_check, pseudokernel_check

    e = enough_projective_morphisms(side)
    x = extension_closure_check(side, seed=ctx.seed, dim_cap=ctx.scenario.cap("dim_cap", 8))
    p = pseudokernel_check(side)
    return _v(e["ok"] and x["ok"] and p["ok"]), {"enough_projective_morphisms": e, "extension_closure": x, "pseudokernels": p}


def check_proj_inj(ctx: Context) -> tuple:
    from .funcat import proj_inj_of_quotient

    r = proj_inj_of_quotient(ctx.side("F"))
    return r["verdict"], r


def check_les(ctx: Context) -> tuple:
    from .funcat import ambient_conflations

    count = ctx.scenario.cap("les_samples", 200)
    side = ctx.side("F")
    tris = ambient_conflations(side, count, seed=ctx.seed)
    objs = sorted(ctx.model.objects)
    failures = []
    for k, tri in enumerate(tris):
        T = objs[k % len(objs)]
        r = les_check(ctx.model, tri, T, True)
        if not r["exact"]:
            failures.append({"A": tri.A.label, "B": tri.B.label, "C": tri.C.label, "T": T.label})
    verdict = _v(not failures) if len(tris) >= count else ("fail" if failures else "capped")
    return verdict, {"conflations": len(tris), "requested": count, "failures": failures}


def _pseudo_ct(ctx: Context, kind: str) -> tuple:
    from .conflations import generating_family, pseudo_ct_witness, verify_pseudo_ct

    cat, en = ctx.conflations(kind)
    family = generating_family(cat)
    bad = []
    for c in en["objects"]:
        r = verify_pseudo_ct(cat, pseudo_ct_witness(cat, c), family)
        if not r["ok"]:
            bad.append({"object": c.label, "failed": r["failed"]})
    payload = {"wic": cat.wic, "enumeration": en["stats"], "objects": len(en["objects"]), "failures": bad}
    return _v(not bad and cat.wic["ok"]), payload


def _characterization(ctx: Context, kind: str) -> tuple:
    from .conflations import split_characterization_check

    cat, en = ctx.conflations(kind)
    rows = [split_characterization_check(cat, c) for c in en["objects"]]
    if any(r["verdict"] == "not-applicable" for r in rows):
        return "not-applicable", {"reason": rows[0].get("reason")}
    agree = sum(r["verdict"] == "pass" for r in rows)
    disagree = [c.label for c, r in zip(en["objects"], rows) if r["verdict"] != "pass"]
    return _v(not disagree), {"objects": len(rows), "agree": agree, "split": sum(r["split"] for r in rows), "disagreements": disagree}


def _abelian_probe(ctx: Context, kind: str) -> tuple:
    from .conflations import abelian_quotient_probe

    cat, en = ctx.conflations(kind)
    r = abelian_quotient_probe(cat, en["objects"], samples=ctx.scenario.cap("probe_samples", 20), seed=ctx.seed, test_objects=ctx.scenario.cap("probe_tests", 40))
    return _v(r["ok"]), r


def check_split_sets(ctx: Context) -> tuple:
    from .conflations import split_sets_agree

    ct_ok, _ = is_cluster_tilting(ctx.model, ctx.x, ctx.n)
    if not ct_ok:
        return "not-applicable", {"reason": "X is not cluster tilting"}
    (c1, e1), (c2, e2) = ctx.conflations("F"), ctx.conflations("K")
    r = split_sets_agree(c1, c2, e1["objects"], e2["objects"])
    return _v(r["ok"]), r


def check_search_ct(ctx: Context) -> tuple:
    max_gen = ctx.scenario.cap("max_generators", max(len(ctx.x), 1))
    hits = search_ct(ctx.model, ctx.n, max_gen)
    found = [_labels_of(h.generators) for h in hits]
    return "pass", {"n": ctx.n, "max_generators": max_gen, "hits": found, "contains_X": _labels_of(ctx.x.generators) in found}


def _mk(kind: str, fn: Callable) -> Callable:
    def run(ctx: Context) -> tuple:
        return fn(ctx, kind)

    return run


CHECKS: dict[str, Callable[[Context], tuple]] = {
    "rigid": check_rigid,
    "vanishing-grid": check_vanishing_grid,
    "cluster-tilting": check_cluster_tilting,
    "ct-equalities": check_ct_equalities,
    "e-proj-inj": check_e_proj_inj,
    "dim-table": check_dim_table,
    "cotorsion-cut": check_cotorsion_cut,
    "self-orthogonality": check_self_orthogonality,
    "closure": check_closure,
    "quotient-table": check_quotient_table,
    "krull-schmidt": check_krull_schmidt,
    "wic": check_wic,
    "oracles": check_oracles,
    "les": check_les,
    "full-faithful-F": _side_check(_full_faithful, "F"),
    "full-faithful-K": _side_check(_full_faithful, "K"),
    "dense-F": _side_check(_dense, "F"),
    "dense-K": _side_check(_dense, "K"),
    "exact-structure-F": _side_check(_exact_structure, "F"),
    "exact-structure-K": _side_check(_exact_structure, "K"),
    "presentations-F": _side_check(_presentations, "F"),
    "presentations-K": _side_check(_presentations, "K"),
    "abelian-case-F": _side_check(_abelian_case, "F"),
    "abelian-case-K": _side_check(_abelian_case, "K"),
    "proj-inj": check_proj_inj,
    "pseudo-ct-F": _mk("F", _pseudo_ct),
    "pseudo-ct-K": _mk("K", _pseudo_ct),
    "characterization-F": _mk("F", _characterization),
    "characterization-K": _mk("K", _characterization),
    "split-sets": check_split_sets,
    "abelian-probe-F": _mk("F", _abelian_probe),
    "abelian-probe-K": _mk("K", _abelian_probe),
    "search-ct": check_search_ct,
}

_FUNCTOR = [
    "full-faithful-F", "full-faithful-K", "dense-F", "dense-K", "exact-structure-F", "exact-structure-K",
    "presentations-F", "presentations-K", "abelian-case-F", "abelian-case-K", "proj-inj", "les",
]
_CONFL = ["pseudo-ct-F", "pseudo-ct-K", "characterization-F", "characterization-K", "split-sets", "abelian-probe-F", "abelian-probe-K"]

COMMANDS: dict[str, list[str]] = {
    "check rigid": ["rigid", "vanishing-grid"],
    "check ct": ["cluster-tilting", "ct-equalities", "e-proj-inj", "dim-table"],
    "check cotorsion-cut": ["cotorsion-cut", "self-orthogonality", "closure"],
    "quotient table": ["quotient-table"],
    "quotient ks": ["krull-schmidt", "wic"],
    "functor verify": _FUNCTOR,
    "conflations verify": _CONFL,
    "search ct": ["search-ct"],
    "report all": [
        "oracles", "rigid", "vanishing-grid", "cluster-tilting", "ct-equalities", "e-proj-inj", "dim-table", "cotorsion-cut", "self-orthogonality",
        "closure", "quotient-table", "krull-schmidt", "wic", *_FUNCTOR, *_CONFL,
    ],
}


# ----------------------------------------------------------------------
# running and reporting


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return obj
    if isinstance(obj, (Indec, Obj)):
        return obj.label
    if hasattr(obj, "to_json"):
        return _jsonable(obj.to_json())
    if hasattr(obj, "label"):
        return obj.label
    return str(obj)


@lru_cache(maxsize=4)
def _context_for(scenario_json: str) -> Context:
    data = json.loads(scenario_json)
    return Context(parse_scenario(data, data.get("name", "")))


def _run_one(args: tuple) -> dict:
    scenario_json, name, timing = args
    ctx = _context_for(scenario_json)
    start = time.perf_counter()
    try:
        verdict, payload = CHECKS[name](ctx)
    except Exception as e:  # reported as a failing record, not a crash
        verdict, payload = "fail", {"exception": type(e).__name__, "message": str(e)}
    if verdict not in VERDICTS:
        raise AssertionError(f"check {name} returned verdict {verdict!r}")
    rec = {"name": name, "verdict": verdict, "payload": _jsonable(payload)}
    if timing:
        rec["seconds"] = round(time.perf_counter() - start, 3)
    return rec


def run_checks(sc: Scenario, names: list[str], jobs: int = 1, timing: bool = False) -> list[dict]:
    """Run checks in order; with ``jobs > 1`` they run in worker processes."""
    # validate before fanning out, so errors surface as ScenarioError
    blob = json.dumps(sc.to_json(), sort_keys=True)
    _context_for(blob)
    tasks = [(blob, name, timing) for name in names]
    if jobs <= 1 or len(tasks) <= 1:
        return [_run_one(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_one, tasks))


def build_report(command: str, sc: Scenario, records: list[dict]) -> dict:
    from . import __version__

    counts = {v: sum(r["verdict"] == v for r in records) for v in VERDICTS}
    return {
        "schema": SCHEMA,
        "tool": {"name": "extrilab", "version": __version__},
        "command": command,
        "scenario": sc.to_json(),
        "checks": records,
        "summary": {
            "counts": counts,
            "failed": [r["name"] for r in records if r["verdict"] == "fail"],
            "capped": [r["name"] for r in records if r["verdict"] == "capped"],
            "ok": counts["fail"] == 0,
        },
    }


def _dump(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="extrilab", description="Verify extriangulated-category constructions on Nakayama algebras.")
    p.add_argument("command", choices=sorted({c.split()[0] for c in COMMANDS}))
    p.add_argument("subcommand", help="e.g. rigid, ct, cotorsion-cut, table, ks, verify, all")
    p.add_argument("scenario", help="scenario JSON file")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--seed", type=int, help="override the scenario seed")
    p.add_argument("--cap-coresdim", type=int, help="override caps.coresdim_cap")
    p.add_argument("--cap-dim", type=int, help="override caps.dim_cap")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: $EXTRILAB_JOBS or 1)")
    p.add_argument("--timing", action="store_true", help="include per-check timings (breaks byte-stability)")
    return p


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    command = f"{args.command} {args.subcommand}"
    if command not in COMMANDS:
        err = {"schema": SCHEMA, "error": "unknown-command", "message": f"unknown command {command!r}", "where": "argv"}
        sys.stderr.write(_dump(err))
        return 2
    try:
        sc = load_scenario(args.scenario)
        caps = dict(sc.caps)
        if args.cap_coresdim is not None:
            caps["coresdim_cap"] = args.cap_coresdim
        if args.cap_dim is not None:
            caps["dim_cap"] = args.cap_dim
        sc = Scenario(sc.shape, sc.vertices, sc.loewy, sc.field, sc.model, sc.X, sc.n, sc.subcat_C, caps, sc.seed if args.seed is None else args.seed, sc.name)
        jobs = args.jobs if args.jobs is not None else int(os.environ.get("EXTRILAB_JOBS", "1") or 1)
        records = run_checks(sc, COMMANDS[command], jobs=max(1, jobs), timing=args.timing)
    except ScenarioError as e:
        sys.stderr.write(_dump({"schema": SCHEMA, **e.record}))
        return 2
    report = build_report(command, sc, records)
    text = _dump(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["summary"]["ok"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
