"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

from __future__ import annotations

import time

from extrilab.cli import CHECKS, Context, load_scenario
from extrilab.lincat import Obj

from conftest import ALL, SCENARIO_DIR, context
from oracles import Nakayama, ext1_dim, hom_dim, label, quotient_hom_dim, stable_hom_dim


def _verdict(capsys, number: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}" + (f" ({detail})" if detail else "")
    with capsys.disabled():
        print("\n" + line)
    assert ok, detail


def _run(ctx, name):
    return CHECKS[name](ctx)


def _ref(ctx) -> Nakayama:
    alg = ctx.model.alg
    return Nakayama(alg.shape, alg.m, alg.N)


def test_criterion_01_small_cluster_tilting(capsys):
    start = time.perf_counter()
    ctx = Context(load_scenario(str(SCENARIO_DIR / "cyclic4_ct.json")))
    results = {name: _run(ctx, name) for name in ("cluster-tilting", "quotient-table", "full-faithful-F", "dense-F", "proj-inj")}
    elapsed = time.perf_counter() - start

    # frozen oracle values for cyclic Nakayama m=4, N=2, X = {S2, S4}
    ref = Nakayama("cyclic", 4, 2)
    stable = [a for a in ref.modules() if a not in ref.projectives()]
    X = [(2, 1), (4, 1)]
    right = sorted(m for m in stable if all(ext1_dim(ref, x, m) == 0 for x in X))
    left = sorted(m for m in stable if all(ext1_dim(ref, m, x) == 0 for x in X))
    kill = X + ref.projectives()
    ind_D = [a for a in stable if quotient_hom_dim(ref, a, a, kill) > 0]
    ends = {label(a): quotient_hom_dim(ref, a, a, kill) for a in ind_D}
    cross = [quotient_hom_dim(ref, a, b, kill) for a in ind_D for b in ind_D if a != b]
    omega = sorted(label(ref.syzygy(x)) for x in X)
    sigma = sorted(label(ref.cosyzygy(x)) for x in X)
    assert right == left == X and ends == {"M[1,1]": 1, "M[3,1]": 1} and set(cross) == {0}

    table = results["quotient-table"][1]["vee"]
    pi = results["proj-inj"][1]
    engine_ends = {a: table["hom_dims"][k][k] for k, a in enumerate(table["objects"]) if a in table["ind"]}
    engine_cross = [table["hom_dims"][i][j] for i, a in enumerate(table["objects"]) for j, b in enumerate(table["objects"]) if a != b and a in table["ind"] and b in table["ind"]]
    ok = (
        all(v == "pass" for v, _ in results.values())
        and table["ind"] == [label(a) for a in ind_D]
        and engine_ends == ends
        and set(engine_cross) <= {0}
        and pi["omega_X"] == omega and pi["projective"] == omega
        and pi["sigma_X"] == sigma and pi["injective"] == sigma
        and elapsed < 5
    )
    _verdict(capsys, 1, "small 2-cluster-tilting instance", ok, f"ind(D)={table['ind']}, {elapsed:.2f}s")


def test_criterion_02_cyclic10_subcat(capsys):
    start = time.perf_counter()
    ctx = context("cyclic10_subcat")
    results = {name: _run(ctx, name) for name in ("rigid", "cluster-tilting", "ct-equalities", "e-proj-inj")}
    elapsed = time.perf_counter() - start
    eq = results["ct-equalities"][1]
    epi = results["e-proj-inj"][1]
    ok = (
        ctx.n == 2
        and all(v == "pass" for v, _ in results.values())
        and eq["objects"] == eq["xvee"] == eq["xwedge"] == 24
        and epi["projectives"] == ["M[1,1]", "M[2,2]", "M[3,3]"]
        and epi["injectives"] == ["M[9,1]", "M[9,2]", "M[9,3]"]
        and elapsed < 600
    )
    _verdict(capsys, 2, "cyclic10_subcat rigidity, 4-cluster-tilting, C = X3^vee = X3^wedge", ok, f"{eq['objects']} objects, {elapsed:.1f}s")


def test_criterion_03_full_faithful(capsys):
    bad = []
    pairs = 0
    for name in ALL:
        for kind in ("F", "K"):
            verdict, payload = _run(context(name), f"full-faithful-{kind}")
            pairs += payload["pairs"]
            if verdict != "pass" or payload["failures"]:
                bad.append(f"{name}/{kind}")
            if not all(c["hom_D"] == c["nat"] and c["kernel_equals_ideal"] for c in payload["cells"]):
                bad.append(f"{name}/{kind}/cells")
    _verdict(capsys, 3, "full, faithful, kernel = [X] on both sides", not bad, f"{pairs} pairs, failures {bad}")


def test_criterion_04_density(capsys):
    bad, capped, covered = [], [], 0
    for name in ALL:
        for kind in ("F", "K"):
            verdict, payload = _run(context(name), f"dense-{kind}")
            stats = payload["stats"]
            if stats["capped"]:
                capped.append(f"{name}/{kind}")
            if verdict not in ("pass", "capped") or payload["misses"]:
                bad.append(f"{name}/{kind}")
            covered += len(payload["hits"])
    _verdict(capsys, 4, "density within caps", not bad, f"{covered} classes covered, capped {capped}")


def test_criterion_05_les(capsys):
    bad = []
    for name in ALL:
        verdict, payload = _run(context(name), "les")
        if verdict != "pass" or payload["conflations"] < 200 or payload["failures"]:
            bad.append(name)
    _verdict(capsys, 5, "long exact sequences on >= 200 conflations per scenario", not bad, f"failures {bad}")


def test_criterion_06_wic(capsys):
    bad = []
    for name in ALL:
        verdict, payload = _run(context(name), "wic")
        for side in ("vee", "wedge"):
            if payload[side]["samples"] < 100 or payload[side]["verified"] != payload[side]["samples"]:
                bad.append(f"{name}/{side}")
        if verdict != "pass":
            bad.append(name)
    _verdict(capsys, 6, "100 retraction pairs split per scenario", not bad, f"failures {bad}")


def test_criterion_07_krull_schmidt(capsys):
    bad = []
    for name in ALL:
        ctx = context(name)
        verdict, payload = _run(ctx, "krull-schmidt")
        expected = sorted(a.label for a in ctx.model.objects if a not in ctx.x)
        for side in ("vee", "wedge"):
            ks = payload[side]["ks"]
            if sorted(ks["ind"]) != expected or not all(r["is_local"] for r in ks["local"]):
                bad.append(f"{name}/{side}")
        if verdict != "pass":
            bad.append(name)
    _verdict(capsys, 7, "Krull-Schmidt with ind(D) = ind - X", not bad, f"failures {bad}")


def test_criterion_08_vanishing_grid(capsys):
    bad, cells = [], 0
    for name in ALL:
        verdict, payload = _run(context(name), "vanishing-grid")
        cells += len(payload["cells"])
        if verdict != "pass" or not all(c["ok"] for c in payload["cells"]):
            bad.append(name)
    _verdict(capsys, 8, "vanishing grid k+i+j = n+1", not bad, f"{cells} cells, failures {bad}")


def test_criterion_09_conflation_suite(capsys):
    bad, objects, nonsplit, capped = [], 0, 0, []
    for name in ALL:
        ctx = context(name)
        for check in ("pseudo-ct-F", "pseudo-ct-K", "characterization-F", "characterization-K", "split-sets", "abelian-probe-F", "abelian-probe-K"):
            verdict, payload = _run(ctx, check)
            if verdict != "pass":
                bad.append(f"{name}/{check}")
            if check.startswith("pseudo-ct"):
                objects += payload["objects"]
                nonsplit += payload["enumeration"]["nonsplit"]
                if payload["failures"]:
                    bad.append(f"{name}/{check}/witnesses")
                if payload["enumeration"]["capped"]:
                    capped.append(f"{name}/{check[-1]}")
            if check.startswith("characterization") and payload["agree"] != payload["objects"]:
                bad.append(f"{name}/{check}/agree")
            if check.startswith("abelian-probe") and payload["found"] != payload["sampled"]:
                bad.append(f"{name}/{check}/rate")
    ok = not bad and nonsplit > 0
    _verdict(capsys, 9, "conflation suite on both sides", ok, f"{objects} objects, {nonsplit} nonsplit, capped {capped}, failures {bad}")


def test_criterion_10_oracle_cross_checks(capsys):
    bad = []
    for name in ALL:
        ctx = context(name)
        verdict, payload = _run(ctx, "oracles")
        if verdict != "pass":
            bad.append(f"{name}/internal")
        # and against the independent brute-force oracle
        ref, model = _ref(ctx), ctx.model
        stable = ctx.scenario.model != "mod"
        for a in model.objects:
            for b in model.objects:
                ta, tb = (a.top, a.length), (b.top, b.length)
                h = stable_hom_dim(ref, ta, tb) if stable else hom_dim(ref, ta, tb)
                if model.cat.hom_space_dim(Obj((a,)), Obj((b,))) != h:
                    bad.append(f"{name}/hom/{a.label},{b.label}")
                if model.ext_space_dim(Obj((a,)), Obj((b,))) != ext1_dim(ref, ta, tb):
                    bad.append(f"{name}/ext/{a.label},{b.label}")
    _verdict(capsys, 10, "Hom, Ext and P1 oracle cross-checks", not bad, f"failures {bad[:5]}")
