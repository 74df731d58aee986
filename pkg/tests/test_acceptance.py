"""One test per acceptance criterion; each appends a PASS/FAIL line to the summary.

Tolerances are exact (rational or Q(sqrt 5) equality) throughout.  Time limits
are pinned in LIMITS and asserted; criteria without a stated budget get none.
"""

import math
import os
import time

import pytest

from camfan import build_group, named_group
from camfan.bridges import nc_subspace, verify_quasi_cartan
from camfan.clusters import bipartition_from_word, cl_map, cluster_complex
from camfan.errors import NotBipartiteWord
from camfan.report import Report
from camfan.sortable import all_coxeter_elements, cambrian, is_sortable
from camfan.suites import suite_congruence, suite_lattice, suite_narayana, suite_zeta, verify_L_iso, verify_span
from camfan.types import TEST_GROUPS, coxeter_matrix

from oracles import catalan

LIMITS = {1: 1.0, 2: 300.0, 3: 60.0, 4: 60.0, 8: 600.0}
RANK_LE_3 = TEST_GROUPS["rank2"] + TEST_GROUPS["rank3"]
RANK_LE_4 = RANK_LE_3 + TEST_GROUPS["rank4"] + TEST_GROUPS["rank4_reducible"]


def record(log, k, ok, elapsed, detail):
    limit = LIMITS.get(k)
    timed = "" if limit is None else f" [{elapsed:.2f}s < {limit:g}s]"
    if limit is not None and elapsed >= limit:
        ok = False
    if not timed:
        timed = f" [{elapsed:.2f}s]"
    log.append(f"criterion {k}: {'PASS' if ok else 'FAIL'} {detail}{timed}")
    return ok


def run_over(groups, suite, want_bipartite=False):
    failures, checks, runs = [], 0, 0
    for name in groups:
        G = named_group(name)
        for c in all_coxeter_elements(G):
            if want_bipartite:
                try:
                    bipartition_from_word(G, c)
                except NotBipartiteWord:
                    continue
            rep = Report(suite.__name__, name, G.word_str(G.from_word(c), ","))
            suite(G, c, rep)
            runs += 1
            checks += sum(rep.checks.values())
            if not rep.passed:
                failures.append((name, rep.coxeter, rep.first_counterexample))
    return failures, checks, runs


def test_criterion_1_b2_golden(acceptance_log):
    t0 = time.perf_counter()
    G = build_group(coxeter_matrix("B2"))
    refl = sorted(G.word_str(G.reflection_elem[t]) for t in range(G.N))
    c = (0, 1)
    srt = {G.word_str(x) or "1" for x in cambrian(G, c).sortables}
    cl_table = {
        "1": {"-a[s0]", "-a[s1]"},
        "s0": {"a[s0]", "-a[s1]"},
        "s0s1": {"a[s0]", "a[s0s1s0]"},
        "s0s1s0": {"a[s1s0s1]", "a[s0s1s0]"},
        "s0s1s0s1": {"a[s1s0s1]", "a[s1]"},
        "s1": {"-a[s0]", "a[s1]"},
    }
    got_cl = {w: {G.root_label(a) for a in cl_map(G, 0 if w == "1" else G.from_word(w), c)} for w in cl_table}
    # ray labels around the figure, read off the label positions in the picture
    figure = {
        "-a[s0]": (-76, 32),
        "-a[s1]": (47, 34),
        "a[s0]": (57, -22),
        "a[s1]": (-77, -20),
        "a[s0s1s0]": (29, -71),
        "a[s1s0s1]": (-65, -70),
    }
    fig_order = sorted(figure, key=lambda k: math.atan2(figure[k][1], figure[k][0]) % (2 * math.pi))
    cx = cluster_complex(G, c)
    # the cluster fan's own cyclic order: walk the 6-cycle of adjacent cones
    nbrs = {}
    for C in cx.clusters:
        a, b = (G.root_label(x) for x in C)
        nbrs.setdefault(a, set()).add(b)
        nbrs.setdefault(b, set()).add(a)
    walk = [fig_order[0], min(nbrs[fig_order[0]])]
    while len(walk) < 6:
        (nxt,) = nbrs[walk[-1]] - {walk[-2]}
        walk.append(nxt)
    cyclic_ok = all(len(v) == 2 for v in nbrs.values()) and walk in (fig_order, [fig_order[0]] + fig_order[:0:-1])
    ok = (
        G.order == 8
        and refl == sorted(["s0", "s1", "s0s1s0", "s1s0s1"])
        and srt == {"1", "s0", "s0s1", "s0s1s0", "s0s1s0s1", "s1"}
        and got_cl == cl_table
        and set(nbrs) == set(figure)
        and cyclic_ok
        and not any(is_sortable(G, G.from_word(w), c) for w in ("s1s0", "s1s0s1"))
    )
    elapsed = time.perf_counter() - t0
    ok = record(acceptance_log, 1, ok, elapsed, f"B2: |W|={G.order}, reflections {refl}, 6 sortables, cl table and figure ray order exact")
    assert ok


def test_criterion_2_counts(acceptance_log):
    groups = ["A2", "B2", "G2", "I2(5)", "A3", "B3", "H3", "A4", "B4", "D4", "F4"]
    if os.environ.get("CAMFAN_RUN_H4") == "1":
        groups.append("H4")
    t0 = time.perf_counter()
    bad = []
    for name in groups:
        G = named_group(name)
        for c in all_coxeter_elements(G):
            data = cambrian(G, c)
            k = len(data.sortables)
            counts = (
                k,
                len(cluster_complex(G, c).clusters),
                len(data.classes),
                len({nc_subspace(G, x, c) for x in data.sortables}),
            )
            ji = sum(1 for x in data.sortables if G.is_join_irreducible(x))
            if len(set(counts)) != 1 or k != catalan(name) or ji != G.N:
                bad.append((name, c, counts, ji))
    elapsed = time.perf_counter() - t0
    ok = record(acceptance_log, 2, not bad, elapsed, f"{len(groups)} groups, all c: sortables = clusters = classes = NC subspaces = Catalan, sortable JIs = |T|; mismatches {len(bad)}")
    assert ok, bad


def test_criterion_3_span(acceptance_log):
    t0 = time.perf_counter()
    failures, checks, runs = run_over(RANK_LE_3, lambda G, c, rep: verify_span(G, c, rep))
    elapsed = time.perf_counter() - t0
    ok = record(acceptance_log, 3, not failures, elapsed, f"rank<=3, {runs} (group, c) runs, {checks} checks, violations {len(failures)}")
    assert ok, failures


def test_criterion_4_zeta(acceptance_log):
    t0 = time.perf_counter()
    failures, checks, runs = run_over(RANK_LE_3, suite_zeta)
    elapsed = time.perf_counter() - t0
    ok = record(acceptance_log, 4, not failures, elapsed, f"rank<=3, {runs} runs, {checks} checks, violations {len(failures)}")
    assert ok, failures


def test_criterion_5_L_iso(acceptance_log):
    t0 = time.perf_counter()
    failures, checks, runs = run_over(RANK_LE_3, lambda G, c, rep: verify_L_iso(G, c, rep=rep), want_bipartite=True)
    elapsed = time.perf_counter() - t0
    ok = record(acceptance_log, 5, not failures and runs > 0, elapsed, f"rank<=3 bipartite c, {runs} runs, {checks} checks, violations {len(failures)}")
    assert ok, failures


def test_criterion_6_lattice(acceptance_log):
    t0 = time.perf_counter()
    failures, checks, runs = run_over(RANK_LE_3, suite_lattice)
    elapsed = time.perf_counter() - t0
    ok = record(acceptance_log, 6, not failures, elapsed, f"rank<=3, {runs} runs, {checks} checks, violations {len(failures)}")
    assert ok, failures


def test_criterion_7_narayana(acceptance_log):
    t0 = time.perf_counter()
    failures, checks, runs = run_over(RANK_LE_3, suite_narayana)
    G = named_group("B2")
    b2 = cluster_complex(G, (0, 1)).h_vector()
    elapsed = time.perf_counter() - t0
    ok = record(acceptance_log, 7, not failures and b2 == [1, 4, 1], elapsed, f"rank<=3, {runs} runs, B2 h = {tuple(b2)}, violations {len(failures)}")
    assert ok, failures


def test_criterion_8_conjecture(acceptance_log):
    from camfan.bridges import check_conjecture_orthogonality

    t0 = time.perf_counter()
    bad, pairs, runs = [], 0, 0
    for name in RANK_LE_4:
        G = named_group(name)
        for c in all_coxeter_elements(G):
            out = check_conjecture_orthogonality(G, c)
            runs += 1
            pairs += out["pairs"]
            if out["violations"]:
                bad.append((name, c, out["violations"][0]))
    elapsed = time.perf_counter() - t0
    ok = record(acceptance_log, 8, not bad, elapsed, f"{len(RANK_LE_4)} groups of rank<=4, {runs} runs, {pairs} pairs, violations {len(bad)}")
    assert ok, bad


NONCRYST_LE_3 = [g for g in RANK_LE_3 if not named_group(g).crystallographic]
CRYST_LE_3 = [g for g in RANK_LE_3 if named_group(g).crystallographic]


def test_criterion_9_quasi_cartan(acceptance_log):
    t0 = time.perf_counter()
    bad, pairs = [], 0
    for name in CRYST_LE_3:
        G = named_group(name)
        for c in all_coxeter_elements(G):
            out = verify_quasi_cartan(G, c, crystallographic_only=True)
            pairs += sum(out["products"].values())
            bad += [(name, c, v) for v in out["violations"]]
    general = []
    for name in NONCRYST_LE_3:
        G = named_group(name)
        for c in all_coxeter_elements(G):
            general += [(name, c, v) for v in verify_quasi_cartan(G, c)["violations"]]
    elapsed = time.perf_counter() - t0
    detail = (
        f"crystallographic rank<=3 ({len(CRYST_LE_3)} groups, {pairs} pairs): products in {{0,1,2,3}} with links {{4,5,6,8}}, "
        f"DQ positive definite, violations {len(bad)}; strict form UNATTAINABLE on {', '.join(NONCRYST_LE_3)} "
        f"(product 4cos^2(pi/5) with link 7), general 4cos^2(pi/m) <-> m+2 violations {len(general)}"
    )
    ok = record(acceptance_log, 9, not bad and not general, elapsed, detail)
    assert ok, bad + general


@pytest.mark.xfail(strict=True, reason="Q_ij Q_ji = 4cos^2(pi/5) occurs outside {0,1,2,3} in non-crystallographic groups")
@pytest.mark.parametrize("name", NONCRYST_LE_3)
def test_criterion_9_strict_form_noncrystallographic(name):
    G = named_group(name)
    for c in all_coxeter_elements(G):
        assert verify_quasi_cartan(G, c, crystallographic_only=True)["violations"] == []


def test_criterion_10_congruence(acceptance_log):
    t0 = time.perf_counter()
    bad, notes = [], []
    for name, samples in (("A2", None), ("B2", None), ("G2", None), ("A3", 10_000)):
        G = named_group(name)
        for c in all_coxeter_elements(G):
            rep = Report("congruence", name, str(c))
            suite_congruence(G, c, rep, samples=samples, seed=0)
            if not rep.passed:
                bad.append((name, c, rep.first_counterexample))
        notes.append(f"{name} {'exhaustive' if samples is None else f'{samples} sampled/c, seed 0'}")
    elapsed = time.perf_counter() - t0
    ok = record(acceptance_log, 10, not bad, elapsed, f"{'; '.join(notes)}; violations {len(bad)}")
    assert ok, bad
