"""Exit criteria, one test per criterion, driven through the CLI.

Every criterion is checked at its stated tolerance, including the literal
ceil(d/2) page counts. Each test prints one PASS/FAIL line, and the same
lines are repeated in the pytest terminal summary.
"""

from __future__ import annotations

import random
import time

import networkx as nx
import pytest

from bookembed import formats
from bookembed.constructions import ceil_half, expansion_lower_bound
from bookembed.expansion import check_expansion_properties, complete_expansion
from bookembed.graphs import complete_graph, cycle_graph, is_path, is_planar, mobius_ladder, petersen_graph
from support import (
    MUTATIONS,
    brute_force_pagenumber,
    random_connected_graph,
    random_spanning_subgraph,
    random_tree,
    run_cli,
    summary,
)

pytestmark = pytest.mark.acceptance

TRIANGLE_NOTE = "every failure is a case whose largest clique is K_3, which needs 1 page, not ceil(3/2) = 2"


def triangle_note(failures: list[str], triangle_cases: int) -> str:
    return TRIANGLE_NOTE if failures and len(failures) == triangle_cases else ""


@pytest.fixture
def work(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def cli(*args) -> dict[str, str]:
    code, out = run_cli(*args)
    assert code == 0, f"bookembed {' '.join(map(str, args))} exited {code}: {out}"
    return summary(out)


def validate(graph: str, emb: str) -> bool:
    code, out = run_cli("validate", graph, emb)
    return code == 0 and out.startswith("OK")


def solve(g, name: str, xg=None, *budget) -> formats.PageNumberCertificate:
    formats.write_edg(f"{name}.edg", g)
    extra = ()
    if xg is not None:
        formats.write_exp(f"{name}.exp", xg)
        extra = ("--provenance", f"{name}.exp")
    cli("solve", f"{name}.edg", *extra, *budget, "-o", f"{name}.cert")
    return formats.read_cert(f"{name}.cert")


def embed_source(g, name: str, method: str, *extra) -> tuple[int, bool]:
    """Embed E_c(g) with a construction; returns (pages, validator clean)."""
    formats.write_edg(f"{name}.edg", g)
    out = cli("embed", f"{name}.edg", "--method", method, *extra,
              "-o", f"{name}.x.emb", "--graph-out", f"{name}.x.edg")
    return int(out["pages"]), validate(f"{name}.x.edg", f"{name}.x.emb")


# -------------------------------------------------------------------


def test_criterion_01_complete_graphs(work, record):
    failures, triangles = [], 0
    for n in range(3, 11):
        cli("gen", "--family", "complete", "--n", n, "-o", f"k{n}.edg")
        pages = int(cli("embed", f"k{n}.edg", "--method", "complete", "-o", f"k{n}.emb")["pages"])
        if not validate(f"k{n}.edg", f"k{n}.emb"):
            failures.append(f"K_{n} embedding not clean")
        if pages != ceil_half(n):
            failures.append(f"K_{n}: {pages} page(s), expected ceil({n}/2)={ceil_half(n)}")
            triangles += n == 3
    for n in (4, 5, 6):
        start = time.monotonic()
        cert = solve(complete_graph(n), f"s{n}", None, "--max-seconds", 60)
        took = time.monotonic() - start
        proof = cert.infeasibility_proof
        if not (cert.exact and cert.value == ceil_half(n) and proof.search == "exhausted"
                and proof.pages == ceil_half(n) - 1 and took < 60):
            failures.append(f"K_{n}: certificate {cert.value} {proof} in {took:.1f}s")
    record(1, failures, "K_3..K_10 clean at ceil(n/2); K_4..K_6 exhausted", triangle_note(failures, triangles))
    assert not failures


def test_criterion_02_stars(work, record):
    failures, triangles = [], 0
    from bookembed.graphs import star_graph

    for m in range(3, 13):
        pages, clean = embed_source(star_graph(m), f"s{m}", "star")
        bound = expansion_lower_bound(star_graph(m))[0]
        if not clean:
            failures.append(f"m={m}: not clean")
        if pages != ceil_half(m) or bound != ceil_half(m):
            failures.append(f"m={m}: pages {pages}, lower bound {bound}, expected ceil({m}/2)={ceil_half(m)}")
            triangles += m == 3
    pages8, _ = embed_source(star_graph(8), "fig", "star")
    if pages8 != 4:
        failures.append(f"E_c(S_9) uses {pages8} pages, not 4")
    record(2, failures, "m=3..12 at ceil(m/2), exact by the lower bound", triangle_note(failures, triangles))
    assert not failures


def _criterion_trees() -> list:
    rng = random.Random(2024)
    trees = []
    while len(trees) < 20:
        t = random_tree(rng, rng.randint(5, 30))
        if t.max_degree >= 3:
            trees.append(t)
    return trees


def test_criterion_03_trees(work, record):
    failures, triangles = [], 0
    for i, t in enumerate(_criterion_trees()):
        pages, clean = embed_source(t, f"t{i}", "tree")
        bound = expansion_lower_bound(t)[0]
        d = t.max_degree
        if not clean:
            failures.append(f"tree {i}: not clean")
        if pages != ceil_half(d) or bound != pages:
            failures.append(f"tree {i} (n={t.n}, Delta={d}): pages {pages}, lower {bound}, expected {ceil_half(d)}")
            triangles += d == 3
    record(3, failures, "20 trees at ceil(Delta/2), exact by the lower bound", triangle_note(failures, triangles))
    assert not failures


def test_criterion_04_mobius(work, record):
    failures = []
    for h in range(3, 9):
        out = cli("embed", "--method", "mobius", "--h", h, "-o", f"m{h}.emb", "--graph-out", f"m{h}.edg")
        if int(out["pages"]) != 3 or not validate(f"m{h}.edg", f"m{h}.emb"):
            failures.append(f"h={h}: {out['pages']} pages or not clean")
        if is_planar(complete_expansion(mobius_ladder(h)).graph):
            failures.append(f"h={h}: expansion is planar")
    record(4, failures, "h=3..8: 3 clean pages, nonplanar so exact")
    assert not failures


def test_criterion_05_petersen(work, record):
    failures = []
    out = cli("embed", "--method", "petersen", "-o", "p.emb", "--graph-out", "p.edg")
    g = formats.read_edg("p.edg")
    if (g.n, g.m) != (30, 45) or int(out["pages"]) != 3 or not validate("p.edg", "p.emb"):
        failures.append(f"E_c(P): n={g.n} m={g.m} pages={out['pages']}")
    if is_planar(complete_expansion(petersen_graph()).graph):
        failures.append("E_c(P) is planar")
    record(5, failures, "30-vertex E_c(P) in 3 clean pages, nonplanar so exact")
    assert not failures


def test_criterion_06_complete_expansions(work, record):
    failures = []
    for m in (2, 3, 4):
        pages, clean = embed_source(complete_graph(2 * m), f"e{m}", "expansion-complete")
        bound = expansion_lower_bound(complete_graph(2 * m))[0]
        if not clean or pages != m or bound != m:
            failures.append(f"K_{2 * m}: pages {pages}, lower {bound}, clean {clean}")
    for m in (2, 3):
        pages, clean = embed_source(complete_graph(2 * m + 1), f"o{m}", "expansion-complete")
        bound = expansion_lower_bound(complete_graph(2 * m + 1))[0]
        if not clean or pages != m + 1 or bound < m:
            failures.append(f"K_{2 * m + 1}: pages {pages}, lower {bound}, clean {clean}")
    if expansion_lower_bound(complete_graph(5)) != (3, "nonplanar"):
        failures.append("E_c(K_5) lower bound is not 3 by nonplanarity")
    x5 = complete_expansion(complete_graph(5))
    cert5 = solve(x5.graph, "x5", x5, "--max-seconds", 15)
    if not (cert5.exact and cert5.value == 3):
        failures.append(f"E_c(K_5) not certified 3: {cert5.status} {cert5.value}")
    x7 = complete_expansion(complete_graph(7))
    formats.write_edg("x7.edg", x7.graph)
    formats.write_exp("x7.exp", x7)
    code, out = run_cli("solve", "x7.edg", "--provenance", "x7.exp")
    if code != 0 or "bounds: [3,4]" not in out:
        failures.append(f"E_c(K_7) solve reported {out.splitlines()[:1]}")
    record(6, failures, "even m=2..4 exact; odd m=2 certified 3; E_c(K_7) bounds [3,4]")
    assert not failures


def _criterion_sources() -> list:
    rng = random.Random(77)
    return [random_connected_graph(rng, rng.randint(3, 10), rng.uniform(0.0, 0.35)) for _ in range(50)]


def test_criterion_07_general_upper_bound(work, record):
    failures, triangles = [], 0
    checked = 0
    for i, g in enumerate(_criterion_sources()):
        cert = solve(g, f"g{i}", None, "--max-seconds", 60)
        if not cert.exact:
            failures.append(f"graph {i}: pn(G) not certified")
        formats.write_emb(f"g{i}.emb", cert.witness)
        pages, clean = embed_source(g, f"g{i}", "thm32", "--emb", f"g{i}.emb")
        bound = cert.witness.num_pages + ceil_half(g.max_degree)
        if not clean or pages > bound:
            failures.append(f"graph {i}: {pages} pages > {bound} or not clean")
        if 2 * g.m <= 14 and not is_path(g):  # paths are the documented exclusion
            checked += 1
            xg = complete_expansion(g)
            xc = solve(xg.graph, f"x{i}", xg, "--max-nodes", 300_000)
            lo, hi = ceil_half(g.max_degree), cert.value + ceil_half(g.max_degree)
            if not xc.exact:
                failures.append(f"graph {i}: pn(E_c(G)) not certified")
            elif not lo <= xc.value <= hi:
                failures.append(f"graph {i} (Delta={g.max_degree}): pn(E_c)={xc.value} outside [{lo},{hi}]")
                triangles += g.max_degree == 3 and xc.value == 1
    record(7, failures, f"50 graphs within t+ceil(Delta/2); {checked} certified expansions in range",
           triangle_note(failures, triangles))
    assert not failures


def test_criterion_08_expansion_clauses(work, record):
    failures = []
    rng = random.Random(88)
    for i in range(100):
        g = random_connected_graph(rng, rng.randint(2, 15), rng.uniform(0.0, 0.3))
        formats.write_edg("g.edg", g)
        cli("expand", "g.edg", "-o", "x.edg", "--provenance", "x.exp")
        report = check_expansion_properties(formats.read_exp("x.exp"))
        if report:
            failures.append(f"graph {i}: {report[0]}")
    for clause, mutate in MUTATIONS.items():
        for g in (petersen_graph(), mobius_ladder(4), cycle_graph(6)):
            report = check_expansion_properties(mutate(complete_expansion(g)))
            if not any(line.startswith(clause) for line in report):
                failures.append(f"mutation {clause} not detected")
    record(8, failures, "100 clean reports; four mutations each detected")
    assert not failures


def _outerplanar(g) -> bool:
    h = g.to_networkx()
    h.add_edges_from((g.n, v) for v in range(g.n))
    return nx.check_planarity(h)[0]


def test_criterion_09_oracle(work, record):
    failures = []
    rng = random.Random(99)
    for i in range(200):
        g = random_connected_graph(rng, rng.randint(2, 6), rng.uniform(0.1, 0.9))
        cert = solve(g, "o", None)
        oracle = brute_force_pagenumber(g, 3)
        if not cert.exact or cert.value != oracle:
            failures.append(f"graph {i} {g.edges}: solver {cert.value}, oracle {oracle}")
        if is_path(g) and cert.value != 0:
            failures.append(f"graph {i}: path with pagenumber {cert.value}")
        elif not is_path(g) and _outerplanar(g) and cert.value != 1:
            failures.append(f"graph {i}: outerplanar non-path with pagenumber {cert.value}")
        elif not nx.check_planarity(g.to_networkx())[0] and cert.value < 3:
            failures.append(f"graph {i}: nonplanar with pagenumber {cert.value}")
    record(9, failures, "200 graphs agree with enumeration and the path/outerplanar/nonplanar rules")
    assert not failures


def test_criterion_10_monotonicity(work, record):
    failures = []
    rng = random.Random(1010)
    compared = 0
    for i in range(30):
        while True:
            g = random_connected_graph(rng, rng.randint(4, 7), 0.15)
            if g.m <= 7:
                break
        h = random_spanning_subgraph(rng, g)
        cg, ch = solve(g, "g", None), solve(h, "h", None)
        if cg.exact and ch.exact and ch.value > cg.value:
            failures.append(f"pair {i}: pn(H)={ch.value} > pn(G)={cg.value}")
        xg, xh = complete_expansion(g), complete_expansion(h)
        xcg = solve(xg.graph, "xg", xg, "--max-nodes", 300_000)
        xch = solve(xh.graph, "xh", xh, "--max-nodes", 300_000)
        if xcg.exact and xch.exact:
            compared += 1
            if xch.value > xcg.value:
                failures.append(f"pair {i}: pn(E_c(H))={xch.value} > pn(E_c(G))={xcg.value}")
    record(10, failures, f"30 pairs monotone; {compared} expansion pairs certified")
    assert not failures
