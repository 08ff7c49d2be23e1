"""Cross-checks of the exact searches against scipy's HiGHS MILP and networkx."""

import itertools
import math
import random

import networkx as nx
import numpy as np
import pytest
from scipy.optimize import Bounds, LinearConstraint, milp

import asgadvice as asg


def min_cover_milp(elements, sets):
    """Minimum number of sets covering range(elements), solved by HiGHS."""
    a = np.zeros((elements, len(sets)))
    for j, s in enumerate(sets):
        for e in s:
            a[e, j] = 1
    res = milp(
        c=np.ones(len(sets)),
        constraints=LinearConstraint(a, lb=np.ones(elements), ub=np.inf),
        integrality=np.ones(len(sets)),
        bounds=Bounds(0, 1),
    )
    assert res.success
    return round(res.fun)


def design_milp(v, k, t):
    blocks = list(itertools.combinations(range(v), k))
    targets = list(itertools.combinations(range(v), t))
    index = {s: i for i, s in enumerate(targets)}
    sets = [[index[s] for s in itertools.combinations(b, t)] for b in blocks]
    return min_cover_milp(len(targets), sets)


@pytest.mark.parametrize("v,k,t", [(4, 3, 2), (4, 2, 1), (5, 3, 2), (6, 3, 2), (6, 4, 2), (6, 4, 3), (7, 3, 2)])
def test_exact_cover_number_matches_milp(v, k, t):
    size, blocks = asg.exact_cover_number(v, k, t)
    assert size == design_milp(v, k, t)
    assert len(blocks) == size
    assert asg.is_covering_design(v, k, t, blocks)


def test_greedy_is_valid_and_not_better_than_optimum():
    for v, k, t in [(6, 3, 2), (7, 4, 2), (8, 4, 3)]:
        blocks = asg.greedy_cover(v, k, t)
        assert asg.is_covering_design(v, k, t, blocks)
        assert len(blocks) >= design_milp(v, k, t)
        bound = math.comb(v, t) / math.comb(k, t) * (1 + math.log(math.comb(k, t)))
        assert len(blocks) <= math.floor(bound)


def test_set_cover_matches_milp_on_random_instances():
    rng = random.Random(20140617)
    for _ in range(60):
        elements = rng.randint(1, 14)
        sets = [sorted(rng.sample(range(elements), rng.randint(1, elements))) for _ in range(rng.randint(1, 16))]
        covered = {e for s in sets for e in s}
        sets += [[e] for e in range(elements) if e not in covered]
        sol = asg.set_cover(elements, sets)
        expected = min_cover_milp(elements, sets)
        assert sol["exact"]
        assert sol["upper"] == expected
        assert sorted({e for j in sol["chosen"] for e in sets[j]}) == list(range(elements))
        assert asg.set_cover_lp_bound(elements, sets) <= expected


@pytest.mark.parametrize("objective", ["min", "max"])
@pytest.mark.parametrize("c", ["3/2", "2", "3"])
def test_brute_min_advice_matches_milp(objective, c):
    for n in range(1, 6):
        strings = ["".join(b) for b in itertools.product("01", repeat=n)]
        sets = [[i for i, x in enumerate(strings) if asg.serves(objective, c, x, y)] for y in strings]
        result = asg.brute_min_advice(n, c, objective)
        assert result["exact"]
        assert result["upper"] == min_cover_milp(len(strings), sets)


def vertex_cover_milp(n, edges):
    if not edges:
        return 0
    a = np.zeros((len(edges), n))
    for r, (u, v) in enumerate(edges):
        a[r, u - 1] = a[r, v - 1] = 1
    res = milp(
        c=np.ones(n),
        constraints=LinearConstraint(a, lb=np.ones(len(edges)), ub=np.inf),
        integrality=np.ones(n),
        bounds=Bounds(0, 1),
    )
    return round(res.fun)


def test_clique_graph_optima_match_milp():
    for n in range(1, 8):
        for bits in itertools.product("01", repeat=n):
            x = "".join(bits)
            record = asg.reduce(x, "vc")
            edges = [(j, i + 1) for i, back in enumerate(record["back_edges"]) for j in back]
            score, _ = asg.optimum(record)
            assert score == vertex_cover_milp(n, edges)
            assert score == x.count("1") - (1 if x.endswith("1") else 0)


def test_matching_matches_networkx():
    rng = random.Random(5)
    for _ in range(200):
        vertices = rng.randint(2, 9)
        edges = sorted({tuple(sorted(rng.sample(range(1, vertices + 1), 2))) for _ in range(rng.randint(0, 14))})
        record = {"problem": "matching", "vertices": vertices, "edges": [list(e) for e in edges]}
        g = nx.Graph()
        g.add_edges_from(edges)
        expected = len(nx.max_weight_matching(g, maxcardinality=True))
        assert asg.maximum_matching_size(record) == expected
        greedy = asg.run_problem("matching", record)
        assert expected <= 2 * greedy["score"]


def test_knapsack_count_matches_milp():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(0, 10)
        weights = [rng.randint(0, 8) for _ in range(n)]
        record = {"problem": "knapsack", "weights": [f"{w}/8" for w in weights]}
        if n == 0:
            assert asg.knapsack_optimum_count(record) == 0
            continue
        res = milp(
            c=-np.ones(n),
            constraints=LinearConstraint(np.array([weights], dtype=float), lb=-np.inf, ub=8),
            integrality=np.ones(n),
            bounds=Bounds(0, 1),
        )
        assert asg.knapsack_optimum_count(record) == round(-res.fun)
        run = asg.run_problem("knapsack", record)
        assert round(-res.fun) <= 2 * run["score"]


def test_bound_and_curve():
    assert asg.advice_bound(1000, "2") == pytest.approx(1000 * math.log2(1.25), rel=1e-12)
    rows = asg.curve("11/10", "10", 89, 1000)
    assert len(rows) == 90
    values = [r["asg_bits_per_request"] for r in rows]
    assert all(a > b for a, b in zip(values, values[1:]))
    assert asg.forced_cost_bound(3, 2) == 3


def test_floats_are_rejected():
    with pytest.raises(ValueError):
        asg.advice_bound(10, "1.5")
    with pytest.raises(ValueError):
        asg.run_asg("cover-min", "1", "0110")


def test_simulation_examples():
    r = asg.run_asg("trivial-min", "2", "011010")
    assert r == {"y": "011011", "score": 4, "bits": r["bits"], "opt": 3}
    assert asg.verify("cover-max", "2", 6)["holds"]
