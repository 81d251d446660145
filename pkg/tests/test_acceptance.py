"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the status lines go straight
to the terminal even when output capture is on.
"""

import math
import time
from contextlib import contextmanager

import numpy as np

from skewgain import (
    adjacency_matrix,
    agp_sum_closed,
    agp_sum_direct,
    apply_switching,
    balance_certificate,
    balance_via_distance_cospectrality,
    canonical_odd_cycle,
    char_poly,
    char_poly_elementary,
    compatibility_report,
    cospectral,
    cycle_distance_spectrum_closed,
    distance_matrix,
    hermitian_eigenvalues,
    is_bipartite,
    magnitude_graph,
    random_switching,
    unit_cycle_spectrum_closed,
)

from conftest import FIG3_CHARPOLY, FIG3_D, FIG3_D_ABS, fig1_graph, fig2_graph, fig3_graph, random_graph

PI = math.pi
N_GRID = (3, 5, 7, 9, 11)
K_GRID = (0.5, 1.0, 2.0)
THETA_GRID = (0.0, PI / 3, 1.0, PI)


@contextmanager
def criterion(capsys, label, limit):
    start = time.perf_counter()
    status = "PASS"
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < limit, f"runtime {elapsed:.2f}s exceeds {limit}s"
    except BaseException as exc:
        status = f"FAIL ({type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''})"
        raise
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n[{status}] criterion {label} ({elapsed:.3f}s)")


def test_criterion_1_worked_example(capsys):
    with criterion(capsys, "1: worked example golden matrices and char poly", 1.0):
        g = fig3_graph()
        assert balance_certificate(g).balanced
        assert compatibility_report(g).graph_distance_compatible
        d = distance_matrix(g).entries
        d_abs = distance_matrix(magnitude_graph(g)).entries
        np.testing.assert_allclose(d, FIG3_D, atol=1e-12, rtol=0)
        np.testing.assert_allclose(d_abs, FIG3_D_ABS, atol=1e-12, rtol=0)
        assert abs(d[1, 3] - 2 * (1 + 1j)) <= 1e-12
        assert abs(d_abs[0, 1] - math.sqrt(2)) <= 1e-12
        np.testing.assert_allclose(char_poly(d).coeffs, FIG3_CHARPOLY, atol=1e-9, rtol=0)
        np.testing.assert_allclose(char_poly(d_abs).coeffs, FIG3_CHARPOLY, atol=1e-9, rtol=0)
        assert cospectral(d, d_abs)
        assert balance_via_distance_cospectrality(g)


def test_criterion_2_worked_example_eigenvalues(capsys):
    with criterion(capsys, "2: worked example eigenvalues are roots of the char poly", 1.0):
        vals = hermitian_eigenvalues(distance_matrix(fig3_graph()).entries).values
        assert len(vals) == 4
        for lam in vals:
            assert abs(np.polyval(FIG3_CHARPOLY, lam)) <= 1e-6
        assert abs(vals.sum()) <= 1e-8
        # the odd coefficient rules out a spectrum symmetric about zero
        assert abs(vals[0] + vals[-1]) > 1e-3


def test_criterion_3_counterexamples(capsys):
    with criterion(capsys, "3: counterexample graphs", 2.0):
        g1 = fig1_graph()
        cert = balance_certificate(g1)
        assert not cert.balanced
        assert sorted(cert.witness_cycle.vertices) == [0, 1, 2]
        assert cert.witness_gain == 1 + 1j
        assert compatibility_report(g1).graph_distance_compatible
        assert not balance_via_distance_cospectrality(g1)

        g2 = fig2_graph()
        assert balance_certificate(g2).balanced
        rep = compatibility_report(g2)
        assert rep.graph_argument_wise and not rep.graph_modulus_wise
        _, gains = rep.witnesses["modulus_wise"]
        assert sorted(round(abs(z), 9) for z in gains) == [2, 12]


def test_criterion_4_cosine_sum_closed_form(capsys):
    with criterion(capsys, "4: cosine-sum closed form vs direct sum, 1000 samples", 5.0):
        rng = np.random.default_rng(20261015)
        done = worst = 0
        while done < 1000:
            p = int(rng.integers(1, 51))
            k = float(rng.uniform(0.2, 3.0))
            theta = float(rng.uniform(0.05, 2 * PI - 0.05))
            # singular set: k = 1 and theta = 0 mod 2 pi, unreachable on this theta range
            direct = agp_sum_direct(p, k, theta)
            err = abs(agp_sum_closed(p, k, theta) - direct) / (1 + abs(direct))
            worst = max(worst, err)
            done += 1
        assert worst <= 1e-9, f"worst scaled error {worst:.3e}"


def test_criterion_5_cycle_spectrum_closed_form(capsys):
    with criterion(capsys, "5: odd-cycle closed-form spectrum vs numeric", 10.0):
        for n in N_GRID:
            for k in K_GRID:
                for theta in THETA_GRID:
                    closed = cycle_distance_spectrum_closed(n, k, theta).values
                    numeric = hermitian_eigenvalues(distance_matrix(canonical_odd_cycle(n, k, theta)).entries).values
                    np.testing.assert_allclose(closed, numeric, atol=1e-8, rtol=0, err_msg=f"{(n, k, theta)}")
        np.testing.assert_allclose(cycle_distance_spectrum_closed(3, 1, 0).values, [-1, -1, 2], atol=1e-3)
        np.testing.assert_allclose(
            cycle_distance_spectrum_closed(5, 1, PI).values, [-3.8541, -3.8541, 2, 2.8541, 2.8541], atol=1e-3
        )


def test_criterion_6_unit_cycle_sine_form(capsys):
    with criterion(capsys, "6: unit-gain sine form vs k = 1 values", 10.0):
        singular_points = 0
        for n in N_GRID:
            for theta in THETA_GRID:
                singular_points += sum(
                    abs(math.sin((2 * PI * j + theta) / n / 2)) < 1e-12 for j in range(n)
                )
                np.testing.assert_allclose(
                    unit_cycle_spectrum_closed(n, theta).values,
                    cycle_distance_spectrum_closed(n, 1.0, theta).values,
                    atol=1e-8,
                    rtol=0,
                    err_msg=f"{(n, theta)}",
                )
        # theta = 0 puts theta_0 on the 0/0 point for every n
        assert singular_points >= len(N_GRID)


def test_criterion_7_elementary_subgraph_expansion(capsys):
    with criterion(capsys, "7: elementary-subgraph char poly vs trace recurrence, 200 graphs", 60.0):
        for seed in range(200):
            g = random_graph(seed, n_range=(2, 8))
            np.testing.assert_allclose(
                char_poly_elementary(g).coeffs,
                char_poly(adjacency_matrix(g)).coeffs,
                atol=1e-8,
                rtol=0,
                err_msg=f"seed {seed}",
            )


def _compatible_pool(count):
    """Distance compatible graphs: trees, complete graphs, switched odd cycles
    and sparse random graphs that happen to qualify."""
    rng = np.random.default_rng(8)
    out, seed = [], 0
    while len(out) < count:
        kind = seed % 4
        if kind == 0:
            g = random_graph(seed, n_range=(3, 10), density=0.0)
        elif kind == 1:
            g = random_graph(seed, n_range=(3, 10), density=1.0)
        elif kind == 2:
            n = int(rng.choice([3, 5, 7, 9]))
            g = canonical_odd_cycle(n, float(rng.uniform(0.5, 2)), float(rng.uniform(-PI, PI)))
            g = apply_switching(g, random_switching(n, rng))
        else:
            g = random_graph(seed, n_range=(3, 10))
        seed += 1
        if compatibility_report(g).graph_distance_compatible:
            out.append(g)
    return out


def _mixed_pool(count):
    """Complete graphs, odd cycles and random graphs from every model."""
    rng = np.random.default_rng(9)
    out = []
    for seed in range(count):
        kind = seed % 3
        if kind == 0:
            g = random_graph(seed, n_range=(3, 10), density=1.0)
        elif kind == 1:
            n = int(rng.choice([3, 5, 7, 9]))
            k = float(rng.choice([1.0, rng.uniform(0.5, 2)]))
            theta = float(rng.choice([0.0, rng.uniform(-PI, PI)]))
            g = apply_switching(canonical_odd_cycle(n, k, theta), random_switching(n, rng))
        else:
            g = random_graph(seed, n_range=(3, 10))
        out.append(g)
    return out


def test_criterion_8_property_suites(capsys):
    with criterion(capsys, "8: property suites (a) to (f)", 180.0):
        counts = {}

        # (a) balanced implies argument-wise compatible
        hits = 0
        for seed in range(200):
            g = random_graph(seed, n_range=(3, 10), model=("balanced", None)[seed % 2])
            if balance_certificate(g).balanced:
                hits += 1
                assert compatibility_report(g).graph_argument_wise, f"(a) seed {seed}"
        assert hits >= 100
        counts["a"] = hits

        # (b) bipartite: balanced iff argument-wise compatible
        both = {True: 0, False: 0}
        for seed in range(200):
            g = random_graph(seed, n_range=(3, 10), bipartite=True, density=[0.0, 0.5, 1.0][seed % 3])
            assert is_bipartite(g)[0]
            balanced = balance_certificate(g).balanced
            assert balanced == compatibility_report(g).graph_argument_wise, f"(b) seed {seed}"
            both[balanced] += 1
        assert both[True] and both[False]
        counts["b"] = both

        # (c) compatibility flags invariant under switching
        rng = np.random.default_rng(3)
        for seed in range(200):
            g = random_graph(seed, n_range=(3, 10))
            h = apply_switching(g, random_switching(g.n, rng))
            r, s = compatibility_report(g), compatibility_report(h)
            assert (r.graph_argument_wise, r.graph_modulus_wise) == (s.graph_argument_wise, s.graph_modulus_wise)
            assert r.per_pair == s.per_pair, f"(c) seed {seed}"

        # (d) distance spectrum invariant under switching
        for g in _compatible_pool(200):
            h = apply_switching(g, random_switching(g.n, rng))
            np.testing.assert_allclose(
                hermitian_eigenvalues(distance_matrix(g).entries).values,
                hermitian_eigenvalues(distance_matrix(h).entries).values,
                atol=1e-8,
                rtol=0,
            )

        # (e) distance cospectrality iff balanced and modulus-wise compatible
        tally = {True: 0, False: 0}
        for i, g in enumerate(_mixed_pool(240)):
            expected = balance_certificate(g).balanced and compatibility_report(g).graph_modulus_wise
            assert balance_via_distance_cospectrality(g) == expected, f"(e) instance {i}"
            tally[expected] += 1
        assert tally[True] and tally[False]
        counts["e"] = tally

        # (f) adjacency cospectrality with the magnitude graph iff balanced
        tally = {True: 0, False: 0}
        for i, g in enumerate(_mixed_pool(240)):
            balanced = balance_certificate(g).balanced
            same = cospectral(adjacency_matrix(g), adjacency_matrix(magnitude_graph(g)))
            assert same == balanced, f"(f) instance {i}"
            tally[balanced] += 1
        assert tally[True] and tally[False]
        counts["f"] = tally

        with capsys.disabled():
            print(f"\n  property suite instance counts: {counts}")

