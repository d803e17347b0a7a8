from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import witness_family_distance
from evoalg.algebra import algebra_from_graph, algebra_from_random_walk
from evoalg.errors import DimensionError, SpecError
from evoalg.families import build_graph
from evoalg.homsolver import witness_for
from evoalg.numeric import (
    initial_points,
    numeric_search,
    project,
    refine,
    residual,
    residual_gradient,
    search_report,
)
from evoalg.polysys import generate_hom_system, poly_eval_rad

SMALL = ["path:3", "path:5", "cycle:4", "complete:4", "star:3", "npartite:1,1,2", "wheel:5", "friendship:2"]


def pair(spec):
    G = build_graph(spec)
    return algebra_from_graph(G), algebra_from_random_walk(G)


def exact_residual(T, A, B):
    """Same objective evaluated through the exact polynomial system."""
    S = generate_hom_system(A, B)
    assign = {(i, k): T[i][k] for i in range(A.n) for k in range(A.n)}
    total = Fraction(0)
    for p in S.polynomials():
        v = poly_eval_rad(p, assign).as_fraction()
        total += v * v
    return total


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_float_residual_matches_exact(spec, data):
    A, B = pair(spec)
    q = st.fractions(min_value=-3, max_value=3, max_denominator=8)
    T = [[data.draw(q) for _ in range(A.n)] for _ in range(A.n)]
    Tf = np.array([[float(x) for x in row] for row in T])
    assert abs(residual(Tf, A, B) - float(exact_residual(T, A, B))) < 1e-9


def test_residual_nonnegative_and_zero_at_witnesses():
    rng = np.random.default_rng(0)
    for spec in ["cycle:8", "bipartite:6,4", "complete:5", "petersen", "bipartite:1,2"]:
        G = build_graph(spec)
        A, B = algebra_from_graph(G), algebra_from_random_walk(G)
        T, _ = witness_for(G)
        assert residual(np.array(T.to_floats()), A, B) < 1e-20
        for _ in range(5):
            assert residual(rng.standard_normal((G.n, G.n)), A, B) >= 0
    A, B = pair("path:4")
    assert residual(np.zeros((4, 4)), A, B) == 0


@pytest.mark.parametrize("spec", SMALL)
def test_gradient_finite_differences(spec):
    A, B = pair(spec)
    rng = np.random.default_rng(hash(spec) % 2**32)
    T = rng.standard_normal((A.n, A.n))
    g = residual_gradient(T, A, B)
    h = 1e-6
    fd = np.zeros_like(T)
    for a in range(A.n):
        for b in range(A.n):
            E = np.zeros_like(T)
            E[a, b] = h
            fd[a, b] = (residual(T + E, A, B) - residual(T - E, A, B)) / (2 * h)
    assert np.linalg.norm(g - fd) <= 1e-6 * np.linalg.norm(fd)


def test_dimension_errors():
    A, B = pair("path:4")
    with pytest.raises(DimensionError):
        residual(np.zeros((3, 3)), A, B)
    A3, _ = pair("path:3")
    with pytest.raises(DimensionError):
        residual(np.zeros((3, 3)), A3, B)


def test_projection():
    rng = np.random.default_rng(1)
    T = rng.standard_normal((5, 4, 4)) * 0.1
    P = project(T, "unit-frobenius")
    assert np.allclose(np.linalg.norm(P, axis=(1, 2)), 1.0)
    big = T * 100
    assert np.array_equal(project(big, "unit-frobenius"), big)
    R = project(T, "unit-rows")
    assert (np.linalg.norm(R, axis=2) >= 1 - 1e-12).all()
    Z = project(np.zeros((2, 3, 3)), "unit-frobenius")
    assert np.allclose(np.linalg.norm(Z, axis=(1, 2)), 1.0)
    with pytest.raises(SpecError):
        project(T, "sphere")


def test_initial_points_reproducible():
    a = initial_points(4, 5, 11, "unit-frobenius")
    b = initial_points(4, 7, 11, "unit-frobenius")
    assert np.array_equal(a, b[:5])  # restart r does not depend on the restart count


def test_search_deterministic_and_sorted():
    A, B = pair("path:4")
    a = numeric_search(A, B, 6, 3, max_iter=200)
    b = numeric_search(A, B, 6, 3, max_iter=200)
    assert [(c.restart_index, c.residual) for c in a] == [(c.restart_index, c.residual) for c in b]
    assert all(np.array_equal(x.entries, y.entries) for x, y in zip(a, b))
    keys = [(c.residual, c.restart_index) for c in a]
    assert keys == sorted(keys)
    for c in a:
        assert abs(c.residual - residual(c.entries, A, B)) < 1e-12
        assert np.linalg.norm(c.entries) >= 1 - 1e-12


@pytest.mark.parametrize("spec", ["cycle:8", "bipartite:6,4", "bipartite:1,2"])
def test_descent_converges_from_near_a_witness(spec):
    G = build_graph(spec)
    A, B = algebra_from_graph(G), algebra_from_random_walk(G)
    W = np.array(witness_for(G)[0].to_floats())
    starts = W + 0.1 * np.random.default_rng(4).standard_normal((5, G.n, G.n))
    for c in refine(starts, A, B):
        assert c.residual < 1e-16 and c.converged
        assert witness_family_distance(c.entries, G) < 1e-6


def test_search_rejects_bad_input():
    A, B = pair("path:4")
    with pytest.raises(SpecError):
        numeric_search(A, B, 0, 1)
    with pytest.raises(SpecError):
        numeric_search(A, B, 3, 1, constraint="ball")


def test_report_shape():
    A, B = pair("path:4")
    rep = search_report("path:4", "a-to-rw", A, B, 12, 1)
    assert rep["evidence_only"] is True
    assert len(rep["candidates"]) == 10
    assert rep["best_residual"] == rep["candidates"][0]["residual"]
