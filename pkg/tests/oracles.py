"""Independent reference implementations used only by the tests.

Nothing here shares code with the package beyond reading structure
constants: the monomial oracle enumerates every target assignment and hands
the full equation system to sympy.
"""
from fractions import Fraction
from itertools import product

import numpy as np
import sympy as sp


def structure_rationals(A):
    return [[A.entry(i, k).as_fraction() for k in range(A.n)] for i in range(A.n)]


def _zero_pattern_ok(pi, C, Cp, n):
    """Necessary conditions read straight off the equations, with every
    assigned scale treated as an unknown nonzero number."""
    for i in range(n):
        for j in range(i + 1, n):
            if pi[i] is not None and pi[i] == pi[j] and any(Cp[pi[i]]):
                return False
    for i in range(n):
        for l in range(n):
            lhs = pi[i] is not None and Cp[pi[i]][l] != 0
            rhs = [k for k in range(n) if pi[k] == l and C[i][k] != 0]
            if lhs and not rhs:
                return False
            if not lhs and len(rhs) == 1:
                return False
    return True


def monomial_oracle(A, B):
    """Every nonzero map ``e_i -> a_i e_{pi(i)}`` with real ``a_i`` that
    preserves products, by brute force.  Returns ``(solutions, parametric)``
    where solutions is a set of ``(targets, values)`` with sympy values."""
    n = A.n
    C, Cp = structure_rationals(A), structure_rationals(B)
    found = set()
    parametric = []
    for pi in product([None, *range(n)], repeat=n):
        if all(t is None for t in pi) or not _zero_pattern_ok(pi, C, Cp, n):
            continue
        a = [sp.Symbol(f"a{i}", nonzero=True) if pi[i] is not None else sp.Integer(0) for i in range(n)]
        eqs = []
        for i in range(n):
            for j in range(i + 1, n):
                if pi[i] is None or pi[i] != pi[j]:
                    continue
                eqs.extend(a[i] * a[j] * _q(c) for c in Cp[pi[i]] if c != 0)
            for l in range(n):
                lhs = a[i] ** 2 * _q(Cp[pi[i]][l]) if pi[i] is not None else 0
                rhs = sum((_q(C[i][k]) * a[k] for k in range(n) if pi[k] == l), sp.Integer(0))
                e = sp.expand(lhs - rhs)
                if e != 0:
                    eqs.append(e)
        unknowns = [a[i] for i in range(n) if pi[i] is not None]
        sols = sp.solve(eqs, unknowns, dict=True) if eqs else [{}]
        for s in sols:
            vals = [sp.sympify(a[i]).subs(s) for i in range(n)]
            if any(v.free_symbols for v in vals):
                parametric.append(pi)
                continue
            if any(not v.is_real for v in vals) or any(v == 0 for v, t in zip(vals, pi) if t is not None):
                continue
            found.add((pi, tuple(sp.nsimplify(v) if v.is_rational else v for v in vals)))
    return found, parametric


def _q(f: Fraction):
    return sp.Rational(f.numerator, f.denominator)


def rad_to_sympy(x):
    """Exact sympy value of a monomial or general RadScalar."""
    total = sp.Integer(0)
    for key, c in x.terms.items():
        term = _q(c)
        for p, e in key:
            term *= sp.Integer(p) ** _q(e)
        total += term
    return total


def sympy_equal(a, b) -> bool:
    d = sp.nsimplify(a - b) if (a - b).is_rational else a - b
    if d == 0:
        return True
    x = sp.Symbol("x")
    return sp.minimal_polynomial(d, x) == x


def stationary_oracle(G):
    """Solve pi P = pi, sum pi = 1 with sympy's exact linear algebra."""
    n = G.n
    adj = G.adjacency()
    P = sp.Matrix(n, n, lambda i, k: sp.Rational(adj[i][k], sum(adj[i])))
    M = (P.T - sp.eye(n)).col_join(sp.ones(1, n))
    rhs = sp.zeros(n, 1).col_join(sp.Matrix([1]))
    sol, params = M.gauss_jordan_solve(rhs)
    assert params.shape[0] == 0, "stationary distribution is not unique"
    return [Fraction(int(v.p), int(v.q)) for v in sol]


def witness_family_distance(T, G):
    """Distance from ``T/|T|`` to the nearest normalised exact witness.

    Vertices with identical neighbourhoods (twins) can be mixed by any
    orthogonal matrix without breaking product preservation, so for complete
    bipartite graphs the witnesses form the family ``lam*O(m) + mu*O(n)``
    and the nearest member is found blockwise by orthogonal Procrustes.
    (Parts of equal size may also be swapped; callers use unequal parts.)
    Otherwise the candidates are the exact monomial solutions.
    """
    from evoalg.algebra import algebra_from_graph, algebra_from_random_walk
    from evoalg.homsolver import bipartite_scalars, complete_bipartite_parts, solve_monomial_homs

    T = np.asarray(T, dtype=float)
    U = T / np.linalg.norm(T)
    parts = complete_bipartite_parts(G)
    if parts is not None:
        p, q = list(parts[0]), list(parts[1])
        lam, mu = (float(x) for x in bipartite_scalars(len(p), len(q)))
        norm = np.sqrt(len(p) * lam**2 + len(q) * mu**2)
        best = np.zeros_like(U)
        for block, s in ((p, lam), (q, mu)):
            M = U[np.ix_(block, block)]
            u, _, vt = np.linalg.svd(M)
            best[np.ix_(block, block)] = (s / norm) * (u @ vt)
        return float(np.linalg.norm(U - best))
    A, B = algebra_from_graph(G), algebra_from_random_walk(G)
    dists = []
    for m in solve_monomial_homs(A, B).solutions:
        W = np.array(m.to_linear_map().to_floats())
        dists.append(np.linalg.norm(U - W / np.linalg.norm(W)))
    return float(min(dists))


def solver_set(res):
    """A solver result as a set of ``(targets, sympy values)``."""
    out = set()
    for m in res.solutions:
        out.add((m.target, tuple(rad_to_sympy(s) if s else sp.Integer(0) for s in m.scale)))
    return out


def same_solution_sets(solver, oracle) -> bool:
    """Exact set equality, matching values by minimal polynomial."""
    if len(solver) != len(oracle):
        return False
    remaining = list(oracle)
    for pi, vals in solver:
        for idx, (opi, ovals) in enumerate(remaining):
            if opi == pi and all(sympy_equal(a, b) for a, b in zip(vals, ovals)):
                del remaining[idx]
                break
        else:
            return False
    return not remaining
