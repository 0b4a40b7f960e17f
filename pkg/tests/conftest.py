"""Shared fixtures and independent oracles for the test battery.

The oracles here recompute module outputs by a different route (exhaustive
DFS, powerset filtering, brute-force pair search) so the library code is
never checked against itself.
"""

from itertools import combinations

import pytest
from hypothesis import strategies as st

from hibi.corpus import all_builtins, p1, p2, p3
from hibi.poset import TOP, build_poset


@pytest.fixture(scope="session")
def poset1():
    return p1()


@pytest.fixture(scope="session")
def poset2():
    return p2()


@pytest.fixture(scope="session")
def poset3():
    return p3()


@pytest.fixture(scope="session")
def corpus():
    return all_builtins()


def chain_lengths_dfs(p, x, y):
    """All saturated chain lengths from x up to y, by explicit DFS."""
    if x == y:
        return {0}
    out = set()
    ups = () if x == TOP else p.up_covers[x]
    for u in ups:
        for length in chain_lengths_dfs(p, u, y):
            out.add(length + 1)
    return out


def downsets_powerset(p):
    """Every nonempty down-set of P, found by filtering the whole powerset."""
    elems = p.elements
    out = set()
    for r in range(1, len(elems) + 1):
        for combo in combinations(elems, r):
            s = frozenset(combo)
            if all(w in s for z in s for w in elems if p.leq(w, z)):
                out.add(s)
    return out


def brute_new_count(pieces, prime, e):
    """Degree-e vectors with no split v = v1 + prime^k * v2, by trying all pairs."""
    fresh = []
    for v in pieces[e]:
        decomposed = False
        for k in range(1, e):
            m = prime**k
            for v1 in pieces[k]:
                diff = tuple(a - b for a, b in zip(v, v1))
                if all(d % m == 0 for d in diff) and tuple(d // m for d in diff) in pieces[e - k]:
                    decomposed = True
                    break
            if decomposed:
                break
        if not decomposed:
            fresh.append(v)
    return fresh


@st.composite
def small_posets(draw, max_extra=5):
    """Random posets on x0 plus up to max_extra elements above it."""
    k = draw(st.integers(min_value=1, max_value=max_extra))
    names = tuple(f"e{i}" for i in range(k))
    pool = [(i, j) for i in range(k) for j in range(i + 1, k)]
    chosen = draw(st.frozensets(st.sampled_from(pool))) if pool else frozenset()
    covers = [(names[i], names[j]) for i, j in sorted(chosen)]
    rooted = {j for _, j in chosen}
    covers += [("x0", names[j]) for j in range(k) if j not in rooted]
    return build_poset(("x0",) + names, tuple(covers), "x0")
