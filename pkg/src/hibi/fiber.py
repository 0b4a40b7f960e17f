"""Fiber-cone numerics: Hilbert counts, analytic spread, level and purity tests."""

from .cones import build_C, dim_formula, lattice_points
from .labelings import generators
from .poset import is_pure
from .sequences import enumerate_N, q0, q_max


def fiber_hilbert(p, eps, n):
    """Number of generators of the (n eps)-th power; degree 0 contributes 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    return len(generators(p, n * eps))


def analytic_spread(p, eps):
    """1 + the largest section dimension over the reduced sequences."""
    return 1 + max(dim_formula(build_C(p, eps, seq)) for seq in enumerate_N(p, eps))


def degree_range(p, n):
    """(q0, q_max, check): generator degrees fill the interval exactly."""
    if n == 0:
        raise ValueError("n must be nonzero")
    lo, hi = q0(p, n), q_max(p, n)
    degrees = {nu.degree for nu in generators(p, n)}
    return lo, hi, degrees == set(range(lo, hi + 1))


def is_level(p):
    """All canonical generators share one degree: only the empty sequence reduces."""
    return len(enumerate_N(p, 1)) == 1


def is_anticanonical_level(p):
    """All anticanonical generators share one degree."""
    return len(enumerate_N(p, -1)) == 1


def is_gorenstein(p):
    """Purity of the poset; equivalently the degree-1 power has one generator."""
    return is_pure(p)


def fiber_cone_decomposition(p, eps, n):
    """Map each reduced sequence to the degree-n points of its section.

    The union over all sequences equals generators(n eps).
    """
    if n < 1:
        raise ValueError("n must be positive")
    return {seq: lattice_points(build_C(p, eps, seq), n) for seq in enumerate_N(p, eps)}


def generators_via_sequences(p, n):
    """Minimal elements of T^(n) assembled from the pinned sections.

    Fast complement to the box enumeration in generators(): unions the
    dilation-|n| points over the reduced sequences of matching sign and
    sorts.  Agreement of the two routes is part of the test battery; this
    one stays cheap when |n| grows because every section is pinned down
    to its #F + t free coordinates.
    """
    if n == 0:
        return (generators(p, 0)[0],)
    eps = 1 if n > 0 else -1
    seen = {}
    for seq in enumerate_N(p, eps):
        for nu in lattice_points(build_C(p, eps, seq), abs(n)):
            seen[nu.values] = nu
    return tuple(seen[v] for v in sorted(seen))
