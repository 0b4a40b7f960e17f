"""Twisted-power complexity counts over the graded pieces R_{p^e - 1}.

The e-th piece of the twisted construction is the degree-(p^e - 1) part
of the target ring; a piece element is "new" when it cannot be written
as v1 + p^k * v2 with the parts drawn from the pieces of degrees k and
e - k.  The count c_e of new elements bounds the complexity growth; the
reports expose log_p(c_e)/e as a labeled estimate, never as a limit.

Budgets guard every enumeration: primes and exponents are capped, and a
piece larger than the cap aborts with an explicit error rather than
truncating.  Only successful enumerations are cached.

All counts are vector-space dimensions over the residue field.  For a
target whose twisted product is not a strong skew algebra this counts an
upper bound for the module-generator number rather than the number
itself; the reports carry estimates either way and never assert limits.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import log

from .cones import ConeSection, lattice_points
from .errors import BudgetExceeded
from .fiber import generators_via_sequences
from .labelings import Labeling, zero_labeling
from .poset import Poset


@dataclass(frozen=True)
class Budget:
    """Caps for the piece enumerations; exceeding any cap is an error."""

    max_prime: int = 5
    max_e: int = 3
    max_piece: int = 1_000_000


@dataclass(frozen=True)
class Polytope:
    """Integral polytope cut out by (coeffs . x <= rhs) rows inside a box."""

    dim: int
    inequalities: tuple
    lower: tuple
    upper: tuple

    def __post_init__(self):
        if len(self.lower) != self.dim or len(self.upper) != self.dim:
            raise ValueError("bounds must match the coordinate count")
        for coeffs, _ in self.inequalities:
            if len(coeffs) != self.dim:
                raise ValueError("inequality width must match the coordinate count")


@dataclass(frozen=True)
class TComplexityTable:
    """Rows (e, dim_e, c_e) for one prime, plus the labeled growth estimates."""

    prime: int
    target: str
    rows: tuple
    estimate: float
    last_ratio: object  # float, or None when a count vanishes

    @property
    def row_estimates(self):
        """log_prime(c_e)/e per row; None where the count vanishes."""
        return tuple(
            log(c_e, self.prime) / e if c_e > 0 else None for e, _, c_e in self.rows
        )


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _check_caps(prime, e, budget):
    if not _is_prime(prime):
        raise ValueError(f"{prime} is not prime")
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    if prime > budget.max_prime:
        raise BudgetExceeded(f"prime {prime} exceeds the cap {budget.max_prime}")
    if e > budget.max_e:
        raise BudgetExceeded(f"exponent {e} exceeds the cap {budget.max_e}")


_fiber_pieces = {}
_ehrhart_pieces = {}


def t_piece(p, prime, e, budget=None):
    """Basis of the e-th twisted piece: minimal elements of degree 1 - prime**e.

    Assembled from the pinned sections (the box route computes the same
    set; their agreement is asserted by the test battery at small n and
    the sections stay enumerable when prime**e grows).
    """
    budget = budget or Budget()
    _check_caps(prime, e, budget)
    if e == 0:
        return (zero_labeling(p),)
    key = (p, prime, e)
    cached = _fiber_pieces.get(key)
    if cached is None:
        cached = generators_via_sequences(p, 1 - prime**e)
        if len(cached) > budget.max_piece:
            raise BudgetExceeded(f"piece of size {len(cached)} exceeds the cap {budget.max_piece}")
        _fiber_pieces[key] = cached
    elif len(cached) > budget.max_piece:
        raise BudgetExceeded(f"piece of size {len(cached)} exceeds the cap {budget.max_piece}")
    return cached


def _ehrhart_piece(c, prime, e, budget):
    key = (c, prime, e)
    cached = _ehrhart_pieces.get(key)
    if cached is None:
        cached = lattice_points(c, prime**e - 1)
        if len(cached) > budget.max_piece:
            raise BudgetExceeded(f"piece of size {len(cached)} exceeds the cap {budget.max_piece}")
        _ehrhart_pieces[key] = cached
    elif len(cached) > budget.max_piece:
        raise BudgetExceeded(f"piece of size {len(cached)} exceeds the cap {budget.max_piece}")
    return cached


def _polytope_piece(delta, n, budget):
    """Integer points of the n-fold dilation of an inequality-given polytope."""
    volume = 1
    for lo, hi in zip(delta.lower, delta.upper):
        volume *= n * hi - n * lo + 1
        if volume > budget.max_piece:
            raise BudgetExceeded(f"dilation box of size {volume} exceeds the cap {budget.max_piece}")
    ranges = [range(n * lo, n * hi + 1) for lo, hi in zip(delta.lower, delta.upper)]
    rows = delta.inequalities
    return [
        pt
        for pt in product(*ranges)
        if all(sum(c * x for c, x in zip(coeffs, pt)) <= n * rhs for coeffs, rhs in rows)
    ]


def _new_elements(pieces, prime, e):
    """Top-piece vectors with no split v = v1 + prime**k * v2.

    A valid first part v1 is congruent to v coordinatewise mod prime**k,
    so the candidates are looked up by residue class; this keeps the
    search near-linear in the piece sizes instead of quadratic.
    """
    if e == 1:
        return list(pieces[1])
    buckets = {}
    for k in range(1, e):
        mod = prime**k
        residues = {}
        for v1 in pieces[k]:
            residues.setdefault(tuple(a % mod for a in v1), []).append(v1)
        buckets[k] = (mod, residues, frozenset(pieces[e - k]))
    out = []
    for v in pieces[e]:
        decomposed = False
        for k in range(1, e):
            mod, residues, second_parts = buckets[k]
            for v1 in residues.get(tuple(a % mod for a in v), ()):
                if tuple((a - b) // mod for a, b in zip(v, v1)) in second_parts:
                    decomposed = True
                    break
            if decomposed:
                break
        if not decomposed:
            out.append(v)
    return out


def _fiber_new(p, prime, e, budget):
    if e < 1:
        raise ValueError("e must be at least 1")
    pieces = {k: [nu.values for nu in t_piece(p, prime, k, budget)] for k in range(1, e + 1)}
    return _new_elements(pieces, prime, e)


def h_e_fiber(p, prime, e, budget=None):
    """The new labelings of the e-th twisted fiber piece (witnesses of c_e)."""
    budget = budget or Budget()
    return tuple(Labeling(p, vals) for vals in _fiber_new(p, prime, e, budget))


def c_e_fiber(p, prime, e, budget=None):
    """New-generator count of the e-th twisted piece of the fiber cone."""
    budget = budget or Budget()
    return len(_fiber_new(p, prime, e, budget))


def _ehrhart_new(c, prime, e, budget):
    _check_caps(prime, e, budget)
    if e < 1:
        raise ValueError("e must be at least 1")
    pieces = {
        k: [nu.values for nu in _ehrhart_piece(c, prime, k, budget)] for k in range(1, e + 1)
    }
    return _new_elements(pieces, prime, e)


def h_e_ehrhart(c, prime, e, budget=None):
    """The new labelings among the section's dilation points at level e."""
    budget = budget or Budget()
    return tuple(Labeling(c.poset, vals) for vals in _ehrhart_new(c, prime, e, budget))


def c_e_ehrhart(c, prime, e, budget=None):
    """New-generator count over the dilation lattice points of a section."""
    budget = budget or Budget()
    return len(_ehrhart_new(c, prime, e, budget))


def _polytope_new(delta, prime, e, budget):
    _check_caps(prime, e, budget)
    if e < 1:
        raise ValueError("e must be at least 1")
    pieces = {k: _polytope_piece(delta, prime**k - 1, budget) for k in range(1, e + 1)}
    return _new_elements(pieces, prime, e)


def h_e_polytope(delta, prime, e, budget=None):
    """The new integer points at level e for an inequality-given polytope."""
    budget = budget or Budget()
    return tuple(_polytope_new(delta, prime, e, budget))


def c_e_polytope(delta, prime, e, budget=None):
    """New-generator count for the Ehrhart ring of an inequality-given polytope."""
    budget = budget or Budget()
    return len(_polytope_new(delta, prime, e, budget))


def _piece_size_and_count(target, prime, e, budget):
    if isinstance(target, Poset):
        dim_e = len(t_piece(target, prime, e, budget))
        c_e = c_e_fiber(target, prime, e, budget)
    elif isinstance(target, ConeSection):
        dim_e = len(_ehrhart_piece(target, prime, e, budget))
        c_e = c_e_ehrhart(target, prime, e, budget)
    elif isinstance(target, Polytope):
        dim_e = len(_polytope_piece(target, prime**e - 1, budget))
        c_e = c_e_polytope(target, prime, e, budget)
    else:
        raise TypeError("target must be a Poset, a ConeSection, or a Polytope")
    return dim_e, c_e


def _target_tag(target):
    if isinstance(target, Poset):
        return "fiber cone"
    if isinstance(target, ConeSection):
        return "ehrhart of sequence"
    return "raw polytope"


def tcx_report(target, primes, e_max, budget=None):
    """One table per prime: rows (e, dim_e, c_e) plus labeled growth estimates.

    estimate is log_prime(c_{e_max}) / e_max, or -inf when the last count
    vanishes (finitely generated); last_ratio is log_prime of the final
    consecutive quotient when both counts are positive.  Both are desk
    readings of an asymptotic quantity, never asserted values.
    """
    budget = budget or Budget()
    if e_max < 1:
        raise ValueError("e_max must be at least 1")
    tag = _target_tag(target)
    tables = []
    for prime in primes:
        rows = []
        for e in range(1, e_max + 1):
            _check_caps(prime, e, budget)
            rows.append((e, *_piece_size_and_count(target, prime, e, budget)))
        last_c = rows[-1][2]
        estimate = log(last_c, prime) / e_max if last_c > 0 else float("-inf")
        ratio = None
        if len(rows) >= 2 and last_c > 0 and rows[-2][2] > 0:
            ratio = log(last_c / rows[-2][2], prime)
        tables.append(TComplexityTable(prime, tag, tuple(rows), estimate, ratio))
    return tuple(tables)
