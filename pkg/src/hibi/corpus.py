"""Built-in study posets for the command line tools and the test battery.

Three hand-picked posets exercise the interesting behavior (mixed chain
lengths, several maximal elements, sequences of length up to 2), chains
and antichains give the degenerate shapes, and the filters family
consists of impure posets whose proper principal filters are all pure.
"""

from functools import lru_cache

from .poset import TOP, build_poset, dist, qdist


@lru_cache(maxsize=None)
def p1():
    """Two maximal chains of lengths 2 and 3 from x0 to y, plus a pendant v."""
    return build_poset(
        ("x0", "w", "x", "z", "y", "v"),
        (("x0", "w"), ("x0", "x"), ("w", "y"), ("x", "z"), ("z", "y"), ("x", "v")),
        "x0",
    )


@lru_cache(maxsize=None)
def p2():
    """Three branches meeting in two tops y0, y1, with a pendant w2."""
    return build_poset(
        ("x0", "w1", "x1", "x2", "z1", "z2", "y0", "y1", "w2"),
        (
            ("x0", "w1"),
            ("x0", "x1"),
            ("x0", "x2"),
            ("w1", "y0"),
            ("x1", "z1"),
            ("z1", "y0"),
            ("x1", "y1"),
            ("x2", "z2"),
            ("z2", "y1"),
            ("x2", "w2"),
        ),
        "x0",
    )


@lru_cache(maxsize=None)
def p3():
    """Variant of the previous poset with both routes into y1 lengthened."""
    return build_poset(
        ("x0", "w1", "x1", "x2", "z1", "z2", "z3", "y0", "y1", "w2"),
        (
            ("x0", "w1"),
            ("x0", "x1"),
            ("x0", "x2"),
            ("w1", "y0"),
            ("x1", "z1"),
            ("z1", "y0"),
            ("x1", "z2"),
            ("z2", "y1"),
            ("x2", "z3"),
            ("z3", "y1"),
            ("x2", "w2"),
        ),
        "x0",
    )


@lru_cache(maxsize=None)
def chain(length):
    """Chain x0 < a1 < ... < a_length."""
    if length < 1:
        raise ValueError("chain length must be at least 1")
    elements = ("x0",) + tuple(f"a{i}" for i in range(1, length + 1))
    covers = tuple((elements[i], elements[i + 1]) for i in range(length))
    return build_poset(elements, covers, "x0")


@lru_cache(maxsize=None)
def antichain(width):
    """width incomparable elements directly above x0."""
    if width < 1:
        raise ValueError("antichain width must be at least 1")
    tops = tuple(chr(ord("a") + i) for i in range(width))
    return build_poset(("x0",) + tops, tuple(("x0", z) for z in tops), "x0")


@lru_cache(maxsize=None)
def filters1():
    """Chain of length 2 plus a pendant: smallest impure member of the family."""
    return build_poset(
        ("x0", "a", "b", "e"),
        (("x0", "a"), ("a", "b"), ("x0", "e")),
        "x0",
    )


@lru_cache(maxsize=None)
def filters2():
    """Chain of length 3 plus a pendant."""
    return build_poset(
        ("x0", "a", "b", "c", "e"),
        (("x0", "a"), ("a", "b"), ("b", "c"), ("x0", "e")),
        "x0",
    )


@lru_cache(maxsize=None)
def filters3():
    """Diamond hung below a single branch point, plus a pendant."""
    return build_poset(
        ("x0", "a", "b", "c", "d", "e"),
        (("x0", "a"), ("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("x0", "e")),
        "x0",
    )


def upward_pure(p):
    """True when every principal filter above a non-bottom element is pure.

    Purity of the filter at w means all saturated chains from w to the
    virtual top have one length.  The whole poset may still be impure.
    """
    return all(
        dist(p, w, TOP) == qdist(p, 1, w, TOP) for w in p.elements if w != p.bottom
    )


_FACTORIES = {
    "P1": p1,
    "P2": p2,
    "P3": p3,
    "chain1": lambda: chain(1),
    "chain2": lambda: chain(2),
    "chain3": lambda: chain(3),
    "chain4": lambda: chain(4),
    "antichain2": lambda: antichain(2),
    "antichain3": lambda: antichain(3),
    "filters1": filters1,
    "filters2": filters2,
    "filters3": filters3,
}

BUILTIN_NAMES = tuple(_FACTORIES)

UPWARD_PURE_NAMES = ("filters1", "filters2", "filters3")


def builtin(name):
    """Look up a built-in poset by name; ValueError on unknown names."""
    factory = _FACTORIES.get(name)
    if factory is None:
        raise ValueError(f"unknown built-in poset {name!r}")
    return factory()


def all_builtins():
    """(name, poset) pairs for the whole corpus, in a fixed order."""
    return tuple((name, builtin(name)) for name in BUILTIN_NAMES)
