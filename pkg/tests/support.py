"""Shared data for the test suite: grids, random chains, matrix helpers.

The acceptance tests and several module tests draw from the same family
grid and the same seeded chain generators; keeping them here means every
file exercises identical inputs.
"""

from __future__ import annotations

import itertools
import random

from hypothesis import strategies as st

from twisthom import (
    Chain,
    CyclicFactor,
    GroupSpec,
    boundary,
    parse_group_spec,
    zero_chain,
)
from twisthom.chains import basis
from twisthom.homology import generating_cycles


def G(text: str) -> GroupSpec:
    return parse_group_spec(text)


# The three-way oracle grid: finite groups whose bar complex fits under a
# 60000-element cap through degree 2n+1 for the degrees that matter.
ORACLE_GROUPS = ("Z_2", "Z_3", "Z_4", "Z_2 x Z_2", "Z_3 x Z_3", "Z_2~", "Z_4~")

# Small mixed bag for module-level property tests.
PROPERTY_GROUPS = (
    "Z",
    "Z~",
    "Z_3",
    "Z_4~",
    "Z^2 x Z_3",
    "Z~ x Z_2",
    "Z_2 x Z_4~",
    "Z x Z_3 x Z_3",
)


def _free(r: int) -> tuple[CyclicFactor, ...]:
    return (CyclicFactor(0),) * r


def _twisted_family():
    kinds = (
        CyclicFactor(0, 1),
        CyclicFactor(0, -1),
        CyclicFactor(2, 1),
        CyclicFactor(2, -1),
        CyclicFactor(4, 1),
        CyclicFactor(4, -1),
    )
    for k in range(1, 5):
        for combo in itertools.combinations_with_replacement(kinds, k):
            if any(f.twisted for f in combo):
                yield GroupSpec(combo)


def criterion_grid() -> list[tuple[GroupSpec, int]]:
    """Every (group, degree) cell of the verification grid, deduplicated.

    Six families, degrees 2 through 6, each with its own degree window:
    twisted groups of at most four factors with orders in {infinite, 2, 4};
    Z^r; Z^r with one primary factor; Z^r with two primaries of one prime
    and r at most 1; three primaries of one prime; Z^r x (Z_2)^s.
    """
    cells: dict[tuple[GroupSpec, int], None] = {}

    def add(group: GroupSpec, n: int) -> None:
        cells.setdefault((group, n), None)

    degrees = range(2, 7)
    for group in _twisted_family():
        for n in degrees:
            add(group, n)
    for r in range(1, 7):
        for n in degrees:
            if n % 2 or 2 * n > r:
                add(GroupSpec(_free(r)), n)
    for r in range(7):
        for p in (2, 3):
            for a in (1, 2):
                g = GroupSpec(_free(r) + (CyclicFactor(p**a),))
                for n in degrees:
                    if (n % 2 and n > r) or (n % 2 == 0 and n >= r):
                        add(g, n)
    for r in range(2):
        for p in (2, 3):
            for a, b in itertools.combinations_with_replacement((1, 2), 2):
                g = GroupSpec(_free(r) + (CyclicFactor(p**a), CyclicFactor(p**b)))
                for n in degrees:
                    add(g, n)
    for p in (2, 3):
        for a, b, c in itertools.combinations_with_replacement((1, 2), 3):
            g = GroupSpec(
                (CyclicFactor(p**a), CyclicFactor(p**b), CyclicFactor(p**c))
            )
            for n in degrees:
                add(g, n)
    for r in range(7):
        for s in range(1, 4):
            g = GroupSpec(_free(r) + (CyclicFactor(2),) * s)
            for n in degrees:
                if n % 2 or 2 * n > r:
                    add(g, n)
    return list(cells)


def grid_groups() -> list[GroupSpec]:
    seen: dict[GroupSpec, None] = {}
    for g, _ in criterion_grid():
        seen.setdefault(g, None)
    return list(seen)


def random_chain(
    rng: random.Random,
    group: GroupSpec,
    degree: int,
    max_terms: int = 3,
    max_coeff: int = 4,
) -> Chain:
    """A small random chain; zero when the degree has no basis."""
    mons = basis(group, degree)
    if not mons:
        return zero_chain(group, degree)
    terms: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        m = rng.choice(mons)
        terms[m] = terms.get(m, 0) + rng.randint(-max_coeff, max_coeff)
    return Chain(group, degree, terms)


def random_cycle(
    rng: random.Random, group: GroupSpec, n: int, max_coeff: int = 3
) -> Chain:
    """A random cycle: a few generating cycles plus a random boundary."""
    gens = generating_cycles(group, n)
    out = zero_chain(group, n)
    if gens:
        for z in rng.sample(gens, min(len(gens), 3)):
            out = out + rng.randint(-max_coeff, max_coeff) * z
    return out + boundary(random_chain(rng, group, n + 1))


_FACTOR_POOL = (
    [CyclicFactor(0, 1), CyclicFactor(0, -1)]
    + [CyclicFactor(q) for q in (2, 3, 4, 6, 8, 9)]
    + [CyclicFactor(q, -1) for q in (2, 4, 6, 8)]
)


def group_strategy(max_factors: int = 3, min_factors: int = 0):
    return st.lists(
        st.sampled_from(_FACTOR_POOL), min_size=min_factors, max_size=max_factors
    ).map(lambda fs: GroupSpec(tuple(fs)))


def chain_strategy(group: GroupSpec, degree: int, max_coeff: int = 5):
    mons = basis(group, degree)
    if not mons:
        return st.just(zero_chain(group, degree))

    def build(pairs) -> Chain:
        terms: dict = {}
        for m, c in pairs:
            terms[m] = terms.get(m, 0) + c
        return Chain(group, degree, terms)

    term = st.tuples(st.sampled_from(mons), st.integers(-max_coeff, max_coeff))
    return st.lists(term, max_size=4).map(build)


@st.composite
def group_degree_chain(draw, degrees=(1, 2, 3), max_factors: int = 3):
    group = draw(group_strategy(max_factors))
    degree = draw(st.sampled_from(degrees))
    chain = draw(chain_strategy(group, degree))
    return group, degree, chain


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            v = ai[k]
            if v:
                bk = b[k]
                for j in range(cols):
                    oi[j] += v * bk[j]
    return out


def identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]
