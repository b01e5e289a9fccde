"""Homology groups of the small complex, with exact reduction to coordinates.

``homology(group, n)`` presents the degree-``n`` homology as a finitely
generated abelian group and remembers enough of the reduction to send any
cycle to its coordinates and any class back to a representative cycle.
Presentations are cached per ``(group, n)``.

>>> from .groups import parse_group_spec
>>> g = parse_group_spec("Z_2 x Z_2")
>>> str(homology(g, 2))
'Z_2'
>>> str(homology(g, 3))
'Z_2^3'

For membership questions in high degree (is this cycle a boundary?) the
full presentation is overkill; ``is_boundary`` works against a cached
column echelon of the incoming differential instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .chains import (
    Chain,
    ChainError,
    basis,
    boundary,
    chain_from_vector,
    chain_vector,
    differential_matrix,
)
from .groups import GroupSpec
from .snf import ColumnEchelon, QuotientPresentation, quotient_presentation


class NotACycleError(ChainError):
    """Raised when a chain handed to the reduction has nonzero boundary."""


class InfiniteGroupError(ValueError):
    """Raised when enumeration is asked of a group with free rank."""


def format_abelian(rank: int, divisors: tuple[int, ...]) -> str:
    """Render ``Z^rank + Z_d1 + ...`` with repeated divisors grouped.

    >>> format_abelian(2, (3, 3, 9))
    'Z^2 + Z_3^2 + Z_9'
    >>> format_abelian(0, ())
    '0'
    """
    parts = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append(f"Z^{rank}")
    for d, run in itertools.groupby(divisors):
        k = len(list(run))
        parts.append(f"Z_{d}" if k == 1 else f"Z_{d}^{k}")
    return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class HomologyClass:
    """An element of a homology presentation, in generator coordinates.

    ``free`` lists coefficients on the infinite-order generators and
    ``torsion`` the residues on the finite-order ones, in the order the
    presentation hands generators out (torsion first).
    """

    presentation: "HomologyPresentation"
    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def __post_init__(self):
        divisors = self.presentation.torsion_divisors
        if len(self.free) != self.presentation.free_rank or len(self.torsion) != len(divisors):
            raise ValueError("coordinate arity disagrees with the presentation")
        fixed = tuple(c % d for c, d in zip(self.torsion, divisors))
        object.__setattr__(self, "torsion", fixed)

    @property
    def is_zero(self) -> bool:
        return not any(self.free) and not any(self.torsion)

    def order(self) -> int:
        """Order of the class; 0 stands for infinite order."""
        if any(self.free):
            return 0
        k = 1
        for c, d in zip(self.torsion, self.presentation.torsion_divisors):
            if c:
                o = d // gcd(d, c)
                k = k * o // gcd(k, o)
        return k

    def representative(self) -> Chain:
        """A cycle reducing to this class."""
        return self.presentation.representative(self)

    def _check_mate(self, other: "HomologyClass"):
        if self.presentation is not other.presentation:
            raise ValueError("classes live in different presentations")

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        self._check_mate(other)
        return HomologyClass(
            self.presentation,
            tuple(a + b for a, b in zip(self.free, other.free)),
            tuple(a + b for a, b in zip(self.torsion, other.torsion)),
        )

    def __sub__(self, other: "HomologyClass") -> "HomologyClass":
        return self + (-other)

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(
            self.presentation,
            tuple(-a for a in self.free),
            tuple(-a for a in self.torsion),
        )

    def __rmul__(self, k: int) -> "HomologyClass":
        return HomologyClass(
            self.presentation,
            tuple(k * a for a in self.free),
            tuple(k * a for a in self.torsion),
        )

    def __str__(self):
        divisors = self.presentation.torsion_divisors
        bits = [f"{c} mod {d}" for c, d in zip(self.torsion, divisors)]
        bits += [str(c) for c in self.free]
        return "(" + ", ".join(bits) + ")" if bits else "()"


class HomologyPresentation:
    """Degree-``n`` homology of a group's small complex.

    Generators are ordered torsion first (matching ``torsion_divisors``)
    then free.  ``reduce`` sends a cycle to coordinates; ``representative``
    lifts coordinates back to a cycle, and the two are mutually inverse up
    to boundaries.
    """

    def __init__(self, group: GroupSpec, degree: int, core: QuotientPresentation):
        self.group = group
        self.degree = degree
        self._core = core
        self._monomials = basis(group, degree)

    @property
    def free_rank(self) -> int:
        return self._core.free_rank

    @property
    def torsion_divisors(self) -> tuple[int, ...]:
        return tuple(self._core.torsion)

    @property
    def num_generators(self) -> int:
        return self.free_rank + len(self.torsion_divisors)

    @property
    def is_trivial(self) -> bool:
        return self.num_generators == 0

    def zero(self) -> HomologyClass:
        return HomologyClass(self, (0,) * self.free_rank, (0,) * len(self.torsion_divisors))

    def generator(self, which: int) -> HomologyClass:
        nt = len(self.torsion_divisors)
        if not 0 <= which < self.num_generators:
            raise IndexError("no such generator")
        free = tuple(1 if which - nt == i else 0 for i in range(self.free_rank))
        torsion = tuple(1 if which == i else 0 for i in range(nt))
        return HomologyClass(self, free, torsion)

    def generators(self) -> list[HomologyClass]:
        return [self.generator(i) for i in range(self.num_generators)]

    def reduce(self, chain: Chain) -> HomologyClass:
        if chain.group != self.group or chain.degree != self.degree:
            raise ValueError("chain does not live where this presentation does")
        if not boundary(chain).is_zero:
            raise NotACycleError("chain has nonzero boundary")
        free, torsion = self._core.class_coords(chain_vector(chain))
        return HomologyClass(self, free, torsion)

    def representative(self, cls: HomologyClass) -> Chain:
        if cls.presentation is not self:
            raise ValueError("class belongs to a different presentation")
        vec = self._core.vector_from_coords(cls.free, cls.torsion)
        return chain_from_vector(self.group, self.degree, vec)

    def classes(self):
        """Iterate every class; only sensible when the group is finite."""
        if self.free_rank:
            raise InfiniteGroupError("presentation has free rank; classes are not enumerable")
        for residues in itertools.product(*(range(d) for d in self.torsion_divisors)):
            yield HomologyClass(self, (), residues)

    def abelian_type(self) -> "AbelianType":
        return AbelianType.from_divisors(self.free_rank, self.torsion_divisors)

    def __str__(self):
        return format_abelian(self.free_rank, self.torsion_divisors)

    def __repr__(self):
        return f"<HomologyPresentation H_{self.degree}({self.group}) = {self}>"


@lru_cache(maxsize=256)
def homology(group: GroupSpec, n: int) -> HomologyPresentation:
    """Present the degree-``n`` homology of the group's small complex."""
    if n < 0:
        raise ValueError("homology degree must be nonnegative")
    if n == 0:
        e_cols = [dict() for _ in basis(group, 0)]
        nrows = 0
    else:
        dm = differential_matrix(group, n)
        e_cols, nrows = dm.columns, dm.nrows
    d_cols = differential_matrix(group, n + 1).columns
    core = quotient_presentation(e_cols, nrows, d_cols)
    return HomologyPresentation(group, n, core)


def reduce_cycle(chain: Chain) -> HomologyClass:
    """Coordinates of a cycle in the cached presentation of its degree."""
    return homology(chain.group, chain.degree).reduce(chain)


def class_order(chain: Chain) -> int:
    """Order of the cycle's homology class; 0 stands for infinite."""
    return reduce_cycle(chain).order()


@lru_cache(maxsize=256)
def _image_lattice(group: GroupSpec, n: int) -> ColumnEchelon:
    ech = ColumnEchelon()
    for col in differential_matrix(group, n + 1).columns:
        ech.add(col)
    return ech


@lru_cache(maxsize=None)
def _zero_differential_slots(group: GroupSpec) -> tuple[int, ...]:
    """Slots whose factor contributes no differential at all.

    These are the infinite untwisted factors: their column of the
    boundary table is identically zero, so the whole complex splits as a
    direct sum of copies of the remaining factors' complex, one copy per
    square-free monomial on these slots.
    """
    return tuple(k for k, f in enumerate(group.factors)
                 if f.order == 0 and f.sign > 0)


@lru_cache(maxsize=None)
def _block_rest(group: GroupSpec) -> GroupSpec:
    zero = set(_zero_differential_slots(group))
    return GroupSpec(tuple(f for k, f in enumerate(group.factors) if k not in zero))


def split_blocks(chain: Chain) -> dict[tuple[int, ...], Chain]:
    """Decompose along the zero-differential slots.

    Returns a map from the exponent pattern on those slots to the chain
    over the remaining factors.  With no such slots the whole chain sits
    in the single block keyed by the empty tuple.
    """
    zero = _zero_differential_slots(chain.group)
    rest_slots = [k for k in range(len(chain.group)) if k not in set(zero)]
    rest = _block_rest(chain.group)
    buckets: dict[tuple[int, ...], dict[tuple[int, ...], int]] = {}
    for mono, coeff in chain.terms.items():
        key = tuple(mono[k] for k in zero)
        sub = tuple(mono[k] for k in rest_slots)
        buckets.setdefault(key, {})[sub] = coeff
    return {
        key: Chain(rest, chain.degree - sum(key), terms)
        for key, terms in buckets.items()
    }


def lift_block(group: GroupSpec, key: tuple[int, ...], part: Chain) -> Chain:
    """Inverse of ``split_blocks`` for a single block."""
    zero = _zero_differential_slots(group)
    rest_slots = [k for k in range(len(group)) if k not in set(zero)]
    terms: dict[tuple[int, ...], int] = {}
    for mono, coeff in part.terms.items():
        full = [0] * len(group)
        for k, e in zip(zero, key):
            full[k] = e
        for k, e in zip(rest_slots, mono):
            full[k] = e
        terms[tuple(full)] = coeff
    return Chain(group, part.degree + sum(key), terms)


def is_boundary(chain: Chain) -> bool:
    """Whether the chain bounds, decided against cached image echelons.

    Blocks over the zero-differential slots are independent, so the test
    runs per block against the small echelon of the remaining factors.
    """
    if chain.is_zero:
        return True
    if not _zero_differential_slots(chain.group):
        return _image_lattice(chain.group, chain.degree).contains(chain_vector(chain))
    return all(
        _image_lattice(part.group, part.degree).contains(chain_vector(part))
        for part in split_blocks(chain).values()
    )


def block_class_order(chain: Chain) -> int:
    """Order of the cycle's class, computed blockwise; 0 means infinite.

    Agrees with ``class_order`` but never builds a presentation of the
    full group, only of the zero-differential complement, which keeps
    high-degree queries over groups with many infinite factors cheap.
    """
    if chain.is_zero:
        return 1
    k = 1
    for part in split_blocks(chain).values():
        o = homology(part.group, part.degree).reduce(part).order()
        if o == 0:
            return 0
        k = k * o // gcd(k, o)
    return k


def generating_cycles(group: GroupSpec, n: int) -> list[Chain]:
    """Cycles whose classes generate H_n, kept sparse via the block split.

    Every class decomposes over the zero-differential blocks, so lifts of
    the complement's presentation generators, one per square-free monomial
    on the split slots, generate everything.  Blocks are listed with the
    higher monomial degree first; within a block the presentation's
    generator order is kept.
    """
    zero = _zero_differential_slots(group)
    rest = _block_rest(group)
    out: list[Chain] = []
    for a in range(min(n, len(zero)), -1, -1):
        pattern_slots = itertools.combinations(range(len(zero)), a)
        patterns = []
        for chosen in pattern_slots:
            key = tuple(1 if i in chosen else 0 for i in range(len(zero)))
            patterns.append(key)
        if not patterns:
            continue
        h = homology(rest, n - a)
        reps = [h.representative(g) for g in h.generators()]
        for key in patterns:
            for rep in reps:
                out.append(lift_block(group, key, rep))
    return out


def _prime_power_split(d: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= d:
        if d % p == 0:
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            out.append((p, e))
        p += 1
    if d > 1:
        out.append((d, 1))
    return out


@dataclass(frozen=True)
class AbelianType:
    """Isomorphism type of a finitely generated abelian group.

    Torsion is kept as a sorted multiset of prime powers ``(p, e)``, which
    makes tensor and torsion products one-line pairings.
    """

    rank: int
    primaries: tuple[tuple[int, int], ...]

    @staticmethod
    def from_divisors(rank: int, divisors) -> "AbelianType":
        primaries = []
        for d in divisors:
            primaries.extend(_prime_power_split(d))
        return AbelianType(rank, tuple(sorted(primaries)))

    @staticmethod
    def zero() -> "AbelianType":
        return AbelianType(0, ())

    @property
    def is_zero(self) -> bool:
        return self.rank == 0 and not self.primaries

    def __add__(self, other: "AbelianType") -> "AbelianType":
        return AbelianType(self.rank + other.rank,
                           tuple(sorted(self.primaries + other.primaries)))

    def tensor(self, other: "AbelianType") -> "AbelianType":
        primaries = []
        primaries.extend(self.primaries * other.rank)
        primaries.extend(other.primaries * self.rank)
        for p, e in self.primaries:
            for q, f in other.primaries:
                if p == q:
                    primaries.append((p, min(e, f)))
        return AbelianType(self.rank * other.rank, tuple(sorted(primaries)))

    def tor(self, other: "AbelianType") -> "AbelianType":
        primaries = [(p, min(e, f))
                     for p, e in self.primaries
                     for q, f in other.primaries if p == q]
        return AbelianType(0, tuple(sorted(primaries)))

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        for (p, e), run in itertools.groupby(self.primaries):
            k = len(list(run))
            d = p ** e
            parts.append(f"Z_{d}" if k == 1 else f"Z_{d}^{k}")
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=4096)
def homology_type(group: GroupSpec, n: int) -> AbelianType:
    """Isomorphism type of H_n from closed forms on one factor plus Kunneth.

    This path never touches the matrix pipeline: single factors use the
    known homology of the four periodic complexes and products recurse
    through ``kunneth_predict``, so it serves as an independent check on
    the presentations.
    """
    if n < 0:
        return AbelianType.zero()
    k = len(group)
    if k == 0:
        return AbelianType(1, ()) if n == 0 else AbelianType.zero()
    if k == 1:
        f = group.factors[0]
        if f.sign > 0:
            if f.order == 0:
                return AbelianType(1, ()) if n <= 1 else AbelianType.zero()
            if n == 0:
                return AbelianType(1, ())
            if n % 2 == 1:
                return AbelianType.from_divisors(0, (f.order,))
            return AbelianType.zero()
        if f.order == 0:
            return AbelianType.from_divisors(0, (2,)) if n == 0 else AbelianType.zero()
        if n % 2 == 0:
            return AbelianType.from_divisors(0, (2,))
        return AbelianType.zero()
    left = GroupSpec(group.factors[:1])
    right = GroupSpec(group.factors[1:])
    return kunneth_predict(left, right, n)


def kunneth_predict(left: GroupSpec, right: GroupSpec, n: int) -> AbelianType:
    """H_n of the product of two groups from the homology of the sides.

    Sum over i of H_i(left) (x) H_{n-i}(right), plus the torsion pairing
    shifted one degree down.
    """
    total = AbelianType.zero()
    for i in range(n + 1):
        total = total + homology_type(left, i).tensor(homology_type(right, n - i))
    for i in range(n):
        total = total + homology_type(left, i).tor(homology_type(right, n - 1 - i))
    return total
