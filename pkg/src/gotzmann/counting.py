"""Enumeration and exact counting of Gotzmann squarefree ideals of S.

Three independent routes are kept side by side: direct generation of all
supernova forms, coefficient extraction from exponential generating functions
over exact rationals, and a brute-force filter of every antichain at small n.
Counts include the zero and unit ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .core import (
    POLY,
    SQF,
    InvariantViolation,
    MonomialIdeal,
    _all_monomials,
    binom,
    iter_bits,
    mask_to_exps,
    minimalize,
    poly_ring,
    sqf_ring,
    unit_ideal,
    zero_ideal,
)
from .lex import is_gotzmann_ideal
from .classify import canonicalize
from .series import (
    DEFAULT_TRUNCATION,
    RationalSeries,
    egf_coefficient,
    series_const,
    series_exp,
    series_inverse,
    series_t,
)

ENUMERATE_MAX_VARS = 6
ANTICHAIN_MAX_VARS = 5
OSP_MAX_VARS = 10

WITH_LINEAR = "with_linear"
WITHOUT_LINEAR = "without_linear"


# ---------------------------------------------------------------------------
# ordered set partitions

@lru_cache(maxsize=None)
def fubini(n: int) -> int:
    """Number of ordered set partitions of an n-set."""
    if n == 0:
        return 1
    return sum(binom(n, k) * fubini(n - k) for k in range(1, n + 1))


@dataclass(frozen=True)
class OrderedSetPartition:
    """Disjoint nonempty blocks, in order, covering {1..n}."""

    blocks: tuple[frozenset, ...]

    def __post_init__(self):
        seen: set[int] = set()
        total = 0
        for block in self.blocks:
            if not block:
                raise ValueError("blocks must be nonempty")
            if block & seen:
                raise ValueError("blocks must be disjoint")
            seen |= block
            total += len(block)
        if seen and seen != set(range(1, total + 1)):
            raise ValueError("blocks must cover an initial segment of the positive integers")

    @property
    def nu(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def last_block_big(self) -> bool:
        """Whether the last block has more than one element (vacuous if empty)."""
        return not self.blocks or len(self.blocks[-1]) > 1


def enumerate_osp(n: int):
    """All ordered set partitions of {1..n}, deterministically."""
    if n > OSP_MAX_VARS:
        raise ValueError(f"ordered set partition enumeration is limited to {OSP_MAX_VARS}")

    def rec(remaining: tuple):
        if not remaining:
            yield ()
            return
        k = len(remaining)
        for mask in range(1, 1 << k):
            block = frozenset(remaining[j] for j in range(k) if mask >> j & 1)
            rest = tuple(x for j, x in enumerate(remaining) if not mask >> j & 1)
            for tail in rec(rest):
                yield (block,) + tail

    for blocks in rec(tuple(range(1, n + 1))):
        yield OrderedSetPartition(blocks)


def osp_to_ideal(osp: OrderedSetPartition, family: str) -> MonomialIdeal:
    """Image of a big-last-block partition in one of the two counting families.

    Blocks alternate between variable blocks and stage-monomial supports; the
    with-linear family starts with a variable block, the without-linear family
    with a monomial.  An odd tail becomes a lone principal generator.  The
    image always has full support and the same weight as the partition.
    """
    if not osp.last_block_big:
        raise ValueError("the partition's last block must have more than one element")
    n = osp.nu
    ctx = poly_ring(n)
    blocks = osp.blocks
    k = len(blocks)

    def block_mask(b):
        mask = 0
        for v in b:
            mask |= 1 << (v - 1)
        return mask

    if family == WITH_LINEAR:
        if k == 0:
            return unit_ideal(ctx)
        gens = [1 << (v - 1) for v in blocks[0]]
        acc = 0
        j = 1
    elif family == WITHOUT_LINEAR:
        if k == 0:
            return zero_ideal(ctx)
        gens = []
        acc = 0
        j = 0
    else:
        raise ValueError(f"unknown family {family!r}")
    while j < k:
        acc |= block_mask(blocks[j])
        if j + 1 < k:
            gens.extend(acc | (1 << (v - 1)) for v in blocks[j + 1])
            j += 2
        else:
            gens.append(acc)
            j += 1
    ideal = minimalize([mask_to_exps(m, n) for m in gens], ctx)
    if ideal.support_mask != ctx.full_mask:
        raise InvariantViolation("partition image lost full support")
    return ideal


# ---------------------------------------------------------------------------
# generating functions

def osp_series(T: int = DEFAULT_TRUNCATION) -> RationalSeries:
    """E.g.f. of ordered set partitions, 1/(2 - e^t)."""
    return series_inverse(series_const(2, T) - series_exp(T))


def big_last_block_series(T: int = DEFAULT_TRUNCATION) -> RationalSeries:
    """E.g.f. of ordered set partitions whose last block is not a singleton."""
    return (series_const(1, T) - series_t(T)) * osp_series(T)


def full_support_series(T: int = DEFAULT_TRUNCATION) -> RationalSeries:
    """E.g.f. of full-support Gotzmann squarefree ideals, 2(1-t)/(2-e^t) + t."""
    return 2 * big_last_block_series(T) + series_t(T)


def gotzmann_count_series(T: int = DEFAULT_TRUNCATION) -> RationalSeries:
    """E.g.f. of all Gotzmann squarefree ideals: e^t times the full-support series."""
    return series_exp(T) * full_support_series(T)


# ---------------------------------------------------------------------------
# enumeration

def submasks(mask: int):
    """All submasks of a mask, the mask itself first and zero last."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def enumerate_antichains(n: int, flavor: str = POLY):
    """Every antichain of subsets of the variables, once, as squarefree ideals.

    Walks the up-sets of the subset lattice level by level: beyond the forced
    shadow of earlier levels every choice of new monomials is free, and those
    choices are exactly the minimal generators.
    """
    if n > ANTICHAIN_MAX_VARS:
        raise ValueError(f"antichain enumeration is limited to {ANTICHAIN_MAX_VARS} variables")
    ctx = poly_ring(n) if flavor == POLY else sqf_ring(n)
    levels = [_all_monomials(n, SQF, d) for d in range(n + 1)]
    full = (1 << n) - 1

    def rec(d, forced, gens):
        if d > n:
            yield minimalize([mask_to_exps(m, n) for m in gens], ctx)
            return
        free = [m for m in levels[d] if m not in forced]
        for r in range(len(free) + 1):
            for chosen in combinations(free, r):
                level = forced | set(chosen)
                nxt = set()
                for m in level:
                    rest = full & ~m
                    while rest:
                        low = rest & -rest
                        nxt.add(m | low)
                        rest ^= low
                yield from rec(d + 1, nxt, gens + list(chosen))

    yield from rec(0, set(), [])


def _supernova_generator_sets(n: int) -> set:
    """Generator sets (as sorted mask tuples) of every supernova form on <= n variables."""
    out: set = set()

    def rec(pool, first, acc, gens):
        for m in submasks(pool):
            if m == 0 and not first:
                continue
            left = pool & ~m
            for block in submasks(left):
                if block == 0:
                    continue
                prefix = acc | m
                stage = [prefix | (1 << b) for b in iter_bits(block)]
                new_gens = gens + stage
                out.add(tuple(sorted(new_gens)))
                rec(left & ~block, False, prefix, new_gens)

    rec((1 << n) - 1, True, 0, [])
    return out


def enumerate_gotzmann(n: int) -> list[MonomialIdeal]:
    """All Gotzmann squarefree ideals of S on n variables, zero and unit included.

    Generated structurally from supernova forms over every variable subset and
    deduplicated by minimal generator set.
    """
    if n > ENUMERATE_MAX_VARS:
        raise ValueError(f"enumeration is limited to {ENUMERATE_MAX_VARS} variables")
    ctx = poly_ring(n)
    keys = _supernova_generator_sets(n)
    ideals = [zero_ideal(ctx), unit_ideal(ctx)]
    ideals.extend(minimalize([mask_to_exps(m, n) for m in masks], ctx)
                  for masks in keys)
    ideals.sort(key=lambda I: (len(I.gens), I.gens))
    return ideals


# ---------------------------------------------------------------------------
# counting

def count_up_to_symmetry(n: int) -> dict:
    """Orbit counts of nonunit Gotzmann squarefree ideals under variable relabeling.

    Orbits are bucketed by (has a linear generator) x (uses all variables);
    each bucket is expected to have 2^(n-2) orbits and the nonunit total 2^n.
    """
    if not 2 <= n <= ENUMERATE_MAX_VARS:
        raise ValueError(f"symmetry counts need 2 <= n <= {ENUMERATE_MAX_VARS}")
    full = (1 << n) - 1
    buckets = {
        "no_linear_full_support": set(),
        "linear_full_support": set(),
        "no_linear_sub_support": set(),
        "linear_sub_support": set(),
    }
    for I in enumerate_gotzmann(n):
        if I.is_unit:
            continue
        linear = I.has_linear_gen
        support = "full" if I.support_mask == full else "sub"
        name = f"{'linear' if linear else 'no_linear'}_{support}_support"
        buckets[name].add(canonicalize(I))
    counts = {name: len(keys) for name, keys in buckets.items()}
    counts["total_nonunit"] = sum(len(keys) for keys in buckets.values())
    return counts


def count_table(n_max: int, include_brute: bool = True) -> list[dict]:
    """Per-n counts from enumeration, series coefficients, and brute force.

    The brute-force column filters every antichain through the Gotzmann test
    and is only available for n <= 5; the three routes must agree.
    """
    if n_max > ENUMERATE_MAX_VARS:
        raise ValueError(f"counting is limited to {ENUMERATE_MAX_VARS} variables")
    T = max(DEFAULT_TRUNCATION, n_max)
    g = gotzmann_count_series(T)
    h = full_support_series(T)
    rows = []
    for n in range(n_max + 1):
        ideals = enumerate_gotzmann(n)
        full = (1 << n) - 1
        brute = None
        if include_brute and n <= ANTICHAIN_MAX_VARS:
            brute = sum(1 for A in enumerate_antichains(n) if is_gotzmann_ideal(A))
        rows.append({
            "n": n,
            "enumerated": len(ideals),
            "egf": egf_coefficient(g, n),
            "brute": brute,
            "full_support": sum(1 for I in ideals if I.support_mask == full),
            "full_support_egf": egf_coefficient(h, n),
        })
    return rows


def full_support_class(I: MonomialIdeal):
    """Which of the five full-support families an ideal falls in, else None.

    The split is by having a linear generator and by whether the top degree
    carries one generator or several; the one-variable ideal stands alone.
    """
    n = I.ctx.n
    if I.is_zero or I.is_unit or I.support_mask != (1 << n) - 1:
        return None
    top = max(I.degrees())
    top_count = sum(1 for e in I.gens if sum(e) == top)
    linear = I.has_linear_gen
    if n == 1:
        return "single_variable"
    if linear and top_count == 1 and top != 1:
        return "linear_principal_top"
    if linear and top_count > 1:
        return "linear_wide_top"
    if not linear and top_count == 1:
        return "no_linear_principal_top"
    if not linear and top_count > 1:
        return "no_linear_wide_top"
    return None
