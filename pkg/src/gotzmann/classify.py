"""Supernova normal forms, star-shaped and supernova complexes, canonical keys.

A supernova form is a list of stages (m_j, B_j) with all supports pairwise
disjoint; it generates the ideal whose stage-j generators are m_1...m_j * x
for x in B_j.  Squarefree ideals of the polynomial ring are Gotzmann exactly
when they admit such a form.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .core import (
    InvariantViolation,
    MonomialIdeal,
    RingContext,
    gen_masks,
    ideal_from_masks,
    iter_bits,
    unit_ideal,
)

CANONICALIZE_MAX_VARS = 8


@dataclass(frozen=True)
class SupernovaForm:
    """Stages (monomial mask, block mask) with pairwise disjoint supports.

    The empty form generates the zero ideal.  The unit flag marks the one
    degenerate form whose ideal is the whole ring; it carries no stages.
    """

    stages: tuple[tuple[int, int], ...]
    unit: bool = False

    def __post_init__(self):
        if self.unit and self.stages:
            raise ValueError("the unit form carries no stages")
        used = 0
        for m, block in self.stages:
            if not block:
                raise ValueError("every stage needs a nonempty variable block")
            if (m | block) & used or m & block:
                raise ValueError("stage supports must be pairwise disjoint")
            used |= m | block

    @property
    def stage_count(self) -> int:
        return len(self.stages)

    def generator_masks(self) -> tuple[int, ...]:
        out = []
        acc = 0
        for m, block in self.stages:
            acc |= m
            out.extend(acc | (1 << b) for b in iter_bits(block))
        return tuple(out)


def supernova_to_ideal(form: SupernovaForm, ctx: RingContext) -> MonomialIdeal:
    """The squarefree ideal generated by the form's stages.

    The stage generators are already an antichain, so minimalizing must not
    drop anything; that is asserted.
    """
    if form.unit:
        return unit_ideal(ctx)
    masks = form.generator_masks()
    for m in masks:
        if m >> ctx.n:
            raise ValueError("form uses variables outside the ring")
    ideal = ideal_from_masks(masks, ctx)
    if len(ideal.gens) != len(masks):
        raise InvariantViolation("supernova stages did not form an antichain")
    return ideal


def recognize_supernova(I: MonomialIdeal):
    """Find a supernova form generating exactly I, or None.

    Degree-one generators are stripped into a block; otherwise a variable
    common to every remaining generator is divided out and absorbed into the
    pending stage monomial.  When neither step applies the ideal has no form.
    """
    if not I.squarefree:
        raise ValueError("supernova recognition needs a squarefree ideal")
    if I.is_zero:
        return SupernovaForm(())
    if I.is_unit:
        return SupernovaForm((), unit=True)
    remaining = set(gen_masks(I))
    stages = []
    pending = 0
    while remaining:
        linear = {g for g in remaining if g.bit_count() == 1}
        if linear:
            block = 0
            for g in linear:
                block |= g
            stages.append((pending, block))
            pending = 0
            remaining -= linear
            continue
        common = ~0
        for g in remaining:
            common &= g
        if not common:
            return None
        low = common & -common
        pending |= low
        remaining = {g ^ low for g in remaining}
    return SupernovaForm(tuple(stages))


def format_supernova(form: SupernovaForm, ctx: RingContext) -> str:
    """Nested product notation, e.g. "a*(b,c) + a*d*(e)"."""
    if form.unit:
        return "1"
    if not form.stages:
        return "0"
    parts = []
    acc = 0
    for m, block in form.stages:
        acc |= m
        names = [ctx.name(i) for i in iter_bits(acc)]
        block_names = ",".join(ctx.name(i) for i in iter_bits(block))
        prefix = "*".join(names) + "*" if names else ""
        parts.append(f"{prefix}({block_names})")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# facet complexes

@dataclass(frozen=True)
class FacetComplex:
    """A simplicial complex given by its facets (a hypergraph edge set)."""

    n: int
    facets: tuple[int, ...]

    def __post_init__(self):
        for f in self.facets:
            if f <= 0 or f >> self.n:
                raise ValueError(f"facet {f} is not a nonempty subset of the vertices")
        for f in self.facets:
            for g in self.facets:
                if f != g and f & g == f:
                    raise ValueError("facets must form an antichain")

    @property
    def dimension(self) -> int:
        return max((f.bit_count() for f in self.facets), default=-1) - 1


def facet_complex_of(I: MonomialIdeal) -> FacetComplex:
    """Facets = minimal generators of a squarefree ideal (no unit generator)."""
    if I.is_unit:
        raise ValueError("the unit ideal has no facet complex")
    return FacetComplex(I.ctx.n, gen_masks(I))


def is_star_shaped(h: FacetComplex) -> bool:
    """Whether some common face one vertex smaller sits inside every facet.

    Requires a pure complex (all facets the same size).
    """
    if not h.facets:
        return True
    sizes = {f.bit_count() for f in h.facets}
    if len(sizes) > 1:
        raise ValueError("star-shaped test requires a pure complex")
    k = sizes.pop()
    common = ~0
    for f in h.facets:
        common &= f
    return common.bit_count() >= k - 1


def is_supernova_complex(h: FacetComplex) -> bool:
    """Whether a nested chain of faces F_0 < F_1 < ... pins every facet.

    Every facet on i+1 vertices must contain the i-vertex face of the chain;
    sizes with no facets impose no constraint.  Processing constrained sizes
    from the top down, intersecting as we go, decides existence.
    """
    by_size: dict[int, int] = {}
    for f in h.facets:
        s = f.bit_count()
        by_size[s] = by_size.get(s, ~0) & f
    acc = ~0
    for s in sorted(by_size, reverse=True):
        if s < 2:
            continue  # one-vertex facets only need the empty face
        acc &= by_size[s]
        if acc.bit_count() < s - 1:
            return False
    return True


# ---------------------------------------------------------------------------
# canonical keys under variable relabeling

def _remap_mask(mask: int, perm) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= 1 << perm[i]
    return out


@lru_cache(maxsize=4)
def _mask_relabel_tables(n: int):
    """One mask-remapping lookup table per permutation of n variables."""
    tables = []
    for perm in permutations(range(n)):
        tables.append([_remap_mask(m, perm) for m in range(1 << n)])
    return tables


def canonicalize(I: MonomialIdeal):
    """Least serialized generator set over all variable relabelings.

    Two squarefree ideals get equal keys exactly when a permutation of the
    variables carries one onto the other.  The factorial search is guarded.
    """
    n = I.ctx.n
    if n > CANONICALIZE_MAX_VARS:
        raise ValueError(f"canonicalization is limited to {CANONICALIZE_MAX_VARS} variables")
    if I.squarefree:
        masks = gen_masks(I)
        if n <= 7:
            return min(tuple(sorted(map(table.__getitem__, masks)))
                       for table in _mask_relabel_tables(n))
        return min(tuple(sorted(_remap_mask(m, perm) for m in masks))
                   for perm in permutations(range(n)))
    best = None
    for perm in permutations(range(n)):
        relabeled = []
        for e in I.gens:
            out = [0] * n
            for i, x in enumerate(e):
                out[perm[i]] = x
            relabeled.append(tuple(out))
        key = tuple(sorted((sum(e), e) for e in relabeled))
        if best is None or key < best:
            best = key
    return best
