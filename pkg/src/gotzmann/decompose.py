"""Variable decomposition, compression, reconstruction, and Alexander duality in R.

Fixing a variable x_i splits a monomial space V of the squarefree ring into
the part avoiding x_i and the part divisible by it, both living in the
squarefree ring Q on one variable fewer.  Compression replaces the two parts
by lex segments of the same dimensions; the Alexander dual of V collects the
complements-in-x of the monomials missing from V.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ALPHABET,
    SQF,
    InvariantViolation,
    MonomialIdeal,
    MonomialSpace,
    RingContext,
    all_monomials,
    component_space,
    mask_to_exps,
    minimalize,
    shadow_up,
)
from .lex import is_gotzmann_space, lex_segment


def _require_sqf(ctx: RingContext):
    if ctx.flavor != SQF:
        raise ValueError("this operation lives in the squarefree ring")


def q_context(ctx: RingContext, i: int) -> RingContext:
    """The squarefree ring with variable i removed."""
    if not 0 <= i < ctx.n:
        raise ValueError(f"variable index {i} out of range")
    return RingContext(ctx.n - 1, ctx.flavor, ctx.names[:i] + ctx.names[i + 1:])


def squeeze_mask(mask: int, i: int) -> int:
    """Drop bit position i, shifting higher bits down."""
    return (mask & ((1 << i) - 1)) | ((mask >> (i + 1)) << i)


def unsqueeze_mask(mask: int, i: int) -> int:
    """Insert a zero bit at position i, shifting higher bits up."""
    return (mask & ((1 << i) - 1)) | ((mask >> i) << (i + 1))


@dataclass(frozen=True)
class Decomposition:
    """V = vhat + x_i * vxi with both parts over the smaller ring Q."""

    i: int
    rctx: RingContext
    vhat: MonomialSpace
    vxi: MonomialSpace


def decompose(V: MonomialSpace, i: int) -> Decomposition:
    """Split V by divisibility by x_i; parts are reindexed into Q."""
    _require_sqf(V.ctx)
    if not 0 <= i < V.ctx.n:
        raise ValueError(f"variable index {i} out of range")
    if V.degree < 1:
        raise ValueError("decomposition needs degree at least one")
    q = q_context(V.ctx, i)
    bit = 1 << i
    hat = frozenset(squeeze_mask(m, i) for m in V.basis if not m & bit)
    xi = frozenset(squeeze_mask(m ^ bit, i) for m in V.basis if m & bit)
    return Decomposition(i, V.ctx, MonomialSpace(q, V.degree, hat),
                         MonomialSpace(q, V.degree - 1, xi))


def reassemble(dec: Decomposition) -> MonomialSpace:
    """Exact inverse of decompose."""
    bit = 1 << dec.i
    basis = {unsqueeze_mask(m, dec.i) for m in dec.vhat.basis}
    basis |= {unsqueeze_mask(m, dec.i) | bit for m in dec.vxi.basis}
    return MonomialSpace(dec.rctx, dec.vhat.degree, frozenset(basis))


def compress(V: MonomialSpace, i: int, order=None) -> MonomialSpace:
    """Replace both parts of the x_i-decomposition by lex segments in Q.

    The order permutes the remaining variables; by default the induced
    identity order is used, which keeps x_i conceptually last.
    """
    dec = decompose(V, i)
    q = dec.vhat.ctx
    hat_seg = lex_segment(dec.vhat.dim, dec.vhat.degree, q, order)
    xi_seg = lex_segment(dec.vxi.dim, dec.vxi.degree, q, order)
    return reassemble(Decomposition(i, V.ctx, hat_seg, xi_seg))


@dataclass(frozen=True)
class GrowthEquality:
    """Both sides of the shadow-size identity relating V to its compression."""

    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def growth_equality(V: MonomialSpace, i: int, order=None) -> GrowthEquality:
    """Shadow size of V against the shadow size of its x_i-compression.

    Both are computed through the decomposition identity
    |m V| = |n vhat| + |vhat + n vxi|, exposed for inspection.
    """
    dec = decompose(V, i)
    lhs = shadow_up(dec.vhat).dim + len(dec.vhat.basis | shadow_up(dec.vxi).basis)
    q = dec.vhat.ctx
    hat_seg = lex_segment(dec.vhat.dim, dec.vhat.degree, q, order)
    xi_seg = lex_segment(dec.vxi.dim, dec.vxi.degree, q, order)
    rhs = shadow_up(hat_seg).dim + len(hat_seg.basis | shadow_up(xi_seg).basis)
    return GrowthEquality(lhs, rhs)


def colon_with_n1(vhat: MonomialSpace) -> MonomialSpace:
    """Monomials one degree down whose every missing-variable multiple is in vhat."""
    _require_sqf(vhat.ctx)
    if vhat.degree < 1:
        raise ValueError("colon needs degree at least one")
    ctx = vhat.ctx
    full = ctx.full_mask
    out = set()
    for m in all_monomials(ctx, vhat.degree - 1):
        free = full & ~m
        ok = True
        while free:
            low = free & -free
            if (m | low) not in vhat.basis:
                ok = False
                break
            free ^= low
        if ok:
            out.add(m)
    return MonomialSpace(ctx, vhat.degree - 1, frozenset(out))


# ---------------------------------------------------------------------------
# Alexander duality

def alexander_dual_space(V: MonomialSpace) -> MonomialSpace:
    """Span of x/m over the degree-d monomials m missing from V, in degree n-d.

    The full component dualizes to the zero space and vice versa; dual of
    dual gives V back.
    """
    _require_sqf(V.ctx)
    if V.degree > V.ctx.n:
        raise ValueError("duality needs a degree within the ring")
    full = V.ctx.full_mask
    missing = (m for m in all_monomials(V.ctx, V.degree) if m not in V.basis)
    return MonomialSpace(V.ctx, V.ctx.n - V.degree,
                         frozenset(full ^ m for m in missing))


def alexander_dual_ideal(I: MonomialIdeal) -> MonomialIdeal:
    """Componentwise Alexander dual, reassembled into an ideal.

    The componentwise duals are required to be closed under the shadow; if
    they are not, the dual is not an ideal and an InvariantViolation is
    raised rather than silently repairing anything.
    """
    _require_sqf(I.ctx)
    n = I.ctx.n
    duals = []
    for e in range(n + 1):
        comp = component_space(I, n - e)
        duals.append(alexander_dual_space(comp).basis)
    gens: list[int] = []
    prev_shadow: frozenset = frozenset()
    for e in range(n + 1):
        if not prev_shadow <= duals[e]:
            raise InvariantViolation("componentwise dual is not closed under the shadow")
        gens.extend(duals[e] - prev_shadow)
        prev_shadow = shadow_up(MonomialSpace(I.ctx, e, duals[e])).basis
    return minimalize([mask_to_exps(m, n) for m in gens], I.ctx)


def is_gdual(V: MonomialSpace) -> bool:
    """Whether the Alexander dual of V is Gotzmann."""
    return is_gotzmann_space(alexander_dual_space(V))


def is_gdual_ideal(I: MonomialIdeal) -> bool:
    """Whether every componentwise Alexander dual of the ideal is Gotzmann."""
    _require_sqf(I.ctx)
    return all(is_gdual(component_space(I, d)) for d in range(I.ctx.n + 1))


# ---------------------------------------------------------------------------
# choosing a variable and rebuilding Gotzmann spaces

def pick_variable(V: MonomialSpace) -> int:
    """Index i maximizing how many basis monomials x_i divides; ties go low."""
    if not V.basis:
        raise ValueError("cannot pick a variable of the zero space")
    best, best_count = 0, -1
    for i in range(V.ctx.n):
        bit = 1 << i
        count = sum(1 for m in V.basis if m & bit)
        if count > best_count:
            best, best_count = i, count
    return best


def reconstruct(vxi: MonomialSpace, i: int, name: str | None = None) -> MonomialSpace:
    """Rebuild (n_1 vxi) + x_i * vxi over the ring with x_i adjoined at index i.

    vxi must be Gotzmann in its ring; the rebuilt space is then Gotzmann one
    variable up, which is asserted.
    """
    _require_sqf(vxi.ctx)
    q = vxi.ctx
    if not 0 <= i <= q.n:
        raise ValueError(f"insertion index {i} out of range")
    if not is_gotzmann_space(vxi):
        raise ValueError("reconstruction needs a Gotzmann space")
    if name is None:
        name = next(c for c in ALPHABET if c not in q.names)
    rctx = RingContext(q.n + 1, SQF, q.names[:i] + (name,) + q.names[i:])
    bit = 1 << i
    hat = shadow_up(vxi)
    basis = {unsqueeze_mask(m, i) for m in hat.basis}
    basis |= {unsqueeze_mask(m, i) | bit for m in vxi.basis}
    rebuilt = MonomialSpace(rctx, vxi.degree + 1, frozenset(basis))
    if not is_gotzmann_space(rebuilt):
        raise InvariantViolation("reconstruction produced a non-Gotzmann space")
    return rebuilt
