"""Membership predicates for perpendicular categories and divisibility
classes of bound modules.

For a bound module ``U`` with presentation ``0 -> P -> Q -> U -> 0`` and a
test module ``M``, three independently computed conditions are equivalent:

* the map ``M (x) Q* -> M (x) P*`` induced by the dualized presentation is
  invertible,
* ``Tor_1(M, Tr U)`` and ``M (x) Tr U`` both vanish,
* ``Hom(U, M)`` and ``Ext^1(U, M)`` both vanish.

The equivalence is used as an oracle: :func:`perp_conditions` computes all
three from scratch and reports whether they agree.  Divisibility classes
(vanishing of ``Ext^1(U, -)``) stand in for the tilting classes of the
localizations attached to sets of bound modules, restricted to
finite-dimensional modules.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .artheory import BoundSet, all_submodules, is_bound, transpose
from .errors import NotBound
from .exactlin import Matrix
from .quiverrep import (
    ProjPresentation,
    QuiverRep,
    RepMap,
    ext1_dim,
    hom_dim,
    hom_space,
    presentation_hom_matrix,
    proj_presentation,
    subrep,
    tor_dims,
)


@dataclass(frozen=True)
class PerpReport:
    """The three membership conditions, each computed independently, and
    their agreement flag."""

    cond_invert: bool
    cond_tor: bool
    cond_homext: bool

    @property
    def consistent(self) -> bool:
        return self.cond_invert == self.cond_tor == self.cond_homext

    @property
    def member(self) -> bool:
        return self.cond_invert


def _members(U) -> tuple[QuiverRep, ...]:
    if isinstance(U, BoundSet):
        return U.members
    if isinstance(U, QuiverRep):
        return (U,)
    return tuple(U)


def perp_conditions(M: QuiverRep, U: QuiverRep, pres: ProjPresentation | None = None) -> PerpReport:
    """Evaluate the three equivalent membership conditions of ``M`` in the
    perpendicular category of the bound module ``U``."""
    if not is_bound(U):
        raise NotBound("perpendicular conditions require a bound module")
    if pres is None:
        pres = proj_presentation(U)

    # (i) invertibility of the induced map on tensor products with the
    # dualized presentation; in generator coordinates this is the square
    # test plus full rank
    phi = presentation_hom_matrix(pres, M)
    cond_invert = phi.nrows == phi.ncols and phi.rank() == phi.nrows

    # (ii) vanishing of Tor_1(M, Tr U) and M (x) Tr U, computed from M's
    # own presentation tensored against the transpose
    tr = transpose(U, pres)
    tor1, tensor = tor_dims(M, tr)
    cond_tor = tor1 == 0 and tensor == 0

    # (iii) vanishing of Hom(U, M) (commuting-square solver) and
    # Ext^1(U, M) (cokernel of the restriction along the presentation)
    cond_homext = hom_dim(U, M) == 0 and ext1_dim(U, M, pres) == 0

    return PerpReport(cond_invert, cond_tor, cond_homext)


def is_divisible(M: QuiverRep, U) -> bool:
    """``Ext^1(member, M) = 0`` for every member (membership in the
    divisibility class of the set)."""
    return all(ext1_dim(u, M) == 0 for u in _members(U))


def is_torsionfree(M: QuiverRep, U) -> bool:
    """``Hom(member, M) = 0`` for every member."""
    return all(hom_dim(u, M) == 0 for u in _members(U))


def in_perp_category(M: QuiverRep, U) -> bool:
    return is_divisible(M, U) and is_torsionfree(M, U)


def trace(U: QuiverRep, M: QuiverRep) -> tuple[QuiverRep, RepMap]:
    """Trace of ``U`` in ``M``: the subrepresentation spanned by the images
    of all morphisms ``U -> M``."""
    field = M.field
    cols: list[list[list]] = [[] for _ in range(M.quiver.nvertices)]
    for f in hom_space(U, M):
        for v in range(M.quiver.nvertices):
            cols[v].extend(f.maps[v].columns())
    bases = [
        Matrix.from_columns(field, cols[v], M.dims[v]).column_space_basis()
        for v in range(M.quiver.nvertices)
    ]
    return subrep(M, bases)


def transpose_duality_check(U: QuiverRep, X: QuiverRep) -> tuple[int, int]:
    """``(dim Tor_1(U, X), dim Hom(Tr U, X))`` for a left module ``X``; the
    two dimensions agree."""
    if not is_bound(U):
        raise NotBound("transpose duality requires a bound module")
    tor1, _ = tor_dims(U, X)
    return tor1, hom_dim(transpose(U), X)


def class_compare(U1, U2, testset) -> QuiverRep | None:
    """Compare divisibility classes on a list of test modules: ``None``
    when membership agrees everywhere, otherwise the first separating
    module."""
    for M in testset:
        if is_divisible(M, U1) != is_divisible(M, U2):
            return M
    return None


@dataclass(frozen=True)
class ClosureSampleResult:
    ok: bool
    trials: int
    counterexample: tuple[QuiverRep, QuiverRep, QuiverRep] | None  # (sub, quotient, middle)

    def __bool__(self) -> bool:
        return self.ok


def extension_closure_sample(U, pool, seed: int = 0, trials: int = 100) -> ClosureSampleResult:
    """Sample pairs from ``pool`` that lie in the divisibility class of
    ``U`` and check that every middle term of a nonzero extension class
    stays in the class."""
    from .artheory import build_extension
    from .errors import NoExtension

    members = _members(U)
    rng = random.Random(seed)
    eligible = [M for M in pool if is_divisible(M, members)]
    done = 0
    if not members or not eligible:
        return ClosureSampleResult(True, 0, None)
    while done < trials:
        A = eligible[rng.randrange(len(eligible))]
        C = eligible[rng.randrange(len(eligible))]
        e = ext1_dim(C, A)
        if e == 0:
            done += 1
            continue
        for idx in range(e):
            try:
                middle = build_extension(C, A, idx)
            except NoExtension:
                break
            done += 1
            if not is_divisible(middle, members):
                return ClosureSampleResult(False, done, (A, C, middle))
    return ClosureSampleResult(True, done, None)


def divisible_radical(M: QuiverRep, U, budget: int = 200_000) -> tuple[QuiverRep, list[Matrix]]:
    """Largest subrepresentation of ``M`` lying in the divisibility class
    of ``U`` (the class is closed under images, sums and extensions, so the
    sum of all such subrepresentations is again one).  Exhaustive over the
    submodule lattice at desk scale."""
    members = _members(U)
    field = M.field
    cols: list[list[list]] = [[] for _ in range(M.quiver.nvertices)]
    for bases in all_submodules(M, budget=budget):
        sub, _ = subrep(M, bases)
        if is_divisible(sub, members):
            for v in range(M.quiver.nvertices):
                cols[v].extend(bases[v].columns())
    joined = [
        Matrix.from_columns(field, cols[v], M.dims[v]).column_space_basis()
        for v in range(M.quiver.nvertices)
    ]
    sub, _ = subrep(M, joined)
    return sub, joined
