"""Finite-dimensional representations of acyclic quivers.

Conventions used throughout the package:

* A representation places a vector space at every vertex and a matrix
  along every arrow, shaped ``dims[target] x dims[source]`` (column-vector
  convention, maps compose left of vectors).  Representations of a quiver
  play the role of right modules over its path algebra; *left* modules are
  represented as representations of the opposite quiver.
* The path algebra is finite dimensional and hereditary because quivers
  are required to be acyclic.
* Paths are tuples of arrow indices in traversal order and are ordered by
  ``(length, arrow-name sequence)`` wherever a basis is enumerated, so all
  constructions are deterministic.
* The standard duality transposes all matrices and reverses all arrows,
  exchanging representations of a quiver and of its opposite.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import NotInvariant, QuiverMismatch
from .exactlin import Matrix, extend_to_basis

Path = tuple[int, ...]  # arrow indices, traversal order


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Quiver:
    """Acyclic quiver with named arrows; vertices are ``0..nvertices-1``."""

    nvertices: int
    arrows: tuple[Arrow, ...]

    def __post_init__(self):
        if self.nvertices <= 0:
            raise ValueError("quiver needs at least one vertex")
        names = set()
        for a in self.arrows:
            if not (0 <= a.source < self.nvertices and 0 <= a.target < self.nvertices):
                raise ValueError(f"arrow {a.name} has out-of-range endpoints")
            if a.name in names:
                raise ValueError(f"duplicate arrow name {a.name}")
            names.add(a.name)
        if self._has_cycle():
            raise ValueError("quiver must be acyclic")

    def _has_cycle(self) -> bool:
        indeg = [0] * self.nvertices
        for a in self.arrows:
            indeg[a.target] += 1
        queue = [v for v in range(self.nvertices) if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for a in self.arrows:
                if a.source == v:
                    indeg[a.target] -= 1
                    if indeg[a.target] == 0:
                        queue.append(a.target)
        return seen != self.nvertices

    def opposite(self) -> "Quiver":
        return Quiver(self.nvertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))

    def arrows_from(self, v: int) -> list[int]:
        return [k for k, a in enumerate(self.arrows) if a.source == v]

    def arrows_into(self, v: int) -> list[int]:
        return [k for k, a in enumerate(self.arrows) if a.target == v]


def kronecker() -> Quiver:
    return Quiver(2, (Arrow("a", 0, 1), Arrow("b", 0, 1)))


def affine_a3_cycle() -> Quiver:
    """Four-vertex affine quiver: an oriented arm 0->1->2->3 plus a short
    arrow 0->3; its regular modules form one rank-3 tube and a family of
    homogeneous tubes."""
    return Quiver(4, (Arrow("a1", 0, 1), Arrow("a2", 1, 2), Arrow("a3", 2, 3), Arrow("b", 0, 3)))


@functools.lru_cache(maxsize=None)
def _paths_by_source(q: Quiver) -> dict[int, list[Path]]:
    """All paths grouped by source vertex, each list ordered by
    (length, name sequence); includes the empty path."""
    out: dict[int, list[Path]] = {}
    for start in range(q.nvertices):
        found: list[Path] = [()]
        frontier: list[tuple[int, Path]] = [(start, ())]
        while frontier:
            nxt: list[tuple[int, Path]] = []
            for v, path in frontier:
                for k in q.arrows_from(v):
                    nxt.append((q.arrows[k].target, path + (k,)))
            found.extend(p for _, p in nxt)
            frontier = nxt
        found.sort(key=lambda p: (len(p), tuple(q.arrows[k].name for k in p)))
        out[start] = found
    return out


def path_target(q: Quiver, start: int, path: Path) -> int:
    return q.arrows[path[-1]].target if path else start


class QuiverRep:
    """Finite-dimensional representation: one space per vertex, one matrix
    per arrow (shape ``dims[target] x dims[source]``)."""

    __slots__ = ("quiver", "field", "dims", "maps")

    def __init__(self, quiver: Quiver, field, dims, maps, check: bool = True):
        self.quiver = quiver
        self.field = field
        self.dims = tuple(int(d) for d in dims)
        self.maps = tuple(maps)
        if check:
            if len(self.dims) != quiver.nvertices or any(d < 0 for d in self.dims):
                raise ValueError("bad dimension vector")
            if len(self.maps) != len(quiver.arrows):
                raise ValueError("one matrix per arrow required")
            for k, a in enumerate(quiver.arrows):
                if self.maps[k].shape != (self.dims[a.target], self.dims[a.source]):
                    raise ValueError(
                        f"arrow {a.name}: matrix shape {self.maps[k].shape} != "
                        f"({self.dims[a.target]}, {self.dims[a.source]})"
                    )
                if self.maps[k].field != field:
                    raise ValueError(f"arrow {a.name}: matrix over wrong field")

    @classmethod
    def from_entries(cls, quiver: Quiver, field, dims, entries: dict[str, list[list]]) -> "QuiverRep":
        """Build from per-arrow-name entry lists (missing arrows are zero)."""
        dims = tuple(dims)
        maps = []
        for a in quiver.arrows:
            shape = (dims[a.target], dims[a.source])
            if a.name in entries:
                maps.append(Matrix(field, entries[a.name], shape[1]))
            else:
                maps.append(Matrix.zeros(field, *shape))
        return cls(quiver, field, dims, maps)

    @classmethod
    def zero(cls, quiver: Quiver, field) -> "QuiverRep":
        dims = (0,) * quiver.nvertices
        return cls(quiver, field, dims, [Matrix.zeros(field, 0, 0) for _ in quiver.arrows], check=False)

    @classmethod
    def simple(cls, quiver: Quiver, field, vertex: int) -> "QuiverRep":
        dims = tuple(1 if v == vertex else 0 for v in range(quiver.nvertices))
        maps = [
            Matrix.zeros(field, dims[a.target], dims[a.source]) for a in quiver.arrows
        ]
        return cls(quiver, field, dims, maps, check=False)

    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim() == 0

    def path_action(self, start: int, path: Path) -> Matrix:
        """Composite of the arrow matrices along ``path`` starting at
        ``start`` (identity when the path is empty)."""
        out = Matrix.identity(self.field, self.dims[start])
        for k in path:
            out = self.maps[k] @ out
        return out

    def dual(self) -> "QuiverRep":
        """Standard duality: same dimensions over the opposite quiver, all
        matrices transposed."""
        op = self.quiver.opposite()
        return QuiverRep(op, self.field, self.dims, [m.transpose() for m in self.maps], check=False)

    def __eq__(self, other):
        return (
            isinstance(other, QuiverRep)
            and self.quiver == other.quiver
            and self.field == other.field
            and self.dims == other.dims
            and all(a == b for a, b in zip(self.maps, other.maps))
        )

    def __repr__(self):
        return f"QuiverRep(dims={self.dims})"


def _require_parallel(M: QuiverRep, N: QuiverRep):
    if M.quiver != N.quiver or M.field != N.field:
        raise QuiverMismatch("representations live over different quivers or fields")


class RepMap:
    """Morphism of representations: one matrix per vertex, commuting with
    all arrow maps."""

    __slots__ = ("source", "target", "maps")

    def __init__(self, source: QuiverRep, target: QuiverRep, maps, check: bool = True):
        _require_parallel(source, target)
        self.source = source
        self.target = target
        self.maps = tuple(maps)
        if check:
            for v in range(source.quiver.nvertices):
                if self.maps[v].shape != (target.dims[v], source.dims[v]):
                    raise ValueError(f"vertex {v}: map has wrong shape")
            if not self.is_valid():
                raise ValueError("vertex maps do not commute with the arrow maps")

    @classmethod
    def identity(cls, M: QuiverRep) -> "RepMap":
        return cls(M, M, [Matrix.identity(M.field, d) for d in M.dims], check=False)

    @classmethod
    def zero(cls, M: QuiverRep, N: QuiverRep) -> "RepMap":
        return cls(M, N, [Matrix.zeros(M.field, N.dims[v], M.dims[v]) for v in range(len(M.dims))], check=False)

    def is_valid(self) -> bool:
        for k, a in enumerate(self.source.quiver.arrows):
            lhs = self.target.maps[k] @ self.maps[a.source]
            rhs = self.maps[a.target] @ self.source.maps[k]
            if not (lhs == rhs):
                return False
        return True

    def compose(self, inner: "RepMap") -> "RepMap":
        """Returns ``self after inner``."""
        if inner.target is not self.source and inner.target != self.source:
            raise ValueError("composition mismatch")
        return RepMap(
            inner.source,
            self.target,
            [a @ b for a, b in zip(self.maps, inner.maps)],
            check=False,
        )

    def __add__(self, other: "RepMap") -> "RepMap":
        return RepMap(self.source, self.target, [a + b for a, b in zip(self.maps, other.maps)], check=False)

    def scale(self, c) -> "RepMap":
        return RepMap(self.source, self.target, [m.scale(c) for m in self.maps], check=False)

    def is_injective(self) -> bool:
        return all(m.kernel_basis().ncols == 0 for m in self.maps)

    def is_surjective(self) -> bool:
        return all(m.rank() == m.nrows for m in self.maps)

    def is_isomorphism(self) -> bool:
        return all(m.is_invertible() for m in self.maps)

    def __repr__(self):
        return f"RepMap({self.source.dims} -> {self.target.dims})"


# ---------------------------------------------------------------------------
# submodules, quotients, kernels


def subrep(M: QuiverRep, bases: list[Matrix]) -> tuple[QuiverRep, RepMap]:
    """Subrepresentation spanned by the given vertex-wise column bases.

    Raises :class:`NotInvariant` when the spans are not stable under the
    arrow maps.  Basis columns must be linearly independent.
    """
    field = M.field
    dims = []
    for v, B in enumerate(bases):
        if B.nrows != M.dims[v]:
            raise ValueError(f"vertex {v}: basis has wrong height")
        if B.rank() != B.ncols:
            raise ValueError(f"vertex {v}: basis columns are dependent")
        dims.append(B.ncols)
    maps = []
    for k, a in enumerate(M.quiver.arrows):
        pushed = M.maps[k] @ bases[a.source]
        induced = bases[a.target].solve_matrix(pushed)
        if induced is None:
            raise NotInvariant(f"subspaces not stable under arrow {a.name}")
        maps.append(induced)
    S = QuiverRep(M.quiver, field, dims, maps, check=False)
    incl = RepMap(S, M, bases, check=False)
    return S, incl


def quotient_by(M: QuiverRep, sub_bases: list[Matrix]) -> tuple[QuiverRep, RepMap]:
    """Quotient of ``M`` by the subrepresentation with the given bases;
    returns the quotient and the projection."""
    field = M.field
    proj_maps: list[Matrix] = []
    sections: list[Matrix] = []
    dims = []
    for v, B in enumerate(sub_bases):
        added = extend_to_basis(field, B.columns(), M.dims[v])
        full = Matrix.from_columns(field, B.columns() + added, M.dims[v])
        inv = full.inverse()
        if inv is None:
            raise ValueError(f"vertex {v}: sub basis cannot be completed")
        proj_maps.append(Matrix(field, inv.rows[B.ncols:], M.dims[v]))
        sections.append(Matrix.from_columns(field, added, M.dims[v]))
        dims.append(len(added))
    maps = []
    for k, a in enumerate(M.quiver.arrows):
        maps.append(proj_maps[a.target] @ M.maps[k] @ sections[a.source])
    Qr = QuiverRep(M.quiver, field, dims, maps, check=False)
    proj = RepMap(M, Qr, proj_maps, check=False)
    return Qr, proj


def kernel(f: RepMap) -> tuple[QuiverRep, RepMap]:
    bases = [m.kernel_basis() for m in f.maps]
    return subrep(f.source, bases)


def image(f: RepMap) -> tuple[QuiverRep, RepMap]:
    bases = [m.column_space_basis() for m in f.maps]
    return subrep(f.target, bases)


def cokernel(f: RepMap) -> tuple[QuiverRep, RepMap]:
    bases = [m.column_space_basis() for m in f.maps]
    return quotient_by(f.target, bases)


def direct_sum(M: QuiverRep, N: QuiverRep) -> QuiverRep:
    _require_parallel(M, N)
    field = M.field
    dims = tuple(a + b for a, b in zip(M.dims, N.dims))
    maps = []
    for k, a in enumerate(M.quiver.arrows):
        top = M.maps[k].hstack(Matrix.zeros(field, M.dims[a.target], N.dims[a.source]))
        bot = Matrix.zeros(field, N.dims[a.target], M.dims[a.source]).hstack(N.maps[k])
        maps.append(top.vstack(bot))
    return QuiverRep(M.quiver, field, dims, maps, check=False)


def socle(M: QuiverRep) -> tuple[QuiverRep, RepMap]:
    """Largest semisimple subrepresentation: at each vertex, the joint
    kernel of the outgoing arrow maps."""
    field = M.field
    bases = []
    for v in range(M.quiver.nvertices):
        out = M.quiver.arrows_from(v)
        stacked = Matrix.zeros(field, 0, M.dims[v])
        for k in out:
            stacked = stacked.vstack(M.maps[k])
        bases.append(stacked.kernel_basis())
    return subrep(M, bases)


def radical_bases(M: QuiverRep) -> list[Matrix]:
    """Vertex-wise bases of the radical (sum of images of all arrow maps)."""
    field = M.field
    out = []
    for v in range(M.quiver.nvertices):
        cols: list[list] = []
        for k in M.quiver.arrows_into(v):
            cols.extend(M.maps[k].columns())
        out.append(Matrix.from_columns(field, cols, M.dims[v]).column_space_basis())
    return out


def top_dims(M: QuiverRep) -> tuple[int, ...]:
    return tuple(M.dims[v] - B.ncols for v, B in enumerate(radical_bases(M)))


# ---------------------------------------------------------------------------
# projectives and presentations


@dataclass(frozen=True)
class ProjSum:
    """Explicit direct sum of indecomposable projectives with its path
    basis.  ``basis[v]`` lists ``(summand, path)`` labels for the chosen
    basis of the vertex-``v`` component, where ``path`` runs from the
    summand's vertex to ``v``."""

    quiver: Quiver
    field: object
    summands: tuple[int, ...]
    rep: QuiverRep
    basis: tuple[tuple[tuple[int, Path], ...], ...]

    def basis_index(self, v: int) -> dict[tuple[int, Path], int]:
        return {label: i for i, label in enumerate(self.basis[v])}

    def generator_coords(self) -> list[tuple[int, int]]:
        """For each summand ``p``: ``(vertex, position)`` of its generator
        (the empty path) in that vertex's basis."""
        out = []
        for p, vtx in enumerate(self.summands):
            out.append((vtx, self.basis_index(vtx)[(p, ())]))
        return out


def proj_sum(q: Quiver, field, summands) -> ProjSum:
    """The projective ``P(i_0) + P(i_1) + ...`` with its canonical path
    basis; ``P(i)`` has the paths starting at ``i`` as basis."""
    summands = tuple(int(i) for i in summands)
    paths = _paths_by_source(q)
    basis: list[list[tuple[int, Path]]] = [[] for _ in range(q.nvertices)]
    for p, start in enumerate(summands):
        for path in paths[start]:
            basis[path_target(q, start, path)].append((p, path))
    dims = tuple(len(b) for b in basis)
    index = [{label: i for i, label in enumerate(b)} for b in basis]
    maps = []
    for k, a in enumerate(q.arrows):
        m = Matrix.zeros(field, dims[a.target], dims[a.source])
        for col, (p, path) in enumerate(basis[a.source]):
            row = index[a.target][(p, path + (k,))]
            m.rows[row][col] = field.one
        maps.append(m)
    rep = QuiverRep(q, field, dims, maps, check=False)
    return ProjSum(q, field, summands, rep, tuple(tuple(b) for b in basis))


def projective(q: Quiver, field, vertex: int) -> QuiverRep:
    """Indecomposable projective at ``vertex``; its dimension at ``j`` is
    the number of paths ``vertex -> j``."""
    if not (0 <= vertex < q.nvertices):
        raise ValueError("vertex out of range")
    return proj_sum(q, field, [vertex]).rep


def injective(q: Quiver, field, vertex: int) -> QuiverRep:
    """Indecomposable injective at ``vertex`` (dual of the opposite
    projective)."""
    return projective(q.opposite(), field, vertex).dual()


def regular_dims(q: Quiver) -> tuple[int, ...]:
    """Dimension vector of the path algebra as a representation of itself
    (sum of all indecomposable projectives)."""
    paths = _paths_by_source(q)
    dims = [0] * q.nvertices
    for start in range(q.nvertices):
        for path in paths[start]:
            dims[path_target(q, start, path)] += 1
    return tuple(dims)


def extend_generators(ps: ProjSum, target: QuiverRep, gen_images: list[list]) -> RepMap:
    """The unique morphism ``ps.rep -> target`` sending the generator of
    summand ``p`` to ``gen_images[p]`` (a vector in the target's component
    at that summand's vertex)."""
    if target.quiver != ps.quiver or target.field != ps.field:
        raise QuiverMismatch("target lives over a different quiver or field")
    field = ps.field
    maps = []
    for v in range(ps.quiver.nvertices):
        cols = []
        for (p, path) in ps.basis[v]:
            act = target.path_action(ps.summands[p], path)
            cols.append(act.apply(gen_images[p]))
        maps.append(Matrix.from_columns(field, cols, target.dims[v]))
    return RepMap(ps.rep, target, maps, check=False)


def generator_images(ps: ProjSum, f: RepMap) -> list[list]:
    """Images of the canonical generators under ``f: ps.rep -> X``."""
    out = []
    for p, (vtx, pos) in enumerate(ps.generator_coords()):
        out.append(f.maps[vtx].column(pos))
    return out


PathEntry = tuple[int, int, Path, object]  # (target summand q, source summand p, path, coeff)


@dataclass(frozen=True)
class ProjPresentation:
    """Exact sequence ``0 -> P -> Q -> module -> 0`` with ``P`` and ``Q``
    explicit sums of indecomposable projectives; ``alpha`` is injective and
    ``projection`` is the cokernel map."""

    P: ProjSum
    Q: ProjSum
    alpha: RepMap
    module: QuiverRep
    projection: RepMap

    def path_matrix(self) -> list[PathEntry]:
        """``alpha`` written in path coordinates: entries ``(q, p, w, c)``
        meaning the component ``P(i_p) -> P(j_q)`` contains ``c * w`` with
        ``w`` a path from ``j_q`` to ``i_p``."""
        out: list[PathEntry] = []
        zero = self.Q.field.zero
        for p, img in enumerate(generator_images(self.P, self.alpha)):
            vtx = self.P.summands[p]
            for pos, coeff in enumerate(img):
                if coeff != zero:
                    qidx, path = self.Q.basis[vtx][pos]
                    out.append((qidx, p, path, coeff))
        return out


def proj_presentation(M: QuiverRep) -> ProjPresentation:
    """Minimal projective presentation built from the projective cover
    ``Q -> M`` (lifting a basis of ``M / rad M``); the kernel is projective
    because the path algebra is hereditary."""
    q, field = M.quiver, M.field

    def cover_data(X: QuiverRep) -> tuple[list[int], list[list]]:
        rads = radical_bases(X)
        verts: list[int] = []
        gens: list[list] = []
        for v in range(q.nvertices):
            for e in extend_to_basis(field, rads[v].columns(), X.dims[v]):
                verts.append(v)
                gens.append(e)
        return verts, gens

    verts, gens = cover_data(M)
    Qs = proj_sum(q, field, verts)
    projection = extend_generators(Qs, M, gens)
    if not projection.is_surjective():
        raise AssertionError("projective cover failed to be surjective")
    K, incl = kernel(projection)
    kverts, kgens = cover_data(K)
    Ps = proj_sum(q, field, kverts)
    if Ps.rep.dims != K.dims:
        raise AssertionError("kernel of a cover is not projective; quiver not hereditary?")
    gen_images = [incl.maps[v].apply(g) for v, g in zip(kverts, kgens)]
    alpha = extend_generators(Ps, Qs.rep, gen_images)
    if not alpha.is_injective():
        raise AssertionError("presentation map is not injective")
    return ProjPresentation(Ps, Qs, alpha, M, projection)


def is_projective(M: QuiverRep) -> bool:
    return proj_presentation(M).P.rep.is_zero()


# ---------------------------------------------------------------------------
# Hom, Ext, Tor


def hom_space(M: QuiverRep, N: QuiverRep) -> list[RepMap]:
    """Basis of the space of morphisms ``M -> N``, found by solving the
    commuting-square equations."""
    _require_parallel(M, N)
    field = M.field
    n = M.quiver.nvertices
    offs = [0]
    for v in range(n):
        offs.append(offs[-1] + N.dims[v] * M.dims[v])
    total = offs[-1]
    if total == 0:
        return []
    rows: list[list] = []
    zero = field.zero
    for k, a in enumerate(M.quiver.arrows):
        i, j = a.source, a.target
        Na, Ma = N.maps[k], M.maps[k]
        for r in range(N.dims[j]):
            for c in range(M.dims[i]):
                row = [zero] * total
                for t in range(N.dims[i]):
                    row[offs[i] + t * M.dims[i] + c] = field.add(row[offs[i] + t * M.dims[i] + c], Na.rows[r][t])
                for l in range(M.dims[j]):
                    idx = offs[j] + r * M.dims[j] + l
                    row[idx] = field.sub(row[idx], Ma.rows[l][c])
                rows.append(row)
    system = Matrix(field, rows, total)
    K = system.kernel_basis()
    basis = []
    for jcol in range(K.ncols):
        vec = K.column(jcol)
        maps = []
        for v in range(n):
            entries = vec[offs[v]: offs[v + 1]]
            maps.append(
                Matrix(
                    field,
                    [entries[r * M.dims[v]: (r + 1) * M.dims[v]] for r in range(N.dims[v])],
                    M.dims[v],
                )
            )
        basis.append(RepMap(M, N, maps, check=False))
    return basis


def hom_dim(M: QuiverRep, N: QuiverRep) -> int:
    return len(hom_space(M, N))


def _block_offsets(dims: list[int]) -> list[int]:
    offs = [0]
    for d in dims:
        offs.append(offs[-1] + d)
    return offs


def presentation_hom_matrix(pres: ProjPresentation, N: QuiverRep) -> Matrix:
    """Matrix of ``Hom(Q, N) -> Hom(P, N)`` (restriction along the
    presentation map) in generator coordinates: block ``(p, q)`` is the sum
    of ``c *`` (action of the path ``w`` on ``N``) over the path-matrix
    entries ``(q, p, w, c)``."""
    field = N.field
    pdims = [N.dims[v] for v in pres.P.summands]
    qdims = [N.dims[v] for v in pres.Q.summands]
    poffs, qoffs = _block_offsets(pdims), _block_offsets(qdims)
    out = Matrix.zeros(field, poffs[-1], qoffs[-1])
    for (qi, pi, path, coeff) in pres.path_matrix():
        block = N.path_action(pres.Q.summands[qi], path).scale(coeff)
        r0, c0 = poffs[pi], qoffs[qi]
        for r in range(block.nrows):
            for c in range(block.ncols):
                out.rows[r0 + r][c0 + c] = field.add(out.rows[r0 + r][c0 + c], block.rows[r][c])
    return out


def presentation_tensor_matrix(pres: ProjPresentation, X: QuiverRep) -> Matrix:
    """Matrix of ``P (x) X -> Q (x) X`` for a left module ``X`` (a
    representation of the opposite quiver): block ``(q, p)`` evaluates the
    path-matrix entries on ``X`` along the reversed paths."""
    if X.quiver != pres.module.quiver.opposite() or X.field != pres.module.field:
        raise QuiverMismatch("tensor factor must be a representation of the opposite quiver")
    field = X.field
    pdims = [X.dims[v] for v in pres.P.summands]
    qdims = [X.dims[v] for v in pres.Q.summands]
    poffs, qoffs = _block_offsets(pdims), _block_offsets(qdims)
    out = Matrix.zeros(field, qoffs[-1], poffs[-1])
    for (qi, pi, path, coeff) in pres.path_matrix():
        block = X.path_action(pres.P.summands[pi], tuple(reversed(path))).scale(coeff)
        r0, c0 = qoffs[qi], poffs[pi]
        for r in range(block.nrows):
            for c in range(block.ncols):
                out.rows[r0 + r][c0 + c] = field.add(out.rows[r0 + r][c0 + c], block.rows[r][c])
    return out


def hom_ext_dims(M: QuiverRep, N: QuiverRep, pres: ProjPresentation | None = None) -> tuple[int, int]:
    """``(dim Hom(M, N), dim Ext^1(M, N))`` from a projective presentation
    of ``M``: kernel and cokernel of ``Hom(Q, N) -> Hom(P, N)``."""
    _require_parallel(M, N)
    if pres is None:
        pres = proj_presentation(M)
    phi = presentation_hom_matrix(pres, N)
    rank = phi.rank()
    return phi.ncols - rank, phi.nrows - rank


def ext1_dim(M: QuiverRep, N: QuiverRep, pres: ProjPresentation | None = None) -> int:
    return hom_ext_dims(M, N, pres)[1]


def tor_dims(M: QuiverRep, X: QuiverRep, pres: ProjPresentation | None = None) -> tuple[int, int]:
    """``(dim Tor_1(M, X), dim M (x) X)`` for a right module ``M`` and a
    left module ``X``: kernel and cokernel of ``P (x) X -> Q (x) X``."""
    if pres is None:
        pres = proj_presentation(M)
    psi = presentation_tensor_matrix(pres, X)
    rank = psi.rank()
    return psi.ncols - rank, psi.nrows - rank


def tor1_dim(M: QuiverRep, X: QuiverRep, pres: ProjPresentation | None = None) -> int:
    return tor_dims(M, X, pres)[0]


def euler_form(q: Quiver, d, e) -> int:
    """Bilinear form ``sum_i d_i e_i - sum_{a: i->j} d_i e_j``; equals
    ``dim Hom - dim Ext^1`` on dimension vectors."""
    d, e = tuple(d), tuple(e)
    if len(d) != q.nvertices or len(e) != q.nvertices:
        raise ValueError("dimension vectors must match the vertex count")
    val = sum(di * ei for di, ei in zip(d, e))
    for a in q.arrows:
        val -= d[a.source] * e[a.target]
    return val
