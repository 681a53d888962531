import random

from tiltlab.exactlin import Matrix, PrimeField
from tiltlab.quiverrep import QuiverRep


def rand_rep(q, field, rng, dim_cap=3):
    """Random representation with uniform entries and dims up to the cap."""
    dims = [rng.randrange(0, dim_cap + 1) for _ in range(q.nvertices)]
    maps = []
    for a in q.arrows:
        maps.append(
            Matrix(
                field,
                [[rng.randrange(field.p) for _ in range(dims[a.source])] for _ in range(dims[a.target])],
                dims[a.source],
            )
        )
    return QuiverRep(q, field, dims, maps, check=False)


def random_basis_change(M, rng):
    """Conjugate all arrow maps by random invertible vertex matrices."""
    field = M.field
    while True:
        gl = [
            Matrix(field, [[rng.randrange(field.p) for _ in range(d)] for _ in range(d)], d)
            for d in M.dims
        ]
        if all(g.is_invertible() for g in gl):
            break
    maps = []
    for k, a in enumerate(M.quiver.arrows):
        maps.append(gl[a.target] @ M.maps[k] @ gl[a.source].inverse())
    return QuiverRep(M.quiver, field, M.dims, maps, check=False)
