"""Independent resolution-based computations used to cross-check the
closed-form module arithmetic.  Everything here works from presentation
matrices through Smith normal form, never through gcd shortcuts."""

from fractions import Fraction

from tiltlab.dedekind import FgZModule, classify, from_pieces
from tiltlab.exactlin import IntMatrix, snf


def _int_kernel(A: IntMatrix) -> IntMatrix:
    """Columns generate the integer kernel lattice of ``A``."""
    _, D, V = snf(A)
    rank = sum(1 for d in D.diagonal() if d != 0)
    cols = [[V.rows[i][j] for i in range(A.ncols)] for j in range(rank, A.ncols)]
    return IntMatrix([[col[i] for col in cols] for i in range(A.ncols)], len(cols))


def _int_solve(L: IntMatrix, B: IntMatrix) -> IntMatrix:
    """Integer solution ``X`` of ``L X = B`` (assumed to exist)."""
    U, D, V = snf(L)
    UB = U @ B
    diag = D.diagonal()
    Y = [[0] * B.ncols for _ in range(L.ncols)]
    for i in range(L.nrows):
        d = diag[i] if i < len(diag) else 0
        for j in range(B.ncols):
            v = UB.rows[i][j]
            if d == 0:
                assert v == 0, "system is inconsistent"
            else:
                assert v % d == 0, "system has no integer solution"
                if i < L.ncols:
                    Y[i][j] = v // d
    return V @ IntMatrix(Y, B.ncols)


def _stack_cols(A: IntMatrix, B: IntMatrix) -> IntMatrix:
    assert A.nrows == B.nrows
    return IntMatrix([ra + rb for ra, rb in zip(A.rows, B.rows)], A.ncols + B.ncols)


def torsion_part(N: FgZModule, d: int) -> FgZModule:
    """``N[d]``, the kernel of multiplication by ``d``, via the kernel
    lattice of the presentation: generators of ``{x : d x in im B}`` modulo
    the columns of ``B`` and the relations among the generators."""
    assert d != 0
    B = N.presentation()
    s = B.nrows
    # pairs (x, u) with d x = B u
    dI = IntMatrix([[d if i == j else 0 for j in range(s)] for i in range(s)], s)
    negB = IntMatrix([[-x for x in row] for row in B.rows], B.ncols)
    K = _int_kernel(_stack_cols(dI, negB))
    G = IntMatrix(K.rows[:s], K.ncols)  # x-parts generate the preimage lattice
    C = _int_solve(G, B)
    rels = _stack_cols(C, _int_kernel(G))
    return classify(rels)


def quotient_mod(N: FgZModule, d: int) -> FgZModule:
    """``N / dN`` via an augmented presentation."""
    B = N.presentation()
    s = B.nrows
    dI = IntMatrix([[d if i == j else 0 for j in range(s)] for i in range(s)], s)
    return classify(_stack_cols(B, dI))


def _combine(pieces: list[FgZModule]) -> FgZModule:
    free = sum(p.free_rank for p in pieces)
    torsion = [d for p in pieces for d in p.invariant_factors]
    return from_pieces(free, torsion)


def hom_oracle(M: FgZModule, N: FgZModule) -> FgZModule:
    """Morphisms out of the minimal presentation: a free generator maps
    anywhere, a torsion generator of order ``d`` must land in ``N[d]``."""
    pieces = [N] * M.free_rank + [torsion_part(N, d) for d in M.invariant_factors]
    return _combine(pieces) if pieces else FgZModule.zero()


def ext_oracle(M: FgZModule, N: FgZModule) -> FgZModule:
    """Cokernel of ``Hom(Z^gens, N) -> Hom(relations, N)``, one ``N/dN``
    block per torsion relation."""
    pieces = [quotient_mod(N, d) for d in M.invariant_factors]
    return _combine(pieces) if pieces else FgZModule.zero()


def tor_oracle(M: FgZModule, N: FgZModule) -> FgZModule:
    """Kernel of the presentation tensored with ``N``: one ``N[d]`` block
    per torsion relation."""
    pieces = [torsion_part(N, d) for d in M.invariant_factors]
    return _combine(pieces) if pieces else FgZModule.zero()


def rand_fgz(rng, max_rank=2, max_factors=3, max_val=1000) -> FgZModule:
    free = rng.randrange(0, max_rank + 1)
    torsion = [rng.randrange(2, max_val + 1) for _ in range(rng.randrange(0, max_factors + 1))]
    return from_pieces(free, torsion)
