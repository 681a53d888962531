import random

import pytest

from tiltlab.errors import NotInvariant, QuiverMismatch
from tiltlab.exactlin import Matrix, PrimeField
from tiltlab.quiverrep import (
    Arrow,
    ProjPresentation,
    Quiver,
    QuiverRep,
    RepMap,
    affine_a3_cycle,
    direct_sum,
    euler_form,
    ext1_dim,
    hom_dim,
    hom_ext_dims,
    hom_space,
    injective,
    is_projective,
    kronecker,
    proj_presentation,
    proj_sum,
    projective,
    quotient_by,
    regular_dims,
    socle,
    subrep,
    tor_dims,
    tor1_dim,
)

F5 = PrimeField(5)
KRON = kronecker()
A3 = affine_a3_cycle()


def rand_rep(q, field, rng, dim_cap=3):
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
    return QuiverRep(q, field, dims, maps)


def tube_simple(q, field, lam):
    # dims (1,1) Kronecker module with maps (1), (lam)
    return QuiverRep.from_entries(q, field, (1, 1), {"a": [[1]], "b": [[lam]]})


def test_quiver_rejects_cycles():
    with pytest.raises(ValueError):
        Quiver(2, (Arrow("a", 0, 1), Arrow("b", 1, 0)))


def test_projective_dims_on_kronecker():
    assert projective(KRON, F5, 1).dims == (0, 1)
    assert projective(KRON, F5, 0).dims == (1, 2)
    assert regular_dims(KRON) == (1, 3)


def test_sum_of_projectives_is_regular_module():
    for q in (KRON, A3):
        total = [0] * q.nvertices
        for i in range(q.nvertices):
            for v, d in enumerate(projective(q, F5, i).dims):
                total[v] += d
        assert tuple(total) == regular_dims(q)


def test_hom_between_kronecker_simples_vanishes():
    s1 = QuiverRep.simple(KRON, F5, 0)
    s2 = QuiverRep.simple(KRON, F5, 1)
    assert hom_dim(s1, s2) == 0
    assert hom_dim(s2, s1) == 0


def test_hom_contains_identity():
    m = tube_simple(KRON, F5, 2)
    assert hom_dim(m, m) >= 1


def test_end_of_projective_is_one_dimensional():
    p1 = projective(KRON, F5, 0)
    assert hom_dim(p1, p1) == 1


def test_hom_basis_maps_commute():
    rng = random.Random(3)
    for _ in range(20):
        M, N = rand_rep(KRON, F5, rng), rand_rep(KRON, F5, rng)
        for f in hom_space(M, N):
            assert f.is_valid()


def test_presentation_of_projective_has_zero_kernel():
    p0 = projective(KRON, F5, 0)
    pres = proj_presentation(p0)
    assert pres.P.rep.is_zero()
    assert pres.Q.rep.dims == p0.dims
    assert is_projective(p0)


def test_presentation_of_kronecker_simple():
    s1 = QuiverRep.simple(KRON, F5, 0)
    pres = proj_presentation(s1)
    assert pres.Q.summands == (0,)           # cover P_1
    assert sorted(pres.P.summands) == [1, 1]  # radical P_2^2
    assert pres.alpha.is_injective()


def test_presentation_of_tube_simple():
    r = tube_simple(KRON, F5, 2)
    pres = proj_presentation(r)
    assert pres.Q.summands == (0,)
    assert pres.P.summands == (1,)
    # dimension count (1,2) - (0,1) = (1,1)
    assert tuple(qd - pd for qd, pd in zip(pres.Q.rep.dims, pres.P.rep.dims)) == r.dims


def test_presentation_dims_additive_in_k0():
    rng = random.Random(4)
    for q in (KRON, A3):
        for _ in range(15):
            M = rand_rep(q, F5, rng)
            pres = proj_presentation(M)
            for v in range(q.nvertices):
                assert pres.P.rep.dims[v] - pres.Q.rep.dims[v] + M.dims[v] == 0


def test_ext_vanishes_on_projectives():
    rng = random.Random(5)
    for i in range(2):
        p = projective(KRON, F5, i)
        for _ in range(5):
            N = rand_rep(KRON, F5, rng)
            assert ext1_dim(p, N) == 0


def test_ext_of_kronecker_simples():
    s1 = QuiverRep.simple(KRON, F5, 0)
    s2 = QuiverRep.simple(KRON, F5, 1)
    assert ext1_dim(s1, s2) == 2
    assert ext1_dim(s2, s1) == 0


def test_hom_via_presentation_agrees_with_solver():
    rng = random.Random(6)
    for q in (KRON, A3):
        for _ in range(10):
            M, N = rand_rep(q, F5, rng), rand_rep(q, F5, rng)
            assert hom_ext_dims(M, N)[0] == hom_dim(M, N)


def padded_presentation(pres: ProjPresentation, vertex: int) -> ProjPresentation:
    """A non-minimal presentation: add the identity of P(vertex) to both
    ends of the exact sequence."""
    from tiltlab.quiverrep import extend_generators, generator_images

    q, field = pres.module.quiver, pres.module.field
    P2 = proj_sum(q, field, pres.P.summands + (vertex,))
    Q2 = proj_sum(q, field, pres.Q.summands + (vertex,))
    gens = generator_images(pres.P, pres.alpha)
    embedded = []
    for p, vec in enumerate(gens):
        v = pres.P.summands[p]
        pad = vec + [field.zero] * (Q2.rep.dims[v] - len(vec))
        embedded.append(pad)
    extra = [field.zero] * Q2.rep.dims[vertex]
    extra[Q2.rep.dims[vertex] - 1] = field.one  # generator of the appended summand
    alpha2 = extend_generators(P2, Q2.rep, embedded + [extra])
    proj_gens = generator_images(pres.Q, pres.projection)
    proj2 = extend_generators(Q2, pres.module, proj_gens + [[field.zero] * pres.module.dims[vertex]])
    return ProjPresentation(P2, Q2, alpha2, pres.module, proj2)


def test_ext_independent_of_presentation():
    rng = random.Random(7)
    count = 0
    for q in (KRON, A3):
        while count < 25 or q is A3 and count < 50:
            M, N = rand_rep(q, F5, rng), rand_rep(q, F5, rng)
            pres = proj_presentation(M)
            pres2 = padded_presentation(pres, rng.randrange(q.nvertices))
            assert hom_ext_dims(M, N, pres) == hom_ext_dims(M, N, pres2)
            count += 1
        if q is KRON:
            count = 25
    assert count >= 50


def test_tor_vanishes_on_projectives():
    rng = random.Random(8)
    p = projective(KRON, F5, 0)
    for _ in range(5):
        X = rand_rep(KRON.opposite(), F5, rng)
        assert tor1_dim(p, X) == 0


def test_tor_against_dual_ext():
    # Tor_1(M, D N) has the dimension of Ext^1(M, N)
    rng = random.Random(9)
    for q in (KRON, A3):
        for _ in range(10):
            M, N = rand_rep(q, F5, rng), rand_rep(q, F5, rng)
            tor1, tensor = tor_dims(M, N.dual())
            homd, extd = hom_ext_dims(M, N)
            assert tor1 == extd
            assert tensor == homd


def test_tor_requires_opposite_quiver():
    M = tube_simple(KRON, F5, 1)
    with pytest.raises(QuiverMismatch):
        tor1_dim(M, M)


def test_euler_form_values_on_kronecker():
    assert euler_form(KRON, (1, 0), (0, 1)) == -2
    assert euler_form(KRON, (2, 3), (0, 0)) == 0
    assert euler_form(KRON, (1, 1), (1, 1)) == 0


def test_euler_form_identity_sampled():
    rng = random.Random(10)
    for q in (KRON, A3):
        for _ in range(30):
            M, N = rand_rep(q, F5, rng, dim_cap=2), rand_rep(q, F5, rng, dim_cap=2)
            h, e = hom_ext_dims(M, N)
            assert euler_form(q, M.dims, N.dims) == hom_dim(M, N) - e
            assert h == hom_dim(M, N)


def test_direct_sum_dims_additive():
    m = tube_simple(KRON, F5, 1)
    s = QuiverRep.simple(KRON, F5, 1)
    d = direct_sum(m, s)
    assert d.dims == (1, 2)
    z = QuiverRep.zero(KRON, F5)
    assert direct_sum(m, z).dims == m.dims
    assert hom_dim(direct_sum(m, z), m) == hom_dim(m, m)


def test_subrep_rejects_unstable_subspace():
    m = tube_simple(KRON, F5, 1)
    with pytest.raises(NotInvariant):
        subrep(m, [Matrix(F5, [[1]]), Matrix.zeros(F5, 1, 0)])


def test_subrep_and_quotient_shapes():
    m = tube_simple(KRON, F5, 1)
    sub, incl = subrep(m, [Matrix.zeros(F5, 1, 0), Matrix(F5, [[1]])])
    assert sub.dims == (0, 1)
    assert incl.is_valid() and incl.is_injective()
    quo, proj = quotient_by(m, [Matrix.zeros(F5, 1, 0), Matrix(F5, [[1]])])
    assert quo.dims == (1, 0)
    assert proj.is_valid() and proj.is_surjective()


def test_socle_of_projective_cover_example():
    p0 = projective(KRON, F5, 0)
    soc, _ = socle(p0)
    assert soc.dims == (0, 2)


def test_injective_dims():
    assert injective(KRON, F5, 0).dims == (1, 0)
    assert injective(KRON, F5, 1).dims == (2, 1)


def test_hom_requires_same_quiver():
    m = tube_simple(KRON, F5, 1)
    n = QuiverRep.simple(A3, F5, 0)
    with pytest.raises(QuiverMismatch):
        hom_space(m, n)


def test_proj_sum_path_basis_is_deterministic():
    ps1 = proj_sum(A3, F5, (0, 2))
    ps2 = proj_sum(A3, F5, (0, 2))
    assert ps1.basis == ps2.basis
    assert ps1.rep == ps2.rep
