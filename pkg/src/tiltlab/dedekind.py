"""Finitely generated modules over the integers, localization arithmetic,
and the classification of divisibility classes by sets of primes.

Modules are kept in invariant-factor form ``Z^a + Z/d_1 + ... + Z/d_t``
with ``2 <= d_1 | d_2 | ...``; elements are coordinate tuples in this
decomposition (free coordinates first).  The subring of the rationals with
denominators supported on a prime set ``P`` plays the role of the
localization at the multiplicative set generated by ``P``; extension of a
map along ``Z -> Z[1/P]`` is constructive for finitely generated targets.

For a multiplicative set, the primes dividing its elements are exactly the
primes dividing its generators (any prime factor of a product divides one
of the factors), which is why :func:`u_set_of_ore` reads supports off the
generators.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import factorint, isprime

from .errors import NotContained, NotDivisible, NotPrime
from .exactlin import IntMatrix, Matrix, QQ, snf


@dataclass(frozen=True)
class FgZModule:
    """``Z^free_rank + Z/d_1 + ...`` with the divisibility chain enforced."""

    free_rank: int
    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        prev = None
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError("invariant factors must be >= 2")
            if prev is not None and d % prev != 0:
                raise ValueError("invariant factors must form a divisibility chain")
            prev = d

    @classmethod
    def zero(cls) -> "FgZModule":
        return cls(0, ())

    @classmethod
    def free(cls, rank: int) -> "FgZModule":
        return cls(rank, ())

    @classmethod
    def cyclic(cls, n: int) -> "FgZModule":
        n = abs(n)
        if n == 0:
            return cls(1, ())
        if n == 1:
            return cls.zero()
        return cls(0, (n,))

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def is_torsion(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        """Number of elements, or ``None`` when infinite."""
        if self.free_rank:
            return None
        return math.prod(self.invariant_factors)

    def ngens(self) -> int:
        return self.free_rank + len(self.invariant_factors)

    def presentation(self) -> IntMatrix:
        """Minimal presentation: generators index the rows, relation
        columns kill the torsion generators."""
        rows = self.ngens()
        cols = len(self.invariant_factors)
        mat = [[0] * cols for _ in range(rows)]
        for j, d in enumerate(self.invariant_factors):
            mat[self.free_rank + j][j] = d
        return IntMatrix(mat, cols)

    def reduce_element(self, coords) -> tuple[int, ...]:
        coords = [int(c) for c in coords]
        if len(coords) != self.ngens():
            raise ValueError("element has wrong coordinate length")
        out = coords[: self.free_rank]
        for c, d in zip(coords[self.free_rank:], self.invariant_factors):
            out.append(c % d)
        return tuple(out)

    def element_order(self, coords) -> int | None:
        """Additive order of an element, ``None`` when infinite."""
        coords = self.reduce_element(coords)
        if any(coords[: self.free_rank]):
            return None
        ord_ = 1
        for c, d in zip(coords[self.free_rank:], self.invariant_factors):
            ord_ = math.lcm(ord_, d // math.gcd(c, d))
        return ord_

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append(f"Z^{self.free_rank}" if self.free_rank > 1 else "Z")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " + ".join(parts) if parts else "0"


def classify(presentation: IntMatrix) -> FgZModule:
    """Cokernel of the presentation (rows are generators, columns are
    relations) in canonical invariant-factor form."""
    _, D, _ = snf(presentation)
    diag = D.diagonal()
    nonzero = [d for d in diag if d != 0]
    factors = tuple(d for d in nonzero if d > 1)
    return FgZModule(presentation.nrows - len(nonzero), factors)


def from_pieces(free_rank: int, torsion_orders) -> FgZModule:
    """Canonical form of ``Z^free_rank + sum Z/k`` for arbitrary ``k``."""
    orders = [abs(int(k)) for k in torsion_orders]
    if any(k == 0 for k in orders):
        free_rank += sum(1 for k in orders if k == 0)
        orders = [k for k in orders if k != 0]
    orders = [k for k in orders if k != 1]
    rows = free_rank + len(orders)
    mat = [[0] * len(orders) for _ in range(rows)]
    for j, k in enumerate(orders):
        mat[free_rank + j][j] = k
    return classify(IntMatrix(mat, len(orders)))


def hom(M: FgZModule, N: FgZModule) -> FgZModule:
    """Closed form from invariant factors."""
    torsion = [n for n in N.invariant_factors for _ in range(M.free_rank)]
    torsion += [
        math.gcd(m, n) for m in M.invariant_factors for n in N.invariant_factors
    ]
    return from_pieces(M.free_rank * N.free_rank, torsion)


def ext1(M: FgZModule, N: FgZModule) -> FgZModule:
    """Closed form: the free part of ``M`` contributes nothing, each
    ``Z/m`` contributes ``(Z/m)^rank(N)`` plus ``Z/gcd(m, n)`` pieces."""
    torsion = [m for m in M.invariant_factors for _ in range(N.free_rank)]
    torsion += [
        math.gcd(m, n) for m in M.invariant_factors for n in N.invariant_factors
    ]
    return from_pieces(0, torsion)


def tor1(M: FgZModule, N: FgZModule) -> FgZModule:
    """Closed form: pairwise gcds of the torsion factors."""
    torsion = [math.gcd(m, n) for m in M.invariant_factors for n in N.invariant_factors]
    return from_pieces(0, torsion)


# ---------------------------------------------------------------------------
# prime sets, Ore sets, localizations


@dataclass(frozen=True)
class PrimeSet:
    primes: tuple[int, ...]

    def __post_init__(self):
        seen = set()
        prev = 0
        for p in self.primes:
            if not isprime(p):
                raise NotPrime(f"{p} is not prime")
            if p in seen or p < prev:
                raise ValueError("primes must be sorted and distinct")
            seen.add(p)
            prev = p

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(tuple(sorted(set(primes))))

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __len__(self):
        return len(self.primes)


@dataclass(frozen=True)
class OreSet:
    """Multiplicative set of nonzero integers, given by generators."""

    generators: tuple[int, ...]

    def __post_init__(self):
        if any(g == 0 for g in self.generators):
            raise ValueError("Ore set generators must be nonzero")


def prime_support(n: int) -> tuple[int, ...]:
    return tuple(sorted(factorint(abs(n)).keys())) if abs(n) > 1 else ()


def u_set_of_ore(S: OreSet) -> PrimeSet:
    """Primes ``p`` with ``Z/p`` killed by some element of the
    multiplicative closure: exactly the primes dividing a generator."""
    primes: set[int] = set()
    for g in S.generators:
        primes.update(prime_support(g))
    return PrimeSet(tuple(sorted(primes)))


def universal_localization_eq(S: OreSet) -> bool:
    """Check ``Z[1/s : s generator] = Z[1/p : p in primes(S)]`` as subrings
    of the rationals by comparing prime supports both ways."""
    P = set(u_set_of_ore(S).primes)
    # every generator becomes invertible in Z[1/P]
    for g in S.generators:
        if not set(prime_support(g)) <= P:
            return False
    # every p in P divides some generator, so 1/p is a generator multiple
    for p in P:
        if not any(g % p == 0 for g in S.generators):
            return False
    return True


def is_divisible_by(M: FgZModule, P: PrimeSet) -> bool:
    """Membership in the divisibility class of ``{Z/p : p in P}``; the
    homological characterization (``Ext^1(Z/p, M) = 0``) and the elementary
    one (``M = pM``) are both computed and compared."""
    homological = all(ext1(FgZModule.cyclic(p), M).is_zero() for p in P.primes)
    elementary = True
    for p in P.primes:
        # |M / pM| = p^rank * prod gcd(p, d)
        size = p**M.free_rank
        for d in M.invariant_factors:
            size *= math.gcd(p, d)
        if size != 1:
            elementary = False
            break
    if homological != elementary:
        raise AssertionError("divisibility characterizations disagree")
    return homological


@dataclass(frozen=True)
class LocalizedRational:
    """Element of ``Z[1/P]``: a reduced fraction whose denominator is
    supported on ``P``."""

    numerator: int
    denominator: int
    support: PrimeSet

    def __post_init__(self):
        if self.denominator <= 0:
            raise ValueError("denominator must be positive")
        if math.gcd(self.numerator, self.denominator) != 1:
            raise ValueError("fraction must be reduced")
        for p in prime_support(self.denominator):
            if p not in self.support:
                raise ValueError(f"denominator prime {p} outside the support")

    @classmethod
    def of(cls, value, support: PrimeSet) -> "LocalizedRational":
        f = Fraction(value)
        return cls(int(f.numerator), int(f.denominator), support)

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __add__(self, other: "LocalizedRational") -> "LocalizedRational":
        return LocalizedRational.of(self.value + other.value, self.support)

    def __mul__(self, other: "LocalizedRational") -> "LocalizedRational":
        return LocalizedRational.of(self.value * other.value, self.support)


@dataclass(frozen=True)
class ZPHom:
    """Homomorphism ``Z[1/P] -> target`` determined by the image of 1.

    On ``1/p^k`` the map iterates the inverse of ``p`` on the cyclic module
    generated by the base value; the inverse exists and is unique because
    the base generates a finite module of order coprime to ``P``.
    """

    target: FgZModule
    base: tuple[int, ...]
    support: PrimeSet

    def apply(self, q) -> tuple[int, ...]:
        if isinstance(q, LocalizedRational):
            q = q.value
        q = Fraction(q)
        for p in prime_support(q.denominator):
            if p not in self.support:
                raise ValueError(f"{q} does not lie in the localization")
        if not self.support.primes:
            scalar = int(q)
            return self.target.reduce_element([scalar * c for c in self.base])
        ord_ = self.target.element_order(self.base)
        if ord_ == 1:
            return self.target.reduce_element([0] * self.target.ngens())
        scalar = int(q.numerator) * pow(int(q.denominator), -1, ord_) % ord_
        return self.target.reduce_element([scalar * c for c in self.base])


def envelope_extend(target: FgZModule, base_value, P: PrimeSet) -> ZPHom:
    """Extend ``1 -> base_value`` to a homomorphism ``Z[1/P] -> target``.

    Exists exactly when the cyclic module generated by the base value is
    divisible by every prime of ``P``; otherwise :class:`NotDivisible`
    reports the offending prime."""
    base = target.reduce_element(base_value)
    if not P.primes:
        return ZPHom(target, base, P)
    if any(base[: target.free_rank]):
        raise NotDivisible(P.primes[0], "base value meets the free part")
    ord_ = target.element_order(base)
    for p in P.primes:
        if ord_ % p == 0:
            raise NotDivisible(p)
    return ZPHom(target, base, P)


# ---------------------------------------------------------------------------
# ideals


@dataclass(frozen=True)
class IdealPairReport:
    essential: bool
    finite_quotient: bool
    index: int | None


def _ideal_gcd(gens) -> int:
    g = 0
    for x in gens:
        g = math.gcd(g, abs(int(x)))
    return g


def essential_iff_finite(I_gens, J_gens) -> IdealPairReport:
    """For nested ideals ``J <= I`` of the integers: ``J`` is essential in
    ``I`` exactly when ``I/J`` is finite; both sides are computed."""
    gi, gj = _ideal_gcd(I_gens), _ideal_gcd(J_gens)
    if gj == 0:
        contained = True
    elif gi == 0:
        contained = False
    else:
        contained = gj % gi == 0
    if not contained:
        raise NotContained(f"({gj}) is not inside ({gi})")
    if gi == 0:
        # both ideals are zero; every condition is vacuous
        return IdealPairReport(True, True, 1)
    if gj == 0:
        return IdealPairReport(False, False, None)
    return IdealPairReport(True, True, gj // gi)


# ---------------------------------------------------------------------------
# classification of divisibility classes


@dataclass(frozen=True)
class SubsetRow:
    subset: tuple[int, ...]
    descriptor: str


@dataclass(frozen=True)
class TiltingClassTable:
    """All subsets of a prime universe with, for every unordered pair of
    distinct subsets, a cyclic witness module lying in exactly one of the
    two divisibility classes."""

    universe: PrimeSet
    rows: tuple[SubsetRow, ...]
    witnesses: tuple[tuple[int, int, int], ...]  # (row index a, row index b, witness prime)

    @property
    def num_classes(self) -> int:
        return len(self.rows)


def classify_tilting(universe: PrimeSet) -> TiltingClassTable:
    """Enumerate the ``2^n`` divisibility classes over a small prime
    universe and certify pairwise distinctness with ``Z/p`` witnesses."""
    if len(universe) > 6:
        raise ValueError("universe capped at 6 primes")
    subsets = []
    for r in range(len(universe.primes) + 1):
        for combo in itertools.combinations(universe.primes, r):
            subsets.append(tuple(combo))
    rows = []
    for s in subsets:
        desc = "all finitely generated modules" if not s else (
            "modules divisible by " + ", ".join(str(p) for p in s)
        )
        rows.append(SubsetRow(s, desc))
    witnesses = []
    for a in range(len(subsets)):
        for b in range(a + 1, len(subsets)):
            diff = sorted(set(subsets[a]) ^ set(subsets[b]))
            p = diff[0]
            w = FgZModule.cyclic(p)
            in_a = is_divisible_by(w, PrimeSet(subsets[a]))
            in_b = is_divisible_by(w, PrimeSet(subsets[b]))
            if in_a == in_b:
                raise AssertionError("witness fails to separate the classes")
            witnesses.append((a, b, p))
    return TiltingClassTable(universe, tuple(rows), tuple(witnesses))


def fp_torsion_is_u_torsion(M: FgZModule) -> tuple[bool, bool]:
    """Two routes to torsionness: vanishing after tensoring with the
    rationals, and squareness plus full rank of the presentation (the
    uniform-dimension criterion for cokernels of full maps)."""
    pres = M.presentation()
    qmat = Matrix(QQ, [[Fraction(x) for x in row] for row in pres.rows], pres.ncols)
    torsion = pres.nrows - qmat.rank() == 0
    u_torsion = pres.nrows == pres.ncols and qmat.rank() == pres.nrows
    return torsion, u_torsion
