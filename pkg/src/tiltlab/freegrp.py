"""Reduced words, group-algebra arithmetic, and divisible-module actions
for a free group on a small alphabet.

A word is a reduced sequence of ``(generator, +-1)`` letters.  Modules on
which every generator acts invertibly support the inductive extension of a
vector along words: positive letters act directly, negative letters act by
the (unique, because the action is invertible) solution of ``n * x = m``.
Right-module convention throughout: vectors are rows, actions multiply on
the right.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError, SameGenerator
from .exactlin import Matrix


@dataclass(frozen=True)
class FreeWord:
    letters: tuple[tuple[str, int], ...]

    def __post_init__(self):
        for i, (sym, e) in enumerate(self.letters):
            if e not in (1, -1):
                raise ValueError("exponents must be +1 or -1")
            if i and self.letters[i - 1][0] == sym and self.letters[i - 1][1] == -e:
                raise ValueError("word is not reduced")

    @classmethod
    def identity(cls) -> "FreeWord":
        return cls(())

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(reduce_letters(self.letters + other.letters))

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((sym, -e) for sym, e in reversed(self.letters)))

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(sym if e == 1 else f"{sym}^-1" for sym, e in self.letters)


def reduce_letters(letters) -> tuple[tuple[str, int], ...]:
    """Free cancellation via a stack; confluent, so the result is the
    unique reduced form."""
    stack: list[tuple[str, int]] = []
    for sym, e in letters:
        if stack and stack[-1][0] == sym and stack[-1][1] == -e:
            stack.pop()
        else:
            stack.append((sym, e))
    return tuple(stack)


def word(sym: str, e: int = 1) -> FreeWord:
    return FreeWord(((sym, e),))


def parse_reduce(text: str, alphabet, max_len: int = 16) -> FreeWord:
    """Parse a whitespace-separated word (tokens ``x`` or ``x^-1``) and
    return its reduced form.  Rejects unknown symbols and reduced words
    longer than ``max_len``."""
    alphabet = tuple(alphabet)
    letters = []
    for token in text.split():
        if token.endswith("^-1"):
            sym, e = token[:-3], -1
        elif token.endswith("^1"):
            sym, e = token[:-2], 1
        else:
            sym, e = token, 1
        if sym not in alphabet:
            raise ParseError(1, f"unknown generator {sym!r}")
        letters.append((sym, e))
    reduced = reduce_letters(letters)
    if len(reduced) > max_len:
        raise ParseError(1, f"reduced word length {len(reduced)} exceeds cap {max_len}")
    return FreeWord(reduced)


class GroupAlgElem:
    """Finite linear combination of reduced words with nonzero field
    coefficients."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms: dict[FreeWord, object] | None = None):
        self.field = field
        clean = {}
        for w, c in (terms or {}).items():
            c = field.coerce(c)
            if c != field.zero:
                clean[w] = c
        self.terms = clean

    @classmethod
    def zero(cls, field) -> "GroupAlgElem":
        return cls(field, {})

    @classmethod
    def one(cls, field) -> "GroupAlgElem":
        return cls(field, {FreeWord.identity(): field.one})

    @classmethod
    def of(cls, field, w: FreeWord, coeff=None) -> "GroupAlgElem":
        return cls(field, {w: field.one if coeff is None else coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = self.field.add(out.get(w, self.field.zero), c)
        return GroupAlgElem(self.field, out)

    def __neg__(self) -> "GroupAlgElem":
        return GroupAlgElem(self.field, {w: self.field.neg(c) for w, c in self.terms.items()})

    def __sub__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        return self + (-other)

    def scale(self, c) -> "GroupAlgElem":
        c = self.field.coerce(c)
        return GroupAlgElem(self.field, {w: self.field.mul(c, x) for w, x in self.terms.items()})

    def __mul__(self, other: "GroupAlgElem") -> "GroupAlgElem":
        out: dict[FreeWord, object] = {}
        f = self.field
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 * w2
                out[w] = f.add(out.get(w, f.zero), f.mul(c1, c2))
        return GroupAlgElem(f, out)

    def __eq__(self, other):
        return isinstance(other, GroupAlgElem) and self.field == other.field and self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda w: (len(w), str(w)))
        return " + ".join(f"{self.terms[w]}*{w}" for w in keys)

    __repr__ = __str__


ga_mul = GroupAlgElem.__mul__


class XDivModule:
    """Finite-dimensional right module on which every generator acts by an
    invertible matrix (so right division by a generator is possible and
    unique)."""

    def __init__(self, field, alphabet, actions: dict[str, Matrix]):
        self.field = field
        self.alphabet = tuple(alphabet)
        dims = set()
        self.actions = {}
        self._inverses = {}
        for sym in self.alphabet:
            if sym not in actions:
                raise ValueError(f"missing action for generator {sym}")
            m = actions[sym]
            if m.nrows != m.ncols:
                raise ValueError(f"action of {sym} is not square")
            inv = m.inverse()
            if inv is None:
                raise ValueError(f"action of {sym} is not invertible")
            dims.add(m.nrows)
            self.actions[sym] = m
            self._inverses[sym] = inv
        if len(dims) != 1:
            raise ValueError("actions must share one dimension")
        self.dim = dims.pop()

    def act(self, vec, sym: str, e: int = 1) -> tuple:
        """Right action ``vec * sym^e`` on a row vector."""
        m = self.actions[sym] if e == 1 else self._inverses[sym]
        vec = [self.field.coerce(x) for x in vec]
        return tuple(m.transpose().apply(vec))


def envelope_value(m0, g: FreeWord, M: XDivModule) -> tuple:
    """Value at ``g`` of the extension of ``1 -> m0`` along the embedding
    of the free monoid algebra into the group algebra, by induction on the
    word length: strip the last letter, extend the shorter word, then act
    (positive letter) or divide (negative letter, unique because the
    action is invertible)."""
    m0 = tuple(M.field.coerce(x) for x in m0)
    if len(m0) != M.dim:
        raise ValueError("base vector has wrong length")
    if not g.letters:
        return m0
    head = FreeWord(g.letters[:-1])
    sym, e = g.letters[-1]
    prev = envelope_value(m0, head, M)
    return M.act(prev, sym, e)


def envelope_value_alg(m0, elem: GroupAlgElem, M: XDivModule) -> tuple:
    """Linear extension of :func:`envelope_value` to group-algebra
    elements."""
    f = M.field
    out = [f.zero] * M.dim
    for w, c in elem.terms.items():
        val = envelope_value(m0, w, M)
        out = [f.add(a, f.mul(c, b)) for a, b in zip(out, val)]
    return tuple(out)


@dataclass(frozen=True)
class FlatnessWitness:
    """A nonzero element of the rank-two free module over the group
    algebra that maps to zero under ``(a, b) -> a x + b y``."""

    pair: tuple[GroupAlgElem, GroupAlgElem]
    image: GroupAlgElem


def flatness_witness(alphabet, x: str, y: str, field) -> FlatnessWitness:
    """The pair ``(x^-1, -y^-1)``: both components map to the identity (up
    to sign) under ``(a, b) -> a x + b y``, so the map between free modules
    induced by the inclusion of the free algebra is not injective."""
    alphabet = tuple(alphabet)
    if x == y:
        raise SameGenerator("need two distinct generators")
    if x not in alphabet or y not in alphabet:
        raise ValueError("generators must belong to the alphabet")
    first = GroupAlgElem.of(field, word(x, -1))
    second = -GroupAlgElem.of(field, word(y, -1))
    image = first * GroupAlgElem.of(field, word(x)) + second * GroupAlgElem.of(field, word(y))
    return FlatnessWitness((first, second), image)


def random_xdiv_module(alphabet, field, dim: int, seed: int = 0) -> XDivModule:
    """Seeded random module with invertible generator actions."""
    import random as _random

    rng = _random.Random(seed)
    actions = {}
    for sym in alphabet:
        while True:
            m = Matrix(field, [[rng.randrange(field.p) for _ in range(dim)] for _ in range(dim)], dim)
            if m.is_invertible():
                actions[sym] = m
                break
    return XDivModule(field, alphabet, actions)
