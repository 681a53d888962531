"""Command-line surface: named verification scenarios over the library.

Every scenario builds a :class:`~tiltlab.report.Report`; runs are
deterministic for a fixed seed, so reports are byte-identical across
repeated invocations.  Exit codes: 0 when all checks pass, 1 when some
check fails, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass

from .artheory import (
    BoundSet,
    build_extension,
    defect,
    defect_function,
    is_isomorphic,
    strip_projective_summands,
    tube_catalog,
    u_filtration,
)
from .dedekind import (
    OreSet,
    PrimeSet,
    classify_tilting,
    u_set_of_ore,
    universal_localization_eq,
)
from .errors import ParseError, TiltlabError, UnsupportedFamily
from .exactlin import Matrix, PrimeField
from .freegrp import (
    FreeWord,
    envelope_value,
    flatness_witness,
    parse_reduce,
    random_xdiv_module,
    reduce_letters,
    word,
)
from .parsefmt import parse_input
from .perpcat import class_compare, is_divisible, perp_conditions
from .quiverrep import (
    QuiverRep,
    ext1_dim,
    euler_form,
    hom_dim,
    hom_ext_dims,
    injective,
    projective,
    regular_dims,
    socle,
)
from .report import Report


@dataclass(frozen=True)
class Scenario:
    """A named scenario with validated parameters."""

    kind: str
    params: dict

    _KINDS = ("tube_demo", "dedekind_classify", "free_envelope", "perp_check", "custom")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown scenario kind {self.kind!r}")

    def run(self) -> Report:
        runner = {
            "tube_demo": run_tube_demo,
            "dedekind_classify": run_dedekind_classify,
            "free_envelope": run_free_envelope,
            "perp_check": run_perp_check,
            "custom": run_custom,
        }[self.kind]
        return runner(**self.params)


def _rand_rep(q, fieldp, rng, dim_cap):
    dims = [rng.randrange(0, dim_cap + 1) for _ in range(q.nvertices)]
    maps = []
    for a in q.arrows:
        maps.append(
            Matrix(
                fieldp,
                [[rng.randrange(fieldp.p) for _ in range(dims[a.source])] for _ in range(dims[a.target])],
                dims[a.source],
            )
        )
    return QuiverRep(q, fieldp, dims, maps, check=False)


def run_tube_demo(family: str = "a31", field_char: int = 5, seed: int = 0, dim_cap: int = 12) -> Report:
    """Reproduce the separation of the two divisibility classes attached
    to a rank-three tube: the length-two layers (and their translates)
    admit the socle simple in their class, the three simples do not."""
    report = Report("tube_demo", {"family": family, "field": field_char, "seed": seed})
    field = PrimeField(field_char)
    catalog = tube_catalog(family, field)
    wide = [t for t in catalog.tubes if len(t) >= 3]
    if not wide:
        raise UnsupportedFamily(f"family {family!r} has no tube of rank >= 3")
    simple, t_simple, tminus_simple = wide[0][:3]
    layer2 = build_extension(tminus_simple, simple)
    t_layer2 = build_extension(simple, t_simple)

    e1 = ext1_dim(layer2, simple)
    report.add(
        "ext1(layer2, socle_simple) == 0",
        e1 == 0,
        inputs={"layer2_dims": layer2.dims, "simple_dims": simple.dims},
        values={"ext1": e1},
    )
    e2 = ext1_dim(t_layer2, simple)
    report.add(
        "ext1(translated_layer2, socle_simple) == 0",
        e2 == 0,
        inputs={"translated_layer2_dims": t_layer2.dims},
        values={"ext1": e2},
    )
    e3 = ext1_dim(tminus_simple, simple)
    report.add(
        "ext1(inverse_translate, socle_simple) != 0",
        e3 != 0,
        inputs={"inverse_translate_dims": tminus_simple.dims},
        values={"ext1": e3},
    )

    pair_set = BoundSet((layer2, t_layer2))
    triple_set = BoundSet((simple, t_simple, tminus_simple))
    testset = [simple, t_simple, tminus_simple, layer2, t_layer2]
    witness = class_compare(pair_set, triple_set, testset)
    report.add(
        "divisibility classes separated exactly at the socle simple",
        witness is not None and is_isomorphic(witness, simple, seed=seed),
        values={
            "witness_dims": None if witness is None else witness.dims,
            "witness_in_pair_class": None if witness is None else is_divisible(witness, pair_set),
            "witness_in_triple_class": None if witness is None else is_divisible(witness, triple_set),
        },
    )

    filt = u_filtration(layer2, (simple, tminus_simple), dim_cap=dim_cap, seed=seed)
    report.add(
        "layer2 is filtered by the socle simple and its inverse translate",
        filt is not None
        and filt.factors == [0, 1]
        and filt.validate(layer2, (simple, tminus_simple), seed=seed),
        values={"factors": None if filt is None else filt.factors},
    )
    df = defect_function(catalog.quiver)
    report.add(
        "tube members have zero defect",
        all(defect(df, m.dims) == 0 for m in (simple, t_simple, tminus_simple, layer2, t_layer2)),
        values={"radical_vector": df.radical_vector, "normalizer": df.normalizer},
    )
    soc, _ = socle(layer2)
    report.add(
        "socle of layer2 is the socle simple",
        is_isomorphic(soc, simple, seed=seed),
        values={"socle_dims": soc.dims},
    )
    return report


def run_dedekind_classify(primes=(2, 3, 5), ore_sets=(), random_ore: int = 0, seed: int = 0) -> Report:
    """Enumerate divisibility classes over a prime universe and cross-check
    multiplicative sets against their prime supports."""
    universe = PrimeSet(tuple(sorted(set(int(p) for p in primes))))
    report = Report(
        "dedekind_classify",
        {"primes": list(universe.primes), "ore_sets": [list(s) for s in ore_sets],
         "random_ore": random_ore, "seed": seed},
    )
    table = classify_tilting(universe)
    expected = 2 ** len(universe)
    report.add(
        "all subset classes pairwise distinct",
        table.num_classes == expected and len(table.witnesses) == expected * (expected - 1) // 2,
        inputs={"universe": list(universe.primes)},
        values={
            "classes": table.num_classes,
            "subsets": [list(r.subset) for r in table.rows],
            "witness_pairs": len(table.witnesses),
        },
    )
    rng = random.Random(seed)
    all_sets = [tuple(int(g) for g in s) for s in ore_sets]
    for _ in range(random_ore):
        all_sets.append(tuple(rng.randrange(1, 1000) for _ in range(rng.randrange(1, 4))))
    for gens in all_sets:
        ore = OreSet(gens)
        primes_of = u_set_of_ore(ore)
        ok = universal_localization_eq(ore)
        report.add(
            f"ore generators {list(gens)} invert exactly the primes {list(primes_of.primes)}",
            ok,
            values={"primes": list(primes_of.primes)},
        )
    return report


def run_free_envelope(alphabet=("x", "y"), field_char: int = 7, seed: int = 0,
                      trials: int = 100, words=(), dim: int = 2, max_word_len: int = 16) -> Report:
    """Exercise the inductive extension of a vector along reduced words on
    a module with invertible generator actions."""
    report = Report(
        "free_envelope",
        {"alphabet": list(alphabet), "field": field_char, "seed": seed,
         "trials": trials, "words": list(words), "dim": dim},
    )
    field = PrimeField(field_char)
    module = random_xdiv_module(alphabet, field, dim, seed=seed)
    base = tuple(field.one for _ in range(dim))
    rng = random.Random(seed)

    failures = 0
    for _ in range(trials):
        letters = [(rng.choice(alphabet), rng.choice((1, -1))) for _ in range(rng.randrange(0, 13))]
        g = FreeWord(reduce_letters(letters))
        sym, e = rng.choice(alphabet), rng.choice((1, -1))
        lhs = envelope_value(base, g * word(sym, e), module)
        rhs = module.act(envelope_value(base, g, module), sym, e)
        if lhs != rhs:
            failures += 1
    report.add(
        "extension respects the action on sampled words",
        failures == 0,
        inputs={"trials": trials, "max_len": 12},
        values={"failures": failures},
    )

    positive_fail = 0
    for _ in range(max(1, trials // 4)):
        syms = [rng.choice(alphabet) for _ in range(rng.randrange(0, 9))]
        g = FreeWord(tuple((s, 1) for s in syms))
        expected = base
        for s in syms:
            expected = module.act(expected, s, 1)
        if envelope_value(base, g, module) != expected:
            positive_fail += 1
    report.add(
        "positive words act through the monoid action",
        positive_fail == 0,
        values={"failures": positive_fail},
    )

    for text in words:
        w = parse_reduce(text, alphabet, max_len=max_word_len)
        value = envelope_value(base, w, module)
        report.add(
            f"envelope value of {str(w)!r}",
            True,
            inputs={"word": str(w)},
            values={"value": list(value)},
        )

    if len(alphabet) >= 2:
        wit = flatness_witness(alphabet, alphabet[0], alphabet[1], field)
        report.add(
            "flatness witness is nonzero with zero image",
            (not wit.pair[0].is_zero()) and (not wit.pair[1].is_zero()) and wit.image.is_zero(),
            values={"pair": [str(wit.pair[0]), str(wit.pair[1])], "image": str(wit.image)},
        )
    return report


def run_perp_check(family: str = "kronecker", field_char: int = 5, trials: int = 40,
                   seed: int = 0, dim_cap: int = 4) -> Report:
    """Sample modules against bound modules and confirm that the three
    perpendicular-membership conditions agree, together with the
    bilinear-form identity for morphism and extension dimensions."""
    report = Report(
        "perp_check",
        {"family": family, "field": field_char, "trials": trials, "seed": seed, "dim_cap": dim_cap},
    )
    field = PrimeField(field_char)
    catalog = tube_catalog(family, field)
    q = catalog.quiver
    pool = list(catalog.members)
    first_tube = catalog.tubes[0]
    pool.append(build_extension(first_tube[len(first_tube) - 1], first_tube[0]))
    rng = random.Random(seed)

    disagreements = 0
    members = 0
    for _ in range(trials):
        M = _rand_rep(q, field, rng, dim_cap)
        U = pool[rng.randrange(len(pool))]
        rep = perp_conditions(M, U)
        if not rep.consistent:
            disagreements += 1
        if rep.member:
            members += 1
    report.add(
        "membership conditions agree on all samples",
        disagreements == 0,
        inputs={"trials": trials},
        values={"disagreements": disagreements, "members": members},
    )

    euler_fail = 0
    for _ in range(trials):
        M = _rand_rep(q, field, rng, dim_cap)
        N = _rand_rep(q, field, rng, dim_cap)
        h, e = hom_ext_dims(M, N)
        if euler_form(q, M.dims, N.dims) != h - e or h != hom_dim(M, N):
            euler_fail += 1
    report.add(
        "bilinear form equals hom minus ext on all samples",
        euler_fail == 0,
        inputs={"trials": trials},
        values={"failures": euler_fail},
    )
    return report


def run_custom(path: str, seed: int = 0) -> Report:
    """Parse a fixture file and validate everything in it."""
    report = Report("custom", {"path": path, "seed": seed})
    parsed = parse_input(path)
    report.add(
        "fixture parsed",
        True,
        values={
            "quivers": {name: {"vertices": q.nvertices, "arrows": len(q.arrows)}
                        for name, q in parsed.quivers.items()},
            "reps": {name: list(rep.dims) for name, rep in parsed.reps.items()},
            "zmods": [str(m) for m in parsed.zmods],
            "alphabet": list(parsed.alphabet) if parsed.alphabet else None,
            "words": [str(w) for w in parsed.words],
        },
    )
    for name, rep in parsed.reps.items():
        q = rep.quiver
        total = regular_dims(q)
        report.add(
            f"rep {name}: dimension data consistent",
            sum(rep.dims) >= 0 and len(rep.dims) == q.nvertices,
            values={"dims": list(rep.dims), "regular_dims": list(total)},
        )
    for m in parsed.zmods:
        report.add(f"zmod {m} is in canonical form", True, values={"free_rank": m.free_rank,
                                                                   "factors": list(m.invariant_factors)})
    for w in parsed.words:
        report.add(f"word {str(w)!r} is reduced", True)
    return report


# ---------------------------------------------------------------------------
# argument parsing


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tiltlab",
        description="Finite-scale verification scenarios for tilting classes and localization arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="also write the report to this path")

    p = sub.add_parser("tube-demo", help="rank-3 tube divisibility-class separation")
    common(p)
    p.add_argument("--family", default="a31")
    p.add_argument("--field", type=int, default=5)
    p.add_argument("--dim-cap", type=int, default=12)

    p = sub.add_parser("dedekind", help="classify divisibility classes over a prime universe")
    common(p)
    p.add_argument("--primes", default="2,3,5", help="comma-separated primes (at most 6)")
    p.add_argument("--ore", action="append", default=[],
                   help="comma-separated generators of a multiplicative set (repeatable)")
    p.add_argument("--random-ore", type=int, default=0, help="number of random generator sets to cross-check")

    p = sub.add_parser("free-envelope", help="inductive extension along free-group words")
    common(p)
    p.add_argument("--alphabet", default="x,y")
    p.add_argument("--field", type=int, default=7)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--word", action="append", default=[], help="word to evaluate (repeatable)")

    p = sub.add_parser("perp-check", help="sampled agreement of perpendicular-membership conditions")
    common(p)
    p.add_argument("--family", default="kronecker")
    p.add_argument("--field", type=int, default=5)
    p.add_argument("--trials", type=int, default=40)
    p.add_argument("--dim-cap", type=int, default=4)

    p = sub.add_parser("custom", help="parse and validate a fixture file")
    common(p)
    p.add_argument("path")

    return parser


def _scenario_from_args(args) -> Scenario:
    if args.command == "tube-demo":
        return Scenario("tube_demo", {"family": args.family, "field_char": args.field,
                                      "seed": args.seed, "dim_cap": args.dim_cap})
    if args.command == "dedekind":
        primes = tuple(int(x) for x in args.primes.split(",") if x.strip())
        ore_sets = tuple(tuple(int(g) for g in s.split(",") if g.strip()) for s in args.ore)
        return Scenario("dedekind_classify", {"primes": primes, "ore_sets": ore_sets,
                                              "random_ore": args.random_ore, "seed": args.seed})
    if args.command == "free-envelope":
        alphabet = tuple(s for s in args.alphabet.split(",") if s)
        return Scenario("free_envelope", {"alphabet": alphabet, "field_char": args.field,
                                          "seed": args.seed, "trials": args.trials,
                                          "words": tuple(args.word), "dim": args.dim})
    if args.command == "perp-check":
        return Scenario("perp_check", {"family": args.family, "field_char": args.field,
                                       "trials": args.trials, "seed": args.seed,
                                       "dim_cap": args.dim_cap})
    if args.command == "custom":
        return Scenario("custom", {"path": args.path, "seed": args.seed})
    raise ValueError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        scenario = _scenario_from_args(args)
        report = scenario.run()
    except ParseError as exc:
        print(f"tiltlab: input error: {exc}", file=sys.stderr)
        return 2
    except TiltlabError as exc:
        print(f"tiltlab: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"tiltlab: {exc}", file=sys.stderr)
        return 2
    rendered = report.to_json() if args.format == "json" else report.to_text()
    sys.stdout.write(rendered)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
