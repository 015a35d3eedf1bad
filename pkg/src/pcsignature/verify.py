"""Seeded property battery behind ``pcsign verify``.

Each suite draws its own stream of seeds from ``(seed, suite name)`` so the
suites are independent of one another and of execution order.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .decomposition import (
    conjugate_two_flips_to_one,
    decompose_g_tau_s,
    decompose_r_sigma_f,
    flips_factorization,
    normalize_to_iet,
    swaps_factorization,
    swaps_product,
)
from .elements import (
    FinPerm,
    Interval,
    apply,
    classify_features,
    compose,
    compose_all,
    conjugate,
    element_order_upto,
    equals_mod_fin,
    flip,
    from_finperm,
    identity,
    in_sfin,
    inverse,
    minimal_partition,
)
from .sampling import Profile, random_element, random_interval, random_point
from .signature import finperm_sign, inversion_sign, signature, signature_at
from .subgroups import (
    NormalLevel,
    classify_normal,
    normalizer_witness_orientation,
    normalizer_witness_rc,
    simplicity_witness,
)
from .textformat import parse_element, serialize_element

SUITES: dict[str, Callable] = {}


def suite(name):
    def register(fn):
        SUITES[name] = fn
        return fn

    return register


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def check(self, ok, what):
        self.checks += 1
        if not ok:
            self.failures.append(what)


UNIT = Profile(max_pieces=8, denominator_bound=96, kind="IET")
AFFINE = Profile(max_pieces=8, denominator_bound=96, kind="PAff")


def _draw(rng, profile):
    return random_element(profile, rng.getrandbits(32))


@suite("group-axioms")
def _group_axioms(rng, res, n):
    for _ in range(n):
        f, g, h = (_draw(rng, rng.choice([UNIT, AFFINE])) for _ in range(3))
        res.check(compose(compose(f, g), h) == compose(f, compose(g, h)), "associativity")
        res.check(compose(f, identity()) == f == compose(identity(), f), "identity")
        res.check(compose(f, inverse(f)) == identity(), "inverse")
        x = random_point(rng, 96, interior=False)
        res.check(apply(compose(f, g), x) == apply(f, apply(g, x)), "pointwise composition")


@suite("homomorphism")
def _homomorphism(rng, res, n):
    for k in range(n):
        prof = UNIT if k % 2 == 0 else AFFINE
        f, g = _draw(rng, prof), _draw(rng, prof)
        res.check(signature(compose(f, g)) == signature(f) + signature(g), "additivity")


@suite("partition-independence")
def _partition_independence(rng, res, n):
    for _ in range(n):
        h = _draw(rng, rng.choice([UNIT, AFFINE]))
        p = minimal_partition(h)
        values = {signature_at(h, p)}
        for _ in range(4):
            p = p.split(_fresh_cut(rng, p))
            values.add(signature_at(h, p))
        res.check(len(values) == 1, "signature changed under refinement")


def _fresh_cut(rng, p):
    while True:
        x = random_point(rng, 192)
        if x not in p.breakpoints:
            return x


@suite("classical-sign")
def _classical_sign(rng, res, n):
    support = [Fraction(0), Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(5, 7)]
    for images in itertools.permutations(support):
        t = FinPerm(dict(zip(support, images)))
        res.check(signature(from_finperm(t)) == inversion_sign(t) == finperm_sign(t), str(t))


@suite("kernel")
def _kernel(rng, res, n):
    rc = Profile(8, 96, "IET+rc")
    homeo = Profile(8, 96, "Homeo+")
    for _ in range(n):
        res.check(signature(_draw(rng, rc)) == 0, "right-continuous exchange")
        res.check(signature(_draw(rng, homeo)) == 0, "homeomorphism")
        res.check(signature(flip(random_interval(rng, 96))) == 1, "flip")


@suite("homeo-invariance")
def _homeo_invariance(rng, res, n):
    homeo = Profile(8, 96, "Homeo+")
    for _ in range(n):
        h, phi = _draw(rng, rng.choice([UNIT, AFFINE])), _draw(rng, homeo)
        s = signature(h)
        res.check(signature(compose(h, phi)) == s == signature(compose(phi, h)), "h phi, phi h")
        res.check(signature(conjugate(phi, h)) == s, "conjugation")


@suite("decompositions")
def _decompositions(rng, res, n):
    for _ in range(n):
        h = _draw(rng, UNIT)
        d = decompose_r_sigma_f(h)
        res.check(d.compose() == h, "r sigma f")
        res.check(signature(h) == len(d.r) % 2 + finperm_sign(d.sigma), "r sigma f parity")
        res.check(decompose_g_tau_s(h).compose() == h, "g tau s")
        res.check(swaps_product(swaps_factorization(d.f)) == d.f, "swaps")
        a = _draw(rng, AFFINE)
        split = normalize_to_iet(a)
        res.check(split.compose() == a, "f phi")
        res.check(signature(split.f) == signature(a), "f phi signature")


@suite("flip-generation")
def _flip_generation(rng, res, n):
    for _ in range(n):
        h = _draw(rng, UNIT)
        w = flips_factorization(h)
        prod = w.product()
        res.check(equals_mod_fin(prod, h), "product mod finite")
        res.check(compose(prod, from_finperm(w.residual)) == h, "residual")
        res.check(signature(h) == len(w.flips) % 2 + finperm_sign(w.residual), "parity")


@suite("simplicity")
def _simplicity(rng, res, n):
    for _ in range(n):
        g = _draw(rng, rng.choice([UNIT, AFFINE]))
        if in_sfin(g):
            continue
        i, h = simplicity_witness(g)
        img = g.piece_at(i.left).restrict(i).image
        res.check(equals_mod_fin(h, compose(flip(img), flip(i))), "two-flip product")
        res.check(signature(h) == 0, "commutator signature")
        a, b = random_interval(rng, 96), random_interval(rng, 96)
        if a.disjoint(b):
            c, k = conjugate_two_flips_to_one(a, b)
            res.check(equals_mod_fin(compose_all([c, flip(a), flip(b), inverse(c)]), flip(k)), "two flips to one")


@suite("normalizers")
def _normalizers(rng, res, n):
    for _ in range(n):
        g = _draw(rng, rng.choice([UNIT, Profile(8, 96, "IET+")]))
        feats = classify_features(g)
        if not (feats.right_continuous and feats.orientation == "all-preserving"):
            c = classify_features(conjugate(g, normalizer_witness_rc(g)))
            res.check(not (c.right_continuous and c.orientation == "all-preserving"), "rc witness")
        if feats.orientation == "mixed":
            c = classify_features(conjugate(g, normalizer_witness_orientation(g)))
            res.check(c.orientation != "all-preserving", "orientation witness")


@suite("classifier")
def _classifier(rng, res, n):
    fin = Profile(6, 24, "FinPerm")
    for _ in range(n):
        f = _draw(rng, rng.choice([UNIT, AFFINE, fin]))
        g = _draw(rng, rng.choice([UNIT, AFFINE, fin]))
        lf, lg, lfg = classify_normal(f), classify_normal(g), classify_normal(compose(f, g))
        res.check(lf == classify_normal(inverse(f)), "inverse-stable")
        fin_levels = (NormalLevel.trivial, NormalLevel.A_fin, NormalLevel.S_fin)
        if lf in fin_levels and lg in fin_levels:
            res.check(lfg in fin_levels, "S_fin closed")
        kernel = (NormalLevel.trivial, NormalLevel.A_fin, NormalLevel.Ker_epsilon)
        if lf in kernel and lg in kernel:
            res.check(lfg in kernel, "Ker closed")


@suite("odd-order")
def _odd_order(rng, res, n):
    for _ in range(n):
        h = _draw(rng, rng.choice([Profile(4, 12, "IET"), Profile(5, 6, "FinPerm")]))
        order = element_order_upto(h, 9)
        if isinstance(order, int) and order % 2 == 1:
            res.check(signature(h) == 0, "odd order")


@suite("text-roundtrip")
def _text_roundtrip(rng, res, n):
    kinds = ("IET", "IET+", "IET+rc", "PAff", "FinPerm", "Homeo+")
    for k in range(n):
        h = _draw(rng, Profile(8, 96, kinds[k % len(kinds)]))
        doc = serialize_element(h)
        res.check(parse_element(doc) == h and serialize_element(parse_element(doc)) == doc, "round trip")


def run_suite(name: str, seed: int, n: int = 40) -> SuiteResult:
    rng = random.Random(f"{seed}/{name}")
    res = SuiteResult(name)
    try:
        SUITES[name](rng, res, n)
    except Exception as exc:  # a crash inside a suite is a failure of that suite
        res.failures.append(f"{type(exc).__name__}: {exc}")
    return res


def run_all(seed: int, n: int = 40) -> list[SuiteResult]:
    return [run_suite(name, seed, n) for name in SUITES]
