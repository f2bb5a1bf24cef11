"""Exhaustive checks of the operator identities on truncated Fock space.

Each suite enumerates every partition up to ``max_degree`` and every generator
index up to its bounds, and compares both sides of an identity exactly.  The
only randomized suite is ``adjointness``, which draws its triples from a seeded
``random.Random``.

Every suite also has a negative control: the same suite run against a
deliberately broken generator (see :data:`NEGATIVE_CONTROLS`), which must fail.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import comb
from typing import Callable

from . import symfunc
from .fock import (
    AdjBy,
    Compose,
    E,
    F,
    Hgen,
    Identity,
    MulBy,
    Operators,
    Scale,
    Sum,
    TwistAdjBy,
    TwistMulBy,
    _linear,
    basic_rep_span,
    evaluate,
    weight_label,
)
from .linalg import Echelon
from .partitions import (
    Partition,
    addable_i_boxes,
    p_core,
    partitions_of,
    partitions_up_to,
    rim_hook_additions,
)
from .symfunc import Basis, SymElt, format_elt, monomial_oracle, poly_product

SUITES = (
    "heisenberg_p",
    "heisenberg_eh",
    "chevalley",
    "serre",
    "adjointness",
    "twist_commute",
    "twisted_binomial",
    "twisted_standard",
    "block_shift",
    "basic_rep_character",
    "conversions_roundtrip",
    "oracle_equivalence",
)

class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    suite: str
    p_values: tuple[int, ...] = ()
    max_degree: int = 0
    generator_bounds: dict = field(default_factory=dict)
    seed: int = 0
    max_failures: int | None = None

    def bound(self, name: str) -> int:
        try:
            return self.generator_bounds[name]
        except KeyError:
            raise ConfigError(f"suite {self.suite!r} needs generator bound {name!r}") from None

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "p_values": list(self.p_values),
            "max_degree": self.max_degree,
            "generator_bounds": dict(sorted(self.generator_bounds.items())),
            "seed": self.seed,
        }


DEFAULTS = {
    "heisenberg_p": SuiteConfig("heisenberg_p", (0, 2, 3), 10, {"r": 4, "s": 4}),
    "heisenberg_eh": SuiteConfig("heisenberg_eh", (0, 2, 3), 10, {"r": 4, "s": 4}),
    "chevalley": SuiteConfig("chevalley", (0, 2, 3, 5), 10),
    "serre": SuiteConfig("serre", (2, 3), 8),
    "adjointness": SuiteConfig("adjointness", (0,), 8, {"triples": 200}, seed=2024),
    "twist_commute": SuiteConfig("twist_commute", (2, 3), 8, {"b_degree": 2}),
    "twisted_binomial": SuiteConfig("twisted_binomial", (2, 3), 8, {"n": 3, "m": 3}),
    "twisted_standard": SuiteConfig("twisted_standard", (2, 3), 8, {"n": 3, "m": 3}),
    "block_shift": SuiteConfig("block_shift", (2, 3), 10),
    "basic_rep_character": SuiteConfig("basic_rep_character", (2, 3), 8),
    "conversions_roundtrip": SuiteConfig("conversions_roundtrip", (0,), 10),
    "oracle_equivalence": SuiteConfig("oracle_equivalence", (2, 3), 6, {"nvars": 6}),
}


def default_config(suite: str, **overrides) -> SuiteConfig:
    if suite not in DEFAULTS:
        raise ConfigError(f"unknown suite {suite!r}; known suites: {', '.join(SUITES)}")
    return replace(DEFAULTS[suite], **overrides)


@dataclass(frozen=True)
class Failure:
    input: str
    expected: str
    got: str

    def to_json(self) -> dict:
        return {"input": self.input, "expected": self.expected, "got": self.got}


@dataclass
class VerificationReport:
    suite: str
    config: SuiteConfig
    cases_run: int
    failures: list[Failure]
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        out = {
            "suite": self.suite,
            "config": self.config.to_json(),
            "cases": self.cases_run,
            "failures": [f.to_json() for f in self.failures],
            "pass": self.passed,
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def dumps(self) -> str:
        """Stable JSON text (no timings), identical across reruns."""
        return json.dumps(self.to_json(), sort_keys=True, indent=2)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{self.suite}: {status} ({self.cases_run} cases, {len(self.failures)} failures)"


class _Enough(Exception):
    pass


class _Checker:
    def __init__(self, max_failures: int | None):
        self.cases = 0
        self.failures: list[Failure] = []
        self.max_failures = max_failures

    def check(self, description: str, expected, got) -> None:
        self.cases += 1
        if expected != got:
            self.failures.append(Failure(description, _text(expected), _text(got)))
            if self.max_failures is not None and len(self.failures) >= self.max_failures:
                raise _Enough


def _text(x) -> str:
    if isinstance(x, SymElt):
        return format_elt(x)
    return str(x)


# --- toolkit: leaf semantics plus the symmetric-function primitives ----------

class Toolkit(Operators):
    """Everything a suite may call; negative controls override one method."""

    def to_schur(self, x: SymElt) -> SymElt:
        return symfunc.to_schur(x)

    def from_schur(self, x: SymElt, target) -> SymElt:
        return symfunc.from_schur(x, target)

    def twist(self, x: SymElt, p: int) -> SymElt:
        return symfunc.twist(x, p)

    def inner(self, a: SymElt, b: SymElt) -> Fraction:
        return symfunc.hall_inner(a, b)


TOOLKIT = Toolkit()


def _scalar(c) -> SymElt:
    return SymElt.one().scale(c)


def _check_relation(chk, ops, p, name, lhs, rhs, lam):
    v = SymElt.monomial(Basis.SCHUR, lam)
    chk.check(f"{name} on s{lam} (p={p})", evaluate(rhs, v, p, ops), evaluate(lhs, v, p, ops))


def _p_values(cfg, minimum=0):
    for p in cfg.p_values:
        if p < 0 or p == 1 or p < minimum:
            raise ConfigError(f"suite {cfg.suite!r} cannot run with p={p}")
    return cfg.p_values


# --- Heisenberg -------------------------------------------------------------

def _suite_heisenberg_p(cfg, ops, chk, notes):
    R, Sb = cfg.bound("r"), cfg.bound("s")
    pw = lambda r: MulBy(symfunc.p(r))
    pa = lambda r: AdjBy(symfunc.p(r))
    for p in _p_values(cfg):
        for lam in partitions_up_to(cfg.max_degree):
            for r in range(1, R + 1):
                for s in range(1, Sb + 1):
                    lhs = Compose(pa(r), pw(s))
                    rhs = Compose(pw(s), pa(r))
                    if r == s:
                        rhs = Sum((rhs, Scale(s, Identity())))
                    _check_relation(chk, ops, p, f"p{r}* p{s}", lhs, rhs, lam)
                    if r < s:
                        _check_relation(chk, ops, p, f"p{r} p{s}", Compose(pw(r), pw(s)),
                                        Compose(pw(s), pw(r)), lam)
                        _check_relation(chk, ops, p, f"p{r}* p{s}*", Compose(pa(r), pa(s)),
                                        Compose(pa(s), pa(r)), lam)


def _suite_heisenberg_eh(cfg, ops, chk, notes):
    R, Sb = cfg.bound("r"), cfg.bound("s")
    ew = lambda k: MulBy(symfunc.e(k) if k else SymElt.one(Basis.ELEMENTARY))
    ha = lambda k: AdjBy(symfunc.h(k) if k else SymElt.one(Basis.COMPLETE))
    for p in _p_values(cfg):
        for lam in partitions_up_to(cfg.max_degree):
            for r in range(1, R + 1):
                for s in range(1, Sb + 1):
                    lhs = Compose(ha(r), ew(s))
                    rhs = Sum((Compose(ew(s), ha(r)), Compose(ew(s - 1), ha(r - 1))))
                    _check_relation(chk, ops, p, f"h{r}* e{s}", lhs, rhs, lam)
                    if r < s:
                        _check_relation(chk, ops, p, f"e{r} e{s}", Compose(ew(r), ew(s)),
                                        Compose(ew(s), ew(r)), lam)
                        _check_relation(chk, ops, p, f"h{r}* h{s}*", Compose(ha(r), ha(s)),
                                        Compose(ha(s), ha(r)), lam)


# --- Kac-Moody --------------------------------------------------------------

def _indices(lam: Partition, p: int) -> range:
    # for p = 0, e_i and f_i kill s_lam unless i is the content of a corner;
    # corners of lam have contents in -len(lam) .. lam[0]
    if p:
        return range(p)
    return range(-len(lam), (lam[0] if lam else 0) + 1)


def _suite_chevalley(cfg, ops, chk, notes):
    for p in _p_values(cfg):
        for lam in partitions_up_to(cfg.max_degree):
            idx = _indices(lam, p)
            for i in idx:
                for j in idx:
                    lhs = Sum((Compose(E(i), F(j)), Scale(-1, Compose(F(j), E(i)))))
                    rhs = Hgen(i) if i == j else Scale(0, Identity())
                    _check_relation(chk, ops, p, f"[e{i},f{j}]", lhs, rhs, lam)


def cartan_entry(i: int, j: int, p: int) -> int:
    if i == j:
        return 2
    if p == 2:
        return -2
    diff = (i - j) % p if p else abs(i - j)
    return -1 if diff in (1, p - 1) else 0


def _ad_power(x, y, n: int):
    """``(ad x)^n y`` expanded as ``sum_k (-1)^k C(n,k) x^(n-k) y x^k``."""
    terms = []
    for k in range(n + 1):
        word = [x] * (n - k) + [y] + [x] * k
        tree = word[0]
        for w in word[1:]:
            tree = Compose(tree, w)
        terms.append(Scale((-1) ** k * comb(n, k), tree))
    return Sum(tuple(terms))


def _suite_serre(cfg, ops, chk, notes):
    zero = Scale(0, Identity())
    for p in _p_values(cfg):
        if p == 2:
            notes.append("p=2: checks (ad x_i)^3 x_j = 0 (affine sl_2 Cartan entry -2)")
        for lam in partitions_up_to(cfg.max_degree):
            idx = _indices(lam, p) if p else range(-len(lam) - 1, (lam[0] if lam else 0) + 2)
            for i in idx:
                for j in idx:
                    if i == j:
                        continue
                    n = 1 - cartan_entry(i, j, p)
                    for gen, name in ((E, "e"), (F, "f")):
                        expr = _ad_power(gen(i), gen(j), n)
                        _check_relation(chk, ops, p, f"(ad {name}{i})^{n} {name}{j}", expr, zero, lam)


# --- symmetric functions ----------------------------------------------------

def _random_elt(rng: random.Random, degree: int) -> SymElt:
    basis = rng.choice(list(Basis))
    shapes = partitions_of(degree)
    terms = []
    for _ in range(rng.randint(1, 3)):
        lam = rng.choice(shapes)
        terms.append((lam, Fraction(rng.randint(-5, 5), rng.randint(1, 3))))
    return SymElt(basis, terms)


def _suite_adjointness(cfg, ops, chk, notes):
    rng = random.Random(cfg.seed)
    for t in range(cfg.bound("triples")):
        db = rng.randint(0, cfg.max_degree)
        dy = rng.randint(0, cfg.max_degree - db)
        b, y = _random_elt(rng, db), _random_elt(rng, dy)
        x = _random_elt(rng, db + dy)
        if rng.random() < 0.5:
            x = x + _random_elt(rng, rng.randint(0, cfg.max_degree))
        got = ops.inner(ops.adj(b, x), y)
        expected = ops.inner(x, ops.mul(b, y))
        chk.check(f"triple {t}: b={b}, x={x}, y={y}", _scalar(expected), _scalar(got))


def _suite_conversions_roundtrip(cfg, ops, chk, notes):
    for lam in partitions_up_to(cfg.max_degree):
        for basis in Basis:
            x = SymElt.monomial(basis, lam)
            chk.check(f"{basis.letter}{lam} -> s -> {basis.letter}", x,
                      ops.from_schur(ops.to_schur(x), basis))
            sl = SymElt.monomial(Basis.SCHUR, lam)
            chk.check(f"s{lam} -> {basis.letter} -> s", sl,
                      ops.to_schur(ops.from_schur(sl, basis)))


def _substitute_power(poly: dict, p: int) -> dict:
    return dict(sorted((tuple(a * p for a in ex), c) for ex, c in poly.items()))


def _suite_oracle_equivalence(cfg, ops, chk, notes):
    n = cfg.bound("nvars")
    top = min(cfg.max_degree, n)
    elements = [SymElt.monomial(b, lam) for lam in partitions_up_to(top) if lam for b in Basis]
    for x in elements:
        chk.check(f"to_schur({x})", monomial_oracle(x, n), monomial_oracle(ops.to_schur(x), n))
    for k, a in enumerate(elements):
        for b in elements[k:]:
            if a.degree + b.degree > top:
                continue
            chk.check(f"mul({a}, {b})", poly_product(monomial_oracle(a, n), monomial_oracle(b, n)),
                      monomial_oracle(ops.mul(a, b), n))
    for p in _p_values(cfg, minimum=2):
        for x in elements:
            if p * x.degree > n:
                continue
            chk.check(f"twist({x}, p={p})", _substitute_power(monomial_oracle(x, n), p),
                      monomial_oracle(ops.twist(x, p), n))
    notes.append(f"twist checked where p*degree <= nvars={n}")


# --- twisted Heisenberg -----------------------------------------------------

def _e_or_one(k):
    return symfunc.e(k) if k else SymElt.one(Basis.ELEMENTARY)


def _h_or_one(k):
    return symfunc.h(k) if k else SymElt.one(Basis.COMPLETE)


def _suite_twist_commute(cfg, ops, chk, notes):
    top = cfg.bound("b_degree")
    gens = [f(k) for f in (symfunc.e, symfunc.h, symfunc.p) for k in range(1, top + 1)]
    for p in _p_values(cfg, minimum=2):
        for lam in partitions_up_to(cfg.max_degree):
            for b in gens:
                for twisted in (TwistMulBy(b), TwistAdjBy(b)):
                    tag = "tmul" if isinstance(twisted, TwistMulBy) else "tadj"
                    for i in range(p):
                        for g, name in ((E(i), "e"), (F(i), "f")):
                            _check_relation(chk, ops, p, f"[{tag}({b}), {name}{i}]",
                                            Compose(twisted, g), Compose(g, twisted), lam)


def _suite_twisted_binomial(cfg, ops, chk, notes):
    N, M = cfg.bound("n"), cfg.bound("m")
    s_ = lambda k: TwistMulBy(_e_or_one(k))
    t_ = lambda k: TwistAdjBy(_h_or_one(k))
    for p in _p_values(cfg, minimum=2):
        if N >= 1 and M >= 1:
            w = evaluate(Compose(t_(1), s_(1)), SymElt.one(Basis.SCHUR), p, ops)
            notes.append(f"witness p={p}: t1 s1 s[] = {format_elt(w)} (binom({p},1) = {comb(p, 1)})")
        for lam in partitions_up_to(cfg.max_degree):
            for n in range(N + 1):
                for m in range(M + 1):
                    rhs = Sum(tuple(Scale(comb(p, j), Compose(s_(m - j), t_(n - j)))
                                    for j in range(min(m, n) + 1)))
                    _check_relation(chk, ops, p, f"t{n} s{m}", Compose(t_(n), s_(m)), rhs, lam)
                    if n < m:
                        _check_relation(chk, ops, p, f"s{n} s{m}", Compose(s_(n), s_(m)),
                                        Compose(s_(m), s_(n)), lam)
                        _check_relation(chk, ops, p, f"t{n} t{m}", Compose(t_(n), t_(m)),
                                        Compose(t_(m), t_(n)), lam)


def _suite_twisted_standard(cfg, ops, chk, notes):
    N, M = cfg.bound("n"), cfg.bound("m")
    for p in _p_values(cfg, minimum=2):
        u = lambda k: MulBy(symfunc.twist_power(symfunc.p(k), p))
        v = lambda k: AdjBy(symfunc.twist_power(symfunc.p(k), p))
        for lam in partitions_up_to(cfg.max_degree):
            for n in range(1, N + 1):
                for m in range(1, M + 1):
                    lhs = Sum((Compose(v(n), u(m)), Scale(-1, Compose(u(m), v(n)))))
                    rhs = Scale(p * n if n == m else 0, Identity())
                    _check_relation(chk, ops, p, f"[v{n}, u{m}]", lhs, rhs, lam)


# --- blocks and the basic representation -------------------------------------

def _suite_block_shift(cfg, ops, chk, notes):
    for p in _p_values(cfg, minimum=2):
        for lam in partitions_up_to(cfg.max_degree):
            label = weight_label(lam, p)
            v = SymElt.monomial(Basis.SCHUR, lam)
            for i in range(p):
                for gen, shift in ((ops.f, 1), (ops.e, -1)):
                    want = label.shift(i, shift) if label[i] + shift >= 0 else None
                    for mu, _ in gen(i, v, p).items():
                        name = "f" if shift > 0 else "e"
                        chk.check(f"label of {mu} in {name}{i} s{lam} (p={p})",
                                  want, weight_label(mu, p))
        for n in range(cfg.max_degree + 1):
            shapes = partitions_of(n)
            cores = {lam: p_core(lam, p) for lam in shapes}
            labels = {lam: weight_label(lam, p) for lam in shapes}
            for a in shapes:
                for b in shapes:
                    if a < b:
                        continue
                    chk.check(f"Nakayama {a} vs {b} (p={p})", cores[a] == cores[b],
                              labels[a] == labels[b])


def character_oracle(p: int, max_degree: int) -> list[int]:
    """Coefficients of ``prod_{i >= 1, p does not divide i} 1/(1 - q^i)``."""
    if p < 2:
        raise ValueError("character_oracle needs p >= 2")
    coeffs = [1] + [0] * max_degree
    for part in range(1, max_degree + 1):
        if part % p == 0:
            continue
        for k in range(part, max_degree + 1):
            coeffs[k] += coeffs[k - part]
    return coeffs


def _suite_basic_rep_character(cfg, ops, chk, notes):
    for p in _p_values(cfg, minimum=2):
        top = cfg.max_degree
        layers = basic_rep_span(p, top, ops)
        expected = character_oracle(p, top)
        for n, layer in enumerate(layers):
            chk.check(f"dim V(Lambda_0)_{n} (p={p})", expected[n], len(layer))
        spans = []
        for layer in layers:
            ech = Echelon()
            for w in layer:
                ech.add(w.terms)
            spans.append(ech)
        for n, layer in enumerate(layers):
            for k, w in enumerate(layer):
                for i in range(p):
                    if n > 0:
                        img = ops.e(i, w, p)
                        chk.check(f"e{i} of basis vector {k} in degree {n} (p={p})", True,
                                  spans[n - 1].contains(img.terms))
                    if n < top:
                        img = ops.f(i, w, p)
                        chk.check(f"f{i} of basis vector {k} in degree {n} (p={p})", True,
                                  spans[n + 1].contains(img.terms))


_RUNNERS: dict[str, Callable] = {
    "heisenberg_p": _suite_heisenberg_p,
    "heisenberg_eh": _suite_heisenberg_eh,
    "chevalley": _suite_chevalley,
    "serre": _suite_serre,
    "adjointness": _suite_adjointness,
    "twist_commute": _suite_twist_commute,
    "twisted_binomial": _suite_twisted_binomial,
    "twisted_standard": _suite_twisted_standard,
    "block_shift": _suite_block_shift,
    "basic_rep_character": _suite_basic_rep_character,
    "conversions_roundtrip": _suite_conversions_roundtrip,
    "oracle_equivalence": _suite_oracle_equivalence,
}


def run_suite(cfg: SuiteConfig | str, ops: Toolkit = TOOLKIT) -> VerificationReport:
    """Run one suite.  A bare suite name runs its default configuration."""
    if isinstance(cfg, str):
        cfg = default_config(cfg)
    if cfg.suite not in _RUNNERS:
        raise ConfigError(f"unknown suite {cfg.suite!r}; known suites: {', '.join(SUITES)}")
    if cfg.max_degree < 0:
        raise ConfigError("max_degree must be nonnegative")
    chk = _Checker(cfg.max_failures)
    notes: list[str] = []
    start = time.perf_counter()
    try:
        _RUNNERS[cfg.suite](cfg, ops, chk, notes)
    except _Enough:
        notes.append(f"stopped after {len(chk.failures)} failure(s)")
    failures = sorted(chk.failures, key=lambda f: (f.input, f.expected, f.got))
    return VerificationReport(cfg.suite, cfg, chk.cases, failures,
                              time.perf_counter() - start, sorted(set(notes)))


# --- negative controls ------------------------------------------------------

def _mn_mul_wrong_sign(b: SymElt, v: SymElt) -> SymElt:
    """Power-sum multiplication with every rim-hook height off by one."""
    acc: dict = {}
    for mu, c in b.items():
        vec = dict(symfunc.to_schur(v).terms)
        for r in mu:
            nxt: dict = {}
            for lam, d in vec.items():
                for nu, ht in rim_hook_additions(lam, r):
                    nxt[nu] = nxt.get(nu, 0) + (d if (ht + 1) % 2 == 0 else -d)
            vec = nxt
        for k, w in vec.items():
            acc[k] = acc.get(k, 0) + c * w
    return SymElt(Basis.SCHUR, acc)


class _OffByOneMN(Toolkit):
    def mul(self, b, v):
        if b.basis is Basis.POWER:
            return _mn_mul_wrong_sign(b, v)
        return super().mul(b, v)

    def to_schur(self, x):
        if x.basis is Basis.POWER:
            return _mn_mul_wrong_sign(x, SymElt.one())
        return super().to_schur(x)


class _RowsForColumns(Toolkit):
    def mul(self, b, v):
        if b.basis is Basis.ELEMENTARY:
            b = SymElt(Basis.COMPLETE, b.terms)
        return super().mul(b, v)


class _AddableOnlyH(Toolkit):
    def h(self, i, v, p):
        return _linear(v, lambda lam: {lam: len(addable_i_boxes(lam, i, p))})


class _LeakyE(Toolkit):
    def e(self, i, v, p):
        return super().e(i, v, p) + super().e(i + 1, v, p)


class _LopsidedAdjoint(Toolkit):
    def adj(self, b, v):
        out = super().adj(b, v)
        return SymElt(Basis.SCHUR, [(lam, c * 2 if len(lam) > 1 else c) for lam, c in out.items()])


class _UntwistedMul(Toolkit):
    def tmul(self, b, v, p):
        return self.mul(b, v)


class _ElementaryForComplete(Toolkit):
    def tadj(self, b, v, p):
        if b.basis is Basis.COMPLETE:
            b = SymElt(Basis.ELEMENTARY, b.terms)
        return super().tadj(b, v, p)


class _NextResidueF(Toolkit):
    def f(self, i, v, p):
        return super().f(i + 1, v, p)


class _NoOneRowF(Toolkit):
    def f(self, i, v, p):
        out = super().f(i, v, p)
        return SymElt(Basis.SCHUR, [(lam, c) for lam, c in out.items() if len(lam) != 1])


NEGATIVE_CONTROLS: dict[str, tuple[str, Toolkit]] = {
    "heisenberg_p": ("power-sum multiplication with rim-hook heights off by one", _OffByOneMN()),
    "heisenberg_eh": ("multiplication by e_r replaced by h_r", _RowsForColumns()),
    "chevalley": ("h_i eigenvalue counts addable boxes only", _AddableOnlyH()),
    "serre": ("e_i also removes boxes of residue i+1", _LeakyE()),
    "adjointness": ("skewing doubles every multi-row coefficient", _LopsidedAdjoint()),
    "twist_commute": ("twisted multiplication left untwisted", _UntwistedMul()),
    "twisted_binomial": ("t_n built from e_n instead of h_n", _ElementaryForComplete()),
    "twisted_standard": ("power-sum multiplication with rim-hook heights off by one", _OffByOneMN()),
    "block_shift": ("f_i adds boxes of residue i+1", _NextResidueF()),
    "basic_rep_character": ("f_i discards one-row shapes", _NoOneRowF()),
    "conversions_roundtrip": ("power-to-Schur conversion with heights off by one", _OffByOneMN()),
    "oracle_equivalence": ("power-to-Schur conversion with heights off by one", _OffByOneMN()),
}


def run_negative_control(suite: str, cfg: SuiteConfig | None = None) -> VerificationReport:
    """Run ``suite`` against its broken generator; the report should fail."""
    if suite not in NEGATIVE_CONTROLS:
        raise ConfigError(f"unknown suite {suite!r}")
    cfg = cfg or default_config(suite, max_failures=1)
    return run_suite(cfg, NEGATIVE_CONTROLS[suite][1])


def run_all(configs=None, ops: Toolkit = TOOLKIT) -> list[VerificationReport]:
    configs = configs or [default_config(name) for name in SUITES]
    return [run_suite(c, ops) for c in configs]
