"""Batched identity checks over the representations, grouped into named suites."""

from __future__ import annotations

import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from . import algebra
from .algebra import Element
from .scalars import ZERO, GaussianRational
from .words import (
    PLAIN,
    STAR,
    ExpWord,
    NormalWord,
    embed,
    enumerate_normal_words,
    reduce_word,
    word_adjoint,
)
from .reps import (
    JordanRep,
    Matrix,
    OracleConfig,
    ShiftPairRep,
    detect_nv,
    eval_element,
    eval_word,
    oracle_witness,
    pair_vanishes,
    xi_map,
)


@dataclass
class CheckResult:
    claim: str
    statement: str
    params: dict
    status: str  # "pass" | "fail"
    witness: dict | None = None

    def to_json_dict(self) -> dict:
        out = {"claim": self.claim, "statement": self.statement,
               "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class VerifyReport:
    suite: str
    config: dict
    checks: list[CheckResult]
    wall_time_s: float = 0.0

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.status == "pass")

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if c.status != "pass")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "config": self.config,
            "passed": self.passed,
            "failed": self.failed,
            "wall_time_s": self.wall_time_s,
            "checks": [c.to_json_dict() for c in self.checks],
        }


@dataclass
class SuiteOptions:
    """Overrides for suite bounds; None keeps each suite's default."""

    n: int | None = None
    m: int | None = None
    nmax: int | None = None
    samples: int | None = None
    seed: int = 0
    window: int | None = None
    workers: int = 4

    def pick(self, value, default):
        return default if value is None else value


# ---------------------------------------------------------------------------
# helpers

def _oracle_diff_witness(diff: Element) -> dict | None:
    label = oracle_witness(diff)
    if label is None:
        return None
    out = {"representation": label, "difference": str(diff)}
    kind, _, size = label.partition(":")
    if kind == "jordan":
        out["matrix"] = eval_element(JordanRep(int(size)), diff).to_lists()
    else:
        pm = eval_element(ShiftPairRep(int(size)), diff)
        out["matrix"] = {"fwd": pm.fwd.to_lists(), "bwd": pm.bwd.to_lists()}
    return out


def _oracle_equal_witness(x: Element, y: Element) -> dict | None:
    return _oracle_diff_witness(x - y)


def _pair_zero_witness(x: Element, window: int | None = None) -> dict | None:
    win = window if window is not None else 2 * max(x.max_letters, 1) + 4
    if pair_vanishes(x, win):
        return None
    pm = eval_element(ShiftPairRep(win), x)
    return {"representation": f"pair:{win}", "difference": str(x),
            "matrix": {"fwd": pm.fwd.to_lists(), "bwd": pm.bwd.to_lists()}}


def _struct_witness(x, y, label="lhs != rhs") -> dict | None:
    if x == y:
        return None
    return {"kind": label, "lhs": str(x), "rhs": str(y)}


def _sweep(claim: str, statement: str, params: dict, items, fn):
    """One aggregated check: fn(item) returns a witness dict or None."""
    frozen = list(items)

    def run():
        for item in frozen:
            w = fn(item)
            if w is not None:
                return False, w
        return True, None

    return claim, statement, dict(params, cases=len(frozen)), run


def _single(claim: str, statement: str, params: dict, fn):
    return claim, statement, params, fn


def _run_checks(specs, workers: int) -> list[CheckResult]:
    def run_one(spec) -> CheckResult:
        claim, statement, params, fn = spec
        try:
            ok, witness = fn()
        except Exception as exc:  # a crashed check is a failed check
            ok, witness = False, {"error": repr(exc)}
        return CheckResult(claim, statement, params, "pass" if ok else "fail", witness)

    if workers <= 1:
        return [run_one(s) for s in specs]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(run_one, specs))


def _word_element(w) -> Element:
    nf = w if isinstance(w, NormalWord) else reduce_word(w)
    return Element.from_word(nf)


def _power_word(k: int, sign: int = PLAIN) -> ExpWord:
    return ExpWord(((sign, k),))


def _range_projection(n: int) -> Element:
    # v^n v*^n, with n = 0 meaning the formal identity
    return algebra.e_elem() if n == 0 else Element.from_word(NormalWord.pp(n, n))


def _initial_projection(n: int) -> Element:
    return algebra.e_elem() if n == 0 else Element.from_word(NormalWord.sp(n, n))


def random_exp_word(rng: random.Random, max_letters: int) -> ExpWord:
    length = rng.randint(1, max_letters)
    letters = [(rng.choice((PLAIN, STAR)), 1) for _ in range(length)]
    runs: list[tuple[int, int]] = []
    for s, e in letters:
        if runs and runs[-1][0] == s:
            runs[-1] = (s, runs[-1][1] + e)
        else:
            runs.append((s, e))
    return ExpWord(tuple(runs))


def random_diagonal_word(rng: random.Random, max_letters: int) -> ExpWord:
    blocks = rng.randint(1, 3)
    runs: list[tuple[int, int]] = []
    budget = max_letters
    for _ in range(blocks):
        cap = budget // 2
        if cap < 1:
            break
        a = rng.randint(1, min(6, cap))
        runs.extend([(PLAIN, a), (STAR, a)])
        budget -= 2 * a
    if not runs:
        runs = [(PLAIN, 1), (STAR, 1)]
    return ExpWord(tuple(runs))


def random_element(rng: random.Random, max_terms: int = 3, max_letters: int = 6,
                   with_unit: bool = True) -> Element:
    def coeff():
        return GaussianRational(
            Fraction(rng.randint(-3, 3), rng.randint(1, 3)),
            Fraction(rng.randint(-2, 2), rng.randint(1, 2)),
        )

    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[reduce_word(random_exp_word(rng, max_letters))] = coeff()
    unit = coeff() if with_unit and rng.random() < 0.5 else ZERO
    return Element(terms, unit)


# ---------------------------------------------------------------------------
# suites

def _suite_ppi_axioms(opts: SuiteOptions):
    jordan_max = opts.pick(opts.n, 10)
    power_max = opts.pick(opts.m, 6)
    samples = opts.pick(opts.samples, 200)
    rng = random.Random(opts.seed)
    specs = []

    def triple(k: int) -> ExpWord:
        return ExpWord(((PLAIN, k), (STAR, k), (PLAIN, k)))

    reps = [JordanRep(n) for n in range(2, jordan_max + 1)]
    reps.append(ShiftPairRep(opts.pick(opts.window, 6 * power_max + 4)))

    def power_pi(item):
        rep, k = item
        lhs = eval_word(rep, triple(k))
        rhs = eval_word(rep, _power_word(k))
        if lhs == rhs:
            return None
        return {"representation": repr(rep), "power": k}

    specs.append(_sweep(
        "power-partial-isometry", "w w* w = w for w = v^k",
        {"jordan_max": jordan_max, "power_max": power_max},
        [(rep, k) for rep in reps for k in range(1, power_max + 1)], power_pi))

    def nilpotent(n):
        if eval_word(JordanRep(n), _power_word(n)).is_zero:
            return None
        return {"representation": f"jordan:{n}"}

    specs.append(_sweep("generator-nilpotent", "v^n = 0 in the n-dimensional block",
                        {}, range(1, jordan_max + 1), nilpotent))

    def defect(n):
        got = eval_word(JordanRep(n), ExpWord(((STAR, 1), (PLAIN, 1))))
        want = Matrix.identity(n) - Matrix.unit(n, n - 1, n - 1)
        return None if got == want else {"representation": f"jordan:{n}"}

    specs.append(_sweep("initial-projection-defect", "v*v = 1 - E[n-1,n-1] in dimension n",
                        {}, range(2, jordan_max + 1), defect))

    def proper(n):
        rep = JordanRep(n)
        ident = Matrix.identity(n)
        if eval_word(rep, ExpWord(((STAR, 1), (PLAIN, 1)))) == ident:
            return {"representation": f"jordan:{n}", "kind": "isometric"}
        if eval_word(rep, ExpWord(((PLAIN, 1), (STAR, 1)))) == ident:
            return {"representation": f"jordan:{n}", "kind": "co-isometric"}
        return None

    specs.append(_sweep("neither-isometric-nor-coisometric",
                        "v*v != 1 and vv* != 1 in every finite block",
                        {}, range(2, jordan_max + 1), proper))

    def legs():
        win = 8
        rep = ShiftPairRep(win)
        vstar_v = eval_element(rep, Element.from_word(NormalWord.sp(1, 1)))
        v_vstar = eval_element(rep, Element.from_word(NormalWord.pp(1, 1)))
        ident = Matrix.identity(win)
        ok = (vstar_v.fwd == ident and v_vstar.fwd != ident
              and v_vstar.bwd == ident and vstar_v.bwd != ident)
        return ok, None if ok else {"representation": f"pair:{win}"}

    specs.append(_single("pair-legs-isometry-coisometry",
                         "the pair legs are a proper isometry and a proper co-isometry",
                         {}, legs))

    def chain(item):
        m, n, initial = item
        big = _initial_projection(n) if initial else _range_projection(n)
        small = _initial_projection(m) if initial else _range_projection(m)
        for prod in (big * small, small * big):
            w = _oracle_equal_witness(prod, big)
            if w is not None:
                w.update({"m": m, "n": n, "family": "initial" if initial else "range"})
                return w
        return None

    specs.append(_sweep(
        "power-projections-descending",
        "(v^n v*^n) and (v*^n v^n) form decreasing commuting projection chains",
        {"chain_max": 6},
        [(m, n, fam) for n in range(7) for m in range(n + 1) for fam in (False, True)],
        chain))

    rep5 = JordanRep(5)
    pairs = [(random_exp_word(rng, 6), random_exp_word(rng, 6)) for _ in range(samples)]

    def prop6(item):
        u, v = item
        mu = eval_word(rep5, u)
        mv = eval_word(rep5, v)
        uv = mu @ mv
        product_pi = (uv @ uv.adjoint() @ uv) == uv
        commuting = ((mu.adjoint() @ mu) @ (mv @ mv.adjoint())
                     == (mv @ mv.adjoint()) @ (mu.adjoint() @ mu))
        if product_pi == commuting:
            return None
        return {"u": str(u), "v": str(v), "product_partial_isometry": product_pi,
                "projections_commute": commuting}

    specs.append(_sweep(
        "product-partial-isometry-criterion",
        "uv is a partial isometry iff u*u commutes with vv*",
        {"representation": "jordan:5", "samples": samples}, pairs, prop6))

    return specs


def _named_projections(level_max: int):
    named = [("e", algebra.e_elem()), ("p", algebra.p_elem()), ("pt", algebra.ptilde_elem())]
    for n in range(1, level_max + 1):
        named.append((f"pi[{n}]", algebra.pi(n)))
        named.append((f"pit[{n}]", algebra.pitilde(n)))
        named.append((f"z[{n}]", algebra.z(n)))
    return named


def _suite_projections(opts: SuiteOptions):
    level_max = opts.pick(opts.n, 5)
    samples = opts.pick(opts.samples, 100)
    rng = random.Random(opts.seed)
    named = _named_projections(level_max)
    specs = []

    specs.append(_sweep("named-projection-selfadjoint", "x* = x after reduction",
                        {"level_max": level_max}, named,
                        lambda item: _struct_witness(item[1].adjoint(), item[1], f"{item[0]}* != {item[0]}")))

    specs.append(_sweep("named-projection-idempotent", "x x = x on the oracle",
                        {"level_max": level_max}, named,
                        lambda item: _oracle_equal_witness(item[1] * item[1], item[1])))

    elements = [random_element(rng) for _ in range(samples)]
    e = algebra.e_elem()

    def identity_neutral(x):
        for y in (e * x, x * e):
            w = _oracle_equal_witness(y, x)
            if w is not None:
                return w
        return None

    specs.append(_sweep("identity-neutral", "e x = x e = x",
                        {"samples": samples}, elements, identity_neutral))

    expansion = algebra.unit_expansion()

    def expansion_neutral(x):
        for y in (expansion * x, x * expansion):
            w = _oracle_equal_witness(y, x)
            if w is not None:
                return w
        return None

    specs.append(_sweep("identity-expansion-neutral", "(v*v + vv* - v*v vv*) x = x",
                        {"samples": samples}, elements, expansion_neutral))

    p, pt = algebra.p_elem(), algebra.ptilde_elem()
    specs.append(_single("defect-projections-orthogonal", "p pt = pt p = 0 exactly",
                         {}, lambda: ((p * pt).is_zero and (pt * p).is_zero,
                                      None if (p * pt).is_zero and (pt * p).is_zero
                                      else {"p*pt": str(p * pt), "pt*p": str(pt * p)})))

    def pairing(n):
        u = p * algebra.v_power(n) * pt
        w = _oracle_equal_witness(u.adjoint() * u, algebra.pitilde(n))
        if w is not None:
            w["side"] = "initial"
            return w
        w = _oracle_equal_witness(u * u.adjoint(), algebra.pi(n))
        if w is not None:
            w["side"] = "range"
        return w

    specs.append(_sweep("equivalence-pairing",
                        "(p v^n pt)*(p v^n pt) = pit[n] and (p v^n pt)(p v^n pt)* = pi[n]",
                        {"level_max": level_max}, range(1, level_max + 1), pairing))

    def transporter(n):
        u = p * algebra.v_power(n) * pt
        return _oracle_equal_witness(u * u.adjoint() * u, u)

    specs.append(_sweep("defect-transporter-partial-isometry",
                        "p v^n pt is a partial isometry",
                        {"level_max": min(level_max, 4)}, range(1, min(level_max, 4) + 1),
                        transporter))

    return specs


def _suite_matrix_units(opts: SuiteOptions):
    level_max = opts.pick(opts.n, 4)
    xi_max = opts.pick(opts.nmax, 5)
    specs = []

    for n in range(1, level_max + 1):
        units = {(i, j): algebra.matrix_unit(n, i, j)
                 for i in range(n + 1) for j in range(n + 1)}

        def product(item, n=n, units=units):
            i, j, k, l = item
            want = units[(i, l)] if j == k else Element.zero()
            w = _oracle_equal_witness(units[(i, j)] * units[(k, l)], want)
            if w is not None:
                w.update({"n": n, "indices": [i, j, k, l]})
            return w

        quads = [(i, j, k, l) for i in range(n + 1) for j in range(n + 1)
                 for k in range(n + 1) for l in range(n + 1)]
        specs.append(_sweep("matrix-unit-product",
                            "e[n;i,j] e[n;k,l] = delta(j,k) e[n;i,l]",
                            {"n": n}, quads, product))

        def symmetry(item, n=n, units=units):
            i, j = item
            return _struct_witness(units[(i, j)].adjoint(), units[(j, i)],
                                   f"e[{n};{i},{j}]* != e[{n};{j},{i}]")

        specs.append(_sweep("matrix-unit-adjoint", "e[n;i,j]* = e[n;j,i]",
                            {"n": n}, [(i, j) for i in range(n + 1) for j in range(n + 1)],
                            symmetry))

    def correspondence(n):
        try:
            mapping = xi_map(n)
        except RuntimeError as exc:
            return {"error": str(exc)}
        if mapping != {i: n - i for i in range(n + 1)}:
            return {"mapping": mapping}
        return None

    specs.append(_sweep("block-correspondence",
                        "e[n;i,j] evaluates in dimension n+1 to E[n-i,n-j]",
                        {"level_max": xi_max}, range(1, xi_max + 1), correspondence))

    return specs


def _suite_ideal_orthogonality(opts: SuiteOptions):
    pi_max = opts.pick(opts.n, 5)
    unit_max = opts.pick(opts.m, 4)
    specs = []

    def pi_cross(item):
        m, n, tilde = item
        fn = algebra.pitilde if tilde else algebra.pi
        w = _oracle_equal_witness(fn(m) * fn(n), Element.zero())
        if w is not None:
            w.update({"m": m, "n": n, "family": "pit" if tilde else "pi"})
        return w

    specs.append(_sweep("level-projections-orthogonal", "pi[m] pi[n] = 0 for m != n",
                        {"level_max": pi_max},
                        [(m, n, t) for m in range(1, pi_max + 1)
                         for n in range(1, pi_max + 1) if m != n for t in (False, True)],
                        pi_cross))

    cross_pairs = [(m, n) for m in range(1, unit_max + 1)
                   for n in range(1, unit_max + 1) if m != n]

    def unit_cross(item):
        m, n, i, j, k, l = item
        prod = algebra.matrix_unit(m, i, j) * algebra.matrix_unit(n, k, l)
        w = _oracle_equal_witness(prod, Element.zero())
        if w is not None:
            w.update({"m": m, "n": n, "indices": [i, j, k, l]})
        return w

    items = [(m, n, i, j, k, l) for m, n in cross_pairs
             for i in range(m + 1) for j in range(m + 1)
             for k in range(n + 1) for l in range(n + 1)]
    specs.append(_sweep("cross-level-annihilation",
                        "e[m;i,j] e[n;k,l] = 0 for m != n",
                        {"level_max": unit_max}, items, unit_cross))

    def localisation(item):
        n, m = item
        got = eval_element(JordanRep(m), algebra.z(n))
        want = Matrix.identity(m) if m == n + 1 else Matrix.zeros(m, m)
        if got == want:
            return None
        return {"n": n, "dimension": m, "matrix": got.to_lists()}

    specs.append(_sweep("block-identity-localisation",
                        "z[n] is the identity in dimension n+1 and zero elsewhere",
                        {"level_max": pi_max, "dimension_max": 8},
                        [(n, m) for n in range(1, pi_max + 1) for m in range(2, 9)],
                        localisation))

    return specs


def _suite_rank_one(opts: SuiteOptions):
    level_max = opts.pick(opts.n, 4)
    samples = opts.pick(opts.samples, 200)
    letters = opts.pick(opts.m, 10)
    rng = random.Random(opts.seed)

    corpus = [random_exp_word(rng, letters) for _ in range(samples - samples // 3)]
    corpus += [random_diagonal_word(rng, letters) for _ in range(samples - len(corpus))]

    specs = []
    for n in range(1, level_max + 1):
        proj = algebra.pi(n)

        def compress(w, n=n, proj=proj):
            nf = reduce_word(w)
            sandwich = proj * _word_element(nf) * proj
            diagonal = nf.shape == "PP" and nf.exponents[0] == nf.exponents[1]
            expect_one = diagonal and nf.exponents[0] <= n
            if oracle_witness(sandwich - (proj if expect_one else Element.zero())) is None:
                return None
            # scalar must still be 0 or 1; report which side broke
            alpha0 = oracle_witness(sandwich) is None
            alpha1 = oracle_witness(sandwich - proj) is None
            return {"word": str(w), "normal_form": str(nf), "n": n,
                    "expected_alpha": int(expect_one),
                    "alpha_zero": alpha0, "alpha_one": alpha1}

        specs.append(_sweep("rank-one-compression",
                            "pi[n] w pi[n] = alpha pi[n], alpha = 1 iff w = v^a v*^a, a <= n",
                            {"n": n, "samples": samples}, corpus, compress))
    return specs


def _suite_central(opts: SuiteOptions):
    level_max = opts.pick(opts.n, 5)
    specs = []
    gen = algebra.v_power(1)
    gen_star = algebra.vstar_power(1)

    def central(n):
        zn = algebra.z(n)
        for other in (gen, gen_star):
            w = _oracle_equal_witness(zn * other, other * zn)
            if w is not None:
                w["n"] = n
                return w
        return None

    specs.append(_sweep("block-identity-central", "z[n] v = v z[n]",
                        {"level_max": level_max}, range(1, level_max + 1), central))

    specs.append(_sweep("block-identity-selfadjoint", "z[n]* = z[n] after reduction",
                        {"level_max": level_max}, range(1, level_max + 1),
                        lambda n: _struct_witness(algebra.z(n).adjoint(), algebra.z(n))))

    specs.append(_sweep("block-identity-idempotent", "z[n] z[n] = z[n]",
                        {"level_max": level_max}, range(1, level_max + 1),
                        lambda n: _oracle_equal_witness(algebra.z(n) * algebra.z(n), algebra.z(n))))
    return specs


def _span_dimension(vectors: list[list[GaussianRational]]) -> int:
    rows = [row[:] for row in vectors]
    rank, cols = 0, len(rows[0]) if rows else 0
    for col in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / head
                rows[r] = [a - factor * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _suite_pair_matrix_units(opts: SuiteOptions):
    unit_max = opts.pick(opts.m, 4)
    mixed_max = opts.pick(opts.n, 3)
    nv_max = opts.pick(opts.nmax, 6)
    specs = []

    def unit_product(item):
        i, j, k, l = item
        want = algebra.f(i, l) if j == k else Element.zero()
        w = _pair_zero_witness(algebra.f(i, j) * algebra.f(k, l) - want)
        if w is not None:
            w["indices"] = [i, j, k, l]
        return w

    quads = [(i, j, k, l) for i in range(unit_max + 1) for j in range(unit_max + 1)
             for k in range(unit_max + 1) for l in range(unit_max + 1)]
    specs.append(_sweep("pair-matrix-unit-product",
                        "f[i,j] f[k,l] = delta(j,k) f[i,l] on the shift pair",
                        {"index_max": unit_max}, quads, unit_product))

    specs.append(_sweep("pair-matrix-unit-adjoint", "f[i,j]* = f[j,i]",
                        {"index_max": unit_max},
                        [(i, j) for i in range(unit_max + 1) for j in range(unit_max + 1)],
                        lambda ij: _struct_witness(algebra.f(ij[0], ij[1]).adjoint(),
                                                   algebra.f(ij[1], ij[0]))))

    def sandwich(item):
        j, k = item
        x = algebra.p_elem()
        if j:
            x = x * algebra.v_power(j)
        if k:
            x = x * algebra.vstar_power(k)
        x = x * algebra.p_elem()
        want = algebra.p_elem() if j == k else Element.zero()
        w = _pair_zero_witness(x - want)
        if w is not None:
            w["indices"] = [j, k]
        return w

    specs.append(_sweep("defect-power-sandwich", "p v^j v*^k p = delta(j,k) p on the pair",
                        {"index_max": unit_max},
                        [(j, k) for j in range(unit_max + 1) for k in range(unit_max + 1)],
                        sandwich))

    def mixed(item):
        i, j, k, l = item
        w = _pair_zero_witness(algebra.f(i, j) * algebra.ftilde(k, l))
        if w is not None:
            w["indices"] = [i, j, k, l]
        return w

    mixed_quads = [(i, j, k, l) for i in range(mixed_max + 1) for j in range(mixed_max + 1)
                   for k in range(mixed_max + 1) for l in range(mixed_max + 1)]
    specs.append(_sweep("ideal-intersection-trivial", "f[i,j] ft[k,l] = 0 on the pair",
                        {"index_max": mixed_max}, mixed_quads, mixed))

    def nv_empty():
        win = opts.pick(opts.window, 32)
        found = detect_nv(ShiftPairRep(win), nv_max)
        return not found, None if not found else {"found": sorted(found)}

    specs.append(_single("pair-defect-levels-empty",
                         "p v^n pt = 0 on the pair for every n",
                         {"nmax": nv_max}, nv_empty))

    def span():
        win = 2 * (2 * mixed_max + 4) + 4
        rep = ShiftPairRep(win)
        vectors = []
        for i in range(mixed_max + 1):
            for j in range(mixed_max + 1):
                pm = eval_element(rep, algebra.f(i, j))
                vec = []
                for leg in (pm.fwd, pm.bwd):
                    vec.extend(leg.entry(r, c) for r in range(win) for c in range(win))
                vectors.append(vec)
        got = _span_dimension(vectors)
        want = (mixed_max + 1) ** 2
        return got == want, None if got == want else {"rank": got, "expected": want}

    specs.append(_single("compact-span-dimension",
                         "the f[i,j] with i, j <= m span a space of dimension (m+1)^2",
                         {"index_max": mixed_max}, span))

    return specs


def _suite_absorption(opts: SuiteOptions):
    level_max = opts.pick(opts.n, 5)
    specs = []

    def power_element(b: int, a: int) -> Element:
        if b and a:
            return Element.from_word(NormalWord.pp(b, a))
        if b:
            return algebra.v_power(b)
        if a:
            return algebra.vstar_power(a)
        return algebra.e_elem()

    def absorbed(item):
        n, a, b = item
        lhs = power_element(b, a) * algebra.pi(n)
        rhs = algebra.pi(n) if a == b else algebra.vstar_power(a - b) * algebra.pi(n)
        w = _oracle_equal_witness(lhs, rhs)
        if w is not None:
            w.update({"n": n, "a": a, "b": b})
        return w

    inside = [(n, a, b) for n in range(1, level_max + 1)
              for a in range(n + 1) for b in range(a + 1)]
    specs.append(_sweep("power-absorption", "v^b v*^a pi[n] = v*^(a-b) pi[n] for b <= a <= n",
                        {"level_max": level_max}, inside, absorbed))

    def annihilated(item):
        n, a, b = item
        w = _oracle_equal_witness(power_element(b, a) * algebra.pi(n), Element.zero())
        if w is not None:
            w.update({"n": n, "a": a, "b": b})
        return w

    outside = [(n, a, b) for n in range(1, level_max + 1)
               for a in range(n + 3) for b in range(n + 3)
               if (a or b) and (a > n or b > a)]
    specs.append(_sweep("power-annihilation", "v^b v*^a pi[n] = 0 for a > n or b > a",
                        {"level_max": level_max, "index_max": "n+2"}, outside, annihilated))

    return specs


def _suite_classification(opts: SuiteOptions):
    letters = opts.pick(opts.n, 10)
    p, pt = algebra.p_elem(), algebra.ptilde_elem()
    words = list(enumerate_normal_words(letters))
    specs = []

    def compress(w):
        if w.shape == "PP" and w.exponents[0] == w.exponents[1]:
            return None
        wit = oracle_witness(p * _word_element(w) * p)
        if wit is None:
            return None
        return {"word": str(w), "representation": wit}

    specs.append(_sweep("defect-compression-vanishes",
                        "p w p = 0 unless w = v^a v*^a",
                        {"letters_max": letters}, words, compress))

    def dual_compress(w):
        if w.shape == "SP" and w.exponents[0] == w.exponents[1]:
            return None
        wit = oracle_witness(pt * _word_element(w) * pt)
        if wit is None:
            return None
        return {"word": str(w), "representation": wit}

    specs.append(_sweep("dual-defect-compression-vanishes",
                        "pt w pt = 0 unless w = v*^a v^a",
                        {"letters_max": letters}, words, dual_compress))

    return specs


def _suite_reduction_soundness(opts: SuiteOptions):
    samples = opts.pick(opts.samples, 1000)
    letters = opts.pick(opts.n, 12)
    jordan_max = opts.pick(opts.nmax, 14)
    window = opts.pick(opts.window, 32)
    rng = random.Random(opts.seed)
    corpus = [random_exp_word(rng, letters) for _ in range(samples)]
    reps = [JordanRep(n) for n in range(2, jordan_max + 1)] + [ShiftPairRep(window)]
    specs = []

    def sound(w):
        nf = reduce_word(w)
        for rep in reps:
            if eval_word(rep, w) != eval_word(rep, nf):
                return {"word": str(w), "normal_form": str(nf), "representation": repr(rep)}
        return None

    specs.append(_sweep("reduction-preserves-evaluation",
                        "eval(reduce(w)) = eval(w) in every tested representation",
                        {"samples": samples, "letters_max": letters,
                         "jordan_max": jordan_max, "window": window}, corpus, sound))

    def shaped(w):
        nf = reduce_word(w)
        runs = nf.runs
        if len(runs) == 3:
            a, b, c = runs[0][1], runs[1][1], runs[2][1]
            if not (0 < min(a, c) <= max(a, c) < b):
                return {"word": str(w), "normal_form": str(nf)}
            canonical = a + c <= b if runs[0][0] == PLAIN else a + c < b
            if not canonical:
                return {"word": str(w), "normal_form": str(nf), "kind": "non-canonical spelling"}
        return None

    specs.append(_sweep("canonical-shape", "reduce lands in the four canonical shapes",
                        {"samples": samples}, corpus, shaped))

    specs.append(_sweep("reduction-idempotent", "reduce(embed(reduce(w))) = reduce(w)",
                        {"samples": samples}, corpus,
                        lambda w: _struct_witness(reduce_word(embed(reduce_word(w))),
                                                  reduce_word(w))))

    specs.append(_sweep("adjoint-compatible", "reduce(w*) = reduce(w)*",
                        {"samples": samples}, corpus,
                        lambda w: _struct_witness(reduce_word(w.adjoint()),
                                                  word_adjoint(reduce_word(w)))))

    def monotone(w):
        nf = reduce_word(w)
        if nf.letters <= w.letters:
            return None
        return {"word": str(w), "normal_form": str(nf)}

    specs.append(_sweep("letters-nonincreasing", "reduce never lengthens a word",
                        {"samples": samples}, corpus, monotone))

    def partial_permutation(w):
        m = eval_word(JordanRep(9), w)
        seen = set()
        for (_, j) in m.data:
            if j in seen:
                return {"word": str(w), "column": j}
            seen.add(j)
        return None

    specs.append(_sweep("word-image-partial-permutation",
                        "word images have at most one entry per column",
                        {"dimension": 9}, corpus[:200], partial_permutation))

    hom_samples = opts.pick(opts.m, 200)
    pairs = [(random_element(rng), random_element(rng)) for _ in range(hom_samples)]

    def multiplicative(item):
        x, y = item
        prod = x * y
        for n in range(2, 9):
            rep = JordanRep(n)
            if eval_element(rep, prod) != eval_element(rep, x) @ eval_element(rep, y):
                return {"representation": f"jordan:{n}", "x": str(x), "y": str(y)}
        safe = x.max_letters + y.max_letters
        win = 2 * max(safe, 1) + 4
        rep = ShiftPairRep(win)
        lhs = eval_element(rep, prod)
        rhs = eval_element(rep, x) @ eval_element(rep, y)
        c = win - max(safe, 1)
        if lhs.fwd.corner(c) != rhs.fwd.corner(c) or lhs.bwd.corner(c) != rhs.bwd.corner(c):
            return {"representation": f"pair:{win}", "x": str(x), "y": str(y)}
        return None

    specs.append(_sweep("evaluation-multiplicative",
                        "eval(x y) = eval(x) eval(y), exactly",
                        {"samples": hom_samples}, pairs, multiplicative))

    return specs


SUITES = {
    "ppi-axioms": _suite_ppi_axioms,
    "projections": _suite_projections,
    "matrix-units": _suite_matrix_units,
    "ideal-orthogonality": _suite_ideal_orthogonality,
    "rank-one": _suite_rank_one,
    "central": _suite_central,
    "pair-matrix-units": _suite_pair_matrix_units,
    "absorption": _suite_absorption,
    "classification": _suite_classification,
    "reduction-soundness": _suite_reduction_soundness,
}


def run_suite(name: str, opts: SuiteOptions | None = None) -> VerifyReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    opts = opts or SuiteOptions()
    start = time.perf_counter()
    specs = SUITES[name](opts)
    checks = _run_checks(specs, opts.workers)
    elapsed = time.perf_counter() - start
    config = {k: v for k, v in vars(opts).items() if v is not None}
    return VerifyReport(suite=name, config=config, checks=checks,
                        wall_time_s=round(elapsed, 6))
