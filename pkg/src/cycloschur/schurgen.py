"""Cyclotomic q-Schur algebra generators acting on the permutation modules M^mu.

An element of S_{n,r}(m) is stored as left multipliers: for each source weight
mu and target weight nu an element ``a`` of H_{n,r} with ``phi(m_mu h) = a m_mu h``
landing in M^nu.  Composition multiplies multipliers; equality is decided by
comparing the values ``a m_mu`` in normal form.

The verifiers evaluate words in the generators on every ``m_mu`` from right to
left and memoise the intermediate values, so a relation instance costs a few
sparse-times-dense products in H.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .akengine import AKAlgebra, AKElement, element_to_json, iota_H, star
from .combi import (
    Composition, default_bounds, derived_bounds, enumerate_compositions, flatten,
    gamma, is_in_gamma_image, pad, unflatten,
)
from .exactalg import FieldElement, GroundElement, quantum_factorial, quantum_integer, q_pow

Values = dict  # target weight -> AKElement


@dataclass(frozen=True)
class Perturbation:
    """Deliberate errors in the generator formulas, for negative controls."""

    drop_e_prefactor: bool = False
    x_set_off_by_one: bool = False

    def active(self) -> bool:
        return self.drop_e_prefactor or self.x_set_off_by_one


@dataclass
class RelationReport:
    relation: str
    params: dict
    status: str  # "PASS" or "FAIL"
    witness: dict | None = None
    vacuous: bool = False

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_json(self) -> dict:
        out = {"relation": self.relation, "params": self.params, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.vacuous:
            out["vacuous"] = True
        return out


def _wjson(mu: Composition) -> list[list[int]]:
    return [list(c) for c in mu]


class SchurAlgebra:
    """S_{n,r}(m) realised on the direct sum of the M^mu, mu in Lambda_{n,r}(m)."""

    def __init__(self, n: int, r: int, m: Sequence[int] | None = None, *,
                 normalization: str = "balanced", perturbation: Perturbation | None = None,
                 hecke: AKAlgebra | None = None):
        self.n, self.r = n, r
        self.m = tuple(m) if m is not None else default_bounds(n, r)
        if len(self.m) != r or any(mk < 1 for mk in self.m):
            raise ValueError(f"bounds {self.m} must be {r} positive integers")
        self.perturbation = perturbation or Perturbation()
        self.hecke = hecke or AKAlgebra(n, r, normalization)
        if (self.hecke.n, self.hecke.r) != (n, r):
            raise ValueError("Hecke algebra has the wrong rank")
        self.weights: list[Composition] = enumerate_compositions(n, self.m)
        self._weight_set = set(self.weights)
        self.gamma_indices: list[tuple[int, int]] = [
            (i, k) for k in range(1, r + 1) for i in range(1, self.m[k - 1] + 1)]
        self.gamma_prime: list[tuple[int, int]] = self.gamma_indices[:-1]
        self._m: dict = {}
        self._gens: dict = {}
        self._words: dict = {}

    def __repr__(self) -> str:
        return f"SchurAlgebra(n={self.n}, r={self.r}, m={self.m})"

    # -- weights ------------------------------------------------------------
    def pos(self, i: int, k: int) -> int:
        """Linear position of (i,k) in Gamma(m), 0-based."""
        if not (1 <= k <= self.r and 1 <= i <= self.m[k - 1]):
            raise ValueError(f"({i},{k}) is not in Gamma({self.m})")
        return sum(self.m[:k - 1]) + i - 1

    def label(self, p: int) -> tuple[int, int]:
        return self.gamma_indices[p]

    def shift(self, mu: Composition, p: int, l: int) -> Composition | None:
        """mu + l*alpha_p, or None when it leaves Lambda_{n,r}(m)."""
        v = list(flatten(mu))
        v[p] += l
        v[p + 1] -= l
        if v[p] < 0 or v[p + 1] < 0:
            return None
        return unflatten(v, self.m)

    def weight(self, mu: Sequence[Sequence[int]]) -> Composition:
        w = pad(mu, self.m)
        if w not in self._weight_set:
            raise ValueError(f"{mu} is not in Lambda_({self.n},{self.r})({self.m})")
        return w

    def m_mu(self, mu: Composition) -> AKElement:
        got = self._m.get(mu)
        if got is None:
            got = self.hecke.m_mu(mu)
            self._m[mu] = got
        return got

    # -- constructors -------------------------------------------------------
    def element(self, components: Mapping) -> "SchurElement":
        return SchurElement(self, components)

    def zero(self) -> "SchurElement":
        return SchurElement(self, {})

    def identity(self) -> "SchurElement":
        one = self.hecke.one()
        return SchurElement(self, {mu: {mu: one} for mu in self.weights})

    def idem(self, la: Sequence[Sequence[int]]) -> "SchurElement":
        la = self.weight(la)
        return SchurElement(self, {la: {la: self.hecke.one()}})

    def _coset_sum(self, start: int, count: int, step: int) -> AKElement:
        """sum_{j=0}^{count} q^j T_{x_j}^* for x_j = s_start s_{start+step} ... (j factors)."""
        H = self.hecke
        terms = {}
        w = list(H.identity)
        terms[tuple(w)] = GroundElement.const(1)
        gens = [start + step * t for t in range(count)]
        for j in range(1, count + 1):
            # x_j^{-1} = s_{a_j} ... s_{a_1}; built by right multiplication
            w = list(H.identity)
            for a in reversed(gens[:j]):
                w[a - 1], w[a] = w[a], w[a - 1]
            terms[tuple(w)] = q_pow(j)
        return AKElement(H, {(H.zero_exp, w): c for w, c in terms.items()})

    def _e_multiplier(self, mu: Composition, p: int) -> AKElement:
        v = flatten(mu)
        N = sum(v[:p + 1])
        count = v[p] - (1 if self.perturbation.x_set_off_by_one else 0)
        x = self._coset_sum(N, max(count, 0), -1)
        if not self.perturbation.drop_e_prefactor:
            x = x.scale(q_pow(1 - v[p + 1]))
        i, k = self.label(p)
        if i == self.m[k - 1]:
            x = x * (self.hecke.element_L(N + 1) - self.hecke.scalar(self.hecke.Q(k + 1)))
        return x

    def _f_multiplier(self, mu: Composition, p: int) -> AKElement:
        v = flatten(mu)
        N = sum(v[:p + 1])
        count = v[p + 1] - (1 if self.perturbation.x_set_off_by_one else 0)
        y = self._coset_sum(N, max(count, 0), 1)
        return y.scale(q_pow(1 - v[p]))

    def gen_E(self, i: int, k: int) -> "SchurElement":
        p = self.pos(i, k)
        if p >= len(self.gamma_prime):
            raise ValueError(f"E_({i},{k}) is not a generator: ({i},{k}) is the last index")
        key = ("E", p)
        got = self._gens.get(key)
        if got is None:
            comps = {}
            for mu in self.weights:
                nu = self.shift(mu, p, 1)
                if nu is not None:
                    comps[mu] = {nu: self._e_multiplier(mu, p)}
            got = SchurElement(self, comps)
            self._gens[key] = got
        return got

    def gen_F(self, i: int, k: int) -> "SchurElement":
        p = self.pos(i, k)
        if p >= len(self.gamma_prime):
            raise ValueError(f"F_({i},{k}) is not a generator: ({i},{k}) is the last index")
        key = ("F", p)
        got = self._gens.get(key)
        if got is None:
            comps = {}
            for mu in self.weights:
                nu = self.shift(mu, p, -1)
                if nu is not None:
                    comps[mu] = {nu: self._f_multiplier(mu, p)}
            got = SchurElement(self, comps)
            self._gens[key] = got
        return got

    def divided_E(self, i: int, k: int, l: int) -> "SchurElement":
        return _divided(self.gen_E(i, k), l)

    def divided_F(self, i: int, k: int, l: int) -> "SchurElement":
        return _divided(self.gen_F(i, k), l)

    def jm_value(self, i: int, k: int, la: Sequence[Sequence[int]]) -> AKElement:
        """sigma^la_(i,k) evaluated on m_la: m_la (L_{N+1} + ... + L_{N+la_i})."""
        la = self.weight(la)
        p = self.pos(i, k)
        v = flatten(la)
        if v[p] == 0:
            return self.hecke.zero()
        N = sum(v[:p])
        s = self.hecke.zero()
        for j in range(N + 1, N + v[p] + 1):
            s = s + self.hecke.element_L(j)
        return self.m_mu(la) * s

    # -- word evaluation ------------------------------------------------------
    def factor(self, key) -> "SchurElement":
        kind = key[0]
        if kind == "E":
            return self.gen_E(*self.label(key[1]))
        if kind == "F":
            return self.gen_F(*self.label(key[1]))
        if kind == "1":
            return self.idem(key[1])
        raise KeyError(key)

    def word_value(self, word: tuple, mu: Composition) -> Values:
        """Value on m_mu of the product of factors in ``word`` (leftmost first)."""
        key = (word, mu)
        got = self._words.get(key)
        if got is not None:
            return got
        if not word:
            out = {mu: self.m_mu(mu)}
        else:
            inner = self.word_value(word[1:], mu)
            out = self.factor(word[0]).apply(inner) if inner else {}
        self._words[key] = out
        return out


def _divided(x: "SchurElement", l: int) -> "SchurElement":
    if l < 1:
        raise ValueError("divided powers need l >= 1")
    y = x
    for _ in range(l - 1):
        y = x * y
    if l == 1:
        return y
    return y.scale(FieldElement(GroundElement.const(1), quantum_factorial(l)))


class SchurElement:
    """Weight-graded family of left multipliers: components[mu][nu] = a."""

    __slots__ = ("alg", "components")

    def __init__(self, alg: SchurAlgebra, components: Mapping):
        self.alg = alg
        comps = {}
        for mu, targets in components.items():
            t = {nu: a for nu, a in targets.items() if a}
            if t:
                comps[mu] = t
        self.components = comps

    def _same(self, other: "SchurElement") -> None:
        a, b = self.alg, other.alg
        if a is not b and (a.n, a.r, a.m) != (b.n, b.r, b.m):
            raise ValueError("elements of different Schur algebras")

    def __add__(self, other: "SchurElement") -> "SchurElement":
        self._same(other)
        out = {mu: dict(t) for mu, t in self.components.items()}
        for mu, t in other.components.items():
            row = out.setdefault(mu, {})
            for nu, a in t.items():
                row[nu] = row[nu] + a if nu in row else a
        return SchurElement(self.alg, out)

    def __neg__(self) -> "SchurElement":
        return self.scale(-1)

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        return self + (-other)

    def scale(self, c) -> "SchurElement":
        return SchurElement(self.alg, {mu: {nu: a.scale(c) for nu, a in t.items()}
                                       for mu, t in self.components.items()})

    def __mul__(self, other):
        """Composition self after other; scalars scale."""
        if isinstance(other, SchurElement):
            return compose(self, other)
        if isinstance(other, (int, GroundElement, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, GroundElement, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def apply(self, values: Mapping) -> Values:
        """Image of a vector {weight: element of M^weight}."""
        out: Values = {}
        for nu, v in values.items():
            for rho, a in self.components.get(nu, {}).items():
                w = a * v
                out[rho] = out[rho] + w if rho in out else w
        return {rho: w for rho, w in out.items() if w}

    def eval_on_m(self, mu: Sequence[Sequence[int]]) -> Values:
        mu = self.alg.weight(mu)
        return self.apply({mu: self.alg.m_mu(mu)})

    def equals(self, other: "SchurElement") -> bool:
        diff = self - other
        return all(not diff.apply({mu: self.alg.m_mu(mu)}) for mu in diff.components)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurElement):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __repr__(self) -> str:
        return f"SchurElement({len(self.components)} source weights)"


def compose(phi: SchurElement, psi: SchurElement) -> SchurElement:
    """phi after psi."""
    phi._same(psi)
    out: dict = {}
    for mu, t in psi.components.items():
        row: dict = {}
        for nu, a in t.items():
            for rho, b in phi.components.get(nu, {}).items():
                c = b * a
                row[rho] = row[rho] + c if rho in row else c
        if row:
            out[mu] = row
    return SchurElement(phi.alg, out)


def add(phi: SchurElement, psi: SchurElement) -> SchurElement:
    return phi + psi


def scale(phi: SchurElement, c) -> SchurElement:
    return phi.scale(c)


def eval_on_m(phi: SchurElement, mu: Sequence[Sequence[int]]) -> Values:
    return phi.eval_on_m(mu)


def equals(phi: SchurElement, psi: SchurElement) -> bool:
    return phi.equals(psi)


# ---------------------------------------------------------------------------
# relation checking

Term = tuple  # (coefficient, word)


@dataclass
class _Instance:
    relation: str
    params: dict
    lhs: list
    rhs: list
    eta: tuple | None = None  # (p,) when the right side is sum_la eta^la_p
    vacuous: bool = False


def _values_diff(S: SchurAlgebra, terms: Iterable[Term], mu: Composition, acc: Values, sign: int) -> None:
    for c, word in terms:
        for nu, v in S.word_value(word, mu).items():
            w = v.scale(c * sign)
            acc[nu] = acc[nu] + w if nu in acc else w


def _eta_value(S: SchurAlgebra, p: int, mu: Composition) -> AKElement:
    v = flatten(mu)
    i, k = S.label(p)
    d = v[p] - v[p + 1]
    m_mu = S.m_mu(mu)
    if i != S.m[k - 1]:
        return m_mu.scale(quantum_integer(d))
    Qk1 = S.hecke.Q(k + 1)
    out = m_mu.scale(-Qk1 * quantum_integer(d))
    out = out + S.jm_value(i, k, mu).scale(q_pow(d - 1))
    out = out - S.jm_value(1, k + 1, mu).scale(q_pow(d + 1))
    return out


def _witness(mu, nu, x: AKElement) -> dict:
    return {"source": _wjson(mu), "target": _wjson(nu), "difference": element_to_json(x)}


def _run_instance(S: SchurAlgebra, inst: _Instance) -> RelationReport:
    for mu in S.weights:
        acc: Values = {}
        _values_diff(S, inst.lhs, mu, acc, 1)
        _values_diff(S, inst.rhs, mu, acc, -1)
        if inst.eta is not None:
            e = _eta_value(S, inst.eta[0], mu)
            acc[mu] = acc[mu] - e if mu in acc else -e
        for nu, x in acc.items():
            if x:
                return RelationReport(inst.relation, inst.params, "FAIL", _witness(mu, nu, x))
    return RelationReport(inst.relation, inst.params, "PASS", vacuous=inst.vacuous)


def _lbl(S: SchurAlgebra, p: int) -> list[int]:
    return list(S.label(p))


def presentation_instances(S: SchurAlgebra) -> list[_Instance]:
    """Every instance of the defining relations, in a fixed order."""
    out: list[_Instance] = []
    W = S.weights
    G = range(len(S.gamma_prime))
    one = GroundElement.const(1)
    for la in W:
        for mu in W:
            rhs = [(one, (("1", la),))] if la == mu else []
            out.append(_Instance("idempotents", {"la": _wjson(la), "mu": _wjson(mu)},
                                 [(one, (("1", la), ("1", mu)))], rhs))
    out.append(_Instance("idempotents", {"sum": True}, [(one, (("1", la),)) for la in W], [(one, ())]))
    for rel, gen, sign, side in (("E-weight-right", "E", 1, "right"), ("F-weight-right", "F", -1, "right"),
                                 ("E-weight-left", "E", -1, "left"), ("F-weight-left", "F", 1, "left")):
        for p in G:
            for la in W:
                nu = S.shift(la, p, sign)
                params = {"index": _lbl(S, p), "la": _wjson(la)}
                if side == "right":
                    lhs = [(one, ((gen, p), ("1", la)))]
                    rhs = [(one, (("1", nu), (gen, p)))] if nu else []
                else:
                    lhs = [(one, (("1", la), (gen, p)))]
                    rhs = [(one, ((gen, p), ("1", nu)))] if nu else []
                out.append(_Instance(rel, params, lhs, rhs))
    for p in G:
        for p2 in G:
            lhs = [(one, (("E", p), ("F", p2))), (-one, (("F", p2), ("E", p)))]
            out.append(_Instance("EF-commutator", {"index": _lbl(S, p), "other": _lbl(S, p2)}, lhs, [],
                                 eta=(p,) if p == p2 else None))
    qq = q_pow(1) + q_pow(-1)
    for rel, gen in (("E-serre", "E"), ("F-serre", "F")):
        serre = []
        for p in G:
            for p2 in (p - 1, p + 1):
                if p2 in G:
                    lhs = [(one, ((gen, p2), (gen, p), (gen, p))),
                           (-qq, ((gen, p), (gen, p2), (gen, p))),
                           (one, ((gen, p), (gen, p), (gen, p2)))]
                    params = {"index": _lbl(S, p), "other": _lbl(S, p2)}
                    if S.label(p2)[1] != S.label(p)[1]:
                        # neighbours across a component boundary; checked as well
                        params["across_components"] = True
                    serre.append(_Instance(rel, params, lhs, []))
        if not serre:
            serre.append(_Instance(rel, {"family": "serre"}, [], [], vacuous=True))
        out.extend(serre)
        comm = []
        for p, p2 in itertools.combinations(G, 2):
            if p2 - p >= 2:
                lhs = [(one, ((gen, p), (gen, p2))), (-one, ((gen, p2), (gen, p)))]
                comm.append(_Instance(rel, {"index": _lbl(S, p), "other": _lbl(S, p2),
                                            "commute": True}, lhs, []))
        if not comm:
            comm.append(_Instance(rel, {"family": "commute"}, [], [], vacuous=True))
        out.extend(comm)
    return out


_worker_cache: dict = {}


def _worker_run(args) -> list[dict]:
    n, r, m, normalization, perturbation, chunk = args
    key = (n, r, m, normalization, perturbation)
    S = _worker_cache.get(key)
    if S is None:
        S = SchurAlgebra(n, r, m, normalization=normalization, perturbation=perturbation)
        _worker_cache.clear()
        _worker_cache[key] = S
    return [_run_instance(S, inst) for inst in chunk]


def verify_presentation(n: int, r: int, m: Sequence[int] | None = None, *,
                        normalization: str = "balanced", perturbation: Perturbation | None = None,
                        workers: int = 1) -> list[RelationReport]:
    S = SchurAlgebra(n, r, m, normalization=normalization, perturbation=perturbation)
    insts = presentation_instances(S)
    if workers <= 1:
        return [_run_instance(S, inst) for inst in insts]
    # round-robin chunks, merged back into instance order
    chunks = [insts[j::workers] for j in range(workers)]
    args = [(n, r, S.m, normalization, S.perturbation, c) for c in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(_worker_run, args))
    out: list = [None] * len(insts)
    for j, res in enumerate(results):
        for t, rep in enumerate(res):
            out[j + t * workers] = rep
    return out


def verify_theta(n: int, r: int, m: Sequence[int] | None = None, l_max: int = 1, *,
                 normalization: str = "balanced",
                 perturbation: Perturbation | None = None) -> list[RelationReport]:
    """(E^(l) m_mu)^* = q^{l(mu_i - mu_{i+1} + l)} F^(l) m_{mu + l alpha}."""
    S = SchurAlgebra(n, r, m, normalization=normalization, perturbation=perturbation)
    out = []
    for l in range(1, l_max + 1):
        inv = None if l == 1 else FieldElement(GroundElement.const(1), quantum_factorial(l))
        for p in range(len(S.gamma_prime)):
            for mu in S.weights:
                params = {"index": _lbl(S, p), "mu": _wjson(mu), "l": l}
                ew = S.word_value((("E", p),) * l, mu)
                nu = S.shift(mu, p, l)
                if nu is None:
                    if ew:
                        tgt, x = next(iter(ew.items()))
                        out.append(RelationReport("theta", params, "FAIL", _witness(mu, tgt, x)))
                    else:
                        out.append(RelationReport("theta", params, "PASS", vacuous=True))
                    continue
                lhs = ew.get(nu, S.hecke.zero())
                fw = S.word_value((("F", p),) * l, nu).get(mu, S.hecke.zero())
                if inv is not None:
                    lhs, fw = lhs.scale(inv), fw.scale(inv)
                v = flatten(mu)
                rhs = fw.scale(q_pow(l * (v[p] - v[p + 1] + l)))
                diff = star(lhs) - rhs
                status = "FAIL" if diff else "PASS"
                out.append(RelationReport("theta", params, status,
                                          _witness(mu, nu, diff) if diff else None))
    return out


def xi(S: SchurAlgebra) -> SchurElement:
    """Sum of 1_la over weights whose last entry is 1."""
    one = S.hecke.one()
    return SchurElement(S, {mu: {mu: one} for mu in S.weights if is_in_gamma_image(mu, S.m)})


def _monomials(S: SchurAlgebra, gen: str, max_len: int) -> list[tuple]:
    G = range(len(S.gamma_prime))
    words = [()]
    for length in range(1, max_len + 1):
        words.extend(tuple((gen, p) for p in ps) for ps in itertools.product(G, repeat=length))
    return words


def verify_iota(n: int, r: int, m: Sequence[int] | None = None, *, max_len: int = 2,
                normalization: str = "balanced",
                perturbation: Perturbation | None = None) -> list[RelationReport]:
    """Compatibility of S_{n,r}(m') inside S_{n+1,r}(m) with the Hecke embedding.

    ``m`` are the bounds at level n+1 (default n+1 in every component); the
    level-n bounds drop the last row of component r."""
    m = tuple(m) if m is not None else default_bounds(n + 1, r)
    m_small = derived_bounds(m)
    big = SchurAlgebra(n + 1, r, m, normalization=normalization, perturbation=perturbation)
    small = SchurAlgebra(n, r, m_small, normalization=normalization, perturbation=perturbation)
    out: list[RelationReport] = []

    def compare(name, params, lo: Values, hi: Values, mu_big):
        expect = {gamma(nu, m): iota_H(v, big.hecke) for nu, v in lo.items()}
        for nu in set(expect) | set(hi):
            d = expect.get(nu, big.hecke.zero()) - hi.get(nu, big.hecke.zero())
            if d:
                return RelationReport(name, params, "FAIL", _witness(mu_big, nu, d))
        return RelationReport(name, params, "PASS")

    for la in small.weights:
        gla = gamma(la, m)
        for p in range(len(small.gamma_prime)):
            i, k = small.label(p)
            pb = big.pos(i, k)
            params = {"index": [i, k], "la": _wjson(la)}
            for gen in ("E", "F"):
                out.append(compare(f"iota-{gen}", params, small.word_value(((gen, p),), la),
                                   big.word_value(((gen, pb),), gla), gla))
        for (i, k) in small.gamma_indices:
            lo = small.jm_value(i, k, la)
            hi = big.jm_value(i, k, gla)
            d = iota_H(lo, big.hecke) - hi
            params = {"index": [i, k], "la": _wjson(la)}
            out.append(RelationReport("iota-sigma", params, "FAIL" if d else "PASS",
                                      _witness(gla, gla, d) if d else None))
    X = xi(big)
    ok = compose(X, X).equals(X)
    out.append(RelationReport("xi-idempotent", {"n": n + 1}, "PASS" if ok else "FAIL"))

    # xi x 1_mu y xi = 0 for F-monomials x, E-monomials y, mu with last entry >= 2
    ys = _monomials(big, "E", max_len)
    xs = _monomials(big, "F", max_len)
    bad_mu = [mu for mu in big.weights if flatten(mu)[-1] >= 2]
    gamma_src = [nu for nu in big.weights if is_in_gamma_image(nu, m)]
    for mu in bad_mu:
        failure = None
        for y in ys:
            for nu in gamma_src:
                yv = big.word_value(y, nu)
                mid = {mu: yv[mu]} if mu in yv else {}
                for x in xs:
                    val = mid
                    for f in reversed(x):
                        val = big.factor(f).apply(val) if val else {}
                    val = X.apply(val) if val else {}
                    if val:
                        tgt, d = next(iter(val.items()))
                        failure = _witness(nu, tgt, d)
                        break
                if failure:
                    break
            if failure:
                break
        params = {"mu": _wjson(mu), "max_len": max_len}
        out.append(RelationReport("xi-annihilation", params, "FAIL" if failure else "PASS", failure))
    if not bad_mu:
        out.append(RelationReport("xi-annihilation", {"max_len": max_len}, "PASS", vacuous=True))
    return out


def omega(n: int, r: int, m: Sequence[int]) -> Composition:
    """(0,...,0,(1^n)) padded to the bounds m."""
    comps = [() for _ in range(r - 1)] + [(1,) * n]
    return pad(comps, m)


def verify_dictionary(n: int, r: int, m: Sequence[int] | None = None, *,
                      normalization: str = "balanced",
                      perturbation: Perturbation | None = None) -> list[RelationReport]:
    """T_0 and T_i recovered from F E on the weight omega, via phi -> phi(m_omega)."""
    S = SchurAlgebra(n, r, m, normalization=normalization, perturbation=perturbation)
    H = S.hecke
    w = omega(n, r, S.m)
    out = []
    one = GroundElement.const(1)

    def value(terms) -> AKElement:
        acc: Values = {}
        _values_diff(S, terms, w, acc, 1)
        return acc.get(w, H.zero())

    m_w = S.m_mu(w)
    out.append(RelationReport("dictionary-m-omega", {"omega": _wjson(w)},
                              "PASS" if m_w == H.one() else "FAIL"))
    if r >= 2:
        p = S.pos(S.m[r - 2], r - 1)
        got = value([(one, (("1", w), ("F", p), ("E", p), ("1", w)))]) + m_w.scale(H.Q(r))
        d = got - H.generator(0) * m_w
        out.append(RelationReport("dictionary-T0", {"n": n, "r": r}, "FAIL" if d else "PASS",
                                  _witness(w, w, d) if d else None))
    for i in range(1, n):
        p = S.pos(i, r)
        got = value([(one, (("1", w), ("F", p), ("E", p), ("1", w)))]) - m_w.scale(q_pow(-1))
        d = got - H.generator(i) * m_w
        out.append(RelationReport("dictionary-T", {"i": i, "n": n, "r": r}, "FAIL" if d else "PASS",
                                  _witness(w, w, d) if d else None))
    return out


def summarize(reports: Sequence[RelationReport]) -> dict:
    fails = [rep for rep in reports if not rep.passed]
    return {"instances": len(reports), "failures": len(fails),
            "vacuous": sum(rep.vacuous for rep in reports)}
