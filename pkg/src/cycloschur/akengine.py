"""The Ariki-Koike algebra H_{n,r} over Z[q, q^-1, Q_1..Q_r].

Elements are kept in the normal form basis ``L_1^a_1 ... L_n^a_n T_w`` with
``0 <= a_i < r`` and ``w`` in the symmetric group.  The Hecke quadratic
relation is normalised as

    (T_i - q)(T_i + q^-1) = 0,   i.e.   T_i^2 = 1 + (q - q^-1) T_i,

and ``L_1 = T_0``, ``L_{i+1} = T_i L_i T_i``.  The other common normalisation
``(T_i - q)(T_i + 1) = 0`` is available as ``normalization="classical"``; it
only exists so verifiers can be checked against a deliberately wrong input.

Multiplication works on basis words.  ``T_w (L^b T_v)`` is expanded by
pushing simple generators in from the left (the crossing rules never raise an
L exponent past ``r - 1``); the leftover ``L^a L^b`` is brought back into range
by ``L_1^r = -(lower terms)`` and a conjugation formula expressing ``L_j^r``
through ``T_{j-1} L_{j-1}^r T_{j-1}``.  Every step is memoised per algebra.
"""

from __future__ import annotations

import itertools
import json
import random
from typing import Iterable, Iterator, Mapping, Sequence

from .combi import (
    Composition, StdTableau, flatten, perm_inverse, perm_length, tableau_perm,
)
from .exactalg import (
    ONE, ZERO, FieldElement, GroundElement, elementary_symmetric_signed,
    format_ground, parse_ground, q_pow,
)

Word = tuple[tuple[int, ...], tuple[int, ...]]  # (L exponents, one-line permutation)

NORMALIZATIONS = ("balanced", "classical")


def _add_into(acc: dict, key, c) -> None:
    s = acc.get(key)
    s = c if s is None else s + c
    if s:
        acc[key] = s
    else:
        acc.pop(key, None)


class AKAlgebra:
    """Structure constants and caches for one H_{n,r}."""

    def __init__(self, n: int, r: int, normalization: str = "balanced"):
        if n < 0 or r < 1:
            raise ValueError("need n >= 0 and r >= 1")
        if normalization not in NORMALIZATIONS:
            raise ValueError(f"unknown normalization {normalization!r}")
        self.n, self.r = n, r
        self.normalization = normalization
        # T_i^2 = A + B T_i with A = q^a_exp
        if normalization == "balanced":
            self._a_exp = 0
            self._B = q_pow(1) - q_pow(-1)
        else:
            self._a_exp = 1
            self._B = q_pow(1) - 1
        self.identity: tuple[int, ...] = tuple(range(n))
        self.zero_exp: tuple[int, ...] = (0,) * n
        cyc = elementary_symmetric_signed(r)
        self._cyc = [-c for c in cyc[:r]]  # L_1^r = sum_t _cyc[t] L_1^t
        self._hecke: dict = {}
        self._rword: dict = {}
        self._lT: dict = {}
        self._tprod: dict = {}
        self._redL: dict = {}
        self._Lpow: dict = {}
        self._lL: dict = {}
        self._bprod: dict = {}

    def __repr__(self) -> str:
        return f"AKAlgebra(n={self.n}, r={self.r}, normalization={self.normalization!r})"

    def _A(self, e: int) -> GroundElement:
        return q_pow(self._a_exp * e)

    @property
    def dimension(self) -> int:
        d = self.r ** self.n
        for k in range(2, self.n + 1):
            d *= k
        return d

    def basis(self) -> Iterator[Word]:
        for a in itertools.product(range(self.r), repeat=self.n):
            for w in itertools.permutations(range(self.n)):
                yield (a, w)

    # -- symmetric group / Hecke part ------------------------------------
    def reduced_word(self, w: tuple[int, ...]) -> tuple[int, ...]:
        """Generators i_1..i_k (1-based) with w = s_i1 ... s_ik, k = length."""
        got = self._rword.get(w)
        if got is not None:
            return got
        word = []
        cur = list(w)
        while True:
            for i in range(len(cur) - 1):
                if cur[i] > cur[i + 1]:
                    cur[i], cur[i + 1] = cur[i + 1], cur[i]
                    word.append(i + 1)
                    break
            else:
                break
        out = tuple(reversed(word))
        self._rword[w] = out
        return out

    def _hecke_rmul(self, terms: Mapping, i: int) -> dict:
        """(sum c_u T_u) * T_i."""
        out: dict = {}
        A, B = self._A(1), self._B
        for u, c in terms.items():
            v = list(u)
            v[i - 1], v[i] = v[i], v[i - 1]
            v = tuple(v)
            if u[i - 1] < u[i]:
                _add_into(out, v, c)
            else:
                _add_into(out, v, c * A)
                _add_into(out, u, c * B)
        return out

    def hecke_product(self, u: tuple[int, ...], v: tuple[int, ...]) -> dict:
        """T_u T_v as {perm: coeff}."""
        key = (u, v)
        got = self._hecke.get(key)
        if got is not None:
            return got
        terms: dict = {u: ONE}
        for i in self.reduced_word(v):
            terms = self._hecke_rmul(terms, i)
        self._hecke[key] = terms
        return terms

    def _hecke_lmul_gen(self, i: int, v: tuple[int, ...]) -> dict:
        """T_i T_v."""
        pos_a, pos_b = v.index(i - 1), v.index(i)
        w = tuple(i if x == i - 1 else i - 1 if x == i else x for x in v)
        if pos_a < pos_b:
            return {w: ONE}
        return {w: self._A(1), v: self._B}

    # -- generator T_i acting on the left of a basis word ------------------
    def lmul_T_word(self, i: int, word: Word) -> dict:
        """T_i * (L^b T_v) in normal form, i >= 1."""
        key = (i, word)
        got = self._lT.get(key)
        if got is not None:
            return got
        b, v = word
        alpha, beta = b[i - 1], b[i]
        m = min(alpha, beta)
        c = abs(alpha - beta)
        out: dict = {}
        swapped = list(b)
        swapped[i - 1], swapped[i] = beta, alpha
        swapped = tuple(swapped)
        if c == 0:
            main = ONE
        elif alpha > beta:
            main = self._A(-c)
        else:
            main = self._A(c)
        for u, h in self._hecke_lmul_gen(i, v).items():
            _add_into(out, (swapped, u), main * h)
        for t in range(c):
            if alpha > beta:
                coeff = -self._B * self._A(-(c - t))
            else:
                coeff = self._B * self._A(t)
            e = list(b)
            e[i - 1], e[i] = m + t, m + c - t
            _add_into(out, (tuple(e), v), coeff)
        self._lT[key] = out
        return out

    def lmul_T(self, i: int, terms: Mapping) -> dict:
        out: dict = {}
        for word, c in terms.items():
            for w2, c2 in self.lmul_T_word(i, word).items():
                _add_into(out, w2, c * c2)
        return out

    def rmul_T(self, i: int, terms: Mapping) -> dict:
        """(sum c L^a T_u) * T_i -- only the Hecke part moves."""
        out: dict = {}
        for (a, u), c in terms.items():
            for u2, c2 in self._hecke_rmul({u: ONE}, i).items():
                _add_into(out, (a, u2), c * c2)
        return out

    def _rmul_perm(self, terms: Mapping, v: tuple[int, ...]) -> dict:
        if v == self.identity:
            return dict(terms)
        out: dict = {}
        for (a, u), c in terms.items():
            for u2, c2 in self.hecke_product(u, v).items():
                _add_into(out, (a, u2), c * c2)
        return out

    def tprod(self, w: tuple[int, ...], word: Word) -> dict:
        """T_w * (L^b T_v)."""
        key = (w, word)
        got = self._tprod.get(key)
        if got is not None:
            return got
        if w == self.identity:
            out = {word: ONE}
        else:
            # left descent i: w = s_i w' with l(w') = l(w) - 1
            i = next(i for i in range(1, self.n) if w.index(i - 1) > w.index(i))
            w2 = tuple(i if x == i - 1 else i - 1 if x == i else x for x in w)
            out = self.lmul_T(i, self.tprod(w2, word))
        self._tprod[key] = out
        return out

    # -- L monomials -------------------------------------------------------
    def L_power_r(self, j: int) -> dict:
        """Normal form of L_{j+1}^r (j is 0-based)."""
        got = self._Lpow.get(j)
        if got is not None:
            return got
        r, e = self.r, self.identity
        if j == 0:
            out = {}
            for t, c in enumerate(self._cyc):
                if c:
                    exp = (t,) + (0,) * (self.n - 1)
                    out[(exp, e)] = c
        else:
            # L_{j+1}^r = A^{r-1} (T_j L_j^r T_j + B sum_{t=1}^{r-1} A^{-(r-t)} L_{j+1}^{r-t} L_j^t T_j)
            inner = self.rmul_T(j, self.lmul_T(j, self.L_power_r(j - 1)))
            sj = list(e)
            sj[j - 1], sj[j] = sj[j], sj[j - 1]
            sj = tuple(sj)
            for t in range(1, r):
                exp = [0] * self.n
                exp[j] = r - t
                exp[j - 1] = t
                _add_into(inner, (tuple(exp), sj), self._B * self._A(-(r - t)))
            scale = self._A(r - 1)
            out = {w: c * scale for w, c in inner.items()} if self._a_exp else inner
        self._Lpow[j] = out
        return out

    def reduce_L(self, c: tuple[int, ...]) -> dict:
        """Normal form of L_1^c_1 ... L_n^c_n for arbitrary c >= 0."""
        got = self._redL.get(c)
        if got is not None:
            return got
        r = self.r
        top = max((j for j in range(self.n) if c[j] >= r), default=None)
        if top is None:
            out = {(c, self.identity): ONE}
        else:
            rest = list(c)
            rest[top] -= r
            out = {}
            for (b, v), coeff in self.L_power_r(top).items():
                exp = tuple(x + y for x, y in zip(rest, b))
                part = self._rmul_perm(self.reduce_L(exp), v)
                for w2, c2 in part.items():
                    _add_into(out, w2, coeff * c2)
        self._redL[c] = out
        return out

    def lmul_L(self, a: tuple[int, ...], word: Word) -> dict:
        """L^a * (L^b T_v)."""
        key = (a, word)
        got = self._lL.get(key)
        if got is not None:
            return got
        b, v = word
        exp = tuple(x + y for x, y in zip(a, b))
        out = self._rmul_perm(self.reduce_L(exp), v)
        self._lL[key] = out
        return out

    # -- products ----------------------------------------------------------
    def word_product(self, x: Word, y: Word) -> dict:
        key = (x, y)
        got = self._bprod.get(key)
        if got is not None:
            return got
        a, w = x
        out: dict = {}
        for w2, c in self.tprod(w, y).items():
            if a == self.zero_exp:
                _add_into(out, w2, c)
                continue
            for w3, c3 in self.lmul_L(a, w2).items():
                _add_into(out, w3, c * c3)
        self._bprod[key] = out
        return out

    def mul_terms(self, x: Mapping, y: Mapping) -> dict:
        out: dict = {}
        for wx, cx in x.items():
            for wy, cy in y.items():
                c = cx * cy
                for wz, cz in self.word_product(wx, wy).items():
                    _add_into(out, wz, c * cz if cz != ONE else c)
        return out

    # -- constructors --------------------------------------------------------
    def element(self, terms: Mapping | None = None) -> "AKElement":
        return AKElement(self, terms or {})

    def zero(self) -> "AKElement":
        return AKElement(self, {})

    def one(self) -> "AKElement":
        return AKElement(self, {(self.zero_exp, self.identity): ONE})

    def scalar(self, c) -> "AKElement":
        if isinstance(c, int):
            c = GroundElement.const(c, self.r)
        return AKElement(self, {(self.zero_exp, self.identity): c} if c else {})

    def element_T(self, w: Sequence[int]) -> "AKElement":
        w = tuple(w)
        if sorted(w) != list(range(self.n)):
            raise ValueError(f"{w} is not a permutation of 0..{self.n - 1}")
        return AKElement(self, {(self.zero_exp, w): ONE})

    def generator(self, i: int) -> "AKElement":
        """T_i for 0 <= i <= n-1 (T_0 = L_1)."""
        if not 0 <= i < self.n:
            raise IndexError(f"T_{i} is not a generator of H_({self.n},{self.r})")
        if i == 0:
            return self.element_L(1)
        w = list(self.identity)
        w[i - 1], w[i] = w[i], w[i - 1]
        return self.element_T(w)

    def element_L(self, i: int, power: int = 1) -> "AKElement":
        """L_i^power in normal form."""
        if not 1 <= i <= self.n:
            raise IndexError(f"L_{i} does not exist for n={self.n}")
        exp = [0] * self.n
        exp[i - 1] = power
        return AKElement(self, self.reduce_L(tuple(exp)))

    def element_word(self, a: Sequence[int], w: Sequence[int]) -> "AKElement":
        a, w = tuple(a), tuple(w)
        if len(a) != self.n or any(not 0 <= x < self.r for x in a):
            raise ValueError(f"L exponents {a} out of range")
        return AKElement(self, {(a, w): ONE})

    def Q(self, k: int) -> GroundElement:
        return GroundElement.Q(k, self.r)

    def random_element(self, rng: random.Random, terms: int = 3, coeff_range: int = 3) -> "AKElement":
        words = list(self.basis())
        out: dict = {}
        for _ in range(terms):
            word = rng.choice(words)
            exps = {(rng.randint(-2, 2),) + tuple(rng.randint(0, 1) for _ in range(self.r)):
                    rng.randint(-coeff_range, coeff_range)}
            _add_into(out, word, GroundElement.from_terms(exps, self.r))
        return AKElement(self, out)

    # -- special elements ----------------------------------------------------
    def young_sum(self, mu: Composition) -> "AKElement":
        """sum_{w in S_mu} q^l(w) T_w for the row stabiliser of mu."""
        parts = [p for p in flatten(mu) if p]
        blocks, pos = [], 0
        for p in parts:
            blocks.append(list(range(pos, pos + p)))
            pos += p
        if pos != self.n:
            raise ValueError(f"composition {mu} has size {pos}, expected {self.n}")
        out: dict = {}
        for combo in itertools.product(*(itertools.permutations(b) for b in blocks)):
            w = tuple(x for block in combo for x in block)
            out[w] = out.get(w, ZERO) + q_pow(perm_length(w))
        return AKElement(self, {(self.zero_exp, w): c for w, c in out.items()})

    def m_mu(self, mu: Composition) -> "AKElement":
        """m_mu = (sum_{S_mu} q^l(w) T_w) * prod_k prod_{i <= a_k} (L_i - Q_k),
        a_k the number of boxes in components before k."""
        x = self.young_sum(mu)
        sizes = [sum(p) for p in mu]
        for k in range(1, self.r + 1):
            a_k = sum(sizes[:k - 1])
            for i in range(1, a_k + 1):
                x = x * (self.element_L(i) - self.scalar(self.Q(k)))
        return x

    def m_st(self, s: StdTableau, t: StdTableau) -> "AKElement":
        """Cellular basis element T*_{d(s)} m_la T_{d(t)}.

        ``tableau_perm`` composes as functions, so it returns a shortest
        representative of a left coset of the row stabiliser.  Reading d(t)
        with permutations acting on the right swaps it for its inverse, which
        is the shortest element of the right coset that m_la T_d needs."""
        if s.shape != t.shape:
            raise ValueError("tableaux of different shapes")
        la = s.shape
        ds, dt = tableau_perm(s), tableau_perm(t)
        return self.element_T(ds) * self.m_mu(la) * self.element_T(perm_inverse(dt))


class AKElement:
    """An element of H_{n,r}: ``terms`` maps basis words to coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: AKAlgebra, terms: Mapping):
        self.alg = alg
        self.terms = {w: c for w, c in terms.items() if c}

    # arithmetic
    def _check(self, other: "AKElement") -> None:
        if other.alg is not self.alg and (other.alg.n, other.alg.r) != (self.alg.n, self.alg.r):
            raise ValueError(f"cannot combine elements of H_({self.alg.n},{self.alg.r}) "
                             f"and H_({other.alg.n},{other.alg.r})")

    def __add__(self, other: "AKElement") -> "AKElement":
        if not isinstance(other, AKElement):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(out, w, c)
        return AKElement(self.alg, out)

    def __neg__(self) -> "AKElement":
        return AKElement(self.alg, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "AKElement") -> "AKElement":
        if not isinstance(other, AKElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AKElement":
        return AKElement(self.alg, {w: x * c for w, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AKElement):
            self._check(other)
            return AKElement(self.alg, self.alg.mul_terms(self.terms, other.terms))
        if isinstance(other, (int, GroundElement, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, GroundElement, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, AKElement):
            return NotImplemented
        return not (self - other).terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def star(self) -> "AKElement":
        return star(self)

    def coefficient(self, a: Sequence[int], w: Sequence[int]):
        return self.terms.get((tuple(a), tuple(w)), ZERO)

    def __repr__(self) -> str:
        return f"AKElement({format_element(self)})"

    def __str__(self) -> str:
        return format_element(self)


def format_word(word: Word) -> str:
    a, w = word
    parts = [f"L{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(a) if e]
    if w != tuple(range(len(w))):
        parts.append("T[" + "".join(str(x + 1) for x in w) + "]")
    return "*".join(parts) or "1"


def format_element(x: AKElement) -> str:
    if not x.terms:
        return "0"
    return " + ".join(f"({c})*{format_word(w)}" for w, c in sorted(x.terms.items()))


def star(x: AKElement) -> AKElement:
    """The anti-involution fixing every T_i: (L^a T_w)* = T_{w^-1} L^a."""
    alg = x.alg
    out: dict = {}
    for (a, w), c in x.terms.items():
        for w2, c2 in alg.tprod(perm_inverse(w), (a, alg.identity)).items():
            _add_into(out, w2, c * c2)
    return AKElement(alg, out)


def iota_H(x: AKElement, target: AKAlgebra | None = None) -> AKElement:
    """Embed H_{n,r} into H_{n+1,r} by T_i -> T_i."""
    alg = x.alg
    if target is None:
        target = AKAlgebra(alg.n + 1, alg.r, alg.normalization)
    if (target.n, target.r) != (alg.n + 1, alg.r):
        raise ValueError("target must be H_{n+1,r}")
    n = alg.n
    return AKElement(target, {(a + (0,), w + (n,)): c for (a, w), c in x.terms.items()})


# JSON -------------------------------------------------------------------------

def element_to_json(x: AKElement) -> list[dict]:
    out = []
    for (a, w), c in sorted(x.terms.items()):
        if isinstance(c, FieldElement):
            coeff = str(c)
        else:
            coeff = format_ground(c)
        out.append({"lexp": list(a), "perm": [v + 1 for v in w], "coeff": coeff})
    return out


def element_from_json(alg: AKAlgebra, data: Iterable[Mapping]) -> AKElement:
    out: dict = {}
    for item in data:
        word = (tuple(item["lexp"]), tuple(v - 1 for v in item["perm"]))
        _add_into(out, word, parse_ground(item["coeff"], alg.r))
    return AKElement(alg, out)


def dumps_element(x: AKElement) -> str:
    return json.dumps(element_to_json(x))
