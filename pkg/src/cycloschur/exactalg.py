"""Exact arithmetic over Z[q, q^-1, Q_1, ..., Q_r] and its fraction field.

A :class:`GroundElement` is a Laurent polynomial in ``q`` and an ordinary
polynomial in the parameters ``Q_1, ..., Q_r``.  Coefficients are Python
ints, so everything is exact.

Internally a monomial ``q^a Q_1^b_1 ... Q_r^b_r`` is packed into a single
integer ``a + B*b_1 + B^2*b_2 + ...`` (``B = 2**_SHIFT``).  The packing is
additive, so multiplying monomials is integer addition.  ``|a|`` and the
``b_k`` must stay below ``B / 2``, which is far beyond anything computed
here.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

_SHIFT = 24
_BASE = 1 << _SHIFT
_HALF = _BASE >> 1


def _pack(exps: Sequence[int]) -> int:
    key = 0
    for d in reversed(exps[1:]):
        if d < 0:
            raise ValueError("Q exponents must be non-negative")
        key = key * _BASE + d
    return key * _BASE + exps[0]


def _unpack(key: int, r: int) -> tuple[int, ...]:
    dq = ((key + _HALF) % _BASE) - _HALF
    rest = (key - dq) >> _SHIFT
    out = [dq]
    for _ in range(r):
        out.append(rest % _BASE)
        rest >>= _SHIFT
    if rest:
        raise ValueError("monomial uses more Q variables than r")
    return tuple(out)


def _key_r(key: int) -> int:
    """Smallest r able to represent the packed monomial."""
    dq = ((key + _HALF) % _BASE) - _HALF
    rest = (key - dq) >> _SHIFT
    r = 0
    while rest:
        rest >>= _SHIFT
        r += 1
    return r


class GroundElement:
    """Element of Z[q, q^-1, Q_1..Q_r] in canonical (zero-free) form.

    Instances are treated as immutable.  Equality is equality of term maps.
    """

    __slots__ = ("_t", "r")

    def __init__(self, terms: Mapping[int, int] | None = None, r: int = 0, _trusted: bool = False):
        if _trusted:
            self._t = terms
        else:
            self._t = {k: c for k, c in (terms or {}).items() if c}
        self.r = r

    # construction -------------------------------------------------------
    @classmethod
    def from_terms(cls, terms: Mapping[Sequence[int], int], r: int) -> "GroundElement":
        """Build from ``{(d_q, d_Q1, ..., d_Qr): coeff}``."""
        out: dict[int, int] = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != r + 1:
                raise ValueError(f"exponent vector {exps} does not have length r+1={r + 1}")
            key = _pack(exps)
            out[key] = out.get(key, 0) + int(c)
        return cls(out, r)

    @classmethod
    def const(cls, c: int, r: int = 0) -> "GroundElement":
        return cls({0: c} if c else {}, r, _trusted=True)

    @classmethod
    def q_power(cls, d: int, r: int = 0) -> "GroundElement":
        return cls({d: 1}, r, _trusted=True)

    @classmethod
    def Q(cls, k: int, r: int) -> "GroundElement":
        """The parameter ``Q_k`` (1-based)."""
        if not 1 <= k <= r:
            raise ValueError(f"Q_{k} does not exist for r={r}")
        return cls({_BASE ** k: 1}, r, _trusted=True)

    # inspection ---------------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return {_unpack(k, self.r): c for k, c in self._t.items()}

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items())

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def constant_value(self) -> int | None:
        """The integer value if this is a constant, else None."""
        if not self._t:
            return 0
        if len(self._t) == 1 and 0 in self._t:
            return self._t[0]
        return None

    # arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> "GroundElement | None":
        if isinstance(other, GroundElement):
            return other
        if isinstance(other, int):
            return GroundElement.const(other, self.r)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._t:
            return self
        if not self._t:
            return o if o.r >= self.r else GroundElement(o._t, self.r, True)
        t = dict(self._t)
        get = t.get
        for k, c in o._t.items():
            s = get(k, 0) + c
            if s:
                t[k] = s
            else:
                del t[k]
        return GroundElement(t, max(self.r, o.r), True)

    __radd__ = __add__

    def __neg__(self) -> "GroundElement":
        return GroundElement({k: -c for k, c in self._t.items()}, self.r, True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._t, o._t
        r = max(self.r, o.r)
        if not a or not b:
            return GroundElement({}, r, True)
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            (kb, cb), = b.items()
            if kb == 0:
                if cb == 1:
                    return GroundElement(a, r, True)
                return GroundElement({k: c * cb for k, c in a.items()}, r, True)
            return GroundElement({k + kb: c * cb for k, c in a.items()}, r, True)
        t: dict[int, int] = {}
        get = t.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                t[k] = get(k, 0) + ca * cb
        return GroundElement({k: c for k, c in t.items() if c}, r, True)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "GroundElement":
        if e < 0:
            if len(self._t) == 1:
                (k, c), = self._t.items()
                if abs(c) == 1 and ((k + _HALF) % _BASE) - _HALF == k:
                    return GroundElement({k * e: c ** (-e)}, self.r, True)
            raise ValueError("only +-q^d can be raised to a negative power")
        out = GroundElement.const(1, self.r)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift_q(self, d: int) -> "GroundElement":
        """Multiply by ``q^d``."""
        if d == 0:
            return self
        return GroundElement({k + d: c for k, c in self._t.items()}, self.r, True)

    def bar(self) -> "GroundElement":
        """The substitution q -> q^-1 (parameters Q_k fixed)."""
        out = {}
        for k, c in self._t.items():
            dq = ((k + _HALF) % _BASE) - _HALF
            out[k - 2 * dq] = c
        return GroundElement(out, self.r, True)

    def __eq__(self, other) -> bool:
        if isinstance(other, GroundElement):
            return self._t == other._t
        if isinstance(other, int):
            return self._t == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def content(self) -> int:
        g = 0
        for c in self._t.values():
            g = math.gcd(g, c)
        return g

    # text ---------------------------------------------------------------
    def __str__(self) -> str:
        return format_ground(self)

    def __repr__(self) -> str:
        return f"GroundElement({format_ground(self)!r}, r={self.r})"


ZERO = GroundElement.const(0)
ONE = GroundElement.const(1)


def q_pow(d: int) -> GroundElement:
    return GroundElement.q_power(d)


def Q(k: int, r: int) -> GroundElement:
    return GroundElement.Q(k, r)


# Serialization -------------------------------------------------------------

def _format_monomial(exps: Sequence[int]) -> str:
    parts = [f"q^{exps[0]}"]
    for k, d in enumerate(exps[1:], start=1):
        if d == 1:
            parts.append(f"Q{k}")
        elif d > 1:
            parts.append(f"Q{k}^{d}")
    return "*".join(parts)


def format_ground(x: GroundElement) -> str:
    """Canonical text form, e.g. ``"q^-2*Q1 + 3*q^0"``.

    Terms are listed in lexicographic order of (d_q, d_Q1, ..., d_Qr).
    """
    if not x:
        return "0"
    out = []
    for exps, c in x.sorted_terms():
        mono = _format_monomial(exps)
        mag = abs(c)
        body = mono if mag == 1 else f"{mag}*{mono}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


_FACTOR_RE = re.compile(r"(q|Q(\d+))(?:\^(-?\d+))?")


def parse_ground(text: str, r: int) -> GroundElement:
    """Inverse of :func:`format_ground` (also accepts a few looser spellings)."""
    s = text.strip()
    if s == "0":
        return GroundElement({}, r, True)
    # split on +/- that are not exponent signs
    chunks = [c for c in re.split(r"(?<!\^)(?=[+-])", s.replace(" ", "")) if c]
    terms: dict[tuple[int, ...], int] = {}
    for chunk in chunks:
        chunk = chunk.replace(" ", "")
        sign = 1
        if chunk.startswith("+"):
            chunk = chunk[1:]
        elif chunk.startswith("-"):
            sign, chunk = -1, chunk[1:]
        coeff = 1
        m = re.match(r"(\d+)\*?", chunk)
        if m and (m.end() == len(chunk) or chunk[m.end() - 1] == "*"):
            coeff = int(m.group(1))
            chunk = chunk[m.end():]
        exps = [0] * (r + 1)
        if chunk:
            for factor in chunk.split("*"):
                fm = _FACTOR_RE.fullmatch(factor)
                if not fm:
                    raise ValueError(f"cannot parse factor {factor!r} in {text!r}")
                power = int(fm.group(3)) if fm.group(3) is not None else 1
                if fm.group(1) == "q":
                    exps[0] += power
                else:
                    k = int(fm.group(2))
                    if not 1 <= k <= r:
                        raise ValueError(f"Q{k} out of range for r={r}")
                    exps[k] += power
        key = tuple(exps)
        terms[key] = terms.get(key, 0) + sign * coeff
    return GroundElement.from_terms(terms, r)


# Fraction field --------------------------------------------------------------

def _monomial_gcd_shift(x: GroundElement) -> int:
    """Packed key of the largest monomial dividing every term of ``x``."""
    r = max(x.r, max((_key_r(k) for k in x._t), default=0))
    exps = [_unpack(k, r) for k in x._t]
    low = [min(e[i] for e in exps) for i in range(r + 1)]
    return _pack(low)


class FieldElement:
    """Quotient of two GroundElements; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: GroundElement, den: GroundElement | None = None):
        if den is None:
            den = ONE
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num, self.den = num, ONE
            return
        # strip common integer content and monomial factor
        g = math.gcd(num.content(), den.content())
        kn, kd = _monomial_gcd_shift(num), _monomial_gcd_shift(den)
        exps_n = _unpack(kn, max(_key_r(kn), _key_r(kd)))
        exps_d = _unpack(kd, len(exps_n) - 1)
        common = [min(a, b) for a, b in zip(exps_n, exps_d)]
        common[0] = exps_d[0]  # q is a unit: move all q-shift out of the denominator
        ck = _pack(common)
        lead = max(den._t)  # deterministic sign normalisation
        if den._t[lead] < 0:
            g = -g
        if g != 1 or ck:
            num = GroundElement({k - ck: c // g for k, c in num._t.items()}, num.r, True)
            den = GroundElement({k - ck: c // g for k, c in den._t.items()}, den.r, True)
        self.num, self.den = num, den

    @staticmethod
    def _lift(x) -> "FieldElement | None":
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, GroundElement):
            return FieldElement(x)
        if isinstance(x, int):
            return FieldElement(GroundElement.const(x))
        return None

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return FieldElement(self.num + o.num, self.den)
        return FieldElement(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        raise TypeError("FieldElement is unhashable (equality is by cross-multiplication)")

    def __str__(self) -> str:
        if self.den == ONE:
            return format_ground(self.num)
        return f"({format_ground(self.num)}) / ({format_ground(self.den)})"

    __repr__ = __str__


def to_field(x) -> FieldElement:
    out = FieldElement._lift(x)
    if out is None:
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldElement")
    return out


# Quantum integers -------------------------------------------------------------

def quantum_integer(k: int) -> GroundElement:
    """[k] = q^(k-1) + q^(k-3) + ... + q^(1-k); [-k] = -[k]."""
    if k == 0:
        return ZERO
    if k < 0:
        return -quantum_integer(-k)
    return GroundElement({k - 1 - 2 * j: 1 for j in range(k)}, 0, True)


def quantum_factorial(t: int) -> GroundElement:
    if t < 0:
        raise ValueError("quantum factorial needs t >= 0")
    out = ONE
    for k in range(2, t + 1):
        out = out * quantum_integer(k)
    return out


# Specialisation -------------------------------------------------------------

@dataclass(frozen=True)
class RootOfUnity:
    """Tag for q with 1 + q^2 + ... + (q^2)^(e-1) = 0.

    Specialising at this tag reduces into Z[q] / (1 + q^2 + ... + q^(2e-2)).
    """

    e: int

    def __post_init__(self):
        if self.e < 2:
            raise ValueError("e must be at least 2")


def _reduce_cyclotomic_sum(coeffs: dict[int, Fraction], e: int) -> dict[int, Fraction]:
    # modulus is monic of degree 2e-2: q^(2e-2) = -(1 + q^2 + ... + q^(2e-4))
    top = 2 * e - 2
    for d in sorted(coeffs, reverse=True):
        if d < top:
            break
        c = coeffs.pop(d, 0)
        if not c:
            continue
        for j in range(e - 1):
            k = d - top + 2 * j
            coeffs[k] = coeffs.get(k, 0) - c
    return {d: c for d, c in coeffs.items() if c}


def specialize(
    x: GroundElement | FieldElement,
    q_val,
    Q_vals: Sequence = (),
    charge: Sequence[int] | None = None,
):
    """Evaluate ``x`` at ``q = q_val``, ``Q_k = Q_vals[k-1]``.

    ``q_val`` is a rational number or a :class:`RootOfUnity` tag.  With the
    tag the result is a GroundElement in ``q`` alone, reduced modulo
    ``1 + q^2 + ... + (q^2)^(e-1)``; the parameters are then either rational
    constants from ``Q_vals`` or ``Q_k = (q^2)^(charge[k-1])``.
    """
    if isinstance(x, FieldElement):
        num = specialize(x.num, q_val, Q_vals, charge)
        den = specialize(x.den, q_val, Q_vals, charge)
        if not den:
            raise ZeroDivisionError("denominator specialises to zero")
        if isinstance(q_val, RootOfUnity):
            raise NotImplementedError("division in the cyclotomic quotient is not supported")
        return num / den
    r = x.r
    if isinstance(q_val, RootOfUnity):
        e = q_val.e
        period = 2 * e
        acc: dict[int, Fraction] = {}
        for exps, c in x.terms.items():
            dq = exps[0]
            coeff = Fraction(c)
            for k, d in enumerate(exps[1:], start=1):
                if not d:
                    continue
                if charge is not None:
                    dq += 2 * charge[k - 1] * d
                else:
                    coeff *= Fraction(Q_vals[k - 1]) ** d
            dq %= period  # q^(2e) = 1 in the quotient
            acc[dq] = acc.get(dq, 0) + coeff
        red = _reduce_cyclotomic_sum({d: c for d, c in acc.items() if c}, e)
        out = {}
        for d, c in red.items():
            if c.denominator != 1:
                raise ValueError("non-integral coefficient in cyclotomic reduction")
            out[(d,)] = int(c)
        return GroundElement.from_terms(out, 0)
    qv = Fraction(q_val)
    if qv == 0:
        raise ZeroDivisionError("q must be invertible")
    total = Fraction(0)
    for exps, c in x.terms.items():
        term = Fraction(c) * qv ** exps[0]
        for k, d in enumerate(exps[1:], start=1):
            if d:
                term *= Fraction(Q_vals[k - 1]) ** d
        total += term
    return total


def elementary_symmetric_signed(r: int) -> list[GroundElement]:
    """Coefficients c_0..c_r of prod_k (x - Q_k) = sum_t c_t x^t."""
    coeffs = [ONE]
    for k in range(1, r + 1):
        qk = GroundElement.Q(k, r)
        new = [ZERO] * (len(coeffs) + 1)
        for t, c in enumerate(coeffs):
            new[t + 1] = new[t + 1] + c
            new[t] = new[t] - qk * c
        coeffs = new
    return coeffs


def sum_elements(items: Iterable):
    total = ZERO
    for x in items:
        total = total + x
    return total
