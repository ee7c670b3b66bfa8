"""Exact arithmetic in Q(u), univariate rational functions over the rationals.

Values are immutable and kept in a canonical form: the denominator is monic
and coprime to the numerator, so two values are equal exactly when their
stored coefficient tuples are equal.
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

__all__ = [
    "BigRational",
    "DivisionByZero",
    "PoleAtPoint",
    "Polynomial",
    "RationalFunction",
    "RationalSyntaxError",
    "U",
    "ONE",
    "ZERO",
    "as_rf",
    "parse_rational_function",
]

BigRational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)


class DivisionByZero(ZeroDivisionError):
    pass


class PoleAtPoint(ValueError):
    pass


class RationalSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# -- coefficient-tuple kernels ------------------------------------------------
# Polynomials are tuples of Fractions, index = degree, no trailing zeros.


def _trim(c: list) -> tuple:
    while c and not c[-1]:
        c.pop()
    return tuple(c)


def _padd(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] += x
    return _trim(out)


def _psub(a: tuple, b: tuple) -> tuple:
    out = list(a) + [_F0] * (len(b) - len(a))
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _pneg(a: tuple) -> tuple:
    return tuple(-x for x in a)


def _pscale(a: tuple, c: Fraction) -> tuple:
    if not c:
        return ()
    return tuple(x * c for x in a)


def _pmul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) == 1:
        return _pscale(b, a[0])
    if len(b) == 1:
        return _pscale(a, b[0])
    out = [_F0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _pdivmod(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    rem = list(a)
    lead = b[-1]
    db = len(b) - 1
    q = [_F0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = rem[k]
        if c:
            c = c / lead
            q[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * b[j]
    return _trim(q), _trim(rem[:db])


def _pmonic(a: tuple) -> tuple:
    lead = a[-1]
    if lead == 1:
        return a
    return tuple(x / lead for x in a)


@lru_cache(maxsize=1 << 16)
def _pgcd(a: tuple, b: tuple) -> tuple:
    """Monic gcd by the Euclidean algorithm over Q."""
    while b:
        a, b = b, _pdivmod(a, b)[1]
    if not a:
        return ()
    return _pmonic(a)


def _peval(a: tuple, x: Fraction) -> Fraction:
    acc = _F0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _is_power_of_u(a: tuple) -> bool:
    return a[-1] == 1 and not any(a[:-1])


class Polynomial:
    """Univariate polynomial in u with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Polynomial":
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(("poly", self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial._raw(_padd(self.coeffs, other.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial._raw(_psub(self.coeffs, other.coeffs))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial._raw(_pmul(self.coeffs, other.coeffs))

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(_pneg(self.coeffs))

    def __divmod__(self, other: "Polynomial"):
        q, r = _pdivmod(self.coeffs, other.coeffs)
        return Polynomial._raw(q), Polynomial._raw(r)

    def gcd(self, other: "Polynomial") -> "Polynomial":
        return Polynomial._raw(_pgcd(self.coeffs, other.coeffs))

    def __call__(self, x) -> Fraction:
        return _peval(self.coeffs, Fraction(x))

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return _poly_str(self.coeffs)


def _integer_form(coeffs: tuple) -> tuple[Fraction, tuple]:
    """Split ``coeffs`` into content * primitive integer polynomial."""
    from math import gcd, lcm

    den = 1
    for c in coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if ints[-1] < 0:
        g = -g
    return Fraction(g, den), tuple(x // g for x in ints)


def _monomial_str(c: int, k: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if k == 0:
        return f"{sign}{a}"
    var = "u" if k == 1 else f"u^{k}"
    if a == 1:
        return f"{sign}{var}"
    return f"{sign}{a}*{var}"


def _int_poly_str(ints: tuple) -> str:
    terms = [(c, k) for k, c in enumerate(ints) if c]
    desc = terms[::-1]
    order = desc
    if desc[0][0] < 0 and terms[0][0] > 0:
        order = terms
    return "".join(_monomial_str(c, k, i == 0) for i, (c, k) in enumerate(order))


def _poly_str(coeffs: tuple) -> str:
    if not coeffs:
        return "0"
    content, prim = _integer_form(coeffs)
    ints = tuple(x * content.numerator for x in prim)
    body = _int_poly_str(ints)
    if content.denominator == 1:
        return body
    if sum(1 for c in ints if c) > 1:
        body = f"({body})"
    return f"{body}/{content.denominator}"


class RationalFunction:
    """An element of Q(u) in canonical form (monic denominator, coprime parts)."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=0, den=1):
        num = num if isinstance(num, Polynomial) else Polynomial([num])
        den = den if isinstance(den, Polynomial) else Polynomial([den])
        if not den:
            raise DivisionByZero("zero denominator")
        n, d = _canon(num.coeffs, den.coeffs)
        self.num = Polynomial._raw(n)
        self.den = Polynomial._raw(d)
        self._hash = None

    @classmethod
    def _raw(cls, n: tuple, d: tuple) -> "RationalFunction":
        r = object.__new__(cls)
        r.num = Polynomial._raw(n)
        r.den = Polynomial._raw(d)
        r._hash = None
        return r

    @classmethod
    def from_coeffs(cls, num: Iterable, den: Iterable = (1,)) -> "RationalFunction":
        return cls(Polynomial(num), Polynomial(den))

    # -- predicates ------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.num.coeffs)

    def is_one(self) -> bool:
        return self.num.coeffs == (_F1,) and self.den.coeffs == (_F1,)

    def is_constant(self) -> bool:
        return len(self.num.coeffs) <= 1 and len(self.den.coeffs) == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            try:
                other = as_rf(other)
            except TypeError:
                return NotImplemented
        return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num.coeffs, self.den.coeffs))
        return self._hash

    # -- field operations ------------------------------------------------
    def __add__(self, other) -> "RationalFunction":
        other = as_rf(other)
        return RationalFunction._raw(*_rf_add(self.num.coeffs, self.den.coeffs,
                                               other.num.coeffs, other.den.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction._raw(_pneg(self.num.coeffs), self.den.coeffs)

    def __sub__(self, other) -> "RationalFunction":
        return self + (-as_rf(other))

    def __rsub__(self, other) -> "RationalFunction":
        return as_rf(other) + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = as_rf(other)
        return RationalFunction._raw(*_rf_mul(self.num.coeffs, self.den.coeffs,
                                               other.num.coeffs, other.den.coeffs))

    __rmul__ = __mul__

    def inv(self) -> "RationalFunction":
        if not self.num.coeffs:
            raise DivisionByZero("inverse of zero in Q(u)")
        n, d = self.den.coeffs, self.num.coeffs
        lead = d[-1]
        if lead != 1:
            n = tuple(x / lead for x in n)
            d = tuple(x / lead for x in d)
        return RationalFunction._raw(n, d)

    def __truediv__(self, other) -> "RationalFunction":
        return self * as_rf(other).inv()

    def __rtruediv__(self, other) -> "RationalFunction":
        return as_rf(other) * self.inv()

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inv() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- specialisation --------------------------------------------------
    def eval_at(self, x) -> Fraction:
        x = Fraction(x)
        d = _peval(self.den.coeffs, x)
        if not d:
            raise PoleAtPoint(f"{self} has a pole at u={x}")
        return _peval(self.num.coeffs, x) / d

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.num.coeffs[0] if self.num.coeffs else _F0

    # -- text ------------------------------------------------------------
    def __str__(self) -> str:
        n, d = self.num.coeffs, self.den.coeffs
        if not n:
            return "0"
        if d == (_F1,):
            return _poly_str(n)
        cn, pn = _integer_form(n)
        cd, pd = _integer_form(d)
        c = cn / cd
        nint = tuple(x * c.numerator for x in pn)
        dint = tuple(x * c.denominator for x in pd)
        ns = _int_poly_str(nint)
        ds = _int_poly_str(dint)
        if sum(1 for x in nint if x) > 1:
            ns = f"({ns})"
        if not re.fullmatch(r"\d+|u(\^\d+)?", ds):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"

    def is_atomic_str(self) -> bool:
        """True when the printed form needs no parentheses as a coefficient."""
        return bool(re.fullmatch(r"\d+", str(self)))


def _canon(n: tuple, d: tuple) -> tuple[tuple, tuple]:
    if not n:
        return (), (_F1,)
    if len(d) > 1:
        g = _pgcd(n, d)
        if len(g) > 1:
            n = _pdivmod(n, g)[0]
            d = _pdivmod(d, g)[0]
    lead = d[-1]
    if lead != 1:
        n = tuple(x / lead for x in n)
        d = tuple(x / lead for x in d)
    return n, d


def _strip_u(n: tuple, d: tuple) -> tuple[tuple, tuple]:
    """Cancel common powers of u when the denominator is a power of u."""
    k = 0
    while k < len(n) - 1 and k < len(d) - 1 and not n[k]:
        k += 1
    if k:
        return n[k:], d[k:]
    return n, d


def _rf_add(an, ad, bn, bd):
    if not an:
        return bn, bd
    if not bn:
        return an, ad
    if ad == bd:
        n = _padd(an, bn)
        if not n:
            return (), (_F1,)
        if len(ad) == 1:
            return n, ad
        if _is_power_of_u(ad):
            return _strip_u(n, ad)
        return _canon(n, ad)
    if len(ad) == 1:
        return _padd(_pmul(an, bd), bn), bd
    if len(bd) == 1:
        return _padd(an, _pmul(bn, ad)), ad
    if _is_power_of_u(ad) and _is_power_of_u(bd):
        if len(ad) < len(bd):
            shift = (_F0,) * (len(bd) - len(ad))
            n = _padd(shift + an, bn)
            d = bd
        else:
            shift = (_F0,) * (len(ad) - len(bd))
            n = _padd(an, shift + bn)
            d = ad
        if not n:
            return (), (_F1,)
        return _strip_u(n, d)
    g = _pgcd(ad, bd)
    if len(g) > 1:
        ad_g = _pdivmod(ad, g)[0]
        bd_g = _pdivmod(bd, g)[0]
        n = _padd(_pmul(an, bd_g), _pmul(bn, ad_g))
        d = _pmul(ad, bd_g)
    else:
        n = _padd(_pmul(an, bd), _pmul(bn, ad))
        d = _pmul(ad, bd)
    return _canon(n, d)


def _rf_mul(an, ad, bn, bd):
    if not an or not bn:
        return (), (_F1,)
    if len(ad) == 1 and len(bd) == 1:
        return _pmul(an, bn), ad
    if _is_power_of_u(ad) and _is_power_of_u(bd):
        return _strip_u(_pmul(an, bn), (_F0,) * (len(ad) + len(bd) - 2) + (_F1,))
    # cross-cancel before multiplying keeps degrees small
    g1 = _pgcd(an, bd) if len(bd) > 1 and len(an) > 1 else (_F1,)
    g2 = _pgcd(bn, ad) if len(ad) > 1 and len(bn) > 1 else (_F1,)
    if len(g1) > 1:
        an = _pdivmod(an, g1)[0]
        bd = _pdivmod(bd, g1)[0]
    if len(g2) > 1:
        bn = _pdivmod(bn, g2)[0]
        ad = _pdivmod(ad, g2)[0]
    n = _pmul(an, bn)
    d = _pmul(ad, bd)
    lead = d[-1]
    if lead != 1:
        n = tuple(x / lead for x in n)
        d = tuple(x / lead for x in d)
    return n, d


Scalar = Union[int, Fraction, RationalFunction]


def as_rf(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return RationalFunction._raw((x,) if x else (), (_F1,))
    if isinstance(x, str):
        return parse_rational_function(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to RationalFunction")


ZERO = RationalFunction._raw((), (_F1,))
ONE = RationalFunction._raw((_F1,), (_F1,))
U = RationalFunction._raw((_F0, _F1), (_F1,))


# -- parser --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(u)|(\*\*|[-+*/^()]))")


def _tokenize(text: str, offset: int = 0) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise RationalSyntaxError(f"unexpected character {text[pos]!r}", offset + pos)
        start = m.start(m.lastindex)
        if m.group(1):
            toks.append(("int", m.group(1), offset + start))
        elif m.group(2):
            toks.append(("u", "u", offset + start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            toks.append(("op", op, offset + start))
        pos = m.end()
    toks.append(("end", "", offset + len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, offset: int = 0):
        self.toks = _tokenize(text, offset)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value or tok[0] == "end":
            raise RationalSyntaxError(f"expected {value!r}", tok[2])

    def parse(self) -> RationalFunction:
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise RationalSyntaxError(f"unexpected {tok[1]!r}", tok[2])
        return value

    def expr(self) -> RationalFunction:
        value = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> RationalFunction:
        value = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise DivisionByZero(f"division by zero at position {pos}")
                value = value / rhs
        return value

    def unary(self) -> RationalFunction:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            value = self.unary()
            return -value if tok[1] == "-" else value
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            sign = 1
            if self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
                sign = -1 if self.take()[1] == "-" else 1
            tok = self.take()
            if tok[0] == "op" and tok[1] == "(":
                inner = self.expr()
                self.expect(")")
                if not (inner.is_constant() and inner.constant_value().denominator == 1):
                    raise RationalSyntaxError("exponent must be an integer", tok[2])
                k = int(inner.constant_value())
            elif tok[0] == "int":
                k = int(tok[1])
            else:
                raise RationalSyntaxError("expected integer exponent", tok[2])
            k *= sign
            if k < 0 and not base:
                raise DivisionByZero(f"negative power of zero at position {tok[2]}")
            return base ** k
        return base

    def atom(self) -> RationalFunction:
        tok = self.take()
        if tok[0] == "int":
            return as_rf(int(tok[1]))
        if tok[0] == "u":
            return U
        if tok == ("op", "(", tok[2]):
            value = self.expr()
            self.expect(")")
            return value
        what = "end of input" if tok[0] == "end" else repr(tok[1])
        raise RationalSyntaxError(f"unexpected {what}", tok[2])


def parse_rational_function(text: str, offset: int = 0) -> RationalFunction:
    """Parse ``u``, integers, ``+ - * / ^`` and parentheses into Q(u).

    >>> str(parse_rational_function("1/u + 1"))
    '(u+1)/u'
    """
    return _Parser(text, offset).parse()
