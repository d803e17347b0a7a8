"""Exact real scalars: rational linear combinations of radicals of rationals.

A :class:`RadScalar` is a finite sum ``c_1*r_1 + ... + c_m*r_m`` where each
``c_j`` is a :class:`fractions.Fraction` and each ``r_j`` is a canonical
radical ``p_1^(e_1) * ... * p_s^(e_s)`` over distinct primes with rational
exponents ``0 < e < 1``.  Distinct canonical radicals are linearly
independent over the rationals, so two scalars are equal exactly when their
term maps are equal.  This makes zero-testing structural.

Text form (used by the CLI and map files)::

    3/2*2^(1/3)*5^(2/3) - 7 + 2^(1/2)
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC

import mpmath

from .errors import ScalarDomainError, SpecError

# A canonical radical: tuple of (prime, exponent) pairs sorted by prime,
# every exponent a Fraction strictly between 0 and 1.  () is the radical 1.
Radical = tuple

ONE_RADICAL: Radical = ()


@lru_cache(maxsize=4096)
def factorize(n: int) -> tuple:
    """Prime factorization of a positive integer by trial division.

    Returns a tuple of ``(prime, multiplicity)`` pairs in increasing order.
    """
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            out.append((p, k))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def _reduce_exponents(exps: dict) -> tuple[Fraction, Radical]:
    """Split exponents into an integer part (pulled into a rational factor)
    and a fractional part in [0, 1)."""
    factor = Fraction(1)
    key = []
    for p in sorted(exps):
        e = exps[p]
        whole = math.floor(e)
        if whole:
            factor *= Fraction(p) ** whole
        frac = e - whole
        if frac:
            key.append((p, frac))
    return factor, tuple(key)


@lru_cache(maxsize=65536)
def _mul_radicals(a: Radical, b: Radical) -> tuple[Fraction, Radical]:
    if not a:
        return Fraction(1), b
    if not b:
        return Fraction(1), a
    exps = dict(a)
    for p, e in b:
        exps[p] = exps.get(p, 0) + e
    return _reduce_exponents(exps)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected a rational number, got {type(x).__name__}")


class RadScalar:
    """Immutable exact radical scalar.  Build with :meth:`from_rational`,
    :func:`rad_canonicalize` or :func:`parse_scalar`."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = _as_fraction(c)
                if c:
                    clean[key] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "RadScalar":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_rational(cls, q) -> "RadScalar":
        q = _as_fraction(q)
        return cls._raw({ONE_RADICAL: q} if q else {})

    @classmethod
    def coerce(cls, x) -> "RadScalar":
        if isinstance(x, RadScalar):
            return x
        return cls.from_rational(x)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict:
        """Copy of the ``radical -> coefficient`` map."""
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE_RADICAL in self._terms)

    def is_monomial(self) -> bool:
        """True for a single nonzero term ``c * radical``."""
        return len(self._terms) == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ScalarDomainError(f"{self} is irrational")
        return self._terms.get(ONE_RADICAL, Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        try:
            other = RadScalar.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for key, c in other._terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return RadScalar._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return RadScalar._raw({k: -c for k, c in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            other = RadScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = RadScalar.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, RadScalar):
            if not self._terms or not other._terms:
                return ZERO
            out = {}
            for ka, ca in self._terms.items():
                for kb, cb in other._terms.items():
                    factor, key = _mul_radicals(ka, kb)
                    s = out.get(key, 0) + ca * cb * factor
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
            return RadScalar._raw(out)
        try:
            q = _as_fraction(other)
        except TypeError:
            return NotImplemented
        if not q:
            return ZERO
        return RadScalar._raw({k: c * q for k, c in self._terms.items()})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- equality -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RadScalar):
            return self._terms == other._terms
        try:
            q = _as_fraction(other)
        except TypeError:
            return NotImplemented
        if not q:
            return not self._terms
        return self._terms == {ONE_RADICAL: q}

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                # agree with hash(Fraction) so rationals hash like numbers
                self._hash = hash(self.as_fraction())
            else:
                self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- monomial-only operations --------------------------------------------

    def _single(self) -> tuple[Radical, Fraction]:
        if len(self._terms) != 1:
            raise ScalarDomainError(f"{self} is not a single radical term")
        return next(iter(self._terms.items()))

    def log_vector(self) -> tuple[int, Fraction, Radical]:
        """``(sign, |coefficient|, radical)`` for a single-term scalar."""
        key, c = self._single()
        return (1 if c > 0 else -1), abs(c), key

    def prime_exponents(self) -> tuple[int, dict]:
        """Sign and prime-exponent vector of a single-term scalar, i.e.
        ``self = sign * prod p^e``."""
        sign, c, key = self.log_vector()
        exps = dict(key)
        for p, k in factorize(c.numerator) if c.numerator > 1 else ():
            exps[p] = exps.get(p, 0) + k
        for p, k in factorize(c.denominator) if c.denominator > 1 else ():
            exps[p] = exps.get(p, 0) - k
        return sign, exps

    @classmethod
    def from_prime_exponents(cls, sign: int, exps: dict) -> "RadScalar":
        factor, key = _reduce_exponents({p: Fraction(e) for p, e in exps.items() if e})
        return cls._raw({key: factor * sign})

    def inverse(self) -> "RadScalar":
        """Reciprocal of a single-term scalar (sums are not invertible here)."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        sign, exps = self.prime_exponents()
        return RadScalar.from_prime_exponents(sign, {p: -e for p, e in exps.items()})

    def nth_root(self, k: int) -> "RadScalar":
        """Real k-th root of a single-term scalar; odd roots keep the sign."""
        if k < 1:
            raise ScalarDomainError("root index must be positive")
        if self.is_zero():
            return ZERO
        sign, exps = self.prime_exponents()
        if sign < 0 and k % 2 == 0:
            raise ScalarDomainError(f"even root of negative value {self}")
        return RadScalar.from_prime_exponents(sign, {p: Fraction(e) / k for p, e in exps.items()})

    # -- numerics -----------------------------------------------------------

    def evaluate(self, dps: int = 50):
        """High-precision value as an ``mpmath.mpf``."""
        with mpmath.workdps(dps):
            total = mpmath.mpf(0)
            for key, c in self._terms.items():
                v = mpmath.mpf(c.numerator) / c.denominator
                for p, e in key:
                    v *= mpmath.power(p, mpmath.mpf(e.numerator) / e.denominator)
                total += v
            return +total

    def __float__(self):
        return float(self.evaluate(30))

    def sign(self) -> int:
        if not self._terms:
            return 0
        if len(self._terms) == 1:
            return 1 if next(iter(self._terms.values())) > 0 else -1
        # nonzero is certain; raise precision until the sign is unambiguous
        dps = 50
        while True:
            v = self.evaluate(dps)
            if abs(v) > mpmath.mpf(10) ** (-(dps - 10)):
                return 1 if v > 0 else -1
            dps *= 2

    # -- text ---------------------------------------------------------------

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"RadScalar('{format_scalar(self)}')"


ZERO = RadScalar._raw({})
ONE = RadScalar._raw({ONE_RADICAL: Fraction(1)})


def rad_canonicalize(coefficient, radicand, root_index: int) -> RadScalar:
    """``coefficient * radicand^(1/root_index)`` in canonical form.

    >>> str(rad_canonicalize(1, 8, 2))
    '2*2^(1/2)'
    """
    coefficient = _as_fraction(coefficient)
    radicand = _as_fraction(radicand)
    if radicand <= 0:
        raise ScalarDomainError(f"radicand must be positive, got {radicand}")
    if not isinstance(root_index, int) or root_index < 1:
        raise ScalarDomainError(f"root index must be a positive integer, got {root_index}")
    if not coefficient:
        return ZERO
    exps = {}
    for p, k in factorize(radicand.numerator) if radicand.numerator > 1 else ():
        exps[p] = Fraction(k, root_index)
    for p, k in factorize(radicand.denominator) if radicand.denominator > 1 else ():
        exps[p] = exps.get(p, 0) - Fraction(k, root_index)
    factor, key = _reduce_exponents(exps)
    return RadScalar._raw({key: coefficient * factor})


def rad_mul(a, b) -> RadScalar:
    return RadScalar.coerce(a) * RadScalar.coerce(b)


def rad_add(a, b) -> RadScalar:
    return RadScalar.coerce(a) + RadScalar.coerce(b)


# -- text form ----------------------------------------------------------------


def _format_radical(key: Radical) -> str:
    return "*".join(f"{p}^({e.numerator}/{e.denominator})" for p, e in key)


def _format_term(key: Radical, c: Fraction) -> str:
    if not key:
        return str(c)
    rad = _format_radical(key)
    if c == 1:
        return rad
    if c == -1:
        return "-" + rad
    return f"{c}*{rad}"


def format_scalar(x: RadScalar) -> str:
    """Canonical text: terms sorted by radical, ``' + '``/``' - '`` joined."""
    if x.is_zero():
        return "0"
    items = sorted(x._terms.items(), key=lambda kv: kv[0])
    parts = []
    for idx, (key, c) in enumerate(items):
        text = _format_term(key, c)
        if idx == 0:
            parts.append(text)
        elif text.startswith("-"):
            parts.append(" - " + text[1:])
        else:
            parts.append(" + " + text)
    return "".join(parts)


_TOKEN = re.compile(r"\s*(?:(\d+)|(\^\()|(.))")


def parse_scalar(text: str) -> RadScalar:
    """Parse the scalar text form.

    Grammar (whitespace-insensitive)::

        expr   := term (('+' | '-') term)*
        term   := ['-' | '+'] factor ('*' factor)*
        factor := int ['/' int] | int '^(' ['-'] int '/' int ')'

    Radical bases need not be prime; they are canonicalized.
    """
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("^(", None, m.start(2)))
        elif m.group(3) is not None:
            if m.group(3).isspace():
                continue
            tokens.append((m.group(3), None, m.start(3)))
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else ("end", None, len(text))

    def take(kind):
        nonlocal pos
        tok = peek()
        if tok[0] != kind:
            raise SpecError(f"expected {kind!r} in scalar {text!r}, found {tok[0]!r}", tok[2])
        pos += 1
        return tok

    def factor():
        nonlocal pos
        base = take("int")[1]
        if peek()[0] == "^(":
            pos += 1
            neg = False
            if peek()[0] == "-":
                pos += 1
                neg = True
            num = take("int")[1]
            take("/")
            den_tok = take("int")
            if den_tok[1] == 0:
                raise SpecError("zero exponent denominator", den_tok[2])
            take(")")
            if base == 0:
                raise SpecError("radical base must be positive", den_tok[2])
            e = Fraction(-num if neg else num, den_tok[1])
            x = rad_canonicalize(1, Fraction(base) ** e.numerator, e.denominator) if e >= 0 \
                else rad_canonicalize(1, Fraction(1, base) ** (-e.numerator), e.denominator)
            return x
        if peek()[0] == "/":
            pos += 1
            den_tok = take("int")
            if den_tok[1] == 0:
                raise SpecError("zero denominator", den_tok[2])
            return RadScalar.from_rational(Fraction(base, den_tok[1]))
        return RadScalar.from_rational(base)

    def term():
        nonlocal pos
        sign = 1
        while peek()[0] in "+-" and peek()[0] != "end":
            if peek()[0] == "-":
                sign = -sign
            pos += 1
        value = factor()
        while peek()[0] == "*":
            pos += 1
            value = value * factor()
        return value * sign

    if not tokens:
        raise SpecError("empty scalar", 0)
    total = term()
    while peek()[0] in ("+", "-"):
        op = peek()[0]
        pos += 1
        t = term()
        total = total + t if op == "+" else total - t
    if pos != len(tokens):
        tok = peek()
        raise SpecError(f"trailing input in scalar {text!r}", tok[2])
    return total
