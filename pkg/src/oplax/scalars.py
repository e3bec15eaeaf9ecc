"""Exact commutative coefficients: Gaussian rationals over a fixed symbol alphabet.

Every scalar in the engine is a sparse polynomial in the sixteen commuting
symbols below, with Gaussian-rational coefficients.  The symbol ``s`` encodes
the square root of twice the initial momentum (s^2 = 2*p0), and it is the only
symbol allowed to carry negative exponents; that turns every denominator the
tables need into a Laurent monomial, so equality stays decidable and no
radical or float ever enters.

Values are immutable after construction and kept canonical: no zero
coefficients are stored, and two polynomials are equal exactly when their term
maps coincide.
"""

from __future__ import annotations

import re
from fractions import Fraction

#: Fixed alphabet; index order is also the rendering / sorting order.
SYMBOLS = (
    "w", "hbar", "s", "a", "beta", "gamma", "b",
    "x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3",
)
NSYMBOLS = len(SYMBOLS)
SYMBOL_INDEX = {name: i for i, name in enumerate(SYMBOLS)}
S_INDEX = SYMBOL_INDEX["s"]
_ZERO_EXP = (0,) * NSYMBOLS


class GaussRat:
    """Gaussian rational ``re + im*i`` with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @staticmethod
    def _coerce(value) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussRat(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.im == 0 and other.im == 0:
            return GaussRat(self.re * other.re)
        return GaussRat(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussRat":
        norm = self.re * self.re + self.im * self.im
        if norm == 0:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussRat(self.re / norm, -self.im / norm)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_negative(self) -> bool:
        """True when the rendered form starts with a minus sign."""
        if self.im == 0:
            return self.re < 0
        if self.re == 0:
            return self.im < 0
        return False

    def render(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        ipart = "i" if mag == 1 else f"{mag}*i"
        return f"({self.re}{sign}{ipart})"

    def __repr__(self):
        return f"GaussRat({self.re!s}, {self.im!s})"


GR_ZERO = GaussRat(0)
GR_ONE = GaussRat(1)
GR_I = GaussRat(0, 1)


def _check_exponents(exp: tuple) -> None:
    if len(exp) != NSYMBOLS:
        raise ValueError(f"exponent vector must have length {NSYMBOLS}")
    for idx, e in enumerate(exp):
        if e < 0 and idx != S_INDEX:
            raise ValueError(f"negative exponent of {SYMBOLS[idx]} is not allowed")


class ScalarPoly:
    """Sparse Laurent-in-``s`` polynomial with Gaussian-rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict = {}
        if terms:
            for exp, coeff in dict(terms).items():
                exp = tuple(exp)
                _check_exponents(exp)
                coeff = GaussRat._coerce(coeff)
                if coeff:
                    acc[exp] = coeff
        self.terms = acc

    @classmethod
    def _make(cls, terms: dict) -> "ScalarPoly":
        # trusted constructor: terms already canonical
        poly = cls.__new__(cls)
        poly.terms = terms
        return poly

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "ScalarPoly":
        return cls._make({})

    @classmethod
    def const(cls, value) -> "ScalarPoly":
        coeff = GaussRat._coerce(value)
        return cls._make({_ZERO_EXP: coeff} if coeff else {})

    @classmethod
    def monomial(cls, coeff, powers: dict) -> "ScalarPoly":
        exp = [0] * NSYMBOLS
        for name, e in powers.items():
            exp[SYMBOL_INDEX[name]] += e
        exp = tuple(exp)
        _check_exponents(exp)
        coeff = GaussRat._coerce(coeff)
        return cls._make({exp: coeff} if coeff else {})

    @staticmethod
    def _coerce(value) -> "ScalarPoly":
        if isinstance(value, ScalarPoly):
            return value
        if isinstance(value, (int, Fraction, GaussRat)):
            return ScalarPoly.const(value)
        raise TypeError(f"cannot interpret {value!r} as a scalar polynomial")

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self.terms)
        for exp, coeff in other.terms.items():
            total = acc.get(exp, GR_ZERO) + coeff
            if total:
                acc[exp] = total
            else:
                acc.pop(exp, None)
        return ScalarPoly._make(acc)

    __radd__ = __add__

    def __neg__(self):
        return ScalarPoly._make({exp: -c for exp, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict = {}
        zero_exp = _ZERO_EXP
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if e2 == zero_exp:
                    exp = e1
                elif e1 == zero_exp:
                    exp = e2
                else:
                    exp = tuple(a + b for a, b in zip(e1, e2))
                total = acc.get(exp, GR_ZERO) + c1 * c2
                if total:
                    acc[exp] = total
                else:
                    acc.pop(exp, None)
        return ScalarPoly._make(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise TypeError("exponent must be an integer")
        if n < 0:
            return self._inverse() ** (-n)
        result = ScalarPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _inverse(self) -> "ScalarPoly":
        """Inverse of a unit, i.e. a single-term monomial; validated Laurent-legal."""
        if len(self.terms) != 1:
            raise ValueError("only single-term monomials are invertible")
        (exp, coeff), = self.terms.items()
        inv_exp = tuple(-e for e in exp)
        _check_exponents(inv_exp)
        return ScalarPoly._make({inv_exp: coeff.inverse()})

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def has_symbol(self, name: str) -> bool:
        idx = SYMBOL_INDEX[name]
        return any(exp[idx] != 0 for exp in self.terms)

    # -- substitution ------------------------------------------------------

    def subst(self, bindings: dict) -> "ScalarPoly":
        """Simultaneous substitution of symbols by scalar polynomials.

        A symbol raised to a negative power may only be replaced by an
        invertible monomial whose inverse is again Laurent-legal; anything
        else raises ValueError.
        """
        images = {SYMBOL_INDEX[name]: ScalarPoly._coerce(v) for name, v in bindings.items()}
        result = ScalarPoly.zero()
        for exp, coeff in self.terms.items():
            term = ScalarPoly.const(coeff)
            residual = [0] * NSYMBOLS
            for idx, e in enumerate(exp):
                if e == 0:
                    continue
                image = images.get(idx)
                if image is None:
                    residual[idx] = e
                else:
                    term = term * image ** e
            if any(residual):
                term = term * ScalarPoly._make({tuple(residual): GR_ONE})
            result = result + term
        return result

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self):
        """Terms in canonical order: lexicographic by exponent vector."""
        return sorted(self.terms.items(), key=lambda item: item[0])

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.sorted_terms():
            neg, body = render_term(coeff, exp)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<ScalarPoly {self.render()}>"


def symbol(name: str) -> ScalarPoly:
    return ScalarPoly.monomial(1, {name: 1})


def monomial_string(exp: tuple) -> str:
    parts = []
    for idx, e in enumerate(exp):
        if e == 0:
            continue
        if e == 1:
            parts.append(SYMBOLS[idx])
        else:
            parts.append(f"{SYMBOLS[idx]}^{e}")
    return "*".join(parts)


def render_term(coeff: GaussRat, exp: tuple, word: str = "") -> tuple:
    """Render one flat term; returns (starts_negative, body_without_sign)."""
    neg = coeff.is_negative()
    mag = -coeff if neg else coeff
    mono = monomial_string(exp)
    if mag == GR_ONE:
        scalar = mono or "1"
    elif mono:
        scalar = f"{mag.render()}*{mono}"
    else:
        scalar = mag.render()
    if not word:
        return neg, scalar
    if scalar == "1":
        return neg, word
    return neg, f"{scalar} * {word}"


# -- parsing ----------------------------------------------------------------

_SCALAR_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>hbar|beta|gamma|[xyz][123]|[wsabi])"
    r"|(?P<op>[()^*+-]))"
)


def _tokenize_scalar(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        match = _SCALAR_TOKEN.match(text, pos)
        if match is None:
            if text[pos:].strip() == "":
                break
            raise ValueError(f"unexpected character {text[pos]!r} in {text!r}")
        pos = match.end()
        if match.lastgroup == "num":
            tokens.append(("num", Fraction(match.group("num"))))
        elif match.lastgroup == "name":
            tokens.append(("name", match.group("name")))
        else:
            tokens.append(("op", match.group("op")))
    return tokens


class _TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def next(self):
        token = self.peek()
        self.pos += 1
        return token

    def expect_op(self, op):
        kind, value = self.next()
        if kind != "op" or value != op:
            raise ValueError(f"expected {op!r}, found {value!r}")


def _parse_signed_int(stream: _TokenStream) -> int:
    sign = 1
    kind, value = stream.peek()
    if kind == "op" and value == "-":
        stream.next()
        sign = -1
    kind, value = stream.next()
    if kind != "num" or value.denominator != 1:
        raise ValueError("exponent must be an integer")
    return sign * int(value)


def _parse_gauss_in_parens(stream: _TokenStream) -> GaussRat:
    total = GR_ZERO
    sign = 1
    while True:
        kind, value = stream.peek()
        if kind == "op" and value in "+-":
            stream.next()
            sign = 1 if value == "+" else -1
            continue
        if kind == "num":
            stream.next()
            part = GaussRat(value)
            kind2, value2 = stream.peek()
            if kind2 == "op" and value2 == "*":
                stream.next()
                kind3, value3 = stream.next()
                if (kind3, value3) != ("name", "i"):
                    raise ValueError("expected i after * inside parentheses")
                part = part * GR_I
        elif (kind, value) == ("name", "i"):
            stream.next()
            part = GR_I
        else:
            raise ValueError("malformed parenthesized coefficient")
        total = total + (part if sign == 1 else -part)
        sign = 1
        kind, value = stream.peek()
        if kind == "op" and value == ")":
            stream.next()
            return total
        if not (kind == "op" and value in "+-"):
            raise ValueError("malformed parenthesized coefficient")


def _parse_scalar_factor(stream: _TokenStream):
    """One multiplicative factor; returns (GaussRat, powers dict) or None."""
    kind, value = stream.peek()
    if kind == "num":
        stream.next()
        return GaussRat(value), {}
    if kind == "name":
        stream.next()
        if value == "i":
            return GR_I, {}
        exp = 1
        kind2, value2 = stream.peek()
        if kind2 == "op" and value2 == "^":
            stream.next()
            exp = _parse_signed_int(stream)
        return GR_ONE, {value: exp}
    if kind == "op" and value == "(":
        stream.next()
        return _parse_gauss_in_parens(stream), {}
    return None


def parse_scalar(text: str) -> ScalarPoly:
    """Parse the canonical scalar rendering back into a ScalarPoly."""
    stream = _TokenStream(_tokenize_scalar(text))
    result = ScalarPoly.zero()
    sign = 1
    expect_term = True
    while True:
        kind, value = stream.peek()
        if kind is None:
            break
        if kind == "op" and value in "+-" and not expect_term:
            stream.next()
            sign = 1 if value == "+" else -1
            expect_term = True
            continue
        if kind == "op" and value == "-" and expect_term:
            stream.next()
            sign = -sign
            continue
        coeff = GR_ONE
        powers: dict = {}
        saw_factor = False
        while True:
            kind, value = stream.peek()
            if kind == "op" and value == "*":
                stream.next()
                continue
            factor = _parse_scalar_factor(stream)
            if factor is None:
                break
            saw_factor = True
            fcoeff, fpowers = factor
            coeff = coeff * fcoeff
            for name, e in fpowers.items():
                powers[name] = powers.get(name, 0) + e
        if not saw_factor:
            raise ValueError(f"empty term in {text!r}")
        term = ScalarPoly.monomial(coeff * sign, powers)
        result = result + term
        sign = 1
        expect_term = False
    if expect_term and not result.is_zero:
        raise ValueError(f"dangling sign in {text!r}")
    return result
