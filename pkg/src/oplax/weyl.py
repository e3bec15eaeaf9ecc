"""Noncommutative operator words over the four oscillator generators.

Words are finite sequences over q, p, A+, A- with ScalarPoly coefficients, in
one of two modes:

* ``classical`` - all generators commute; the normal form of a word is the
  sorted tuple under the fixed order q < p < A+ < A-.
* ``quantum`` - q and p satisfy the canonical commutation relation through the
  single rewrite ``p q -> q p - i*hbar``; A+ and A- are free generators and
  nothing commutes past them.

The rewrite strictly reduces the number of (p, q) inversions, so it terminates,
and it is confluent, so the fixpoint is a canonical form: expressions are equal
exactly when their term maps coincide.  Values are immutable once built.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .scalars import (
    GaussRat,
    ScalarPoly,
    parse_scalar,
    render_term,
)

CLASSICAL = "classical"
QUANTUM = "quantum"

Q, P, AP, AM = 0, 1, 2, 3
GENERATORS = (Q, P, AP, AM)
GENERATOR_NAMES = {
    CLASSICAL: ("q", "p", "A+", "A-"),
    QUANTUM: ("qh", "ph", "Ah+", "Ah-"),
}

#: coefficient picked up when an adjacent p q pair is reordered
_MINUS_I_HBAR = ScalarPoly.monomial(GaussRat(0, -1), {"hbar": 1})


def _check_mode(mode: str) -> None:
    if mode not in (CLASSICAL, QUANTUM):
        raise ValueError(f"unknown mode {mode!r}")


def _add_term(acc: dict, word: tuple, coeff: ScalarPoly) -> None:
    total = acc.get(word)
    total = coeff if total is None else total + coeff
    if total.is_zero:
        acc.pop(word, None)
    else:
        acc[word] = total


def _normalize_into(acc: dict, word: tuple, coeff: ScalarPoly, mode: str) -> None:
    if coeff.is_zero:
        return
    if mode == CLASSICAL:
        _add_term(acc, tuple(sorted(word)), coeff)
        return
    stack = [(word, coeff)]
    while stack:
        w, c = stack.pop()
        swap_at = None
        for j in range(len(w) - 1):
            if w[j] == P and w[j + 1] == Q:
                swap_at = j
                break
        if swap_at is None:
            _add_term(acc, w, c)
        else:
            head, tail = w[:swap_at], w[swap_at + 2:]
            stack.append((head + (Q, P) + tail, c))
            stack.append((head + tail, c * _MINUS_I_HBAR))


class OperatorExpr:
    """Linear combination of normal-form words with ScalarPoly coefficients."""

    __slots__ = ("mode", "terms")

    def __init__(self, mode: str, terms=None):
        _check_mode(mode)
        self.mode = mode
        acc: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for word, coeff in items:
                _normalize_into(acc, tuple(word), ScalarPoly._coerce(coeff), mode)
        self.terms = acc

    @classmethod
    def _make(cls, mode: str, terms: dict) -> "OperatorExpr":
        # trusted constructor: terms already normal for the mode
        expr = cls.__new__(cls)
        expr.mode = mode
        expr.terms = terms
        return expr

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, mode: str) -> "OperatorExpr":
        _check_mode(mode)
        return cls._make(mode, {})

    @classmethod
    def scalar(cls, mode: str, value) -> "OperatorExpr":
        _check_mode(mode)
        value = ScalarPoly._coerce(value)
        return cls._make(mode, {(): value} if value else {})

    @classmethod
    def generator(cls, mode: str, gen: int) -> "OperatorExpr":
        _check_mode(mode)
        if gen not in GENERATORS:
            raise ValueError(f"unknown generator {gen!r}")
        return cls._make(mode, {(gen,): ScalarPoly.const(1)})

    def _coerce(self, value) -> "OperatorExpr":
        if isinstance(value, OperatorExpr):
            if value.mode != self.mode:
                raise ValueError(f"mode mismatch: {self.mode} vs {value.mode}")
            return value
        if isinstance(value, (int, Fraction, GaussRat, ScalarPoly)):
            return OperatorExpr.scalar(self.mode, value)
        raise TypeError(f"cannot interpret {value!r} as an operator expression")

    # -- algebra -----------------------------------------------------------

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self.terms)
        for word, coeff in other.terms.items():
            _add_term(acc, word, coeff)
        return OperatorExpr._make(self.mode, acc)

    __radd__ = __add__

    def __neg__(self):
        return OperatorExpr._make(self.mode, {w: -c for w, c in self.terms.items()})

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
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _normalize_into(acc, w1 + w2, c1 * c2, self.mode)
        return OperatorExpr._make(self.mode, acc)

    def __rmul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        # scalars commute, so coercion order is irrelevant here
        return other * self

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def has_symbol(self, name: str) -> bool:
        return any(coeff.has_symbol(name) for coeff in self.terms.values())

    # -- substitutions -----------------------------------------------------

    def subst_params(self, bindings: dict) -> "OperatorExpr":
        """Substitute commuting symbols inside every coefficient."""
        acc: dict = {}
        for word, coeff in self.terms.items():
            _add_term(acc, word, coeff.subst(bindings))
        return OperatorExpr._make(self.mode, acc)

    def subst_generators(self, images: dict) -> "OperatorExpr":
        """Replace generators by whole expressions, preserving word order."""
        result = OperatorExpr.zero(self.mode)
        for word, coeff in self.terms.items():
            term = OperatorExpr.scalar(self.mode, coeff)
            for gen in word:
                image = images.get(gen)
                term = term * (self._coerce(image) if image is not None
                               else OperatorExpr.generator(self.mode, gen))
            result = result + term
        return result

    def to_quantum(self) -> "OperatorExpr":
        """Reinterpret a classical expression with hatted generators.

        Classical normal form already lists q before p, so the words are
        normal-ordered as they stand.
        """
        if self.mode == QUANTUM:
            return self
        return OperatorExpr(QUANTUM, self.terms.items())

    def classical_limit(self) -> "OperatorExpr":
        """Drop hbar and let everything commute."""
        if self.mode == CLASSICAL:
            return self
        return OperatorExpr(CLASSICAL, self.subst_params({"hbar": 0}).terms.items())

    # -- rendering ---------------------------------------------------------

    def flat_terms(self):
        """(word, exponent-vector, coefficient) triples in canonical order.

        Words are graded-lexicographic (length first, then the generator
        order); within a word the scalar terms follow the exponent order.
        """
        flat = []
        for word in sorted(self.terms, key=lambda w: (len(w), w)):
            for exp, coeff in self.terms[word].sorted_terms():
                flat.append((word, exp, coeff))
        return flat

    def render(self) -> str:
        if not self.terms:
            return "0"
        names = GENERATOR_NAMES[self.mode]
        parts = []
        for word, exp, coeff in self.flat_terms():
            word_str = " ".join(names[g] for g in word)
            neg, body = render_term(coeff, exp, word_str)
            if not parts:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append((" - " if neg else " + ") + body)
        return "".join(parts)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"<OperatorExpr {self.mode} {self.render()}>"


def commutator(u: OperatorExpr, v: OperatorExpr) -> OperatorExpr:
    return u * v - v * u


def render_factored(expr: OperatorExpr) -> str:
    """Human-oriented rendering that pulls out a common scalar monomial.

    Used for display only; the canonical flat rendering is ``expr.render()``.
    Factoring happens when every coefficient is real and the terms share a
    nontrivial rational/monomial content; the remainder is normalized so its
    first term is positive.
    """
    flat = expr.flat_terms()
    if len(flat) < 2:
        return expr.render()
    coeffs = [coeff for _, _, coeff in flat]
    if any(c.im != 0 for c in coeffs):
        return expr.render()
    num_gcd = Fraction(0)
    for c in coeffs:
        num_gcd = Fraction(
            _gcd(num_gcd.numerator * c.re.denominator,
                 c.re.numerator * num_gcd.denominator),
            num_gcd.denominator * c.re.denominator,
        )
    exps = [exp for _, exp, _ in flat]
    common = tuple(min(e[idx] for e in exps) for idx in range(len(exps[0])))
    if num_gcd == 1 and not any(common):
        return expr.render()
    if flat[0][2].re < 0:
        num_gcd = -num_gcd
    # divide exponent-wise: the common vector is a minimum, so this never
    # produces an invalid negative power
    inverse_coeff = GaussRat(1 / num_gcd)
    remainder = OperatorExpr._make(expr.mode, {
        word: ScalarPoly._make({
            tuple(e - g for e, g in zip(exp, common)): c * inverse_coeff
            for exp, c in coeff.terms.items()
        })
        for word, coeff in expr.terms.items()
    })
    neg, factor_body = render_term(GaussRat(num_gcd), common)
    prefix = ("-" if neg else "") + factor_body
    inner = remainder.render()
    if len(remainder.flat_terms()) > 1:
        inner = f"({inner})"
    return f"{prefix} * {inner}"


def _gcd(x: int, y: int) -> int:
    x, y = abs(x), abs(y)
    while y:
        x, y = y, x % y
    return x


# -- parsing ------------------------------------------------------------------

_GEN_TOKEN = re.compile(r"\s*(?P<gen>Ah\+|Ah-|A\+|A-|qh|ph|[qp])")


def parse_operator(text: str, mode: str) -> OperatorExpr:
    """Parse the canonical operator rendering back into an OperatorExpr.

    Handles exactly the grammar produced by ``OperatorExpr.render``: terms
    separated by signs, scalar factors optionally joined by ``*``, generator
    names space-separated in word order.
    """
    _check_mode(mode)
    gen_of = {name: gen for gen, name in zip(GENERATORS, GENERATOR_NAMES[mode])}
    raw_terms = []
    pos = 0
    sign = 1
    word: list = []
    scalar_factors: list = []
    saw_factor = False

    def flush_term():
        nonlocal sign, word, scalar_factors, saw_factor
        if not saw_factor:
            raise ValueError(f"empty term in {text!r}")
        coeff = parse_scalar("*".join(scalar_factors)) if scalar_factors \
            else ScalarPoly.const(1)
        raw_terms.append((tuple(word), coeff * sign))
        sign = 1
        word = []
        scalar_factors = []
        saw_factor = False

    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace() or ch == "*":
            pos += 1
            continue
        gen_match = _GEN_TOKEN.match(text, pos)
        if gen_match and gen_match.group("gen") in gen_of:
            word.append(gen_of[gen_match.group("gen")])
            saw_factor = True
            pos = gen_match.end()
            continue
        if ch in "+-":
            if saw_factor:
                flush_term()
            sign *= 1 if ch == "+" else -1
            pos += 1
            continue
        if ch == "(":
            end = text.index(")", pos) + 1
            scalar_factors.append(text[pos:end])
            saw_factor = True
            pos = end
            continue
        scalar_match = re.match(r"\d+(?:/\d+)?|hbar|beta|gamma|[xyz][123]|[wsabi]",
                                text[pos:])
        if scalar_match is None:
            raise ValueError(f"unexpected character {ch!r} in {text!r}")
        factor = scalar_match.group(0)
        pos += scalar_match.end()
        if pos < n and text[pos] == "^":
            exp_match = re.match(r"-?\d+", text[pos + 1:])
            if exp_match is None:
                raise ValueError(f"malformed exponent in {text!r}")
            factor += "^" + exp_match.group(0)
            pos += 1 + exp_match.end()
        scalar_factors.append(factor)
        saw_factor = True
    if saw_factor:
        flush_term()
    elif word or scalar_factors:
        raise ValueError(f"dangling term in {text!r}")
    return OperatorExpr(mode, raw_terms)
