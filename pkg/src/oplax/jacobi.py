"""Quantum multiplication on the three-dimensional algebras, the Jacobi
operator of the quantized bracket, and its closed form for the four-parameter
family.

The bracket of two vectors contracts their (commuting) components against the
structure operators.  In nested brackets the outer structure operator always
multiplies from the left of the inner, operator-valued component; that single
ordering convention fixes every product below.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bianchi import (
    FAMILY_TYPE_NAMES,
    FamilyParams,
    classification_rows,
    family_params,
    family_structure_op,
    initial_structure_op,
    quantum_table,
)
from .operad import MultiOp
from .report import VerificationReport, flag_check, residual_check
from .scalars import ScalarPoly, symbol
from .weyl import AM, AP, P, Q, QUANTUM, OperatorExpr, commutator

Vec3 = tuple  # three ScalarPoly components


def basis_vec(i: int) -> Vec3:
    if not 1 <= i <= 3:
        raise ValueError("basis index runs from 1 to 3")
    return tuple(ScalarPoly.const(1 if j == i else 0) for j in (1, 2, 3))


def symbolic_vec(prefix: str) -> Vec3:
    if prefix not in ("x", "y", "z"):
        raise ValueError("symbolic vectors use the x, y or z component symbols")
    return tuple(symbol(f"{prefix}{j}") for j in (1, 2, 3))


def rational_vec(values) -> Vec3:
    values = tuple(ScalarPoly._coerce(Fraction(v)) for v in values)
    if len(values) != 3:
        raise ValueError("expected three components")
    return values


def det3(x: Vec3, y: Vec3, z: Vec3) -> ScalarPoly:
    """Determinant of the component matrix, fully expanded."""
    return (
        x[0] * y[1] * z[2] - x[0] * y[2] * z[1]
        + x[1] * y[2] * z[0] - x[1] * y[0] * z[2]
        + x[2] * y[0] * z[1] - x[2] * y[1] * z[0]
    )


def _require_binary3(mu: MultiOp) -> None:
    if mu.dim != 3 or mu.degree != 2:
        raise ValueError("expected a binary operation on dimension 3")


def _contract(mu: MultiOp, v: Vec3, w: tuple) -> tuple:
    """Components of the bracket of scalar vector v with operator triple w.

    Component i collects mu[(j,k)->i] * v^j * w^k with the structure operator
    left of w's component; the scalar v^j commutes freely.
    """
    components = [OperatorExpr.zero(mu.mode) for _ in range(3)]
    for (j, k, i), entry in mu.entries.items():
        if w[k].is_zero:
            continue
        components[i] = components[i] + v[j] * (entry * w[k])
    return tuple(components)


def _lift(mu: MultiOp, v: Vec3) -> tuple:
    return tuple(OperatorExpr.scalar(mu.mode, c) for c in v)


def vector_bracket(x: Vec3, y: Vec3, mu: MultiOp) -> tuple:
    """Bracket of two vectors with commuting components."""
    _require_binary3(mu)
    return _contract(mu, x, _lift(mu, y))


@dataclass(frozen=True)
class JacobiTriple:
    """The three components of the Jacobi operator (all higher ones vanish)."""

    j1: OperatorExpr
    j2: OperatorExpr
    j3: OperatorExpr

    def __iter__(self):
        return iter((self.j1, self.j2, self.j3))

    def __sub__(self, other: "JacobiTriple") -> "JacobiTriple":
        return JacobiTriple(self.j1 - other.j1, self.j2 - other.j2,
                            self.j3 - other.j3)

    @property
    def is_zero(self) -> bool:
        return self.j1.is_zero and self.j2.is_zero and self.j3.is_zero

    def subst_params(self, bindings: dict) -> "JacobiTriple":
        return JacobiTriple(*(c.subst_params(bindings) for c in self))

    def render(self) -> str:
        return "; ".join(c.render() for c in self)


def jacobi_op(x: Vec3, y: Vec3, z: Vec3, mu: MultiOp) -> JacobiTriple:
    """Cyclic sum [x,[y,z]] + [y,[z,x]] + [z,[x,y]] for the given bracket."""
    _require_binary3(mu)
    total = [OperatorExpr.zero(mu.mode) for _ in range(3)]
    for outer, first, second in ((x, y, z), (y, z, x), (z, x, y)):
        inner = _contract(mu, first, _lift(mu, second))
        nested = _contract(mu, outer, inner)
        total = [t + n for t, n in zip(total, nested)]
    return JacobiTriple(*total)


def closed_form_jacobi(x: Vec3, y: Vec3, z: Vec3,
                       params: FamilyParams) -> JacobiTriple:
    """The family's Jacobi operator in closed form.

    The first two components are multiples of the operators
    beta w q A-/+ +/- gamma (p -/+ p0) A+/-, the third is a multiple of the
    commutator of A+ and A-; the multiple carries the component determinant
    and the parameter a but never b.
    """
    gen_q = OperatorExpr.generator(QUANTUM, Q)
    gen_p = OperatorExpr.generator(QUANTUM, P)
    gen_ap = OperatorExpr.generator(QUANTUM, AP)
    gen_am = OperatorExpr.generator(QUANTUM, AM)
    w = symbol("w")
    p0 = ScalarPoly.monomial(Fraction(1, 2), {"s": 2})
    inv_sqrt_2p0_cubed = ScalarPoly.monomial(2, {"s": -3})
    inv_p0 = ScalarPoly.monomial(2, {"s": -2})

    delta = det3(x, y, z)
    obstruction_plus = (params.beta * w * gen_q * gen_am
                        + params.gamma * (gen_p - p0) * gen_ap)
    obstruction_minus = (params.beta * w * gen_q * gen_ap
                         - params.gamma * (gen_p + p0) * gen_am)
    front = -(params.a * delta * inv_sqrt_2p0_cubed)
    return JacobiTriple(
        front * obstruction_plus,
        front * obstruction_minus,
        (params.a * params.a * delta * inv_p0) * commutator(gen_ap, gen_am),
    )


def verify_closed_form(hbar_zero: bool = False) -> VerificationReport:
    """Fully symbolic check that the computed Jacobi operator of the family
    equals its closed form, and that the result does not involve b."""
    x, y, z = symbolic_vec("x"), symbolic_vec("y"), symbolic_vec("z")
    params = FamilyParams.symbolic()
    computed = jacobi_op(x, y, z, family_structure_op(params))
    closed = closed_form_jacobi(x, y, z, params)
    diff = computed - closed
    if hbar_zero:
        diff = diff.subst_params({"hbar": 0})
    report = VerificationReport()
    for idx, residual in enumerate(diff, start=1):
        report.add(residual_check(
            f"theorem-9-1.J{idx}",
            "closed form of the family Jacobi operator",
            residual,
            f"component {idx}, computed minus closed form, all parameters symbolic",
        ))
    offending = next((c for c in computed if c.has_symbol("b")), None)
    report.add(flag_check(
        "theorem-9-1.b-independence",
        "closed-form independence of the b parameter",
        offending is None,
        "the computed Jacobi operator carries no power of b",
        residual=offending.render() if offending is not None else None,
    ))
    return report


def verify_closed_form_specializations(hbar_zero: bool = False) -> VerificationReport:
    """The stored quantum table rows of the family reproduce the closed form
    at their parameter values."""
    x, y, z = symbolic_vec("x"), symbolic_vec("y"), symbolic_vec("z")
    table = quantum_table()
    report = VerificationReport()
    for name in FAMILY_TYPE_NAMES:
        computed = jacobi_op(x, y, z, table[name])
        closed = closed_form_jacobi(x, y, z, family_params(name))
        diff = computed - closed
        if hbar_zero:
            diff = diff.subst_params({"hbar": 0})
        first = next((c for c in diff if not c.is_zero), None)
        report.add(flag_check(
            f"theorem-9-1.special.{name}",
            "closed form specialized to a table row",
            first is None,
            f"type {name}: Jacobi operator of the stored quantum table vs "
            "closed form at its parameters",
            residual=first.render() if first is not None else "0",
        ))
    return report


_QUANTUM_LIE_TYPES = ("I", "II", "VII", "VI", "IX", "VIII")


def verify_quantum_lie_types(hbar_zero: bool = False) -> VerificationReport:
    """The six quantum types that stay Lie algebras: symbolic Jacobi operator
    vanishes, hbar kept symbolic."""
    x, y, z = symbolic_vec("x"), symbolic_vec("y"), symbolic_vec("z")
    table = quantum_table()
    report = VerificationReport()
    for name in _QUANTUM_LIE_TYPES:
        result = jacobi_op(x, y, z, table[name])
        if hbar_zero:
            result = result.subst_params({"hbar": 0})
        first = next((c for c in result if not c.is_zero), None)
        report.add(flag_check(
            f"jacobi-quantum.{name}",
            "quantum Jacobi identity",
            first is None,
            f"type {name}: Jacobi operator with symbolic vectors",
            residual=first.render() if first is not None else "0",
        ))
    return report


def verify_classical_lie_rows() -> VerificationReport:
    """Every classification row is a Lie algebra: the classical Jacobi
    operator vanishes for symbolic vectors."""
    x, y, z = symbolic_vec("x"), symbolic_vec("y"), symbolic_vec("z")
    report = VerificationReport()
    for row in classification_rows():
        result = jacobi_op(x, y, z, initial_structure_op(row))
        first = next((c for c in result if not c.is_zero), None)
        report.add(flag_check(
            f"jacobi-classical.{row.name}",
            "classical Jacobi identity",
            first is None,
            f"type {row.name}: Jacobi operator of the initial constants",
            residual=first.render() if first is not None else "0",
        ))
    return report
