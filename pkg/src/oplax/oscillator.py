"""Harmonic-oscillator dynamics as a formal derivation, its 3x3 matrix Lax
pair, and the nine-parameter family of antisymmetric binary operations that
solves the operadic Lax equation.

Time never appears explicitly: evolution is the derivation ``ddt`` acting on
classical operator expressions.  The auxiliary coordinates A+ and A- satisfy
A+^2 - A-^2 = 2p and A+ A- = w q; differentiating those two relations and
solving the linear system gives their evolution rules, which is what ``ddt``
implements (the two ideal-preservation identities below pin this down).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .operad import MultiOp, antisymmetric_binary, bracket
from .report import VerificationReport, residual_check
from .scalars import ScalarPoly, symbol
from .weyl import AM, AP, CLASSICAL, OperatorExpr, P, Q

W = symbol("w")
S = symbol("s")


def q() -> OperatorExpr:
    return OperatorExpr.generator(CLASSICAL, Q)


def p() -> OperatorExpr:
    return OperatorExpr.generator(CLASSICAL, P)


def a_plus() -> OperatorExpr:
    return OperatorExpr.generator(CLASSICAL, AP)


def a_minus() -> OperatorExpr:
    return OperatorExpr.generator(CLASSICAL, AM)


def p0() -> ScalarPoly:
    """Initial momentum, encoded via s^2 = 2*p0."""
    return ScalarPoly.monomial(Fraction(1, 2), {"s": 2})


def inv_2p0() -> ScalarPoly:
    return ScalarPoly.monomial(1, {"s": -2})


def inv_sqrt_2p0() -> ScalarPoly:
    return ScalarPoly.monomial(1, {"s": -1})


def hamiltonian() -> OperatorExpr:
    """(p^2 + w^2 q^2) / 2 in classical mode."""
    return OperatorExpr(CLASSICAL, [
        ((P, P), ScalarPoly.const(Fraction(1, 2))),
        ((Q, Q), W * W * Fraction(1, 2)),
    ])


#: images of the generators under d/dt
_DDT_IMAGES = {
    Q: ((P,), ScalarPoly.const(1)),
    P: ((Q,), -(W * W)),
    AP: ((AM,), W * Fraction(-1, 2)),
    AM: ((AP,), W * Fraction(1, 2)),
}


def ddt(expr: OperatorExpr) -> OperatorExpr:
    """Time derivative: the Leibniz extension of q->p, p->-w^2 q,
    A+ -> -(w/2) A-, A- -> (w/2) A+; parameter symbols are constants."""
    if expr.mode != CLASSICAL:
        raise ValueError("ddt is defined on classical expressions only")
    raw = []
    for word, coeff in expr.terms.items():
        for j, gen in enumerate(word):
            image_word, image_scalar = _DDT_IMAGES[gen]
            raw.append((word[:j] + image_word + word[j + 1:], coeff * image_scalar))
    return OperatorExpr(CLASSICAL, raw)


# -- matrix Lax pair ----------------------------------------------------------

Matrix = tuple  # 3x3 nested tuples of OperatorExpr


@dataclass(frozen=True)
class LaxPair:
    l_matrix: Matrix
    m_matrix: Matrix


def lax_pair() -> LaxPair:
    zero = OperatorExpr.zero(CLASSICAL)
    one = OperatorExpr.scalar(CLASSICAL, 1)
    half_w = W * Fraction(1, 2)
    l_matrix = (
        (p(), W * q(), zero),
        (W * q(), -p(), zero),
        (zero, zero, one),
    )
    m_matrix = (
        (zero, OperatorExpr.scalar(CLASSICAL, -half_w), zero),
        (OperatorExpr.scalar(CLASSICAL, half_w), zero, zero),
        (zero, zero, zero),
    )
    return LaxPair(l_matrix, m_matrix)


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    return tuple(
        tuple(sum((x[i][k] * y[k][j] for k in range(3)),
                  OperatorExpr.zero(x[0][0].mode))
              for j in range(3))
        for i in range(3)
    )


def mat_sub(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(x[i][j] - y[i][j] for j in range(3)) for i in range(3))


def mat_trace(x: Matrix) -> OperatorExpr:
    return x[0][0] + x[1][1] + x[2][2]


def mat_det(x: Matrix) -> OperatorExpr:
    total = OperatorExpr.zero(x[0][0].mode)
    for j0, j1, j2, sign in (
        (0, 1, 2, 1), (0, 2, 1, -1), (1, 0, 2, -1),
        (1, 2, 0, 1), (2, 0, 1, 1), (2, 1, 0, -1),
    ):
        term = x[0][j0] * x[1][j1] * x[2][j2]
        total = total + (term if sign == 1 else -term)
    return total


def verify_matrix_lax() -> VerificationReport:
    """Entrywise dL/dt = ML - LM, plus the isospectral/energy identities."""
    pair = lax_pair()
    commutant = mat_sub(mat_mul(pair.m_matrix, pair.l_matrix),
                        mat_mul(pair.l_matrix, pair.m_matrix))
    report = VerificationReport()
    for i in range(3):
        for j in range(3):
            residual = ddt(pair.l_matrix[i][j]) - commutant[i][j]
            report.add(residual_check(
                f"matrix-lax.entry.{i + 1}{j + 1}",
                "matrix Lax equation for the oscillator",
                residual,
                f"entry ({i + 1},{j + 1}) of dL/dt - (ML - LM)",
            ))
    det = mat_det(pair.l_matrix)
    report.add(residual_check(
        "matrix-lax.ddt-det",
        "isospectral invariant of the Lax matrix",
        ddt(det),
        "d/dt of det L",
    ))
    report.add(residual_check(
        "matrix-lax.det-energy",
        "determinant of the Lax matrix against the energy",
        det + hamiltonian() + hamiltonian(),
        "det L + 2H",
    ))
    return report


# -- the nine-parameter deformation family -------------------------------------

class DeformationCoeffs:
    """The nine scalar parameters of the deformed bracket, indexed 1..9."""

    __slots__ = ("values",)

    def __init__(self, values):
        values = tuple(ScalarPoly._coerce(v) for v in values)
        if len(values) != 9:
            raise ValueError("expected nine coefficients")
        self.values = values

    def __getitem__(self, nu: int) -> ScalarPoly:
        if not 1 <= nu <= 9:
            raise IndexError("coefficient index runs from 1 to 9")
        return self.values[nu - 1]

    def __eq__(self, other):
        if not isinstance(other, DeformationCoeffs):
            return NotImplemented
        return self.values == other.values

    __hash__ = None

    def __repr__(self):
        inner = ", ".join(v.render() for v in self.values)
        return f"DeformationCoeffs({inner})"


def deformed_structure_op(c: DeformationCoeffs) -> MultiOp:
    """The antisymmetric binary operation whose structure constants are the
    nine-parameter combinations of p, w q, A+ and A-."""
    wq = W * q()
    return antisymmetric_binary(3, CLASSICAL, {
        (2, 3, 1): c[2] * p() - c[3] * wq - c[4],
        (1, 3, 2): c[2] * p() - c[3] * wq + c[4],
        (3, 1, 1): c[2] * wq + c[3] * p() - c[1],
        (2, 3, 2): c[2] * wq + c[3] * p() + c[1],
        (1, 2, 1): c[5] * a_plus() + c[6] * a_minus(),
        (1, 2, 2): c[5] * a_minus() - c[6] * a_plus(),
        (1, 3, 3): c[7] * a_plus() + c[8] * a_minus(),
        (2, 3, 3): c[7] * a_minus() - c[8] * a_plus(),
        (1, 2, 3): OperatorExpr.scalar(CLASSICAL, c[9]),
    })


#: column order of the nine independent structure constants, 1-based (i, j, k)
STRUCTURE_COLUMNS = (
    (1, 2, 1), (1, 2, 2), (1, 2, 3),
    (2, 3, 1), (2, 3, 2), (2, 3, 3),
    (3, 1, 1), (3, 1, 2), (3, 1, 3),
)
_COLUMN_INDEX = {key: pos for pos, key in enumerate(STRUCTURE_COLUMNS)}


def structure_lookup(values, i: int, j: int, k: int) -> ScalarPoly:
    """Antisymmetric lookup into a nine-entry column tuple."""
    if i == j:
        return ScalarPoly.zero()
    if (i, j, k) in _COLUMN_INDEX:
        return ScalarPoly._coerce(values[_COLUMN_INDEX[(i, j, k)]])
    return -ScalarPoly._coerce(values[_COLUMN_INDEX[(j, i, k)]])


def coeffs_from_initial(initial) -> DeformationCoeffs:
    """Solve for the nine parameters from initial structure constants.

    ``initial`` holds the nine independent constants in STRUCTURE_COLUMNS
    order.  The start state has q = 0, p = p0 > 0, A+ = sqrt(2 p0), A- = 0.
    """
    def m(i, j, k):
        return structure_lookup(initial, i, j, k)

    half = Fraction(1, 2)
    return DeformationCoeffs((
        (m(2, 3, 2) - m(3, 1, 1)) * half,
        (m(1, 3, 2) + m(2, 3, 1)) * inv_2p0(),
        (m(2, 3, 2) + m(3, 1, 1)) * inv_2p0(),
        (m(1, 3, 2) - m(2, 3, 1)) * half,
        m(1, 2, 1) * inv_sqrt_2p0(),
        -(m(1, 2, 2) * inv_sqrt_2p0()),
        m(1, 3, 3) * inv_sqrt_2p0(),
        -(m(2, 3, 3) * inv_sqrt_2p0()),
        m(1, 2, 3),
    ))


def coeffs_nondegenerate(c: DeformationCoeffs) -> bool:
    """Sum-of-squares nondegeneracy test on the six non-constant parameters."""
    total = ScalarPoly.zero()
    for nu in (2, 3, 5, 6, 7, 8):
        total = total + c[nu] * c[nu]
    return not total.is_zero


def at_initial(expr: OperatorExpr) -> OperatorExpr:
    """Evaluate at the start state q = 0, p = p0, A+ = sqrt(2 p0), A- = 0."""
    if expr.mode != CLASSICAL:
        raise ValueError("initial-state evaluation is classical only")
    zero = OperatorExpr.zero(CLASSICAL)
    return expr.subst_generators({
        Q: zero,
        P: OperatorExpr.scalar(CLASSICAL, p0()),
        AP: OperatorExpr.scalar(CLASSICAL, S),
        AM: zero,
    })


def rotation_op() -> MultiOp:
    """The degree-1 operation given by the constant matrix of the Lax pair."""
    half_w = W * Fraction(1, 2)
    return MultiOp(3, 1, CLASSICAL, {
        (1, 0): OperatorExpr.scalar(CLASSICAL, -half_w),
        (0, 1): OperatorExpr.scalar(CLASSICAL, half_w),
    })


def verify_operadic_lax(mu: MultiOp, label: str = "") -> VerificationReport:
    """Entrywise d(mu)/dt = [M, mu] for a classical binary operation."""
    if mu.mode != CLASSICAL or mu.dim != 3 or mu.degree != 2:
        raise ValueError("expected a classical binary operation on dimension 3")
    rhs = bracket(rotation_op(), mu)
    prefix = f"operadic-lax.{label}" if label else "operadic-lax"
    report = VerificationReport()
    for i in range(3):
        for j in range(3):
            for k in range(3):
                residual = ddt(mu.entry((i, j), k)) - rhs.entry((i, j), k)
                report.add(residual_check(
                    f"{prefix}.{i + 1}{j + 1}{k + 1}",
                    "operadic Lax equation",
                    residual,
                    f"entry ({i + 1},{j + 1})->{k + 1} of d(mu)/dt - [M, mu]",
                ))
    return report
