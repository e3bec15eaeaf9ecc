"""Multilinear operations on a finite-dimensional space, with their operad
structure: partial compositions, total composition, the graded commutator
(Gerstenhaber bracket), and the graded Jacobi defect.

An operation of degree n on a d-dimensional space is stored sparsely by its
structure constants: entry (i1, ..., in, k) is the coefficient of basis vector
k in the value on basis inputs i1...in.  Entries are OperatorExpr values; a
degree-1 operation acting on a vector contracts as (Mv)^k = sum_s M[s,k] v^s.
All sign conventions run on the reduced degree (degree minus one).
"""

from __future__ import annotations

from .weyl import OperatorExpr


class MultiOp:
    """Degree-n multilinear operation with OperatorExpr structure constants."""

    __slots__ = ("dim", "degree", "mode", "entries")

    def __init__(self, dim: int, degree: int, mode: str, entries=None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if degree < 1:
            raise ValueError("degree must be at least 1")
        self.dim = dim
        self.degree = degree
        self.mode = mode
        acc: dict = {}
        if entries:
            items = entries.items() if isinstance(entries, dict) else entries
            for key, value in items:
                key = tuple(key)
                if len(key) != degree + 1:
                    raise ValueError(f"entry key {key} does not match degree {degree}")
                if any(not 0 <= idx < dim for idx in key):
                    raise ValueError(f"entry key {key} out of range for dim {dim}")
                if value.mode != mode:
                    raise ValueError("entry mode does not match operation mode")
                if not value.is_zero:
                    existing = acc.get(key)
                    value = value if existing is None else existing + value
                    if value.is_zero:
                        acc.pop(key, None)
                    else:
                        acc[key] = value
        self.entries = acc

    @classmethod
    def _make(cls, dim, degree, mode, entries: dict) -> "MultiOp":
        op = cls.__new__(cls)
        op.dim = dim
        op.degree = degree
        op.mode = mode
        op.entries = entries
        return op

    @property
    def reduced_degree(self) -> int:
        return self.degree - 1

    def entry(self, inputs: tuple, k: int) -> OperatorExpr:
        return self.entries.get(tuple(inputs) + (k,), OperatorExpr.zero(self.mode))

    def sorted_entries(self):
        return sorted(self.entries.items())

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def same_shape(self, other: "MultiOp") -> bool:
        return (self.dim == other.dim and self.degree == other.degree
                and self.mode == other.mode)

    def _require_compatible(self, other: "MultiOp") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")
        if self.mode != other.mode:
            raise ValueError(f"mode mismatch: {self.mode} vs {other.mode}")

    def __add__(self, other: "MultiOp") -> "MultiOp":
        if not self.same_shape(other):
            raise ValueError("cannot add operations of different shape")
        acc = dict(self.entries)
        for key, value in other.entries.items():
            total = acc.get(key)
            total = value if total is None else total + value
            if total.is_zero:
                acc.pop(key, None)
            else:
                acc[key] = total
        return MultiOp._make(self.dim, self.degree, self.mode, acc)

    def __neg__(self) -> "MultiOp":
        return MultiOp._make(self.dim, self.degree, self.mode,
                             {key: -value for key, value in self.entries.items()})

    def __sub__(self, other: "MultiOp") -> "MultiOp":
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, MultiOp):
            return NotImplemented
        return self.same_shape(other) and self.entries == other.entries

    __hash__ = None

    def map_entries(self, fn) -> "MultiOp":
        acc = {}
        mode = self.mode
        for key, value in self.entries.items():
            image = fn(value)
            mode = image.mode
            if not image.is_zero:
                acc[key] = image
        return MultiOp._make(self.dim, self.degree, mode, acc)

    def is_antisymmetric(self) -> bool:
        """For degree 2: swapping the inputs negates every entry."""
        if self.degree != 2:
            raise ValueError("antisymmetry is defined for degree-2 operations")
        for (i, j, k), value in self.entries.items():
            if i == j:
                return False
            if self.entry((j, i), k) != -value:
                return False
        return True

    def __repr__(self):
        return (f"<MultiOp dim={self.dim} degree={self.degree} mode={self.mode} "
                f"nonzero={len(self.entries)}>")


def partial_compose(f: MultiOp, pos: int, g: MultiOp) -> MultiOp:
    """Insert g into input slot ``pos`` of f (0-based), with the graded sign.

    The composite picks up (-1)^(pos * |g|) where |g| is g's reduced degree,
    and every entry is a sum of products with the f-entry on the left.
    """
    f._require_compatible(g)
    if not 0 <= pos <= f.reduced_degree:
        raise ValueError(f"slot {pos} out of range for degree {f.degree}")
    negate = (pos * g.reduced_degree) % 2 == 1
    g_by_out: dict = {}
    for key, value in g.entries.items():
        g_by_out.setdefault(key[-1], []).append((key[:-1], value))
    acc: dict = {}
    for key, fval in f.entries.items():
        inputs, out = key[:-1], key[-1]
        for g_inputs, gval in g_by_out.get(inputs[pos], ()):
            new_key = inputs[:pos] + g_inputs + inputs[pos + 1:] + (out,)
            term = fval * gval
            if negate:
                term = -term
            total = acc.get(new_key)
            total = term if total is None else total + term
            if total.is_zero:
                acc.pop(new_key, None)
            else:
                acc[new_key] = total
    return MultiOp._make(f.dim, f.degree + g.reduced_degree, f.mode, acc)


def total_compose(f: MultiOp, g: MultiOp) -> MultiOp:
    """Sum of all partial compositions of g into f."""
    result = partial_compose(f, 0, g)
    for pos in range(1, f.reduced_degree + 1):
        result = result + partial_compose(f, pos, g)
    return result


def bracket(f: MultiOp, g: MultiOp) -> MultiOp:
    """Graded commutator f o g - (-1)^(|f||g|) g o f."""
    fg = total_compose(f, g)
    gf = total_compose(g, f)
    if (f.reduced_degree * g.reduced_degree) % 2 == 1:
        return fg + gf
    return fg - gf


def jacobi_defect(f: MultiOp, g: MultiOp, h: MultiOp) -> MultiOp:
    """Signed cyclic sum of nested brackets; zero for a graded Lie algebra."""
    terms = [
        (f.reduced_degree * h.reduced_degree, bracket(f, bracket(g, h))),
        (g.reduced_degree * f.reduced_degree, bracket(g, bracket(h, f))),
        (h.reduced_degree * g.reduced_degree, bracket(h, bracket(f, g))),
    ]
    result = None
    for exponent, term in terms:
        if exponent % 2 == 1:
            term = -term
        result = term if result is None else result + term
    return result


def antisymmetric_binary(dim: int, mode: str, pair_entries: dict) -> MultiOp:
    """Degree-2 antisymmetric operation from entries keyed (i, j, k), 1-based.

    Each off-diagonal pair may be given in either order; the flipped entry is
    filled with the opposite sign and the diagonal stays zero.  Giving both
    orders of the same pair is rejected.
    """
    entries: dict = {}
    for (i, j, k), value in pair_entries.items():
        if i == j or not all(1 <= idx <= dim for idx in (i, j, k)):
            raise ValueError(f"bad 1-based entry key {(i, j, k)}")
        key = (i - 1, j - 1, k - 1)
        flip = (j - 1, i - 1, k - 1)
        if key in entries or flip in entries:
            raise ValueError(f"entry {(i, j, k)} given twice")
        if value.is_zero:
            continue
        entries[key] = value
        entries[flip] = -value
    return MultiOp(dim, 2, mode, entries)
