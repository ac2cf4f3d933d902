"""The p^ell-dimensional space of complex functions on GF(p^ell).

Point projectors, subfield-support projectors, and the character basis
phi_n(m) = p^(-ell/2) omega^(-Tr(n m)) with its tensor factorisation into
p-dimensional component functions.
"""

from __future__ import annotations

from .cyclo import get_ring, ring_order
from .gf import GFField
from .linalg import EXACT, OperatorMatrix, StateVector
from .linalg import inner_product  # re-export: scalar product lives with states

__all__ = [
    "ring_for", "inner_product", "point_projector", "subspace_projector",
    "phi_basis", "phi_basis_matrix", "tensor_factorize_phi",
]


def ring_for(field: GFField):
    """The shared cyclotomic scalar ring for operators over this field."""
    return get_ring(ring_order(field.p, field.ell), field.p)


def point_projector(field: GFField, k) -> OperatorMatrix:
    """Rank-one projector onto the point mass at field element k."""
    ring = ring_for(field)
    idx = field.element(k).index
    out = OperatorMatrix.zeros(ring, field.order)
    out.rows[idx][idx] = ring.one
    return out


def subspace_projector(field: GFField, d: int) -> OperatorMatrix:
    """Projector onto functions supported on the subfield GF(p^d)."""
    ring = ring_for(field)
    out = OperatorMatrix.zeros(ring, field.order)
    for idx in field.subfield_indices(d):
        out.rows[idx][idx] = ring.one
    return out


def phi_basis(field: GFField, n) -> StateVector:
    """Character basis vector phi_n(m) = p^(-ell/2) omega^(-Tr(n m))."""
    ring = ring_for(field)
    n_idx = field.element(n).index
    vals = []
    for m in range(field.order):
        t = field.trace_index(field.mul_index(n_idx, m))
        vals.append(ring.scalar(ring._zeta_pows[ring.omega_exponent(-t)],
                                field.ell, 1))
    return StateVector(field.order, EXACT, ring, vals)


def phi_basis_matrix(field: GFField) -> OperatorMatrix:
    """Unitary whose columns are the phi_n, in canonical order."""
    ring = ring_for(field)
    cols = [phi_basis(field, n) for n in range(field.order)]
    rows = [[cols[n].values[m] for n in range(field.order)]
            for m in range(field.order)]
    return OperatorMatrix(field.order, EXACT, ring, rows)


def component_character(field: GFField, a: int) -> StateVector:
    """p-dimensional component function with values p^(-1/2) omega^(-a b)."""
    ring = ring_for(field)
    p = field.p
    vals = [ring.scalar(ring._zeta_pows[ring.omega_exponent(-a * b)], 1, 1)
            for b in range(p)]
    return StateVector(p, EXACT, ring, vals)


def tensor_factorize_phi(field: GFField, n) -> list[StateVector]:
    """Component factors of phi_n, indexed by the dual components of n.

    phi_n(m) equals the product over positions l of factor_l evaluated at
    the standard component m_l; pairing dual components of n with standard
    components of m (the swapped pairing holds as well).
    """
    _, dual = field.components(n)
    return [component_character(field, a) for a in dual]
