"""JSON encodings for scalars, matrices, and states.

Scalars serialise as {"coeffs", "scale_exp", "denom", "N"}; matrices as
{"dim", "backend", "entries"} with row-major entries; states use "values".
Float entries are [re, im] pairs.  Decoding takes the target ring, since a
scalar payload pins only the ring order.
"""

from __future__ import annotations

from .cyclo import CycloRing, CycloScalar
from .errors import BackendMismatch, DimensionMismatch
from .linalg import EXACT, FLOAT, OperatorMatrix, StateVector

import numpy as np


def scalar_to_json(x: CycloScalar) -> dict:
    return {
        "coeffs": list(x.coeffs),
        "scale_exp": x.scale_exp,
        "denom": x.denom,
        "N": x.ring.order,
    }


def scalar_from_json(data: dict, ring: CycloRing) -> CycloScalar:
    if data["N"] != ring.order:
        raise BackendMismatch(
            f"scalar ring order {data['N']} != target ring order {ring.order}")
    return ring.scalar(data["coeffs"], data["scale_exp"], data["denom"])


def matrix_to_json(mat: OperatorMatrix) -> dict:
    if mat.backend == EXACT:
        entries = [scalar_to_json(x) for row in mat.rows for x in row]
    else:
        entries = [[float(z.real), float(z.imag)]
                   for row in mat.rows for z in row]
    return {"dim": mat.dim, "backend": mat.backend, "entries": entries}


def matrix_from_json(data: dict, ring: CycloRing | None = None) -> OperatorMatrix:
    dim = data["dim"]
    entries = data["entries"]
    if len(entries) != dim * dim:
        raise DimensionMismatch("entry count does not match dim^2")
    if data["backend"] == FLOAT:
        arr = np.array([complex(re, im) for re, im in entries]).reshape(dim, dim)
        return OperatorMatrix.from_complex(arr)
    if ring is None:
        raise BackendMismatch("decoding an exact matrix needs a target ring")
    rows = [[scalar_from_json(entries[n * dim + m], ring) for m in range(dim)]
            for n in range(dim)]
    return OperatorMatrix(dim, EXACT, ring, rows)


def state_to_json(state: StateVector) -> dict:
    if state.backend == EXACT:
        values = [scalar_to_json(x) for x in state.values]
    else:
        values = [[float(z.real), float(z.imag)] for z in state.values]
    return {"dim": state.dim, "backend": state.backend, "values": values}


def state_from_json(data: dict, ring: CycloRing | None = None) -> StateVector:
    dim = data["dim"]
    if data["backend"] == FLOAT:
        arr = np.array([complex(re, im) for re, im in data["values"]])
        return StateVector(dim, FLOAT, None, arr)
    if ring is None:
        raise BackendMismatch("decoding an exact state needs a target ring")
    return StateVector(dim, EXACT, ring,
                       [scalar_from_json(v, ring) for v in data["values"]])
