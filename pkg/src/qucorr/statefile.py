"""JSON wire format for bipartite states.

A state document is

    {"dims": [2, d], "matrix": [[[re, im], ...], ...]}

with the matrix given row-major in the |i j> -> i*d + j basis and every
entry a two-element [real, imag] array of decimal floats.  Writers emit 17
significant digits so a round trip reproduces the doubles exactly.  This
module only converts between text and :class:`DensityMatrix`; file handling
belongs to the caller.
"""

from __future__ import annotations

import json

import numpy as np

from .operators import DensityMatrix, validate_density


class StateFormatError(ValueError):
    """The document is not a well-formed state file."""


def dumps_density(rho: DensityMatrix) -> str:
    """Serialize a state to the JSON document, one matrix row per line."""
    def fmt(x: float) -> str:
        return format(float(x), ".17g")

    rows = []
    for row in rho.matrix:
        cells = ", ".join(f"[{fmt(v.real)}, {fmt(v.imag)}]" for v in row)
        rows.append(f"    [{cells}]")
    body = ",\n".join(rows)
    return ('{\n  "dims": [%d, %d],\n  "matrix": [\n%s\n  ]\n}\n'
            % (rho.dim_a, rho.dim_b, body))


def loads_density(text: str) -> DensityMatrix:
    """Parse and validate a state document.

    Raises :class:`StateFormatError` for structural problems and the usual
    validation errors if the matrix is not a density operator.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or set(doc) != {"dims", "matrix"}:
        raise StateFormatError('document must have exactly the keys "dims" and "matrix"')
    dims = doc["dims"]
    if (not isinstance(dims, list) or len(dims) != 2
            or not all(isinstance(x, int) for x in dims)):
        raise StateFormatError('"dims" must be a list of two integers')
    dim_a, dim_b = dims
    if dim_a != 2:
        raise StateFormatError(f'first dimension must be 2, got {dim_a}')
    if dim_b < 2:
        raise StateFormatError(f'second dimension must be >= 2, got {dim_b}')
    n = dim_a * dim_b
    rows = doc["matrix"]
    if not isinstance(rows, list) or len(rows) != n:
        raise StateFormatError(f'"matrix" must have {n} rows')
    m = np.empty((n, n), dtype=complex)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise StateFormatError(f"row {i} must have {n} entries")
        for j, cell in enumerate(row):
            if (not isinstance(cell, list) or len(cell) != 2
                    or not all(isinstance(x, (int, float)) for x in cell)):
                raise StateFormatError(f"entry ({i}, {j}) must be a [re, im] pair")
            m[i, j] = complex(cell[0], cell[1])
    return validate_density(m, dim_a, dim_b)
