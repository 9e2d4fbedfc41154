"""Exact integer lattice computations via Hermite normal form.

Row-style HNF with a unimodular transform, solved entirely over Python
integers (arbitrary precision).  Used for membership of a vector in the
lattice spanned by given generators, with an explicit witness, and for
integer kernel bases.  Deterministic: pivot choice is by minimal absolute
value with lowest row index as tie-break.
"""

from __future__ import annotations

from typing import Optional

Matrix = list[list[int]]


def hermite_with_transform(rows: Matrix, ncols: int) -> tuple[Matrix, Matrix]:
    """Row HNF: returns (H, U) with H = U @ rows, U unimodular.

    H is in row echelon form with positive pivots and entries above each
    pivot reduced into [0, pivot).
    """
    nrows = len(rows)
    work = [list(r) for r in rows]
    trans = [[1 if i == j else 0 for j in range(nrows)] for i in range(nrows)]

    pivot_row = 0
    for col in range(ncols):
        nonzero = [i for i in range(pivot_row, nrows) if work[i][col] != 0]
        if not nonzero:
            continue
        # Euclid across rows until one nonzero entry remains in this column.
        while len(nonzero) > 1:
            nonzero.sort(key=lambda i: (abs(work[i][col]), i))
            base = nonzero[0]
            p = work[base][col]
            for i in nonzero[1:]:
                q = work[i][col] // p
                if q:
                    wi, wb = work[i], work[base]
                    work[i] = [a - q * b for a, b in zip(wi, wb)]
                    ti, tb = trans[i], trans[base]
                    trans[i] = [a - q * b for a, b in zip(ti, tb)]
            nonzero = [i for i in nonzero if work[i][col] != 0]
        src = nonzero[0]
        if src != pivot_row:
            work[src], work[pivot_row] = work[pivot_row], work[src]
            trans[src], trans[pivot_row] = trans[pivot_row], trans[src]
        if work[pivot_row][col] < 0:
            work[pivot_row] = [-a for a in work[pivot_row]]
            trans[pivot_row] = [-a for a in trans[pivot_row]]
        p = work[pivot_row][col]
        for i in range(pivot_row):
            q = work[i][col] // p
            if q:
                wi, wp = work[i], work[pivot_row]
                work[i] = [a - q * b for a, b in zip(wi, wp)]
                ti, tp = trans[i], trans[pivot_row]
                trans[i] = [a - q * b for a, b in zip(ti, tp)]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return work, trans


def _pivot_column(row: list[int]) -> Optional[int]:
    for j, v in enumerate(row):
        if v != 0:
            return j
    return None


def solve_lattice_membership(columns: Matrix, target: list[int]) -> Optional[list[int]]:
    """Integer solution z of sum_i z_i * columns[i] = target, or None.

    None means the target is not in the integer span of the given columns.
    """
    if not columns:
        return None if any(target) else []
    ncols = len(target)
    if any(len(c) != ncols for c in columns):
        raise ValueError("column length mismatch")
    H, U = hermite_with_transform(columns, ncols)

    residue = list(target)
    y = [0] * len(H)
    for i, row in enumerate(H):
        j = _pivot_column(row)
        if j is None:
            break
        if residue[j] == 0:
            continue
        q, rem = divmod(residue[j], row[j])
        if rem != 0:
            return None
        y[i] = q
        residue = [a - q * b for a, b in zip(residue, row)]
    if any(residue):
        return None
    witness = [0] * len(columns)
    for i, yi in enumerate(y):
        if yi:
            for k, u in enumerate(U[i]):
                witness[k] += yi * u
    return witness


def integer_kernel_basis(rows: Matrix, ncols: int) -> Matrix:
    """Basis of the lattice {z : sum_i z_i * rows[i] = 0} (left kernel)."""
    if not rows:
        return []
    H, U = hermite_with_transform(rows, ncols)
    return [U[i] for i in range(len(H)) if _pivot_column(H[i]) is None]
