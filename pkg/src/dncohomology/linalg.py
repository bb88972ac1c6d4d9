"""Exact sparse linear algebra over Q.

``exact_rank`` splits a matrix into connected blocks (rows and columns that
share no nonzero entry never interact during elimination), clears
denominators and runs fraction-free elimination on each block.  Large
blocks are re-ranked modulo random primes as a cross-check.

The elimination kernels come from the compiled ``_kernels`` extension when
it is importable and from ``_kernels_py`` otherwise, or when the
environment variable DNCOHOMOLOGY_PURE_PYTHON is set.
"""

from __future__ import annotations

import logging
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

try:
    if os.environ.get("DNCOHOMOLOGY_PURE_PYTHON"):
        raise ImportError("pure-Python kernels requested")
    from . import _kernels as _kern

    KERNEL = "compiled"
except ImportError:  # pragma: no cover - depends on the build
    from . import _kernels_py as _kern

    KERNEL = "python"

from . import _kernels_py

log = logging.getLogger(__name__)

MODULAR_CHECK_THRESHOLD = 400  # entries in a block before the modular cross-check runs
_PRIME_POOL = (
    2147483647, 2147483629, 2147483587, 2147483579, 2147483563,
    2147483549, 2147483543, 2147483497, 2147483489, 2147483477,
)


class RankMismatchError(RuntimeError):
    """Fraction-free and modular ranks disagree; signals an elimination bug."""


@dataclass
class SparseRationalMatrix:
    rows: int
    cols: int
    entries: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise IndexError(f"entry ({r},{c}) outside {self.rows}x{self.cols}")
            if v:
                clean[(r, c)] = Fraction(v)
        self.entries = clean

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, object]], rows: int) -> "SparseRationalMatrix":
        entries = {}
        for c, col in enumerate(columns):
            for r, v in col.items():
                if v:
                    entries[(r, c)] = v
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, n: int) -> "SparseRationalMatrix":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    def __getitem__(self, rc):
        return self.entries.get(rc, Fraction(0))

    def transpose(self) -> "SparseRationalMatrix":
        return SparseRationalMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def to_dense(self) -> List[List[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def blocks(self) -> List[Tuple[List[int], List[int]]]:
        """Connected components of the row/column incidence graph (rows, cols)."""
        parent = list(range(self.rows + self.cols))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for r, c in self.entries:
            a, b = find(r), find(self.rows + c)
            if a != b:
                parent[a] = b
        groups: Dict[int, Tuple[List[int], List[int]]] = {}
        for r, c in self.entries:
            root = find(r)
            g = groups.setdefault(root, (set(), set()))
            g[0].add(r)
            g[1].add(c)
        return [(sorted(rs), sorted(cs)) for rs, cs in groups.values()]


def _block_entries(M: SparseRationalMatrix):
    """Yield ``(rows, cols, entries)`` per connected block."""
    blocks = M.blocks()
    owner = {}
    for b, (rows, _) in enumerate(blocks):
        for r in rows:
            owner[r] = b
    grouped: List[Dict[Tuple[int, int], Fraction]] = [dict() for _ in blocks]
    for rc, v in M.entries.items():
        grouped[owner[rc[0]]][rc] = v
    for (rows, cols), ents in zip(blocks, grouped):
        yield rows, cols, ents


def _integer_rows(rows: List[int], cols: List[int], entries, transpose: bool = False) -> List[List[int]]:
    """Dense integer matrix of a block, denominators cleared per row."""
    if transpose:
        rows, cols = cols, rows
        entries = {(c, r): v for (r, c), v in entries.items()}
    col_pos = {c: j for j, c in enumerate(cols)}
    row_pos = {r: i for i, r in enumerate(rows)}
    dense = [[Fraction(0)] * len(cols) for _ in rows]
    for (r, c), v in entries.items():
        dense[row_pos[r]][col_pos[c]] = v
    out = []
    for row in dense:
        den = lcm(*(x.denominator for x in row))
        out.append([int(x * den) for x in row])
    return out


def modular_rank(rows: List[List[int]], trials: int = 2, rng: Optional[random.Random] = None) -> int:
    """Max over a few random primes of rank mod p; a lower bound for the rational rank."""
    rng = rng or random.Random(0x5EED)
    primes = rng.sample(_PRIME_POOL, trials)
    return max(_kern.rank_mod_p(rows, p) for p in primes)


def exact_rank(M: SparseRationalMatrix, check: Optional[bool] = None) -> int:
    """Rank of ``M`` over Q.

    ``check`` forces (True) or suppresses (False) the modular cross-check;
    by default it runs on blocks with more than ``MODULAR_CHECK_THRESHOLD`` cells.
    """
    total = 0
    for rows, cols, ents in _block_entries(M):
        if len(rows) == 1 or len(cols) == 1:
            total += 1
            continue
        # eliminate along the shorter side
        mat = _integer_rows(rows, cols, ents, transpose=len(cols) > len(rows))
        r = _kern.bareiss_rank(mat)
        do_check = check if check is not None else len(rows) * len(cols) > MODULAR_CHECK_THRESHOLD
        if do_check:
            rm = modular_rank(mat)
            if rm != r:
                raise RankMismatchError(
                    f"fraction-free rank {r} != modular rank {rm} on a {len(rows)}x{len(cols)} block"
                )
        total += r
    return total


def python_exact_rank(M: SparseRationalMatrix) -> int:
    """Same as :func:`exact_rank` but always through the pure-Python kernel."""
    total = 0
    for rows, cols, ents in _block_entries(M):
        total += _kernels_py.bareiss_rank(_integer_rows(rows, cols, ents))
    return total


def rank_of_vectors(vectors: Iterable[Mapping[Hashable, object]]) -> int:
    """Rank of a family of sparse vectors keyed by arbitrary hashable coordinates."""
    index: Dict[Hashable, int] = {}
    cols = []
    for v in vectors:
        col = {}
        for k, x in v.items():
            if x:
                col[index.setdefault(k, len(index))] = x
        cols.append(col)
    return exact_rank(SparseRationalMatrix.from_columns(cols, len(index)))


class RowEchelon:
    """Incrementally built reduced row-echelon basis of a subspace.

    Vectors are dicts ``coordinate -> Fraction``.  Pivots are chosen by the
    ordering ``key`` on coordinates (largest first), so two echelon objects
    built from the same span give identical normal forms.
    """

    def __init__(self, key=None):
        self.key = key or (lambda k: k)
        self.rows: Dict[Hashable, Dict[Hashable, Fraction]] = {}

    def __len__(self):
        return len(self.rows)

    def _lead(self, v):
        return max(v, key=self.key)

    def reduce(self, v: Mapping[Hashable, object]) -> Dict[Hashable, Fraction]:
        """Normal form of ``v`` modulo the span."""
        w = {k: Fraction(x) for k, x in v.items() if x}
        if not self.rows:
            return w
        # pivot columns never appear in other rows (fully reduced), one pass suffices
        for k in [k for k in w if k in self.rows]:
            c = w.get(k)
            if not c:
                continue
            for kk, x in self.rows[k].items():
                nv = w.get(kk, 0) - c * x
                if nv:
                    w[kk] = nv
                else:
                    w.pop(kk, None)
        return w

    def add(self, v: Mapping[Hashable, object]) -> bool:
        """Insert ``v``; returns False if it was already in the span."""
        w = self.reduce(v)
        if not w:
            return False
        lead = self._lead(w)
        c = w[lead]
        w = {k: x / c for k, x in w.items()}
        for row in self.rows.values():
            f = row.get(lead)
            if f:
                for k, x in w.items():
                    nv = row.get(k, 0) - f * x
                    if nv:
                        row[k] = nv
                    else:
                        row.pop(k, None)
        self.rows[lead] = w
        return True

    def contains(self, v) -> bool:
        return not self.reduce(v)


def nullspace_dim(columns: Sequence[Mapping[Hashable, object]]) -> int:
    """Dimension of ``{x : sum_j x_j columns[j] = 0}``."""
    return len(columns) - rank_of_vectors(columns)


def nullspace_basis(columns: Sequence[Mapping[Hashable, object]]) -> List[Dict[int, Fraction]]:
    """A basis of the kernel of the linear map whose j-th column is ``columns[j]``."""
    # row-reduce the transpose view: equations are coordinates, unknowns are j
    eqs: Dict[Hashable, Dict[int, Fraction]] = {}
    for j, col in enumerate(columns):
        for k, x in col.items():
            if x:
                eqs.setdefault(k, {})[j] = Fraction(x)
    ech = RowEchelon(key=lambda j: -j)  # lowest unknown index becomes pivot
    for eq in eqs.values():
        ech.add(eq)
    n = len(columns)
    free = [j for j in range(n) if j not in ech.rows]
    basis = []
    for f in free:
        vec = {f: Fraction(1)}
        for piv, row in ech.rows.items():
            x = row.get(f)
            if x:
                vec[piv] = -x
        basis.append(vec)
    return basis


def _dense_fraction(A) -> List[List[Fraction]]:
    return [[Fraction(x) for x in row] for row in A]


def det(A) -> Fraction:
    """Determinant of a small dense square matrix over Q."""
    M = _dense_fraction(A)
    n = len(M)
    out = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            out = -out
        out *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            if f:
                for j in range(c, n):
                    M[r][j] -= f * M[c][j]
    return out


def inverse(A) -> List[List[Fraction]]:
    """Inverse of a small dense square matrix over Q (Gauss-Jordan)."""
    M = _dense_fraction(A)
    n = len(M)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def matvec(A, v) -> List[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in A]
