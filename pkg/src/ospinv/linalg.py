"""Sparse exact linear algebra over Q(i).

Rows over Q are scaled to primitive integer vectors and eliminated
fraction-free (cross multiplication followed by content removal); rows with
a genuinely complex entry fall back to field arithmetic in Q(i).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd

from .scalar import Scalar, normalize

Vector = dict  # column -> scalar


def _is_rational(v: Vector) -> bool:
    return not any(isinstance(c, Scalar) for c in v.values())


def _primitive(v: Vector) -> Vector:
    """Scale a nonzero rational vector to coprime integers with a positive leading entry."""
    vals = [Fraction(c) for c in v.values()]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in vals), 1)
    ints = {k: int(Fraction(c) * den) for k, c in v.items()}
    g = reduce(gcd, ints.values(), 0)
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {k: c // g for k, c in ints.items()}


def _normalise(v: Vector) -> Vector:
    v = {k: c for k, c in v.items() if c}
    if not v:
        return v
    if _is_rational(v):
        return _primitive(v)
    lead = v[min(v)]
    return {k: normalize(Scalar.of(c) / lead) for k, c in v.items()}


def _combine(a, v: Vector, b, w: Vector) -> Vector:
    """a*v - b*w."""
    out = {k: a * c for k, c in v.items()}
    for k, c in w.items():
        out[k] = out.get(k, 0) - b * c
    return {k: c for k, c in out.items() if c}


class Echelon:
    """Incrementally maintained reduced row echelon form."""

    def __init__(self):
        self.rows: dict = {}  # pivot column -> row (pivot entry nonzero)

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Vector) -> Vector:
        v = {k: c for k, c in v.items() if c}
        for p in sorted(set(v) & set(self.rows)):
            if p not in v:
                continue
            row = self.rows[p]
            v = _combine(row[p], v, v[p], row)
        return v

    def _reduce_fully(self, v):
        # reduce until no pivot column remains (combinations can reintroduce none,
        # since stored rows are zero on other pivots)
        return self.reduce(v)

    def add(self, v: Vector) -> bool:
        """Insert ``v``; returns True when it enlarged the span."""
        r = self._reduce_fully(v)
        if not r:
            return False
        r = _normalise(r)
        p = min(r)
        for q, row in list(self.rows.items()):
            if p in row:
                self.rows[q] = _normalise(_combine(r[p], row, row[p], r))
        self.rows[p] = r
        return True

    def contains(self, v: Vector) -> bool:
        return not self.reduce(v)


class ExactMatrix:
    """Sparse rows x cols matrix with exact entries."""

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.nrows = rows
        self.ncols = cols
        self.row_data: dict[int, Vector] = {}
        for (r, c), v in (entries or {}).items():
            self.set(r, c, v)

    @classmethod
    def from_rows(cls, rows, cols: int | None = None) -> "ExactMatrix":
        rows = list(rows)
        if cols is None:
            cols = max((len(r) for r in rows), default=0)
        M = cls(len(rows), cols)
        for i, r in enumerate(rows):
            items = r.items() if isinstance(r, dict) else enumerate(r)
            for j, v in items:
                M.set(i, j, v)
        return M

    @classmethod
    def from_sparse_rows(cls, rows, cols: int) -> "ExactMatrix":
        M = cls(0, cols)
        for r in rows:
            r = {k: c for k, c in r.items() if c}
            if r:
                M.row_data[M.nrows] = r
            M.nrows += 1
        return M

    def set(self, r: int, c: int, v):
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError((r, c))
        if v:
            self.row_data.setdefault(r, {})[c] = normalize(v)
        elif r in self.row_data:
            self.row_data[r].pop(c, None)

    def get(self, r: int, c: int):
        return self.row_data.get(r, {}).get(c, 0)

    def apply(self, v: Vector) -> Vector:
        out = {}
        for r, row in self.row_data.items():
            s = sum((c * v[k] for k, c in row.items() if k in v), 0)
            if s:
                out[r] = s
        return out

    def echelon(self) -> Echelon:
        E = Echelon()
        for r in sorted(self.row_data):
            E.add(self.row_data[r])
        return E

    def rank(self) -> int:
        return self.echelon().rank

    def kernel_basis(self) -> list[Vector]:
        return kernel_basis(self)


def kernel_basis(M: ExactMatrix) -> list[Vector]:
    """Basis of {v : M v = 0}, each vector primitive and certified."""
    E = M.echelon()
    pivots = E.rows
    free = [c for c in range(M.ncols) if c not in pivots]
    basis = []
    for f in free:
        v: Vector = {f: 1}
        for p, row in pivots.items():
            b = row.get(f)
            if b:
                v[p] = normalize(-Scalar.of(b) / row[p]) if not _is_rational(row) \
                    else Fraction(-b) / Fraction(row[p])
        v = _normalise(v)
        if M.apply(v):
            raise ArithmeticError("kernel vector failed certification")
        basis.append(v)
    return basis


class Subspace:
    """Span of sparse vectors over hashable coordinates (e.g. monomial keys)."""

    def __init__(self, vectors=()):
        self.ech = Echelon()
        self.basis: list[Vector] = []
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return self.ech.rank

    def add(self, v: Vector) -> bool:
        if self.ech.add(v):
            self.basis.append({k: c for k, c in v.items() if c})
            return True
        return False

    def contains(self, v: Vector) -> bool:
        return self.ech.contains(v)

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim == other.dim and self.contains_space(other)

    __hash__ = None
