"""Exact sparse Gaussian elimination over Q or F_p.

Vectors are dicts mapping a hashable column label to a nonzero field
element.  `Echelon` keeps a row-reduced pivot set and supports incremental
insertion, residual reduction, and optional tracking of each pivot as a
combination of the inserted vectors (used to read off kernels and to express
vectors in a chosen spanning set).
"""

from __future__ import annotations


class Echelon:
    """Incrementally built reduced echelon basis of a span of sparse vectors."""

    def __init__(self, field, track=False):
        self.field = field
        self.track = track
        self.pivots: dict = {}  # pivot column -> row dict (pivot coeff 1)
        self.combos: dict = {}  # pivot column -> combination over inserted indices
        self.ninserted = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _axpy(self, target: dict, coeff, source: dict):
        field = self.field
        zero = field.zero
        for col, v in source.items():
            w = field.sub(target.get(col, zero), field.mul(coeff, v))
            if w == zero:
                target.pop(col, None)
            else:
                target[col] = w

    def reduce(self, vec: dict, combo: dict | None = None):
        """Residual of vec against the pivot rows (vec is not modified)."""
        field = self.field
        r = dict(vec)
        while True:
            hit = None
            for col in r:
                if col in self.pivots:
                    hit = col
                    break
            if hit is None:
                return r
            coeff = r[hit]
            self._axpy(r, coeff, self.pivots[hit])
            if combo is not None:
                self._axpy(combo, coeff, self.combos[hit])

    def insert(self, vec: dict):
        """Add vec to the span.

        Returns (pivot_column, combination) if the rank grew, else
        (None, combination); the combination expresses the reduced row in
        terms of inserted vectors (only when tracking).
        """
        idx = self.ninserted
        self.ninserted += 1
        combo = {idx: self.field.one} if self.track else None
        r = self.reduce(vec, combo)
        if not r:
            return None, combo
        # normalize on the smallest column label for determinism
        piv = min(r)
        c = r[piv]
        inv = self.field.inv(c)
        row = {col: self.field.mul(v, inv) for col, v in r.items()}
        if self.track:
            combo = {k: self.field.mul(v, inv) for k, v in combo.items()}
        # back-substitute into existing rows so the basis stays reduced
        for pcol, prow in list(self.pivots.items()):
            if piv in prow:
                coeff = prow[piv]
                self._axpy(prow, coeff, row)
                if self.track:
                    self._axpy(self.combos[pcol], coeff, combo)
        self.pivots[piv] = row
        if self.track:
            self.combos[piv] = combo
        return piv, combo

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def span_rank(field, vectors) -> int:
    ech = Echelon(field)
    for v in vectors:
        ech.insert(v)
    return ech.rank


def kernel_basis(field, columns: list) -> list:
    """Kernel of the linear map sending unit vector i to columns[i].

    Returns sparse combination dicts {i: coeff} spanning the kernel,
    in a deterministic order.
    """
    ech = Echelon(field, track=True)
    out = []
    for i, col in enumerate(columns):
        piv, combo = ech.insert(col)
        if piv is None:
            out.append(combo)
    return out


def intersect_dims(field, span_a, span_b) -> int:
    """dim(A cap B) = dim A + dim B - dim(A+B) for spans given by vectors."""
    ra = span_rank(field, span_a)
    rb = span_rank(field, span_b)
    rab = span_rank(field, list(span_a) + list(span_b))
    return ra + rb - rab
