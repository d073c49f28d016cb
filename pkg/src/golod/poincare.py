"""Truncated Poincare series of k over R = S/a, the Golod bound series, and
the defect comparison.

The resolution of k over R is built step by step, but all linear algebra is
blocked by internal degree in standard-monomial coordinates.  The internal
degrees that can carry a minimal i-th syzygy are capped by i*sigma, where
sigma is the maximal slope j/(i'+1) over the nonzero graded Betti numbers
beta_{i',j} of S/a: the graded bound series (the Eagon resolution is graded)
dominates dim Tor_i^R(k,k)_j coefficientwise, so scanning up to the cap is a
certificate of completeness for each rank.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from math import comb

from .groebner import FreeVector
from .ideals import Ideal
from .linalg import Echelon, kernel_basis


class BudgetExceededError(RuntimeError):
    """Raised when a configured wall-clock budget runs out; carries partial data."""

    def __init__(self, message, last_completed_index=None, partial=None):
        super().__init__(message)
        self.last_completed_index = last_completed_index
        self.partial = partial


@dataclass
class PoincareTruncation:
    coefficients: list
    order: int
    ring_ideal: Ideal


@dataclass
class DefectReport:
    bound_coeffs: list
    actual: PoincareTruncation
    defect: list
    first_nonzero: int | None


class _StandardCoords:
    """Normal-form coordinates on standard monomials of S/a."""

    def __init__(self, a: Ideal):
        self.a = a
        self.ring = a.ring
        self._nf: dict = {}

    def nf(self, mono: tuple) -> dict:
        if mono not in self._nf:
            p = self.a.gb.normal_form(self.ring.monomial(mono))
            self._nf[mono] = dict(p.terms)
        return self._nf[mono]

    def std(self, q: int) -> list:
        return self.a.standard_monomials(q)


def _slope_bound(a: Ideal) -> float:
    """Maximal internal-degree slope allowed by the graded Serre bound."""
    if a.is_zero():
        return 1.0
    betti = a.resolution(a.ring.d).betti
    sigma = 1.0
    for (i, j), v in betti.entries.items():
        if i >= 1 and v:
            sigma = max(sigma, j / (i + 1))
    return sigma


class _ResidueFieldResolver:
    """Stepwise minimal R-free resolution of k with per-degree exact kernels."""

    def __init__(self, a: Ideal, budget_seconds=None):
        if a.is_unit():
            raise ValueError("unit ideal rejected")
        self.a = a
        self.ring = a.ring
        self.field = a.ring.field
        self.coords = _StandardCoords(a)
        self.sigma = _slope_bound(a)
        self.budget = budget_seconds
        self.t0 = time.monotonic()
        # current level data
        self.shifts = [0]
        self.columns: list | None = None  # columns of phi_i over the previous level
        self.level = 0
        self.done = False

    def _check_budget(self, i):
        if self.budget is not None and time.monotonic() - self.t0 > self.budget:
            raise BudgetExceededError(
                f"budget exhausted while computing b_{i}", last_completed_index=i - 1
            )

    def _labels(self, shifts, q):
        out = []
        for col, s in enumerate(shifts):
            for m in self.coords.std(q - s):
                out.append((col, m))
        return out

    def _image_vector(self, col_vec: FreeVector, m: tuple) -> dict:
        """Coordinates of phi(col)*m in the target degree block."""
        field = self.field
        out: dict = {}
        for (comp, mono), c in col_vec.terms.items():
            prod = tuple(x + y for x, y in zip(mono, m))
            for mm, cc in self.coords.nf(prod).items():
                lab = (comp, mm)
                v = field.add(out.get(lab, field.zero), field.mul(c, cc))
                if v == field.zero:
                    out.pop(lab, None)
                else:
                    out[lab] = v
        return out

    def _multiply_kernel_vector(self, vec: dict, var: int) -> dict:
        """x_var * vec, degree q-1 block -> degree q block of the same level."""
        field = self.field
        out: dict = {}
        for (col, m), c in vec.items():
            e = list(m)
            e[var] += 1
            for mm, cc in self.coords.nf(tuple(e)).items():
                lab = (col, mm)
                v = field.add(out.get(lab, field.zero), field.mul(c, cc))
                if v == field.zero:
                    out.pop(lab, None)
                else:
                    out[lab] = v
        return out

    def step(self) -> int:
        """Advance one homological degree; returns the next Betti number."""
        self.level += 1
        i = self.level
        self._check_budget(i)
        if self.done:
            return 0
        field = self.field
        qmax = math.ceil(self.sigma * i + 1e-9)
        new_gens: list = []
        new_shifts: list = []
        kernel_prev: list = []
        min_q = (min(self.shifts) if self.shifts else 0) + 1
        for q in range(min_q, qmax + 1):
            self._check_budget(i)
            labels = self._labels(self.shifts, q)
            if not labels:
                kernel_prev = []
                continue
            if self.columns is None:
                # kernel of F_0 = R -> k is the whole maximal ideal
                kernel_q = [{lab: field.one} for lab in labels]
            else:
                index = {}
                cols = []
                for lab in labels:
                    col, m = lab
                    cols.append(self._image_vector(self.columns[col], m))
                    index[lab] = len(cols) - 1
                combos = kernel_basis(field, cols) if cols else []
                kernel_q = [{labels[idx]: c for idx, c in combo.items()} for combo in combos]
            ech = Echelon(field)
            for z in kernel_prev:
                for var in range(self.ring.d):
                    ech.insert(self._multiply_kernel_vector(z, var))
            for z in kernel_q:
                piv, _ = ech.insert(z)
                if piv is not None:
                    new_gens.append(z)
                    new_shifts.append(q)
            kernel_prev = kernel_q
        if not new_gens:
            self.done = True
            self.columns = []
            self.shifts = []
            return 0
        rank_prev = len(self.shifts)
        self.columns = [
            FreeVector(self.ring, rank_prev, {lab: c for lab, c in g.items()}) for g in new_gens
        ]
        self.shifts = new_shifts
        return len(new_gens)



def resolve_residue_field(a: Ideal, N: int, budget_seconds=None) -> PoincareTruncation:
    """Coefficients b_0..b_N of the Poincare series of k over R = S/a."""
    if N < 0:
        raise ValueError("negative truncation order")
    resolver = _ResidueFieldResolver(a, budget_seconds)
    coeffs = [1]
    try:
        for i in range(1, N + 1):
            coeffs.append(resolver.step())
    except BudgetExceededError as e:
        e.partial = PoincareTruncation(coeffs, len(coeffs) - 1, a)
        raise
    return PoincareTruncation(coeffs, N, a)


def golod_bound_series(a: Ideal, N: int) -> list:
    """Coefficients of (1+t)^d / (1 - t*(P_R^S(t) - 1)) up to order N."""
    if a.is_unit():
        raise ValueError("unit ideal rejected")
    d = a.ring.d
    if a.is_zero():
        betti_totals = [1]
    else:
        betti_totals = a.resolution(d).betti.totals()
    # denominator 1 - sum_{i>=1} beta_i t^{i+1}
    inv = [1] + [0] * N
    for n in range(1, N + 1):
        acc = 0
        for i in range(1, len(betti_totals)):
            j = i + 1
            if j <= n:
                acc += betti_totals[i] * inv[n - j]
        inv[n] = acc
    return [sum(comb(d, k) * inv[n - k] for k in range(0, min(d, n) + 1)) for n in range(N + 1)]


def golod_defect(a: Ideal, N: int, stop_at_first_defect: bool = False,
                 budget_seconds=None) -> DefectReport:
    """Componentwise difference bound - actual; a positive entry refutes Golodness.

    With stop_at_first_defect the resolution of k stops at the first positive
    entry and the report is truncated there (enough for a refutation).
    """
    bound = golod_bound_series(a, N)
    resolver = _ResidueFieldResolver(a, budget_seconds)
    coeffs = [1]
    defect = [bound[0] - 1]
    first = None if defect[0] == 0 else 0
    for i in range(1, N + 1):
        try:
            b = resolver.step()
        except BudgetExceededError as e:
            e.partial = PoincareTruncation(coeffs, len(coeffs) - 1, a)
            raise
        coeffs.append(b)
        delta = bound[i] - b
        if delta < 0:
            raise RuntimeError(
                f"Serre inequality violated at index {i} (bound {bound[i]} < actual {b}); engine bug"
            )
        defect.append(delta)
        if delta > 0 and first is None:
            first = i
            if stop_at_first_defect:
                break
    n_have = len(coeffs) - 1
    return DefectReport(bound[: n_have + 1], PoincareTruncation(coeffs, n_have, a), defect, first)
