"""q-ary t-design verification over codeword weight classes.

A vector x covers a vector y when x agrees with y on every coordinate
where y is nonzero.  A collection of weight-m vectors is a t-(n, m, L)
design when every weight-t vector is covered by exactly L of them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .code import LinearCode
from .coset import CRResult, is_completely_regular
from .errors import EnumerationLimitError, NotCompletelyRegularError

DESIGN_LIMIT = 1 << 22


@dataclass(frozen=True)
class DesignParams:
    t: int
    n: int
    m: int
    lam: int
    q: int


@dataclass(frozen=True)
class DesignCheck:
    """One verified (or refuted) design over a weight class."""

    weight: int
    t: int
    lam: int | None

    @property
    def verified(self) -> bool:
        return self.lam is not None


@dataclass(frozen=True)
class DesignReport:
    e: int
    checks: tuple[DesignCheck, ...]
    all_verified: bool


def design_lambda(q: int, n: int, vectors, t: int) -> int | None:
    """Common cover count of weight-t vectors, or None if not constant.

    vectors: (M, n) array-like of equal-weight vectors over GF(q).
    """
    vs = np.asarray(vectors, dtype=np.int64).reshape(-1, n)
    weights = np.count_nonzero(vs, axis=1)
    if len(vs) == 0:
        raise ValueError("empty vector set")
    m = int(weights[0])
    if not (weights == m).all():
        raise ValueError("vectors have mixed weights")
    if t > m:
        raise ValueError(f"t = {t} exceeds the block weight {m}")
    if t == 0:
        return len(vs)
    work = math.comb(n, t) * (q - 1) ** t
    if work > DESIGN_LIMIT:
        raise EnumerationLimitError(f"{work} weight-{t} vectors exceed limit {DESIGN_LIMIT}")
    vals = np.array(list(itertools.product(range(1, q), repeat=t)), dtype=np.int64)
    lam: int | None = None
    for supp in itertools.combinations(range(n), t):
        sub = vs[:, list(supp)]
        counts = (sub[:, None, :] == vals[None, :, :]).all(axis=2).sum(axis=0)
        if lam is None:
            lam = int(counts[0])
        if not (counts == lam).all():
            return None
    return lam


def lambda_i(params: DesignParams, i: int) -> Fraction:
    """Derived index of the induced i-design of a t-design.

    The denominator binomial uses the block weight m; validated against
    direct counting wherever a design is verified.
    """
    if not 0 <= i <= params.t:
        raise ValueError(f"i = {i} outside 0..t = {params.t}")
    t, n, m, q = params.t, params.n, params.m, params.q
    return (
        Fraction(params.lam)
        * Fraction(math.comb(n - i, t - i), math.comb(m - i, t - i))
        * (q - 1) ** (t - i)
    )


def verify_cr_designs(code: LinearCode, cr: CRResult | None = None) -> DesignReport:
    """Check the design structure of every nonzero weight class of a
    completely regular code: each must be an e-design, and an (e+1)-design
    when d = 2e + 2."""
    if cr is None:
        cr = is_completely_regular(code)
    if not cr.is_cr:
        raise NotCompletelyRegularError(f"{code} is not completely regular")
    q, n = code.field.q, code.n
    wd = code.weight_distribution()
    d = wd.min_weight()
    e = (d - 1) // 2
    levels = [e] + ([e + 1] if d == 2 * e + 2 else [])
    cw = code.codeword_matrix()
    weights = np.count_nonzero(cw, axis=1)
    checks = []
    for w in wd.nonzero_weights():
        block = cw[weights == w]
        for t in levels:
            checks.append(DesignCheck(w, t, design_lambda(q, n, block, t)))
    return DesignReport(e, tuple(checks), all(c.verified for c in checks))
