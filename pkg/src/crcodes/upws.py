"""Uniform-packing analysis: exact packing coefficients, the generalized
sphere-packing identity, closed forms for the regular cases, and external
distance.

All arithmetic is over exact rationals; integrality statements about the
inverse coefficients are meaningless with floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .code import LinearCode, macwilliams_transform
from .coset import DistanceProfile
from .errors import ZeroDenominatorError


@dataclass(frozen=True)
class PackingCoefficients:
    """Solution of the packing system; unique is False when free variables
    (set to zero here) remain."""

    betas: tuple[Fraction, ...]
    unique: bool

    def __iter__(self):
        return iter(self.betas)


def solve_upws(rows) -> PackingCoefficients | None:
    """Solve sum_i beta_i * B_{x,i} = 1 over the given distinct profile rows.

    rows: iterable of equal-length integer sequences (B_{x,0}, ..., B_{x,rho}),
    one per distinct coset behavior.  Returns None when the system is
    inconsistent (the code is not uniformly packed).
    """
    aug = [[Fraction(x) for x in row] + [Fraction(1)] for row in rows]
    if not aug:
        raise ValueError("no profile rows")
    m = len(aug[0]) - 1
    pivots: list[int] = []
    r = 0
    for c in range(m):
        pr = next((i for i in range(r, len(aug)) if aug[i][c]), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        scale = aug[r][c]
        aug[r] = [x / scale for x in aug[r]]
        for i in range(len(aug)):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == len(aug):
            break
    for i in range(r, len(aug)):
        if aug[i][m]:
            return None
    betas = [Fraction(0)] * m
    for i, c in enumerate(pivots):
        betas[c] = aug[i][m]
    return PackingCoefficients(tuple(betas), unique=len(pivots) == m)


def sphere_packing_check(code: LinearCode, coeffs: PackingCoefficients) -> bool:
    """|C| must equal q^n over the beta-weighted ball volume, exactly."""
    q, n = code.field.q, code.n
    total = sum(
        b * (q - 1) ** i * math.comb(n, i) for i, b in enumerate(coeffs.betas)
    )
    if total == 0:
        return False
    return Fraction(q**n) / total == code.size


def external_distance(code: LinearCode) -> int:
    """Number of distinct nonzero weights of the dual code."""
    n, k, q = code.n, code.k, code.field.q
    if k <= n - k:
        dual_wd = macwilliams_transform(code.weight_distribution(), n, k, q)
    else:
        dual_wd = code.dual_code().weight_distribution()
    return len(dual_wd.nonzero_weights())


def beta_cr_closed_form(
    n: int, k: int, q: int, d: int, rho: int, profile: DistanceProfile
) -> tuple[Fraction, ...]:
    """Packing coefficients of a completely regular code in closed form.

    Covers d >= 2*rho + 1 (perfect), d = 2*rho, d = 2*rho - 1 and
    d = 2*rho - 2; the required p-values are read from the computed
    distance profile.  Raises ValueError for any other (d, rho) shape.
    """
    target = Fraction(q ** (n - k))

    def vol(i: int) -> Fraction:
        return Fraction((q - 1) ** i * math.comb(n, i))

    if d >= 2 * rho + 1:
        return tuple(Fraction(1) for _ in range(rho + 1))
    if d == 2 * rho:
        num = target - sum(vol(i) for i in range(rho))
        return tuple([Fraction(1)] * rho + [num / vol(rho)])
    if d == 2 * rho - 1:
        p_up = profile.p(rho - 1, rho)
        num = target - sum(vol(i) for i in range(rho))
        den = vol(rho) - p_up * vol(rho - 1)
        if den == 0:
            raise ZeroDenominatorError("closed form denominator vanished")
        beta_rho = num / den
        beta_prev = 1 - beta_rho * p_up
        return tuple([Fraction(1)] * (rho - 1) + [beta_prev, beta_rho])
    if d == 2 * rho - 2 and rho >= 2:
        p_diag = profile.p(rho - 1, rho - 1)
        p_up1 = profile.p(rho - 1, rho)
        p_up2 = profile.p(rho - 2, rho)
        num = target - sum(vol(i) for i in range(rho - 1)) - vol(rho - 1) / p_diag
        den = vol(rho) - Fraction(p_up1, p_diag) * vol(rho - 1) - p_up2 * vol(rho - 2)
        if den == 0:
            raise ZeroDenominatorError("closed form denominator vanished")
        beta_rho = num / den
        beta_m2 = 1 - beta_rho * p_up2
        beta_m1 = (1 - beta_rho * p_up1) / Fraction(p_diag)
        return tuple([Fraction(1)] * (rho - 2) + [beta_m2, beta_m1, beta_rho])
    raise ValueError(f"no closed form covers d={d} with rho={rho}")
