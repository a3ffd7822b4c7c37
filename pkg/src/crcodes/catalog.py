"""Named self-dual code constructions, direct sums, and verification of
every entry against its expected parameters.

Embedded generator matrices are data, not trusted input: build() re-checks
length, dimension, minimum distance and self-duality by enumeration and
fails loudly on any mismatch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .code import LinearCode
from .coset import CRResult, IntersectionArray, build_coset_table, is_completely_regular
from .design import verify_cr_designs
from .field import GF
from .upws import beta_cr_closed_form, external_distance, solve_upws, sphere_packing_check

_EXT_HAMMING8 = (
    (1, 0, 0, 0, 0, 1, 1, 1),
    (0, 1, 0, 0, 1, 0, 1, 1),
    (0, 0, 1, 0, 1, 1, 0, 1),
    (0, 0, 0, 1, 1, 1, 1, 0),
)

# right half of [I | A]; A is symmetric with A*A^T = -I over GF(3)
_EXT_GOLAY12_A = (
    (0, 1, 1, 1, 1, 1),
    (1, 0, 1, 2, 2, 1),
    (1, 1, 0, 1, 2, 2),
    (1, 2, 1, 0, 1, 2),
    (1, 2, 2, 1, 0, 1),
    (1, 1, 2, 2, 1, 0),
)

_EXT_GOLAY24_B = (
    (1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1),
    (1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1),
    (0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1),
    (1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1),
    (1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1),
    (1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1),
    (0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1),
    (0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1),
    (0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1),
    (1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1),
    (0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0),
)


def sd2_code(q: int) -> LinearCode:
    """The self-dual [2, 1, 2]_q code (1 a) with a*a = -1; exists only when
    -1 is a square."""
    f = GF.of(q)
    alpha = f.sqrt_of_minus_one()
    if alpha is None:
        raise ValueError(f"-1 is not a square in GF({q}); no self-dual [2,1,2] code")
    return LinearCode(f, [(1, alpha)])


def mds4_code(q: int) -> LinearCode:
    """The self-dual [4, 2, 3]_q MDS code over GF(2^r), r > 1."""
    f = GF.of(q)
    if f.p != 2 or f.m < 2:
        raise ValueError(f"construction needs q = 2^r with r > 1, not q = {q}")
    alpha = 2  # smallest element outside {0, 1}
    beta = f.neg(f.add(alpha, 1))
    return LinearCode(f, [(1, 1, 1, 1), (0, 1, alpha, beta)])


def ham4_3_code() -> LinearCode:
    return LinearCode(GF.of(3), [(1, 1, 1, 0), (0, 1, 2, 1)])


def ext_hamming8_code() -> LinearCode:
    return LinearCode(GF.of(2), _EXT_HAMMING8)


def ext_golay12_code() -> LinearCode:
    rows = [
        tuple(1 if j == i else 0 for j in range(6)) + _EXT_GOLAY12_A[i]
        for i in range(6)
    ]
    return LinearCode(GF.of(3), rows)


def ext_golay24_code() -> LinearCode:
    rows = [
        tuple(1 if j == i else 0 for j in range(12)) + _EXT_GOLAY24_B[i]
        for i in range(12)
    ]
    return LinearCode(GF.of(2), rows)


def direct_sum(codes) -> LinearCode:
    """Block-diagonal combination; fields must match."""
    codes = list(codes)
    f = codes[0].field
    if any(c.field != f for c in codes):
        raise ValueError("direct sum requires a common field")
    total = sum(c.n for c in codes)
    rows = []
    offset = 0
    for c in codes:
        for r in c.generator.row_lists():
            rows.append([0] * offset + r + [0] * (total - offset - c.n))
        offset += c.n
    return LinearCode(f, rows)


def direct_sum_ia(base: IntersectionArray, j: int) -> IntersectionArray:
    """Intersection array of a direct sum of j copies of a rho = 1 code."""
    if base.rho != 1:
        raise ValueError("base array must have covering radius 1")
    if j < 1:
        raise ValueError("need at least one copy")
    b0, c1 = base.b[0], base.c[0]
    nq1 = j * (base.a[0] + b0)
    b = tuple(b0 * (j - l) for l in range(j))
    c = tuple(c1 * (l + 1) for l in range(j))
    a = tuple(
        nq1 - (b[l] if l < j else 0) - (c[l - 1] if l > 0 else 0) for l in range(j + 1)
    )
    return IntersectionArray(j, b, c, a)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    q: int
    n: int
    k: int
    d: int
    rho: int
    weights: tuple[int, ...]
    ia: str | None  # None: no expected array, the computed one is reported
    antipodal: bool
    copies: int
    base: str


ENTRIES = (
    CatalogEntry("sd2_5", 5, 2, 1, 2, 1, (2,), "{8;2}", True, 1, "sd2"),
    CatalogEntry("sd2_5x2", 5, 4, 2, 2, 2, (2, 4), "{16,8;2,4}", True, 2, "sd2"),
    CatalogEntry("sd2_5x3", 5, 6, 3, 2, 3, (2, 4, 6), "{24,16,8;2,4,6}", True, 3, "sd2"),
    CatalogEntry("ham4_3", 3, 4, 2, 3, 1, (3,), "{8;1}", False, 1, "ham4_3"),
    CatalogEntry("ham4_3x2", 3, 8, 4, 3, 2, (3, 6), "{16,8;1,2}", False, 2, "ham4_3"),
    CatalogEntry("ham4_3x3", 3, 12, 6, 3, 3, (3, 6, 9), "{24,16,8;1,2,3}", False, 3, "ham4_3"),
    CatalogEntry("mds4_4", 4, 4, 2, 3, 2, (3, 4), "{12,3;1,12}", True, 1, "mds4"),
    CatalogEntry("mds4_8", 8, 4, 2, 3, 2, (3, 4), "{28,15;1,12}", True, 1, "mds4"),
    CatalogEntry("mds4_16", 16, 4, 2, 3, 2, (3, 4), "{60,39;1,12}", True, 1, "mds4"),
    # c_2 = 8: every neighbor of a deep hole has odd weight and all odd
    # cosets contain weight-1 vectors (8 * b_1 = 7 * c_2 forces it too)
    CatalogEntry("ext_ham8_2", 2, 8, 4, 4, 2, (4, 8), "{8,7;1,8}", True, 1, "ext_ham8"),
    CatalogEntry(
        "ext_golay12_3", 3, 12, 6, 6, 3, (6, 9, 12), "{24,22,20;1,2,12}", True, 1, "ext_golay12"
    ),
    CatalogEntry(
        "ext_golay24_2", 2, 24, 12, 8, 4, (8, 12, 16, 24), None, True, 1, "ext_golay24"
    ),
)

_BY_NAME = {e.name: e for e in ENTRIES}

_BASE_BUILDERS = {
    "sd2": sd2_code,
    "mds4": mds4_code,
    "ham4_3": lambda q: ham4_3_code(),
    "ext_ham8": lambda q: ext_hamming8_code(),
    "ext_golay12": lambda q: ext_golay12_code(),
    "ext_golay24": lambda q: ext_golay24_code(),
}


def entry(name: str) -> CatalogEntry:
    if name not in _BY_NAME:
        raise KeyError(f"unknown catalog entry {name!r}")
    return _BY_NAME[name]


def build(name: str) -> LinearCode:
    """Construct a catalog code and re-verify its headline parameters."""
    e = entry(name)
    base = _BASE_BUILDERS[e.base](e.q)
    code = direct_sum([base] * e.copies) if e.copies > 1 else base
    if (code.n, code.k) != (e.n, e.k):
        raise RuntimeError(f"{name}: built [{code.n},{code.k}], expected [{e.n},{e.k}]")
    if not code.is_self_dual():
        raise RuntimeError(f"{name}: embedded generator is not self-dual")
    if code.min_distance() != e.d:
        raise RuntimeError(f"{name}: minimum distance {code.min_distance()} != {e.d}")
    return code


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    expected: str
    actual: str


@dataclass(frozen=True)
class EntryReport:
    name: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)


@dataclass(frozen=True)
class CatalogReport:
    entries: tuple[EntryReport, ...]

    @property
    def all_passed(self) -> bool:
        return all(e.passed for e in self.entries)


def _check(name: str, expected, actual) -> CheckResult:
    return CheckResult(name, expected == actual, str(expected), str(actual))


def verify_entry(name: str) -> EntryReport:
    e = entry(name)
    checks: list[CheckResult] = []
    code = build(name)
    wd = code.weight_distribution()
    checks.append(_check("parameters", (e.n, e.k, e.d), (code.n, code.k, code.min_distance())))
    checks.append(_check("self_dual", True, code.is_self_dual()))
    checks.append(_check("weights", e.weights, wd.nonzero_weights()))
    checks.append(_check("antipodal", e.antipodal, code.is_antipodal()))

    table = build_coset_table(code)
    checks.append(_check("covering_radius", e.rho, table.rho))
    cr = is_completely_regular(code, table)
    checks.append(_check("completely_regular", True, cr.is_cr))
    if cr.is_cr:
        if e.ia is not None:
            checks.append(_check("intersection_array", e.ia, str(cr.ia)))
        else:
            checks.append(CheckResult("intersection_array", True, "derived", str(cr.ia)))
        checks.append(_check("external_distance", table.rho, external_distance(code)))

        coeffs = solve_upws(table.distinct_profile_rows())
        checks.append(_check("packing_solvable", True, coeffs is not None))
        if coeffs is not None:
            inv = 1 / coeffs.betas[-1]
            natural = inv.denominator == 1 and inv >= 1
            checks.append(_check("beta_rho_inverse_natural", True, natural))
            checks.append(_check("beta_rho_inverse", cr.profile.p(table.rho, table.rho), inv))
            checks.append(_check("sphere_packing", True, sphere_packing_check(code, coeffs)))
            try:
                closed = beta_cr_closed_form(
                    code.n, code.k, e.q, e.d, table.rho, cr.profile
                )
                checks.append(_check("closed_form", coeffs.betas, closed))
            except ValueError:
                checks.append(CheckResult("closed_form", True, "no covered case", "refused"))

        designs = verify_cr_designs(code, cr)
        checks.append(_check("designs", True, designs.all_verified))

        if e.copies > 1:
            base_cr = is_completely_regular(_BASE_BUILDERS[e.base](e.q))
            predicted = direct_sum_ia(base_cr.ia, e.copies)
            checks.append(_check("direct_sum_array", str(predicted), str(cr.ia)))
    return EntryReport(e.name, tuple(checks))


def verify_catalog(names=None) -> CatalogReport:
    """Run the full analyzer pipeline on the requested entries (default all)
    and compare against expected values."""
    selected = list(names) if names is not None else [e.name for e in ENTRIES]
    return CatalogReport(tuple(verify_entry(n) for n in selected))
