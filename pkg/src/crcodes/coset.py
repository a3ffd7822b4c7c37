"""Coset-leader machinery: covering radius, distance to the code, coset
weight distributions, the two complete-regularity criteria, and
intersection arrays.

Syndromes are indexed by the integer sum s_i * q^i over the digits of
H*v (H = kernel basis of the generator).  Coset representatives are
canonical: the minimum-weight member of the coset that comes first in
base-q counter order (key sum v_i * q^i).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import EnumerationLimitError
from .field import GF
from .linalg import MatrixGF, kernel
from .code import ENUM_LIMIT, MATERIALIZE_LIMIT, LinearCode

LEVEL_LIMIT = 1 << 24
_BLOCK = 1 << 16


@dataclass(frozen=True)
class IntersectionArray:
    """Neighbor counts of a completely regular code: {b_0..b_{rho-1}; c_1..c_rho}."""

    rho: int
    b: tuple[int, ...]
    c: tuple[int, ...]
    a: tuple[int, ...]

    def __str__(self) -> str:
        return "{%s;%s}" % (",".join(map(str, self.b)), ",".join(map(str, self.c)))


@dataclass(frozen=True)
class DistanceProfile:
    """Common codeword-distance histogram per leader weight; rows[l][t] = B_{x,t}."""

    rows: tuple[tuple[int, ...], ...]

    def p(self, l: int, t: int) -> int:
        return self.rows[l][t]


@dataclass(frozen=True)
class CRResult:
    """Outcome of the complete-regularity test, with a witness on failure."""

    is_cr: bool
    ia: IntersectionArray | None
    profile: DistanceProfile | None
    witness: tuple[int, int] | None

    def __bool__(self) -> bool:
        return self.is_cr


def _syndrome_indices(field: GF, h_rows: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    q = field.q
    idx = np.zeros(np.asarray(vectors).shape[:-1], dtype=np.int64)
    pw = 1
    for i in range(h_rows.shape[0]):
        idx = idx + field.vdot(vectors, h_rows[i]) * pw
        pw *= q
    return idx


class CosetTable:
    """Leader weight and canonical representative for every syndrome."""

    def __init__(self, code: LinearCode, parity_check: MatrixGF,
                 leader_weight: np.ndarray, representative: np.ndarray):
        self.code = code
        self.parity_check = parity_check
        self.leader_weight = leader_weight
        self.representative = representative
        self.rho = int(leader_weight.max())
        self._h_rows = np.array(parity_check.row_lists(), dtype=np.int64).reshape(
            parity_check.rows, parity_check.cols
        )
        self._btable: np.ndarray | None = None

    @property
    def num_cosets(self) -> int:
        return len(self.leader_weight)

    def syndrome_indices(self, vectors: np.ndarray) -> np.ndarray:
        """Syndrome index of each row of a (L, n) array."""
        return _syndrome_indices(self.code.field, self._h_rows, np.asarray(vectors, dtype=np.int64))

    def distance_to_code(self, v) -> int:
        v = np.asarray(v, dtype=np.int64)
        if v.shape != (self.code.n,):
            raise ValueError(f"vector length {v.shape} does not match n = {self.code.n}")
        if (v < 0).any() or (v >= self.code.field.q).any():
            raise ValueError("vector entries out of field range")
        return int(self.leader_weight[self.syndrome_indices(v.reshape(1, -1))[0]])

    def subconstituent_sizes(self) -> tuple[int, ...]:
        """|C(i)| for i = 0..rho; the sizes sum to q^n."""
        per_coset = np.bincount(self.leader_weight, minlength=self.rho + 1)
        return tuple(int(c) * self.code.size for c in per_coset)

    def weight_table(self) -> np.ndarray:
        """Per-coset histogram of codeword distances: B[s, t] = |{c : d(rep_s, c) = t}|."""
        if self._btable is None:
            self._btable = _coset_weight_table(self)
            self._btable.setflags(write=False)
        return self._btable

    def distinct_profile_rows(self) -> tuple[tuple[int, ...], ...]:
        """Distinct truncated rows (B_{x,0..rho}) over all cosets, sorted."""
        trunc = np.unique(self.weight_table()[:, : self.rho + 1], axis=0)
        return tuple(tuple(int(x) for x in row) for row in trunc)


def _weight_level(q: int, n: int, w: int) -> np.ndarray:
    """All weight-w vectors of GF(q)^n, grouped by support."""
    if w == 0:
        return np.zeros((1, n), dtype=np.int64)
    per_support = (q - 1) ** w
    total = math.comb(n, w) * per_support
    if total > LEVEL_LIMIT:
        raise EnumerationLimitError(f"weight level {w} has {total} vectors, above {LEVEL_LIMIT}")
    vals = np.array(list(itertools.product(range(1, q), repeat=w)), dtype=np.int64)
    out = np.zeros((total, n), dtype=np.int64)
    r = 0
    for supp in itertools.combinations(range(n), w):
        out[r : r + per_support, list(supp)] = vals
        r += per_support
    return out


def build_coset_table(code: LinearCode) -> CosetTable:
    """Weight-BFS over the ambient space: enumerate vectors of weight 0, 1, 2,
    ... and record, per syndrome, the first (canonical) vector reaching it."""
    f, q, n = code.field, code.field.q, code.n
    num = q ** (n - code.k)
    if num > ENUM_LIMIT:
        raise EnumerationLimitError(f"q^(n-k) = {num} cosets exceeds limit {ENUM_LIMIT}")
    parity = kernel(code.generator)
    h_rows = np.array(parity.row_lists(), dtype=np.int64).reshape(parity.rows, parity.cols)
    leader = np.full(num, -1, dtype=np.int64)
    reps = np.zeros((num, n), dtype=np.int64)
    assigned = 0
    for w in range(n + 1):
        level = _weight_level(q, n, w)
        order = np.lexsort(tuple(level[:, i] for i in range(n)))
        level = level[order]
        idx = _syndrome_indices(f, h_rows, level)
        uniq, first = np.unique(idx, return_index=True)
        fresh = leader[uniq] < 0
        leader[uniq[fresh]] = w
        reps[uniq[fresh]] = level[first[fresh]]
        assigned += int(fresh.sum())
        if assigned == num:
            break
    if assigned != num:
        raise RuntimeError("coset table incomplete")  # unreachable: syndrome map is onto
    table = CosetTable(code, parity, leader, reps)
    _spot_check_distances(table)
    return table


def _spot_check_distances(table: CosetTable, samples: int = 8) -> None:
    """Syndrome-based distances must match brute-force minima on a few vectors."""
    code = table.code
    if code.size * code.n > MATERIALIZE_LIMIT:
        return
    cw = code.codeword_matrix()
    rng = np.random.default_rng(0)
    for _ in range(samples):
        v = rng.integers(0, code.field.q, size=code.n)
        brute = int(np.count_nonzero(code.field.vadd(cw, code.field.vneg(v)), axis=1).min())
        if table.distance_to_code(v) != brute:
            raise RuntimeError("coset table disagrees with brute-force distance")


def _coset_weight_table(table: CosetTable) -> np.ndarray:
    code = table.code
    f, n = code.field, code.n
    num, size = table.num_cosets, code.size
    btable = np.zeros((num, n + 1), dtype=np.int64)
    if num <= size and size * n <= MATERIALIZE_LIMIT:
        cw = code.codeword_matrix()
        for j in range(num):
            w = np.count_nonzero(f.vadd(cw, table.representative[j]), axis=1)
            btable[j] = np.bincount(w, minlength=n + 1)
    else:
        rows = np.arange(num)
        for t0 in range(0, size, _BLOCK):
            block = code.message_block(t0, min(t0 + _BLOCK, size))
            for c in block:
                w = np.count_nonzero(f.vadd(table.representative, c), axis=1)
                btable[rows, w] += 1
    return btable


def _syndrome_digit_matrix(q: int, r: int, num: int) -> np.ndarray:
    idx = np.arange(num, dtype=np.int64)
    return np.stack([(idx // q**i) % q for i in range(r)], axis=1)


def _neighbor_counts(table: CosetTable) -> tuple[np.ndarray, np.ndarray]:
    """Per coset, counts of weight-1 perturbations moving one level down/up."""
    code = table.code
    f, q, n = code.field, code.field.q, code.n
    num = table.num_cosets
    r = table.parity_check.rows
    sdig = _syndrome_digit_matrix(q, r, num)
    powers = q ** np.arange(r, dtype=np.int64)
    lw = table.leader_weight
    down = np.zeros(num, dtype=np.int64)
    up = np.zeros(num, dtype=np.int64)
    for i in range(n):
        col = table._h_rows[:, i]
        for a in range(1, q):
            delta = f.vmul(col, np.int64(a))
            tidx = (f.vadd(sdig, delta) * powers).sum(axis=1)
            lt = lw[tidx]
            down += lt == lw - 1
            up += lt == lw + 1
    return down, up


def _first_disagreement(values: np.ndarray, group: np.ndarray) -> tuple[int, int] | None:
    """Two indices in the same group whose value rows differ, or None."""
    values = values.reshape(len(values), -1)
    for g in np.unique(group):
        members = np.nonzero(group == g)[0]
        base = values[members[0]]
        diff = (values[members] != base).any(axis=1)
        if diff.any():
            return int(members[0]), int(members[np.argmax(diff)])
    return None


def is_completely_regular(code: LinearCode, table: CosetTable | None = None) -> CRResult:
    """Run the neighbor-count criterion and the distance-distribution
    criterion; they must agree.  Returns the intersection array and the
    per-level distance profile on success, a witness pair of syndromes on
    failure."""
    if code.size > ENUM_LIMIT:
        raise EnumerationLimitError(f"q^k = {code.size} exceeds enumeration limit {ENUM_LIMIT}")
    if table is None:
        table = build_coset_table(code)
    lw = table.leader_weight
    down, up = _neighbor_counts(table)
    neighbor_witness = _first_disagreement(np.stack([down, up], axis=1), lw)
    delsarte_witness = _first_disagreement(table.weight_table(), lw)
    if (neighbor_witness is None) != (delsarte_witness is None):
        raise RuntimeError("complete-regularity criteria disagree")  # internal check
    if delsarte_witness is not None:
        return CRResult(False, None, None, delsarte_witness)
    rho = table.rho
    btable = table.weight_table()
    firsts = [int(np.nonzero(lw == l)[0][0]) for l in range(rho + 1)]
    b = tuple(int(up[firsts[l]]) for l in range(rho))
    c = tuple(int(down[firsts[l]]) for l in range(1, rho + 1))
    nq1 = code.n * (code.field.q - 1)
    a = tuple(
        nq1 - (b[l] if l < rho else 0) - (c[l - 1] if l > 0 else 0) for l in range(rho + 1)
    )
    ia = IntersectionArray(rho, b, c, a)
    profile = DistanceProfile(
        tuple(tuple(int(x) for x in btable[firsts[l]]) for l in range(rho + 1))
    )
    return CRResult(True, ia, profile, None)
