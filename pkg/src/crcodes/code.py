"""Linear codes over GF(q): enumeration, weight distributions, duals, and
the structural predicates used by the classification analyzers.

Codewords are enumerated in message-counter order: message number t in
[0, q^k) has base-q digits d_0, d_1, ... (d_0 least significant) and maps to
the codeword sum d_i * row_i over the RREF generator rows.  Every streaming
and materialized enumeration in the package follows this order.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import EnumerationLimitError
from .field import GF
from .linalg import MatrixGF, gram, kernel, rref

ENUM_LIMIT = 1 << 24
MATERIALIZE_LIMIT = 1 << 24  # cap on rows*cols of any cached codeword matrix
PAIR_LIMIT = 1 << 14  # cap on codeword count for quadratic pair scans
MAX_LENGTH = 64
_BLOCK = 1 << 16

_POP16 = np.array([bin(i).count("1") for i in range(1 << 16)], dtype=np.uint8)


def popcount64(a: np.ndarray) -> np.ndarray:
    """Per-element popcount of a uint64 array."""
    a = np.asarray(a, dtype=np.uint64)
    return (
        _POP16[(a & np.uint64(0xFFFF)).astype(np.int64)].astype(np.int64)
        + _POP16[((a >> np.uint64(16)) & np.uint64(0xFFFF)).astype(np.int64)]
        + _POP16[((a >> np.uint64(32)) & np.uint64(0xFFFF)).astype(np.int64)]
        + _POP16[((a >> np.uint64(48)) & np.uint64(0xFFFF)).astype(np.int64)]
    ).astype(np.int64)


@dataclass(frozen=True)
class WeightDistribution:
    """Counts A_0..A_n of codewords per Hamming weight."""

    counts: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def nonzero_weights(self) -> tuple[int, ...]:
        return tuple(w for w in range(1, self.n + 1) if self.counts[w])

    def min_weight(self) -> int:
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        raise ValueError("no nonzero codeword")


@dataclass(frozen=True)
class StructuralChecks:
    """Support and weight predicates; None marks a check that does not apply."""

    support_covers: bool
    unit_intersection_free: bool | None
    weights_divisible: bool | None


class LinearCode:
    """An [n, k] linear code over GF(q), normalized to its RREF generator."""

    def __init__(self, field: GF, rows):
        mat = MatrixGF.from_rows(field, rows)
        if mat.rows == 0 or mat.cols == 0:
            raise ValueError("empty generator")
        if mat.cols > MAX_LENGTH:
            raise ValueError(f"length {mat.cols} exceeds the supported maximum {MAX_LENGTH}")
        red, rank, _ = rref(mat)
        if rank != mat.rows:
            raise ValueError("generator rows are linearly dependent")
        self.field = field
        self.n = mat.cols
        self.k = rank
        self.generator = red
        self._gen_rows = np.array(red.row_lists(), dtype=np.int64)
        self._wd: WeightDistribution | None = None
        self._dual: LinearCode | None = None
        self._matrix: np.ndarray | None = None

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}]_{self.field.q})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearCode)
            and other.field == self.field
            and other.generator == self.generator
        )

    def __hash__(self) -> int:
        return hash((self.field, self.generator))

    # -- enumeration

    def message_block(self, t0: int, t1: int) -> np.ndarray:
        """Codewords for message counters t0 <= t < t1 as a (t1-t0, n) array."""
        f, q = self.field, self.field.q
        ts = np.arange(t0, t1, dtype=np.int64)
        cw = np.zeros((t1 - t0, self.n), dtype=np.int64)
        for i in range(self.k):
            d = (ts // q**i) % q
            cw = f.vadd(cw, f.vmul(d.reshape(-1, 1), self._gen_rows[i].reshape(1, -1)))
        return cw

    def codeword_matrix(self) -> np.ndarray:
        """All q^k codewords in counter order; cached.  Guarded by size."""
        if self._matrix is None:
            if self.size * self.n > MATERIALIZE_LIMIT:
                raise EnumerationLimitError(
                    f"codeword matrix of {self} exceeds {MATERIALIZE_LIMIT} entries"
                )
            self._matrix = self.message_block(0, self.size)
            self._matrix.setflags(write=False)
        return self._matrix

    # -- weight structure

    def weight_distribution(self, workers: int = 1) -> WeightDistribution:
        if self._wd is not None:
            return self._wd
        total = self.size
        if total > ENUM_LIMIT:
            raise EnumerationLimitError(f"q^k = {total} exceeds enumeration limit {ENUM_LIMIT}")
        workers = max(1, min(workers, total))
        rows = tuple(tuple(r) for r in self.generator.row_lists())
        if workers == 1:
            counts = _weight_shard((self.field.q, rows, self.n, 0, total))
        else:
            step = -(-total // workers)
            shards = [
                (self.field.q, rows, self.n, t0, min(t0 + step, total))
                for t0 in range(0, total, step)
            ]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                counts = sum(pool.map(_weight_shard, shards))
        self._wd = WeightDistribution(tuple(int(c) for c in counts))
        return self._wd

    def min_distance(self) -> int:
        return self.weight_distribution().min_weight()

    def is_antipodal(self) -> bool:
        """True iff the code contains a codeword of full weight n."""
        return self.weight_distribution().counts[self.n] > 0

    # -- duality

    def dual_code(self) -> "LinearCode":
        if self._dual is None:
            if self.k == self.n:
                raise ValueError("dual of the full space is zero-dimensional")
            basis = kernel(self.generator)
            dual = LinearCode(self.field, basis.row_lists())
            dual._dual = self
            self._dual = dual
        return self._dual

    def is_self_dual(self) -> bool:
        return self.n == 2 * self.k and gram(self.generator).is_zero()

    def support_masks(self) -> np.ndarray:
        """Support of every codeword as a uint64 bitmask, counter order."""
        cw = self.codeword_matrix()
        powers = (np.uint64(1) << np.arange(self.n, dtype=np.uint64))
        return ((cw != 0).astype(np.uint64) * powers).sum(axis=1, dtype=np.uint64)

    def structural_checks(self) -> StructuralChecks:
        """Predicates on supports and weights used to rule out code shapes.

        (a) supports of minimum-weight codewords jointly cover all n
        coordinates; (b) for self-dual codes, no two distinct codewords have
        supports meeting in exactly one coordinate; (c) for self-dual codes
        over GF(2) or GF(3), all weights divisible by 2 or 3 respectively.
        The pair scan in (b) is quadratic and separately guarded.
        """
        wd = self.weight_distribution()
        d = wd.min_weight()
        cw = self.codeword_matrix()
        weights = np.count_nonzero(cw, axis=1)
        masks = self.support_masks()
        union = np.uint64(0)
        for m in masks[weights == d]:
            union |= m
        covers = union == np.uint64((1 << self.n) - 1)

        unit_free: bool | None = None
        divisible: bool | None = None
        if self.is_self_dual():
            if self.size > PAIR_LIMIT:
                raise EnumerationLimitError(
                    f"pair scan over {self.size} codewords exceeds limit {PAIR_LIMIT}"
                )
            unit_free = True
            for j in range(len(masks)):
                sizes = popcount64(masks & masks[j])
                sizes[j] = 0
                if (sizes == 1).any():
                    unit_free = False
                    break
            if self.field.q == 2:
                divisible = not any(wd.counts[w] for w in range(1, self.n + 1) if w % 2)
            elif self.field.q == 3:
                divisible = not any(wd.counts[w] for w in range(1, self.n + 1) if w % 3)
        return StructuralChecks(bool(covers), unit_free, divisible)


def _weight_shard(args) -> np.ndarray:
    q, rows, n, t0, t1 = args
    code = LinearCode(GF.of(q), rows)
    counts = np.zeros(n + 1, dtype=np.int64)
    for b0 in range(t0, t1, _BLOCK):
        block = code.message_block(b0, min(b0 + _BLOCK, t1))
        w = np.count_nonzero(block, axis=1)
        counts += np.bincount(w, minlength=n + 1)
    return counts


def krawtchouk(n: int, q: int, j: int, w: int) -> int:
    """Value K_j(w) of the degree-j Krawtchouk polynomial for GF(q)^n."""
    return sum(
        (-1) ** s * (q - 1) ** (j - s) * math.comb(w, s) * math.comb(n - w, j - s)
        for s in range(j + 1)
    )


def macwilliams_transform(wd: WeightDistribution, n: int, k: int, q: int) -> WeightDistribution:
    """Dual weight distribution from a primal one, exactly over the integers."""
    if len(wd.counts) != n + 1:
        raise ValueError("distribution length does not match n")
    if wd.total != q**k:
        raise ValueError(f"inconsistent distribution: total {wd.total} != q^k = {q**k}")
    out = []
    for j in range(n + 1):
        acc = sum(wd.counts[w] * krawtchouk(n, q, j, w) for w in range(n + 1))
        b, rem = divmod(acc, q**k)
        if rem or b < 0:
            raise ValueError(f"inconsistent distribution: B_{j} = {acc}/{q**k}")
        out.append(b)
    return WeightDistribution(tuple(out))
