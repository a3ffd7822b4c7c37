"""Exhaustive existence search for codes with prescribed parameters.

Only systematic generators G = [I | P] are enumerated. Existence questions
for given (n, k, q, d, self-duality) are invariant under code equivalence,
and every code has an equivalent systematic form, so nothing is missed.

Rows of P are chosen by depth-first search, last generator row first, each
row running through candidate vectors in ascending lexicographic order.
The first witness is therefore deterministic. For self-dual targets a
partial assignment is pruned unless every chosen row r satisfies
r*r = -1 - 0 (the identity part contributes 1 to the self product) and all
chosen pairs are orthogonal; every row must also carry weight at least
d_min - 1. A completed assignment is accepted only after a full minimum
distance computation.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product

from .code import LinearCode
from .errors import EnumerationLimitError
from .field import GF


@dataclass(frozen=True)
class SearchSpec:
    n: int
    k: int
    q: int
    d_min: int
    require_self_dual: bool = True
    limit_bits: int = 24

    def __post_init__(self):
        if not 0 < self.k < self.n:
            raise ValueError("need 0 < k < n")
        if self.d_min < 1:
            raise ValueError("minimum distance target must be positive")


def _budget_ok(spec: SearchSpec) -> None:
    bits = spec.k * (spec.n - spec.k) * math.log2(spec.q)
    if bits > spec.limit_bits:
        raise EnumerationLimitError(
            f"search space is about 2^{bits:.1f} generators, "
            f"limit is 2^{spec.limit_bits}"
        )


def _row_candidates(spec: SearchSpec):
    f = GF.of(spec.q)
    need = spec.d_min - 1
    out = []
    for v in product(range(spec.q), repeat=spec.n - spec.k):
        if sum(1 for x in v if x) < need:
            continue
        if spec.require_self_dual and f.dot(v, v) != f.neg(1):
            continue
        out.append(v)
    return f, out


def _assemble(spec: SearchSpec, f: GF, chosen) -> LinearCode:
    # chosen[0] is the last generator row
    rows = []
    for i in range(spec.k):
        p = chosen[spec.k - 1 - i]
        rows.append(tuple(1 if j == i else 0 for j in range(spec.k)) + tuple(p))
    return LinearCode(f, rows)


def _accepts(spec: SearchSpec, f: GF, chosen) -> bool:
    code = _assemble(spec, f, chosen)
    if code.min_distance() < spec.d_min:
        return False
    return not spec.require_self_dual or code.is_self_dual()


def _extend(spec: SearchSpec, f: GF, cands, chosen):
    if len(chosen) == spec.k:
        return tuple(chosen) if _accepts(spec, f, chosen) else None
    for v in cands:
        if spec.require_self_dual and any(f.dot(v, u) != 0 for u in chosen):
            continue
        chosen.append(v)
        got = _extend(spec, f, cands, chosen)
        if got is not None:
            return got
        chosen.pop()
    return None


def _search_shard(args):
    spec, lo, hi = args
    f, cands = _row_candidates(spec)
    for idx in range(lo, hi):
        got = _extend(spec, f, cands, [cands[idx]])
        if got is not None:
            return idx, got
    return None


def exists_code(spec: SearchSpec, workers: int = 1):
    """First code meeting the spec in search order, or None."""
    if spec.require_self_dual and spec.n != 2 * spec.k:
        return None
    _budget_ok(spec)
    f, cands = _row_candidates(spec)
    if not cands:
        return None
    if workers <= 1 or len(cands) < 2:
        got = _extend(spec, f, cands, [])
        return None if got is None else _assemble(spec, f, got)

    workers = min(workers, len(cands))
    bounds = [len(cands) * i // workers for i in range(workers + 1)]
    jobs = [(spec, bounds[i], bounds[i + 1]) for i in range(workers)]
    best = None
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for hit in pool.map(_search_shard, jobs):
            if hit is not None and (best is None or hit[0] < best[0]):
                best = hit
    return None if best is None else _assemble(spec, f, best[1])


def iter_codes(spec: SearchSpec):
    """Yield every accepted systematic generator in search order."""
    if spec.require_self_dual and spec.n != 2 * spec.k:
        return
    _budget_ok(spec)
    f, cands = _row_candidates(spec)

    def rec(chosen):
        if len(chosen) == spec.k:
            if _accepts(spec, f, chosen):
                yield tuple(chosen)
            return
        for v in cands:
            if spec.require_self_dual and any(f.dot(v, u) != 0 for u in chosen):
                continue
            chosen.append(v)
            yield from rec(chosen)
            chosen.pop()

    for chosen in rec([]):
        yield _assemble(spec, f, chosen)
