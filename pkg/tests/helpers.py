"""Slow-path oracles, written from scratch so the fast implementations are
tested against independent arithmetic."""

from itertools import product

# standard irreducible moduli, low-to-high coefficients including the
# leading 1; hard-coded on purpose so the field module must agree with
# known tables rather than with itself
_MODULUS = {4: (1, 1, 1), 8: (1, 1, 0, 1), 9: (1, 0, 1)}


def _factor_prime_power(q):
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        if q % p == 0:
            m = 0
            t = q
            while t % p == 0:
                t //= p
                m += 1
            if t == 1:
                return p, m
            return None
    return None


def oracle_ops(q):
    """(add, mul) over the integer element encoding."""
    p, m = _factor_prime_power(q)
    if m == 1:
        return (lambda a, b: (a + b) % q), (lambda a, b: (a * b) % q)
    mod = _MODULUS[q]

    def digits(a):
        out = []
        for _ in range(m):
            out.append(a % p)
            a //= p
        return out

    def undigits(ds):
        val = 0
        for d in reversed(ds):
            val = val * p + d
        return val

    def add(a, b):
        return undigits([(x + y) % p for x, y in zip(digits(a), digits(b))])

    def mul(a, b):
        conv = [0] * (2 * m - 1)
        for i, x in enumerate(digits(a)):
            for j, y in enumerate(digits(b)):
                conv[i + j] = (conv[i + j] + x * y) % p
        for top in range(2 * m - 2, m - 1, -1):
            c = conv[top]
            if c:
                conv[top] = 0
                for i in range(m):
                    conv[top - m + i] = (conv[top - m + i] - c * mod[i]) % p
        return undigits(conv[:m])

    return add, mul


def oracle_codewords(q, rows):
    """All codewords, message digit i scaling row i, digit 0 fastest."""
    add, mul = oracle_ops(q)
    k, n = len(rows), len(rows[0])
    out = []
    for t in range(q**k):
        word = [0] * n
        tt = t
        for i in range(k):
            d = tt % q
            tt //= q
            if d:
                word = [add(w, mul(d, x)) for w, x in zip(word, rows[i])]
        out.append(tuple(word))
    return out


def weight(v):
    return sum(1 for x in v if x)


def oracle_weight_counts(q, rows):
    n = len(rows[0])
    counts = [0] * (n + 1)
    for w in oracle_codewords(q, rows):
        counts[weight(w)] += 1
    return tuple(counts)


def oracle_distance(codewords, v):
    return min(sum(1 for x, y in zip(c, v) if x != y) for c in codewords)


def oracle_bvector(codewords, v):
    """Count of codewords at each distance from v."""
    n = len(v)
    counts = [0] * (n + 1)
    for c in codewords:
        counts[sum(1 for x, y in zip(c, v) if x != y)] += 1
    return tuple(counts)


def oracle_distance_census(q, rows):
    """Count of ambient vectors at each distance from the code."""
    codewords = oracle_codewords(q, rows)
    n = len(rows[0])
    counts = {}
    for v in product(range(q), repeat=n):
        d = oracle_distance(codewords, v)
        counts[d] = counts.get(d, 0) + 1
    return tuple(counts.get(i, 0) for i in range(max(counts) + 1))


def oracle_design_lambda(q, vectors, t):
    """Covering count per weight-t pattern; None when not constant."""
    n = len(vectors[0])
    lams = set()
    positions = [i for i in range(n)]
    from itertools import combinations

    for supp in combinations(positions, t):
        for vals in product(range(1, q), repeat=t):
            lam = sum(
                1
                for v in vectors
                if all(v[i] == a for i, a in zip(supp, vals))
            )
            lams.add(lam)
            if len(lams) > 1:
                return None
    return lams.pop()


def random_linear_code(rng, q, n, k):
    """Random full-rank generator as a LinearCode; retries on dependence."""
    from crcodes.code import LinearCode
    from crcodes.field import GF

    f = GF.of(q)
    while True:
        rows = [[rng.randrange(q) for _ in range(n)] for _ in range(k)]
        try:
            return LinearCode(f, rows)
        except ValueError:
            continue
