"""Slow, independent reference implementations used as test oracles.

Nothing here imports the package's arithmetic; everything is plain Python.
"""

from itertools import combinations, product


def poly_mul_mod(a, b, modulus_low, p):
    """Multiply two coefficient lists (lowest degree first) modulo a monic polynomial."""
    m = len(modulus_low) - 1
    prod = [0] * (len(a) + len(b))
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, m - 1, -1):
        c = prod[deg]
        if c:
            for k in range(m + 1):
                prod[deg - m + k] = (prod[deg - m + k] - c * modulus_low[k]) % p
    return (prod + [0] * m)[:m]


def code_to_poly(code, p, m):
    out = []
    for _ in range(m):
        out.append(code % p)
        code //= p
    return out


def poly_to_code(poly, p):
    code = 0
    for c in reversed(poly):
        code = code * p + c
    return code


class SlowField:
    """GF(p^m) by schoolbook polynomial arithmetic."""

    def __init__(self, p, m, modulus_high):
        self.p, self.m = p, m
        self.low = list(reversed(modulus_high))

    def mul(self, a, b):
        pa = code_to_poly(a, self.p, self.m)
        pb = code_to_poly(b, self.p, self.m)
        return poly_to_code(poly_mul_mod(pa, pb, self.low, self.p), self.p)

    def add(self, a, b):
        pa = code_to_poly(a, self.p, self.m)
        pb = code_to_poly(b, self.p, self.m)
        return poly_to_code([(x + y) % self.p for x, y in zip(pa, pb)], self.p)

    def pow(self, a, e):
        result = 1
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def trace(self, a, degree=1):
        acc = 0
        for i in range(self.m // degree):
            acc = self.add(acc, self.pow(a, self.p ** (degree * i)))
        return acc


def naive_weight_distribution(rows, q):
    length = len(rows[0])
    counts = [0] * (length + 1)
    seen = set()
    for coeffs in product(range(q), repeat=len(rows)):
        word = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(length))
        if word in seen:
            continue
        seen.add(word)
        counts[sum(1 for x in word if x)] += 1
    return counts


def naive_codewords(rows, q):
    length = len(rows[0])
    words = set()
    for coeffs in product(range(q), repeat=len(rows)):
        words.add(tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % q for j in range(length)))
    return words


def naive_dual_words(rows, q):
    length = len(rows[0])
    return {
        v for v in product(range(q), repeat=length)
        if all(sum(x * y for x, y in zip(v, r)) % q == 0 for r in rows)
    }


def naive_t_design_lambda(nu, blocks, t):
    """blocks: list of (block tuple, multiplicity)."""
    values = set()
    for sub in combinations(range(nu), t):
        s = set(sub)
        values.add(sum(m for b, m in blocks if s <= set(b)))
        if len(values) > 1:
            return None
    return values.pop() if values else None


def stirling2_recurrence(t, j):
    table = [[0] * (t + 1) for _ in range(t + 1)]
    table[0][0] = 1
    for n in range(1, t + 1):
        for k in range(1, n + 1):
            table[n][k] = k * table[n - 1][k] + table[n - 1][k - 1]
    return table[t][j]


def naive_walsh(n, table, lam, mu, big, small):
    """sum_x (-1)^(Tr_small(lam F(x)) + Tr_big(mu x)) with SlowFields."""
    total = 0
    for x in range(1 << n):
        bit = small.trace(small.mul(lam, table[x])) ^ big.trace(big.mul(mu, x))
        total += -1 if bit else 1
    return total


def naive_delta_table(n, table):
    size = 1 << n
    out = {}
    for a in range(1, size):
        for x in range(size):
            b = table[x] ^ table[x ^ a]
            out[(a, b)] = out.get((a, b), 0) + 1
    return out
