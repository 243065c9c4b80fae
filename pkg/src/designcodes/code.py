"""
Linear codes over prime fields GF(p).

Weight distributions are always computed by exhaustive enumeration of the
row space.  Binary codewords are packed into uint64 words and weighed with a
population count; other characteristics use dense digit vectors.
"""

from dataclasses import dataclass

import numpy as np

from .gf import FieldTable, field_new

DEFAULT_CODEWORD_BUDGET = 1 << 26


class BudgetExceeded(RuntimeError):
    """An exhaustive computation would exceed its configured budget."""


class CodeError(ValueError):
    pass


# -- linear algebra over GF(p) ----------------------------------------------

def row_reduce(mat, p):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = np.array(mat, dtype=np.int64) % p
    if mat.ndim != 2:
        raise CodeError("expected a 2-d matrix")
    nrows, ncols = mat.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(mat[r:, c])
        if len(nz) == 0:
            continue
        i = r + nz[0]
        if i != r:
            mat[[r, i]] = mat[[i, r]]
        if mat[r, c] != 1:
            mat[r] = mat[r] * pow(int(mat[r, c]), p - 2, p) % p
        others = np.flatnonzero(mat[:, c])
        others = others[others != r]
        if len(others):
            mat[others] = (mat[others] - np.outer(mat[others, c], mat[r])) % p
        pivots.append(c)
        r += 1
    return mat[:r], pivots


def null_space(mat, p):
    """Basis (as rows) of {x : mat @ x = 0}."""
    mat = np.asarray(mat, dtype=np.int64)
    ncols = mat.shape[1]
    reduced, pivots = row_reduce(mat, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for k, j in enumerate(free):
        basis[k, j] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-reduced[i, j]) % p
    return basis


# -- weight distributions ---------------------------------------------------

@dataclass(frozen=True)
class WeightDistribution:
    length: int
    counts: tuple
    q: int = 2

    def __post_init__(self):
        if len(self.counts) != self.length + 1:
            raise CodeError("need counts A_0..A_nu")
        if any(a < 0 for a in self.counts):
            raise CodeError("negative count")

    def __getitem__(self, i):
        if 0 <= i <= self.length:
            return self.counts[i]
        return 0

    @property
    def size(self):
        return sum(self.counts)

    def weights(self):
        """Nonzero weights that occur."""
        return [i for i, a in enumerate(self.counts) if a and i]

    def min_weight(self):
        w = self.weights()
        return w[0] if w else None

    def as_dict(self):
        return {i: a for i, a in enumerate(self.counts) if a}

    def enumerator(self):
        terms = []
        for i, a in enumerate(self.counts):
            if not a:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                terms.append(f"{'' if a == 1 else a}z^{i}")
        return " + ".join(terms)

    @classmethod
    def from_dict(cls, length, counts, q=2):
        return cls(length, tuple(int(counts.get(i, 0)) for i in range(length + 1)), q)

    def __str__(self):
        return self.enumerator()


# -- the code ---------------------------------------------------------------

class LinearCode:
    """A linear [nu, m] code over GF(p) stored as a reduced generator matrix."""

    def __init__(self, field, length, generator):
        self.field = field
        self.length = int(length)
        self.generator = generator
        self.generator.setflags(write=False)

    @classmethod
    def from_rows(cls, field, rows, length=None):
        if isinstance(field, int):
            field = field_new(field, 1)
        if not isinstance(field, FieldTable) or field.m != 1:
            raise CodeError("codes are supported over prime fields only")
        rows = [list(r) for r in rows]
        if not rows and length is None:
            raise CodeError("no generator rows")
        if rows:
            widths = {len(r) for r in rows}
            if len(widths) != 1:
                raise CodeError("ragged generator rows")
            length = widths.pop() if length is None else length
            if rows and len(rows[0]) != length:
                raise CodeError("row length disagrees with declared length")
            reduced, _ = row_reduce(np.array(rows, dtype=np.int64), field.p)
        else:
            reduced = np.zeros((0, length), dtype=np.int64)
        return cls(field, length, reduced)

    @classmethod
    def from_matrix(cls, field, mat):
        mat = np.asarray(mat, dtype=np.int64)
        if isinstance(field, int):
            field = field_new(field, 1)
        reduced, _ = row_reduce(mat, field.p) if len(mat) else (mat.reshape(0, mat.shape[1]), [])
        return cls(field, mat.shape[1], reduced)

    @property
    def q(self):
        return self.field.p

    @property
    def dimension(self):
        return self.generator.shape[0]

    @property
    def size(self):
        return self.q ** self.dimension

    def __repr__(self):
        return f"LinearCode([{self.length}, {self.dimension}] over GF({self.q}))"

    def same_space(self, other):
        return (
            self.q == other.q
            and self.length == other.length
            and np.array_equal(self.generator, other.generator)
        )

    def contains(self, word):
        word = np.asarray(word, dtype=np.int64) % self.q
        stacked = np.vstack([self.generator, word[None, :]])
        return len(row_reduce(stacked, self.q)[0]) == self.dimension

    # -- derived codes
    def dual(self):
        if self.dimension == 0:
            basis = np.eye(self.length, dtype=np.int64)
        else:
            basis = null_space(self.generator, self.q)
        return LinearCode.from_matrix(self.field, basis.reshape(-1, self.length))

    def _check_coords(self, coords):
        coords = sorted(set(int(c) for c in coords))
        if coords and not (0 <= coords[0] and coords[-1] < self.length):
            raise CodeError(f"coordinates outside 0..{self.length - 1}")
        return coords

    def shorten(self, coords):
        coords = self._check_coords(coords)
        keep = [j for j in range(self.length) if j not in set(coords)]
        if not coords:
            return self
        if self.dimension == 0:
            return LinearCode.from_matrix(self.field, np.zeros((0, len(keep)), dtype=np.int64))
        # messages u with u @ G[:, T] = 0
        combos = null_space(self.generator[:, coords].T, self.q)
        sub = combos @ self.generator % self.q
        return LinearCode.from_matrix(self.field, sub[:, keep].reshape(-1, len(keep)))

    def puncture(self, coords):
        coords = self._check_coords(coords)
        if not coords:
            return self
        keep = [j for j in range(self.length) if j not in set(coords)]
        return LinearCode.from_matrix(self.field, self.generator[:, keep])

    # -- enumeration
    def _check_budget(self, budget):
        budget = DEFAULT_CODEWORD_BUDGET if budget is None else budget
        if self.size > budget:
            raise BudgetExceeded(
                f"{self!r} has {self.q}^{self.dimension} codewords; budget is {budget}"
            )

    def packed_generator(self):
        """Binary generator rows packed little-endian into uint64 words."""
        if self.q != 2:
            raise CodeError("packing is for binary codes")
        nwords = max(1, -(-self.length // 64))
        bits = np.zeros((self.dimension, nwords * 64), dtype=np.uint8)
        bits[:, : self.length] = self.generator
        packed = np.packbits(bits, axis=1, bitorder="little")
        return packed.view("<u8").reshape(self.dimension, nwords).copy()

    def iter_codewords(self, budget=None, chunk_bits=14):
        """Yield (codeword block, weights).

        Binary blocks are packed uint64 words (rows x words); other fields
        give dense (rows x length) digit arrays.  Every codeword appears
        exactly once across the blocks, the zero word first.
        """
        self._check_budget(budget)
        k = self.dimension
        if self.q == 2:
            gen = self.packed_generator()
            lo_bits = min(k, chunk_bits)
            lo = np.zeros((1 << lo_bits, gen.shape[1]), dtype=np.uint64)
            for i in range(lo_bits):
                lo[1 << i: 2 << i] = lo[: 1 << i] ^ gen[i]
            hi_rows = gen[lo_bits:]
            hi = np.zeros(gen.shape[1], dtype=np.uint64)
            for j in range(1 << (k - lo_bits)):
                if j:
                    # Gray-code step flips one high row
                    hi = hi ^ hi_rows[(j & -j).bit_length() - 1]
                block = lo ^ hi
                yield block, np.bitwise_count(block).sum(axis=1, dtype=np.int64)
            return
        p = self.q
        per = max(1, (1 << 16) // max(1, self.length))
        total = p ** k
        weights = np.array([p ** i for i in range(k)], dtype=np.int64)
        for start in range(0, total, per):
            idx = np.arange(start, min(total, start + per), dtype=np.int64)
            msgs = (idx[:, None] // weights) % p
            words = msgs @ self.generator % p
            yield words, np.count_nonzero(words, axis=1)

    def weight_distribution(self, budget=None):
        counts = np.zeros(self.length + 1, dtype=np.int64)
        for _, w in self.iter_codewords(budget):
            counts += np.bincount(w, minlength=self.length + 1)
        return WeightDistribution(self.length, tuple(int(c) for c in counts), self.q)

    def codeword_matrix(self, budget=None):
        """All codewords as a dense (q^m x nu) uint8 array."""
        blocks = []
        for block, _ in self.iter_codewords(budget):
            if self.q == 2:
                block = unpack_words(block, self.length)
            blocks.append(block.astype(np.uint8))
        return np.vstack(blocks)

    def minimum_distance(self, budget=None):
        return self.weight_distribution(budget).min_weight()

    # -- file format
    def to_text(self):
        lines = [f"{self.q} {self.length} {self.dimension}"]
        lines += [" ".join(str(int(x)) for x in row) for row in self.generator]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines or len(lines[0]) != 3:
            raise CodeError("code file header must be 'q nu m'")
        q, nu, m = (int(x) for x in lines[0])
        rows = [[int(x) for x in ln] for ln in lines[1:]]
        if len(rows) != m:
            raise CodeError(f"header declares {m} rows, found {len(rows)}")
        if any(len(r) != nu for r in rows):
            raise CodeError("row length disagrees with header")
        return cls.from_rows(field_new(q, 1), rows, length=nu)


def unpack_words(block, length):
    """uint64 packed rows -> dense 0/1 rows of the given length."""
    raw = np.ascontiguousarray(block).view(np.uint8)
    bits = np.unpackbits(raw.reshape(len(block), -1), axis=1, bitorder="little")
    return bits[:, :length]


def weight_distribution(code, budget=None):
    return code.weight_distribution(budget)


def minimum_distance(code, budget=None):
    return code.minimum_distance(budget)


def dual(code):
    return code.dual()


def shorten(code, coords):
    return code.shorten(coords)


def puncture(code, coords):
    return code.puncture(coords)


def griesmer_lower_bound(m, d, q):
    """Smallest length an [n, m, d]_q code can have."""
    if m < 1 or d < 1:
        raise CodeError("need m >= 1 and d >= 1")
    return sum(-(-d // q ** i) for i in range(m))


def max_griesmer_d(nu, m, q):
    """Largest d whose Griesmer length bound fits in nu (0 if none)."""
    d = 0
    while griesmer_lower_bound(m, d + 1, q) <= nu:
        d += 1
    return d
