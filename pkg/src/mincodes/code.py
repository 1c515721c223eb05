"""Linear codes over GF(2), GF(3), GF(4): parsing, enumeration, transforms.

A code is represented by its generator matrix exactly as given (no silent
standardization); `LinearCode.standard_form()` row-reduces on demand.  The
enumerative operations (weight enumerator, minimum distance) use packed
64-bit words with population counts for q=2 and byte-per-symbol numpy blocks
for q=3,4, so dimensions up to the enumeration budget (q^k <= 2^26 by
default) stay fast.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import gf

#: Default cap on q^k for enumerative operations.  Override per call or via
#: the MINCODES_MAX_CODEWORDS environment variable.
DEFAULT_MAX_CODEWORDS = 1 << 26

_CHUNK_ELEMS = 1 << 22  # soft cap on elements per numpy work block


class ParseError(ValueError):
    """Malformed matrix text; carries 1-based row/column when known."""

    def __init__(self, message: str, row: int | None = None, col: int | None = None):
        loc = ""
        if row is not None:
            loc = f" (row {row}" + (f", column {col}" if col is not None else "") + ")"
        super().__init__(message + loc)
        self.row = row
        self.col = col


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed the configured codeword budget."""


def max_codeword_budget(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("MINCODES_MAX_CODEWORDS")
    return int(env) if env else DEFAULT_MAX_CODEWORDS


def _check_budget(q: int, k: int, max_codewords: int | None) -> None:
    limit = max_codeword_budget(max_codewords)
    if q**k > limit:
        raise BudgetExceededError(
            f"enumerating q^k = {q}^{k} = {q**k} codewords exceeds the budget "
            f"of {limit}; raise max_codewords to force"
        )


@dataclass(frozen=True)
class Codeword:
    """One codeword with its weight and support precomputed."""

    symbols: tuple[int, ...]
    weight: int
    support: tuple[int, ...]

    @classmethod
    def from_symbols(cls, symbols: Sequence[int]) -> "Codeword":
        sym = tuple(int(s) for s in symbols)
        support = tuple(i for i, s in enumerate(sym) if s)
        return cls(sym, len(support), support)


class LinearCode:
    """An [n,k]_q code given by a full-rank k x n generator matrix.

    The generator is stored read-only and exactly as supplied; use
    `standard_form()` for the reduced row echelon generator.
    """

    __slots__ = ("_generator", "q", "k", "n")

    def __init__(self, generator, q: int):
        if q not in gf.SUPPORTED_FIELDS:
            raise ValueError(f"unsupported field size q={q}")
        mat = np.array(generator, dtype=np.uint8)
        if mat.ndim != 2 or mat.size == 0:
            raise ValueError("generator must be a non-empty 2-d matrix")
        if mat.min() < 0 or mat.max() >= q:
            raise ValueError(f"generator contains symbols outside GF({q})")
        k, n = mat.shape
        if k > n:
            raise ValueError(f"more rows ({k}) than columns ({n})")
        if gf.rank(mat, q) != k:
            raise ValueError(f"generator rows are dependent (rank < {k})")
        mat.flags.writeable = False
        self._generator = mat
        self.q = q
        self.k = k
        self.n = n

    @property
    def generator(self) -> np.ndarray:
        return self._generator

    def standard_form(self) -> "LinearCode":
        """The same code generated by the reduced row echelon basis."""
        rref, _ = gf.row_reduce(self._generator, self.q)
        return LinearCode(rref, self.q)

    def contains(self, symbols: Sequence[int]) -> bool:
        """Membership test for a length-n word."""
        word = np.asarray(symbols, dtype=np.uint8)
        if word.shape != (self.n,):
            return False
        stacked = np.vstack([self._generator, word])
        return gf.rank(stacked, self.q) == self.k

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.q == other.q
            and np.array_equal(self._generator, other._generator)
        )

    def __hash__(self) -> int:
        return hash((self.q, self._generator.tobytes()))

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k}, q={self.q})"


@dataclass(frozen=True)
class WeightEnumerator:
    """Map weight -> codeword count for an [n,k]_q code (weight 0 included)."""

    counts: dict[int, int]
    n: int
    k: int
    q: int

    def __post_init__(self):
        clean = {int(w): int(c) for w, c in self.counts.items() if c}
        object.__setattr__(self, "counts", clean)
        if clean.get(0) != 1:
            raise ValueError("weight enumerator must count the zero word once")
        if any(w < 0 or w > self.n for w in clean):
            raise ValueError("weight outside 0..n")
        total = sum(clean.values())
        if total != self.q**self.k:
            raise ValueError(f"counts sum to {total}, expected {self.q}^{self.k}")

    @property
    def min_weight(self) -> int:
        """Smallest nonzero weight (the minimum distance)."""
        return min(w for w in self.counts if w > 0)

    @property
    def max_weight(self) -> int:
        return max(self.counts)

    @property
    def divisibility(self) -> int:
        """Largest integer dividing every nonzero codeword weight."""
        return math.gcd(*[w for w in self.counts if w > 0])

    def as_polynomial(self) -> str:
        terms = []
        for w in sorted(self.counts):
            c = self.counts[w]
            if w == 0:
                terms.append(str(c))
            else:
                terms.append(f"{'' if c == 1 else c}x^{w}")
        return "+".join(terms)

    def to_dict(self) -> dict[str, int]:
        return {str(w): self.counts[w] for w in sorted(self.counts)}

    @classmethod
    def from_polynomial(cls, text: str, n: int, k: int, q: int) -> "WeightEnumerator":
        """Parse '1+30x^6+15x^8' style strings."""
        counts: dict[int, int] = {}
        for term in text.replace(" ", "").split("+"):
            if "x" in term:
                coeff, _, exp = term.partition("x")
                w = int(exp.lstrip("^")) if exp else 1
                counts[w] = counts.get(w, 0) + (int(coeff) if coeff else 1)
            else:
                counts[0] = counts.get(0, 0) + int(term)
        return cls(counts, n, k, q)


# ---------------------------------------------------------------------------
# Matrix text format
# ---------------------------------------------------------------------------

def parse_code(text: str, q: int, allow_rank_deficient: bool = False) -> LinearCode:
    """Parse generator-matrix text into a LinearCode.

    Format: one row per line, single-digit symbols; spaces inside rows and
    blank lines are ignored; '#' starts a comment line; a trailing backslash
    continues the row on the next line.  Rank-deficient input is rejected
    unless allow_rank_deficient is set, in which case the code of the
    row-reduced basis (smaller k) is returned.
    """
    if q not in gf.SUPPORTED_FIELDS:
        raise ValueError(f"unsupported field size q={q}")
    rows: list[str] = []
    pending = ""
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            continue
        if line.endswith("\\"):
            pending += line[:-1]
            continue
        merged = pending + line
        pending = ""
        if not merged:
            continue
        rows.append(merged)
    if pending:
        rows.append(pending)
    if not rows:
        raise ParseError("empty matrix text")

    parsed: list[list[int]] = []
    width = None
    for ri, row in enumerate(rows, start=1):
        symbols: list[int] = []
        col = 0
        for ch in row:
            if ch.isspace():
                continue
            col += 1
            if not ch.isdigit():
                raise ParseError(f"invalid character {ch!r}", row=ri, col=col)
            s = int(ch)
            if s >= q:
                raise ParseError(f"symbol {s} not in GF({q})", row=ri, col=col)
            symbols.append(s)
        if width is None:
            width = len(symbols)
        elif len(symbols) != width:
            raise ParseError(
                f"row has {len(symbols)} symbols, expected {width}", row=ri
            )
        parsed.append(symbols)

    mat = np.array(parsed, dtype=np.uint8)
    r = gf.rank(mat, q)
    if r < mat.shape[0]:
        if not allow_rank_deficient:
            raise ParseError(
                f"matrix has rank {r} but {mat.shape[0]} rows; "
                "pass allow_rank_deficient to row-reduce"
            )
        mat, _ = gf.row_reduce(mat, q)
        mat = mat.astype(np.uint8)
    return LinearCode(mat, q)


def format_matrix(code: LinearCode) -> str:
    """Generator matrix as parseable text, one row per line."""
    return "\n".join("".join(str(int(s)) for s in row) for row in code.generator)


# ---------------------------------------------------------------------------
# Packed-word internals (q = 2)
# ---------------------------------------------------------------------------

def pack_row(symbols: Sequence[int]) -> int:
    """Pack a 0/1 vector into an int, bit i = coordinate i."""
    v = 0
    for i, s in enumerate(symbols):
        if s:
            v |= 1 << i
    return v


def packed_rows(code: LinearCode) -> np.ndarray:
    """Generator rows as (k, W) uint64 words, W = ceil(n/64)."""
    W = (code.n + 63) // 64
    out = np.zeros((code.k, W), dtype=np.uint64)
    for i in range(code.k):
        v = pack_row(code.generator[i])
        for w in range(W):
            out[i, w] = (v >> (64 * w)) & 0xFFFFFFFFFFFFFFFF
    return out


def _xor_span(rows: np.ndarray) -> np.ndarray:
    """All 2^m XOR combinations of the given (m, W) rows, shape (2^m, W)."""
    out = np.zeros((1, rows.shape[1]), dtype=np.uint64)
    for r in rows:
        out = np.concatenate([out, out ^ r])
    return out


def _weight_counts_q2(code: LinearCode) -> np.ndarray:
    """Exact weight distribution (length n+1) of a binary code."""
    rows = packed_rows(code)
    k, W = rows.shape
    k2 = min(k, 18)
    lows = _xor_span(rows[k - k2 :])
    highs = _xor_span(rows[: k - k2])
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for h in highs:
        w = np.bitwise_count(lows ^ h).sum(axis=1, dtype=np.int64)
        counts += np.bincount(w, minlength=code.n + 1)
    return counts


# ---------------------------------------------------------------------------
# Byte-per-symbol internals (q = 3, 4)
# ---------------------------------------------------------------------------

def _scalar_row_multiples(row: np.ndarray, q: int) -> list[np.ndarray]:
    return [gf.gf_mul(s, row, q).astype(np.uint8) for s in range(q)]


def _affine_span(rows: np.ndarray, q: int, n: int) -> np.ndarray:
    """All q^m combinations sum(s_i * rows[i]) as a (q^m, n) uint8 block."""
    add = np.bitwise_xor if q in (2, 4) else (lambda a, b: (a + b) % 3)
    block = np.zeros((1, n), dtype=np.uint8)
    for row in rows:
        multiples = _scalar_row_multiples(np.asarray(row), q)
        block = np.concatenate(
            [add(block, m[None, :]).astype(np.uint8) for m in multiples]
        )
    return block


def projective_codeword_blocks(
    code: LinearCode, chunk_elems: int = _CHUNK_ELEMS
) -> Iterator[np.ndarray]:
    """Yield one codeword per scalar class as (m, n) uint8 blocks.

    Classes are represented by messages whose first nonzero symbol is 1;
    scalar multiples of a codeword share weight and support, so these
    (q^k - 1)/(q - 1) representatives carry all weight/support data.
    """
    from itertools import product

    G = code.generator
    q, k, n = code.q, code.k, code.n
    add = np.bitwise_xor if q in (2, 4) else (lambda a, b: (a + b) % 3)
    for pivot in range(k):
        base = G[pivot].astype(np.uint8)
        tail = G[pivot + 1 :]
        m = len(tail)
        inner = m
        while inner > 0 and q**inner * n > chunk_elems:
            inner -= 1
        outer_rows = tail[: m - inner]
        inner_block = _affine_span(tail[m - inner :], q, n)
        for outer_msg in product(range(q), repeat=m - inner):
            prefix = base
            for s, row in zip(outer_msg, outer_rows):
                if s:
                    prefix = add(prefix, gf.gf_mul(s, np.asarray(row), q)).astype(np.uint8)
            yield add(inner_block, prefix[None, :]).astype(np.uint8)


def _weight_counts_q3q4(code: LinearCode) -> np.ndarray:
    counts = np.zeros(code.n + 1, dtype=np.int64)
    counts[0] = 1
    for block in projective_codeword_blocks(code):
        w = np.count_nonzero(block, axis=1)
        counts += (code.q - 1) * np.bincount(w, minlength=code.n + 1)
    return counts


# ---------------------------------------------------------------------------
# Public enumerative operations
# ---------------------------------------------------------------------------

def codewords(code: LinearCode, max_codewords: int | None = None) -> Iterator[Codeword]:
    """Yield all q^k codewords once, in lexicographic message order.

    The message (m_1, ..., m_k) ranges over GF(q)^k with m_1 most
    significant and symbol order 0 < 1 < ... < q-1; the first codeword is
    the zero word.
    """
    _check_budget(code.q, code.k, max_codewords)
    q, k, n = code.q, code.k, code.n
    G = code.generator
    add = np.bitwise_xor if q in (2, 4) else (lambda a, b: (a + b) % 3)
    multiples = [_scalar_row_multiples(G[i], q) for i in range(k)]

    def emit(depth: int, prefix: np.ndarray) -> Iterator[Codeword]:
        if depth == k:
            yield Codeword.from_symbols(prefix)
            return
        for s in range(q):
            nxt = add(prefix, multiples[depth][s]).astype(np.uint8)
            yield from emit(depth + 1, nxt)

    yield from emit(0, np.zeros(n, dtype=np.uint8))


def weight_enumerator(
    code: LinearCode, max_codewords: int | None = None
) -> WeightEnumerator:
    """Exact weight distribution of the code."""
    _check_budget(code.q, code.k, max_codewords)
    if code.q == 2:
        counts = _weight_counts_q2(code)
    else:
        counts = _weight_counts_q3q4(code)
    return WeightEnumerator(
        {w: int(c) for w, c in enumerate(counts) if c}, code.n, code.k, code.q
    )


def min_distance(code: LinearCode, max_codewords: int | None = None) -> int:
    """Minimum nonzero codeword weight."""
    return weight_enumerator(code, max_codewords).min_weight


# ---------------------------------------------------------------------------
# Elementary transforms
# ---------------------------------------------------------------------------

def _as_symbols(word) -> np.ndarray:
    if isinstance(word, Codeword):
        return np.array(word.symbols, dtype=np.uint8)
    return np.asarray(word, dtype=np.uint8)


def residual_code(code: LinearCode, word) -> LinearCode:
    """Restriction of the code to the coordinates outside supp(word).

    The word must be a nonzero codeword without full support; the result is
    row-reduced to its actual (possibly smaller) dimension.
    """
    c = _as_symbols(word)
    if c.shape != (code.n,):
        raise ValueError(f"word length {c.shape} does not match n={code.n}")
    if not c.any():
        raise ValueError("residual code needs a nonzero codeword")
    if not code.contains(c):
        raise ValueError("word is not a codeword")
    keep = np.flatnonzero(c == 0)
    if keep.size == 0:
        raise ValueError("codeword has full support; residual is empty")
    restricted = code.generator[:, keep]
    basis, _ = gf.row_reduce(restricted, code.q)
    if basis.shape[0] == 0:
        raise ValueError("residual code is the zero code")
    return LinearCode(basis.astype(np.uint8), code.q)


def puncture(code: LinearCode, position: int) -> LinearCode:
    """Delete one column; the remaining matrix must keep rank k."""
    if not 0 <= position < code.n:
        raise ValueError(f"position {position} outside 0..{code.n - 1}")
    mat = np.delete(code.generator, position, axis=1)
    if gf.rank(mat, code.q) != code.k:
        raise ValueError(f"puncturing at position {position} drops the rank below {code.k}")
    return LinearCode(mat, code.q)


def parity_extend(code: LinearCode) -> LinearCode:
    """Append the column that makes every row (hence codeword) even-weight."""
    if code.q != 2:
        raise ValueError("parity extension is defined for binary codes only")
    parity = code.generator.sum(axis=1) % 2
    mat = np.hstack([code.generator, parity[:, None].astype(np.uint8)])
    return LinearCode(mat, 2)


def replicate(code: LinearCode, t: int) -> LinearCode:
    """Repeat every column t times (weights scale by t)."""
    if t < 1:
        raise ValueError("replication factor must be >= 1")
    return LinearCode(np.repeat(code.generator, t, axis=1), code.q)


def dual_code(code: LinearCode) -> LinearCode:
    """The [n, n-k]_q dual (null space of the generator)."""
    if code.k == code.n:
        raise ValueError("dual of a full [n,n] code is the zero code")
    basis = gf.nullspace(code.generator, code.q)
    return LinearCode(basis.astype(np.uint8), code.q)


# ---------------------------------------------------------------------------
# MacWilliams transform
# ---------------------------------------------------------------------------

def _krawtchouk_columns(n: int, q: int, needed: list[int]) -> dict[int, list[int]]:
    """Krawtchouk values K_j(i) for j = 0..n at each needed i.

    Filled by the generating-function recurrence
    K_j(i) = K_j(i-1) - K_{j-1}(i-1) - (q-1) K_{j-1}(i),
    which costs O(n * max(needed)) exact integer operations.
    """
    top = max(needed)
    prev = [math.comb(n, j) * (q - 1) ** j for j in range(n + 1)]  # i = 0
    out = {0: prev} if 0 in needed else {}
    col = prev
    for i in range(1, top + 1):
        nxt = [1] * (n + 1)
        for j in range(1, n + 1):
            nxt[j] = col[j] - col[j - 1] - (q - 1) * nxt[j - 1]
        col = nxt
        if i in needed:
            out[i] = col
    return out


def macwilliams_dual(we: WeightEnumerator) -> WeightEnumerator:
    """Weight enumerator of the dual code, by the exact MacWilliams transform.

    Computes W_dual(x) = q^(-k) (1+(q-1)x)^n W((1-x)/(1+(q-1)x)) with integer
    arithmetic; a non-integer coefficient means the input was not a valid
    enumerator and raises ValueError.
    """
    n, k, q = we.n, we.k, we.q
    scale = q**k
    kraw = _krawtchouk_columns(n, q, sorted(we.counts))
    counts: dict[int, int] = {}
    for j in range(n + 1):
        total = sum(c * kraw[i][j] for i, c in we.counts.items())
        if total % scale:
            raise ValueError(
                f"MacWilliams coefficient at weight {j} is {total}/{scale}, "
                "not an integer; input enumerator is invalid"
            )
        coeff = total // scale
        if coeff < 0:
            raise ValueError(
                f"MacWilliams coefficient at weight {j} is negative; "
                "input enumerator is invalid"
            )
        if coeff:
            counts[j] = coeff
    return WeightEnumerator(counts, n, n - k, q)
