"""Minimality oracles, divisibility, and length/weight bounds.

Two independent minimality tests are provided on purpose: the quadratic
support-containment scan is the reference for small codes, and the
geometric strong-blocking test (one rank computation per hyperplane)
scales to k = 24 binary codes.  Their agreement is itself one of the main
correctness checks of the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import code as code_mod
from . import geometry
from .code import BudgetExceededError, LinearCode, WeightEnumerator

#: Default cap on q^k for the quadratic support-containment oracle.
SUPPORT_ORACLE_LIMIT = 1 << 17


def divisibility(code: LinearCode | WeightEnumerator, max_codewords: int | None = None) -> int:
    """Largest Delta dividing every nonzero codeword weight."""
    we = code if isinstance(code, WeightEnumerator) else code_mod.weight_enumerator(code, max_codewords)
    return we.divisibility


def ashikhmin_barg(code: LinearCode | WeightEnumerator, max_codewords: int | None = None) -> bool:
    """Sufficient minimality condition: w_min / w_max > (q-1)/q.

    Compared exactly as q*w_min > (q-1)*w_max; True implies the code is
    minimal, False decides nothing.
    """
    we = code if isinstance(code, WeightEnumerator) else code_mod.weight_enumerator(code, max_codewords)
    return we.q * we.min_weight > (we.q - 1) * we.max_weight


def griesmer_bound(k: int, d: int, q: int) -> int:
    """Minimum possible length of an [n,k,d]_q code: sum of ceil(d/q^i)."""
    if k < 1 or d < 1:
        raise ValueError("need k >= 1 and d >= 1")
    return sum(-(-d // q**i) for i in range(k))


# ---------------------------------------------------------------------------
# Support-containment oracle
# ---------------------------------------------------------------------------

def _support_words(block: np.ndarray) -> np.ndarray:
    """Pack the nonzero-position masks of (m, n) symbol rows into uint64 words."""
    m, n = block.shape
    W = (n + 63) // 64
    out = np.zeros((m, W), dtype=np.uint64)
    nz = block != 0
    for w in range(W):
        sl = nz[:, 64 * w : 64 * (w + 1)]
        pows = (np.uint64(1) << np.arange(sl.shape[1], dtype=np.uint64))[None, :]
        out[:, w] = (sl.astype(np.uint64) * pows).sum(axis=1, dtype=np.uint64)
    return out


def _nonzero_support_words(code: LinearCode) -> np.ndarray:
    """Support masks of all nonzero codewords, one per scalar class."""
    if code.q == 2:
        rows = code_mod.packed_rows(code)
        span = code_mod._xor_span(rows)
        return span[1:]  # drop the zero word
    blocks = [_support_words(b) for b in code_mod.projective_codeword_blocks(code)]
    return np.concatenate(blocks)


def is_minimal_support(code: LinearCode, max_codewords: int | None = None) -> bool:
    """Reference oracle: no nonzero codeword support properly inside another.

    Cost is quadratic in the number of codeword classes, so the default
    budget is q^k <= 2^17; beyond that use is_minimal_geometric.  For q > 2
    one representative per scalar class is compared (scalar multiples share
    supports).
    """
    if code.k == 1:
        return True
    limit = max_codewords if max_codewords is not None else SUPPORT_ORACLE_LIMIT
    if code.q**code.k > limit:
        raise BudgetExceededError(
            f"support oracle over q^k = {code.q**code.k} codewords exceeds {limit}; "
            "use is_minimal_geometric instead"
        )
    sup = _nonzero_support_words(code)
    weights = np.bitwise_count(sup).sum(axis=1, dtype=np.int64)
    order = np.argsort(weights, kind="stable")
    sup = sup[order]
    weights = weights[order]
    N = len(sup)
    # a support of weight w can only sit properly inside a strictly heavier one
    starts = np.searchsorted(weights, weights, side="right")
    single_word = sup.shape[1] == 1
    flat = sup[:, 0] if single_word else None
    CH = 256
    for lo in range(0, N, CH):
        hi = min(lo + CH, N)
        first_heavier = int(starts[lo])  # heavier than the lightest chunk row
        if first_heavier >= N:
            continue
        if single_word:
            contained = (flat[lo:hi, None] & ~flat[None, first_heavier:]) == 0
        else:
            light = sup[lo:hi]
            heavy = sup[first_heavier:]
            contained = ((light[:, None, :] & ~heavy[None, :, :]) == 0).all(axis=2)
        # only strictly heavier counterparts count: equal supports are allowed
        contained &= weights[lo:hi, None] < weights[None, first_heavier:]
        if contained.any():
            return False
    return True


def is_minimal_geometric(code: LinearCode, max_hyperplanes: int | None = None) -> bool:
    """Geometric oracle: the column multiset blocks strongly.

    One GF(q) rank per hyperplane, (q^k-1)/(q-1) hyperplanes; this is the
    production path for large k (up to 24 at q = 2).
    """
    if code.k == 1:
        return True
    ms = geometry.code_to_multiset(code)
    return geometry.is_strong_blocking(ms, max_hyperplanes)


# ---------------------------------------------------------------------------
# Bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundsReport:
    """Evaluation of the minimal-code bounds against one code.

    Bounds: (a) n >= (q+1)(k-1); (b) d >= (k-1)(q-1)+1;
    (c) w_max <= n-k+1; plus the Griesmer bound at the code's actual d.
    A violation certifies non-minimality when the code was assumed minimal.
    """

    n: int
    k: int
    q: int
    d: int
    w_min: int
    w_max: int
    length_lb: int
    wmin_lb: int
    wmax_ub: int
    griesmer_lb: int
    satisfied: dict[str, bool]
    assume_minimal: bool

    @property
    def all_satisfied(self) -> bool:
        return all(self.satisfied.values())

    @property
    def certifies_non_minimal(self) -> bool:
        """True when a bound fails for a code assumed minimal."""
        return self.assume_minimal and not self.all_satisfied

    def to_dict(self) -> dict:
        return {
            "length_lb": self.length_lb,
            "wmin_lb": self.wmin_lb,
            "wmax_ub": self.wmax_ub,
            "griesmer_lb": self.griesmer_lb,
            "satisfied": dict(self.satisfied),
        }


def bounds_report(
    code: LinearCode,
    assume_minimal: bool = False,
    max_codewords: int | None = None,
) -> BoundsReport:
    """Evaluate all minimal-code bounds plus Griesmer at the actual distance."""
    we = code_mod.weight_enumerator(code, max_codewords)
    n, k, q = code.n, code.k, code.q
    d = we.min_weight
    w_max = we.max_weight
    length_lb = (q + 1) * (k - 1)
    wmin_lb = (k - 1) * (q - 1) + 1
    wmax_ub = n - k + 1
    gries = griesmer_bound(k, d, q)
    satisfied = {
        "length": n >= length_lb,
        "wmin": d >= wmin_lb,
        "wmax": w_max <= wmax_ub,
        "griesmer": n >= gries,
    }
    return BoundsReport(
        n=n, k=k, q=q, d=d, w_min=d, w_max=w_max,
        length_lb=length_lb, wmin_lb=wmin_lb, wmax_ub=wmax_ub,
        griesmer_lb=gries, satisfied=satisfied, assume_minimal=assume_minimal,
    )
