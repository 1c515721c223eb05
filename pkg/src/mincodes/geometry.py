"""Multisets of points in PG(k-1,q): the geometric view of a linear code.

The columns of a generator matrix span projective points; a code is minimal
exactly when that multiset blocks strongly, i.e. the points inside every
hyperplane span the hyperplane.  Points are normalized so that the first
nonzero coordinate is 1 and ordered lexicographically as integer tuples,
which fixes all output frames deterministically.

The binary strong-blocking test is the scalable minimality oracle: it runs
one batched GF(2) rank computation per hyperplane over packed point masks,
so dimensions up to k = 24 stay tractable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from . import gf
from .code import BudgetExceededError, LinearCode, max_codeword_budget

Point = tuple[int, ...]


def normalize_point(vector: Iterable[int], q: int) -> Point:
    """Scale a nonzero vector so its first nonzero coordinate is 1."""
    vec = tuple(int(s) for s in vector)
    pivot = next((i for i, s in enumerate(vec) if s), None)
    if pivot is None:
        raise ValueError("cannot normalize the zero vector")
    if any(s < 0 or s >= q for s in vec):
        raise ValueError(f"symbols outside GF({q})")
    lead = vec[pivot]
    if lead == 1:
        return vec
    inv = gf.gf_inv(lead, q)
    return tuple(gf.gf_mul(inv, s, q) for s in vec)


def all_projective_points(k: int, q: int) -> list[Point]:
    """The (q^k - 1)/(q - 1) normalized points of PG(k-1,q), lex ordered."""
    pts = []
    for vec in product(range(q), repeat=k):
        pivot = next((i for i, s in enumerate(vec) if s), None)
        if pivot is not None and vec[pivot] == 1:
            pts.append(vec)
    return pts


@dataclass
class PointMultiset:
    """Multiplicity function on the points of PG(k-1,q)."""

    k: int
    q: int
    multiplicity: dict[Point, int] = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[Point, int] = {}
        for pt, m in self.multiplicity.items():
            if m < 0:
                raise ValueError("negative multiplicity")
            if m == 0:
                continue
            norm = normalize_point(pt, self.q)
            if len(norm) != self.k:
                raise ValueError(f"point {pt} does not live in GF({self.q})^{self.k}")
            clean[norm] = clean.get(norm, 0) + m
        self.multiplicity = clean

    @property
    def cardinality(self) -> int:
        """#M, the sum of all multiplicities (= length of the code)."""
        return sum(self.multiplicity.values())

    def support(self) -> list[Point]:
        """Points with positive multiplicity, lex ordered."""
        return sorted(self.multiplicity)

    def to_json_obj(self) -> list[dict]:
        return [
            {"point": list(pt), "multiplicity": self.multiplicity[pt]}
            for pt in self.support()
        ]

    @classmethod
    def from_json_obj(cls, obj: list[dict], q: int) -> "PointMultiset":
        if not obj:
            raise ValueError("empty multiset")
        k = len(obj[0]["point"])
        mult = {tuple(e["point"]): int(e["multiplicity"]) for e in obj}
        return cls(k, q, mult)


def code_to_multiset(code: LinearCode) -> PointMultiset:
    """Column multiset of the generator matrix (zero columns rejected)."""
    mult: dict[Point, int] = {}
    for j in range(code.n):
        col = code.generator[:, j]
        if not col.any():
            raise ValueError(f"generator column {j} is zero (degenerate coordinate)")
        pt = normalize_point(col, code.q)
        mult[pt] = mult.get(pt, 0) + 1
    return PointMultiset(code.k, code.q, mult)


def multiset_to_code(ms: PointMultiset) -> LinearCode:
    """Generator matrix with the multiset as columns, lex ordered.

    Requires a spanning multiset; each point appears as many consecutive
    columns as its multiplicity.
    """
    if not is_spanning(ms):
        raise ValueError("multiset does not span the ambient space")
    cols = []
    for pt in ms.support():
        cols.extend([pt] * ms.multiplicity[pt])
    return LinearCode(np.array(cols, dtype=np.uint8).T, ms.q)


def is_spanning(ms: PointMultiset) -> bool:
    """True iff the support points have full rank k."""
    sup = ms.support()
    if not sup:
        return False
    return gf.rank(np.array(sup), ms.q) == ms.k


def reduce_to_set(ms: PointMultiset) -> PointMultiset:
    """Clamp every positive multiplicity to 1."""
    return PointMultiset(ms.k, ms.q, {pt: 1 for pt in ms.multiplicity})


def project_through_point(ms: PointMultiset, point: Iterable[int]) -> PointMultiset:
    """Project the multiset through a point Q into PG(k-2,q).

    Every support point P != Q maps to the line <P,Q> mod Q; image
    multiplicities add up, so the image of a line L through Q carries
    M(L) - M(Q) and the total cardinality drops by exactly M(Q).

    Chart: with Q normalized (pivot coordinate = 1), the quotient
    coordinates of P are those of P - P[pivot] * Q with the pivot
    coordinate deleted.
    """
    if ms.k < 2:
        raise ValueError("projection needs ambient dimension k >= 2")
    Q = normalize_point(point, ms.q)
    if len(Q) != ms.k:
        raise ValueError("projection point has wrong length")
    pivot = next(i for i, s in enumerate(Q) if s)
    q = ms.q
    image: dict[Point, int] = {}
    for pt, m in ms.multiplicity.items():
        if pt == Q:
            continue
        lam = pt[pivot]
        if lam:
            shifted = tuple(
                gf.gf_add(s, gf.gf_mul(gf.gf_neg(lam, q), t, q), q)
                for s, t in zip(pt, Q)
            )
        else:
            shifted = pt
        reduced = shifted[:pivot] + shifted[pivot + 1 :]
        img = normalize_point(reduced, q)
        image[img] = image.get(img, 0) + m
    return PointMultiset(ms.k - 1, q, image)


# ---------------------------------------------------------------------------
# Strong blocking test
# ---------------------------------------------------------------------------

def _pack_points_q2(points: list[Point]) -> np.ndarray:
    out = np.zeros(len(points), dtype=np.uint32)
    for i, pt in enumerate(points):
        v = 0
        for j, s in enumerate(pt):
            if s:
                v |= 1 << j
        out[i] = v
    return out


def _strong_blocking_q2(points: list[Point], k: int, chunk: int = 1 << 16) -> bool:
    """Batched per-hyperplane rank over packed binary points.

    For each hyperplane normal h the incident points are the P with
    even-parity h & P; their rank must reach k-1.  All hyperplanes in a
    chunk run one shared Gaussian elimination, inserting the points in a
    fixed order and compacting away hyperplanes that already reached full
    rank.
    """
    pts = _pack_points_q2(points)
    npts = len(pts)
    target = k - 1
    if target == 0:
        return True
    nh = (1 << k) - 1
    for start in range(1, nh + 1, chunk):
        stop = min(start + chunk, nh + 1)
        hs = np.arange(start, stop, dtype=np.uint32)
        basis = np.zeros((len(hs), k), dtype=np.uint32)
        rank = np.zeros(len(hs), dtype=np.int8)
        for i in range(npts):
            p = pts[i]
            member = (np.bitwise_count(hs & p) & np.uint32(1)) == 0
            v = np.where(member, np.uint32(p), np.uint32(0))
            for j in range(k - 1, -1, -1):
                v ^= basis[:, j] * ((v >> np.uint32(j)) & np.uint32(1))
            nz = np.flatnonzero(v)
            if nz.size:
                lead = np.floor(np.log2(v[nz].astype(np.float64))).astype(np.int64)
                basis[nz, lead] = v[nz]
                rank[nz] += 1
            if (i & 7) == 7:
                live = rank < target
                nlive = int(live.sum())
                if nlive == 0:
                    break
                if nlive < len(hs) // 2:
                    basis = basis[live]
                    rank = rank[live]
                    hs = hs[live]
        if bool((rank < target).any()):
            return False
    return True


def _rank_of_rows(rows: np.ndarray, q: int, k: int) -> int:
    """Lean elimination rank used in the generic hyperplane loop."""
    mat = rows.astype(np.int64, copy=True)
    m = mat.shape[0]
    r = 0
    for c in range(k):
        if r >= m:
            break
        piv = None
        for i in range(r, m):
            if mat[i, c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        if mat[r, c] != 1:
            mat[r] = gf.gf_mul(gf.gf_inv(int(mat[r, c]), q), mat[r], q)
        col = mat[r + 1 :, c]
        hit = np.flatnonzero(col)
        for i in hit:
            f = gf.gf_neg(int(mat[r + 1 + i, c]), q)
            mat[r + 1 + i] = gf.gf_add(mat[r + 1 + i], gf.gf_mul(f, mat[r], q), q)
        r += 1
    return r


def _strong_blocking_generic(points: list[Point], k: int, q: int) -> bool:
    pts = np.array(points, dtype=np.int64)
    normals = all_projective_points(k, q)
    mul = gf.mul_tables(q)
    for h in normals:
        hv = np.array(h, dtype=np.int64)
        prods = mul[pts, hv[None, :]]
        if q == 4:
            dots = np.bitwise_xor.reduce(prods, axis=1)
        else:
            dots = prods.sum(axis=1) % q
        incident = pts[dots == 0]
        if _rank_of_rows(incident, q, k) != k - 1:
            return False
    return True


def is_strong_blocking(ms: PointMultiset, max_hyperplanes: int | None = None) -> bool:
    """True iff the support points inside every hyperplane span it (rank k-1).

    Hyperplanes are indexed by normalized normal vectors, giving
    (q^k - 1)/(q - 1) of them; the count is checked against the budget
    before scanning.
    """
    if ms.k < 2:
        raise ValueError("strong blocking needs ambient dimension k >= 2")
    count = (ms.q**ms.k - 1) // (ms.q - 1)
    limit = max_codeword_budget(max_hyperplanes)
    if count > limit:
        raise BudgetExceededError(
            f"{count} hyperplanes exceed the budget of {limit}"
        )
    support = ms.support()
    if not is_spanning(ms):
        return False
    if ms.q == 2:
        return _strong_blocking_q2(support, ms.k)
    return _strong_blocking_generic(support, ms.k, ms.q)
