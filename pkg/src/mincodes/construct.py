"""Explicit code constructions: circulants, circulant block grids, simplex
codes, and the three-disjoint-subspaces two-weight family.

A u x v circulant with generator g of length s (s | u, s | v) tiles g
across the first row and cyclically right-shifts each following row.  A
block grid of such circulants, all block orders dividing a common period t,
describes compact quasi-cyclic-style generator matrices; the grid is
specified by CirculantSpec and serializes to JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import gf
from .code import LinearCode
from .geometry import all_projective_points


def circulant(g: Sequence[int], u: int, v: int, q: int = 2) -> np.ndarray:
    """u x v circulant block with generator g.

    The first row is v/len(g) copies of g; every other row is the cyclic
    right shift of the row above.  len(g) must divide both u and v.
    """
    g = np.asarray(g, dtype=np.uint8)
    s = len(g)
    if s == 0 or u < 1 or v < 1:
        raise ValueError("need a nonempty generator and positive block size")
    if u % s or v % s:
        raise ValueError(f"generator length {s} must divide both u={u} and v={v}")
    if g.max(initial=0) >= q:
        raise ValueError(f"generator symbols outside GF({q})")
    out = np.zeros((u, v), dtype=np.uint8)
    out[0] = np.tile(g, v // s)
    for i in range(1, u):
        out[i] = np.roll(out[i - 1], 1)
    return out


@dataclass(frozen=True)
class CirculantBlock:
    """One u x v circulant cell of a block grid."""

    u: int
    v: int
    generator: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.generator)


@dataclass
class CirculantSpec:
    """Block grid of circulants with a common period t.

    Every block's u, v, and generator length must divide t, generator
    length t must occur somewhere, block heights are constant along block
    rows and widths constant along block columns.  The row profile alpha
    and column profile beta count how many block rows/columns have each
    order.
    """

    t: int
    blocks: list[list[CirculantBlock]]
    systematic: bool = False

    def __post_init__(self):
        if not self.blocks or not self.blocks[0]:
            raise ValueError("empty block grid")
        widths = [len(row) for row in self.blocks]
        if len(set(widths)) != 1:
            raise ValueError("ragged block grid")
        saw_t = False
        for i, row in enumerate(self.blocks):
            for j, b in enumerate(row):
                for name, val in (("u", b.u), ("v", b.v), ("s", b.s)):
                    if val < 1 or self.t % val:
                        raise ValueError(
                            f"block ({i},{j}): {name}={val} does not divide t={self.t}"
                        )
                if b.u % b.s or b.v % b.s:
                    raise ValueError(
                        f"block ({i},{j}): generator length {b.s} must divide "
                        f"u={b.u} and v={b.v}"
                    )
                if b.s == self.t:
                    saw_t = True
                if b.u != row[0].u:
                    raise ValueError(f"block row {i} mixes heights")
                if b.v != self.blocks[0][j].v:
                    raise ValueError(f"block column {j} mixes widths")
        if not saw_t:
            raise ValueError(f"no block has generator length t={self.t}")

    @property
    def k(self) -> int:
        return sum(row[0].u for row in self.blocks)

    @property
    def n(self) -> int:
        return sum(b.v for b in self.blocks[0])

    def alpha(self) -> dict[int, int]:
        """Row profile: order -> number of block rows of that height."""
        prof: dict[int, int] = {}
        for row in self.blocks:
            prof[row[0].u] = prof.get(row[0].u, 0) + 1
        return prof

    def beta(self) -> dict[int, int]:
        """Column profile: order -> number of block columns of that width."""
        prof: dict[int, int] = {}
        for b in self.blocks[0]:
            prof[b.v] = prof.get(b.v, 0) + 1
        return prof

    def to_json_obj(self) -> dict:
        return {
            "t": self.t,
            "systematic": self.systematic,
            "blocks": [
                [
                    {"u": b.u, "v": b.v, "generator": list(b.generator)}
                    for b in row
                ]
                for row in self.blocks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CirculantSpec":
        blocks = [
            [
                CirculantBlock(int(b["u"]), int(b["v"]), tuple(int(x) for x in b["generator"]))
                for b in row
            ]
            for row in obj["blocks"]
        ]
        return cls(t=int(obj["t"]), blocks=blocks, systematic=bool(obj.get("systematic", False)))

    @classmethod
    def from_json(cls, text: str) -> "CirculantSpec":
        return cls.from_json_obj(json.loads(text))


def assemble_circulant_matrix(spec: CirculantSpec) -> np.ndarray:
    """Concatenate all circulant blocks into one k x n matrix over GF(2)."""
    rows = []
    for row in spec.blocks:
        rows.append(np.hstack([circulant(b.generator, b.u, b.v, q=2) for b in row]))
    return np.vstack(rows)


def generalized_circulant(spec: CirculantSpec) -> LinearCode:
    """Build the code of a circulant block grid.

    Checks the systematic flag (matrix must start with a k x k identity)
    and row-reduces to determine the actual dimension; the returned code
    keeps the assembled matrix when it has full rank.
    """
    mat = assemble_circulant_matrix(spec)
    k = mat.shape[0]
    if spec.systematic:
        if mat.shape[1] < k or not np.array_equal(mat[:, :k], np.eye(k, dtype=np.uint8)):
            raise ValueError("systematic flag set but matrix does not start with an identity")
    if gf.rank(mat, 2) == k:
        return LinearCode(mat, 2)
    basis, _ = gf.row_reduce(mat, 2)
    return LinearCode(basis.astype(np.uint8), 2)


def block_shift_permutation(spec: CirculantSpec) -> list[int]:
    """Column permutation cyclically shifting every width-v block by one."""
    perm = []
    offset = 0
    for b in spec.blocks[0]:
        perm.extend(offset + ((i + 1) % b.v) for i in range(b.v))
        offset += b.v
    return perm


def simplex(k: int, q: int) -> LinearCode:
    """The one-weight code whose columns are all points of PG(k-1,q).

    Length (q^k-1)/(q-1), every nonzero weight equals q^(k-1).
    """
    if k < 1:
        raise ValueError("need k >= 1")
    pts = all_projective_points(k, q)
    return LinearCode(np.array(pts, dtype=np.uint8).T, q)


def disjoint_subspaces_code(t: int) -> LinearCode:
    """Two-weight minimal code from three pairwise disjoint t-spaces.

    Columns are (v,0), (0,v), (v,v) for v in GF(2)^t \\ {0}; the resulting
    [3(2^t-1), 2t]_2 code has the two nonzero weights 2^t and 3*2^(t-1),
    so the w_min/w_max ratio 2/3 certifies minimality for every t >= 2.
    """
    if t < 2:
        raise ValueError("need t >= 2")
    vs = [[(m >> i) & 1 for i in range(t)] for m in range(1, 1 << t)]
    cols = []
    for v in vs:
        cols.append(v + [0] * t)
    for v in vs:
        cols.append([0] * t + v)
    for v in vs:
        cols.append(v + v)
    return LinearCode(np.array(cols, dtype=np.uint8).T, 2)


def reference_circulant_spec_32_13() -> CirculantSpec:
    """The systematic (1^1 6^2, 1^2 6^5, 6) grid generating a [32,13,10]_2 code."""
    B = CirculantBlock
    blocks = [
        [
            B(1, 1, (1,)), B(1, 6, (0,)), B(1, 6, (0,)),
            B(1, 1, (1,)), B(1, 6, (0,)), B(1, 6, (1,)), B(1, 6, (1,)),
        ],
        [
            B(6, 1, (0,)), B(6, 6, (1, 0, 0, 0, 0, 0)), B(6, 6, (0, 0, 0, 0, 0, 0)),
            B(6, 1, (1,)), B(6, 6, (0, 0, 1, 0, 1, 1)), B(6, 6, (0, 0, 0, 1, 0, 1)),
            B(6, 6, (0, 0, 1, 0, 1, 1)),
        ],
        [
            B(6, 1, (0,)), B(6, 6, (0, 0, 0, 0, 0, 0)), B(6, 6, (1, 0, 0, 0, 0, 0)),
            B(6, 1, (0,)), B(6, 6, (0, 0, 0, 1, 1, 1)), B(6, 6, (0, 0, 1, 0, 1, 1)),
            B(6, 6, (1, 1, 1, 0, 1, 1)),
        ],
    ]
    return CirculantSpec(t=6, blocks=blocks, systematic=True)
