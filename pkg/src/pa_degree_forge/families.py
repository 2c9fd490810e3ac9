"""Catalog of the multicurve configuration families, as exact matrix builders.

Every family is represented at the matrix level: a symmetric gram matrix
(XX^T of the intersection grid X), sometimes together with the grid itself
when the underlying curve picture determines it, and, for the y-parametrised
constructions, a "bordered" form whose top-left entry is the only place the
free parameter enters (as c*y^p). The bordered form is what Hilbert-style
searches specialize.

Layout conventions, used consistently by grams, grids and borders:

* a bordered matrix puts the encircling curve first (index 0), then the inner
  matrix, then any newly glued block;
* a genus-one handle contributes rows (separating, nonseparating) in that
  order, and its columns start with the transverse component the separating
  curve crosses;
* parallel copies of the base transverse curve are materialized as individual
  grid columns, since the bipartite double counts them individually;
* "dropped" handles omit their separating row (grids) or row/column (grams),
  which is exactly a principal deletion of the full matrix.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace
from typing import Callable, ClassVar, Iterable, Sequence, Union

from .matrices import IntMatrix, IntersectionGrid, char_poly, delete_index
from .polynomials import IrreducibilityVerdict, certify_irreducible

__all__ = [
    "BorderedGram",
    "Block1",
    "Block2",
    "Block3",
    "FamilySpec",
    "G1Block",
    "Genus3Closed",
    "GridUndetermined",
    "HilbertResult",
    "KBlock",
    "KBlockClosed",
    "MgNg",
    "ParametricGram",
    "SmallDegree",
    "ThurstonClosed",
    "ThurstonInductive",
    "TorelliG1Block",
    "TorelliG2Block",
    "TorelliTower",
    "VARIANTS",
    "build_bordered",
    "build_gram",
    "hilbert_search",
    "intersection_grid",
    "spec_from_json",
    "spec_to_json",
    "validate",
]


class GridUndetermined(ValueError):
    """Raised for families whose intersection grid the construction leaves open."""


# -- bordered and parametric forms ---------------------------------------------


@dataclass(frozen=True)
class BorderedGram:
    """Symmetric core with zero top-left entry; specializing y installs c*y^p
    there and nothing else changes."""

    core: IntMatrix
    c: int
    p: int
    y_lower: int = 1
    label: str = ""

    def __post_init__(self) -> None:
        if not self.core.is_symmetric:
            raise ValueError("bordered core must be symmetric")
        if self.core.entry(0, 0) != 0:
            raise ValueError("bordered core must have zero top-left entry")
        if self.c == 0:
            raise ValueError("scale c must be nonzero")
        if self.p < 1:
            raise ValueError("exponent p must be at least 1")

    @property
    def dim(self) -> int:
        return self.core.dim

    def specialize(self, y: int) -> IntMatrix:
        if y < self.y_lower:
            raise ValueError(f"y = {y} is below the lower bound {self.y_lower}")
        rows = self.core.to_lists()
        rows[0][0] = self.c * y**self.p
        return IntMatrix(rows)


@dataclass(frozen=True)
class ParametricGram:
    """Adapter for families whose parameter enters several entries at once
    (so no BorderedGram exists): anything with specialize(y) can be searched."""

    build: Callable[[int], IntMatrix]
    y_lower: int = 1
    label: str = ""

    def specialize(self, y: int) -> IntMatrix:
        if y < self.y_lower:
            raise ValueError(f"y = {y} is below the lower bound {self.y_lower}")
        return self.build(y)


# -- shared assembly helpers ------------------------------------------------------


def _assemble(topleft: int, pieces: Sequence[tuple[Sequence[int], IntMatrix]]) -> IntMatrix:
    """Symmetric matrix [[topleft, borders...], [borders^T, diag(blocks)]]."""
    dims = [blk.nrows for _, blk in pieces]
    n = 1 + sum(dims)
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = topleft
    off = 1
    for border, blk in pieces:
        if len(border) != blk.nrows:
            raise ValueError("border length does not match its block")
        for j, v in enumerate(border):
            rows[0][off + j] = v
            rows[off + j][0] = v
        for i in range(blk.nrows):
            for j in range(blk.ncols):
                rows[off + i][off + j] = blk.rows[i][j]
        off += blk.nrows
    return IntMatrix(rows)


def _halved(row: Sequence[int]) -> tuple[int, ...]:
    if any(v % 2 for v in row):
        raise ValueError("closed border requires even crossing numbers")
    return tuple(v // 2 for v in row)


def _g1_grid_rows(b: int) -> list[list[int]]:
    """Separating row (crosses the first component twice) over nonseparating
    row (crosses all b components once)."""
    return [[2] + [0] * (b - 1), [1] * b]


def _tower_step_rows(rows: list[list[int]], copies: int, block: list[list[int]]) -> list[list[int]]:
    """Glue a new encircling curve plus a fresh handle onto an existing grid.

    The new encircling row repeats the previous top row on the old columns
    (it crosses every old copy and every handle's first component exactly as
    the old top row did), then crosses each of the new parallel copies twice
    and the new handle's first component twice.
    """
    pad_new = copies + len(block[0])
    alpha = rows[0] + [2] * copies + [2] + [0] * (len(block[0]) - 1)
    out = [alpha]
    out.extend(r + [0] * pad_new for r in rows)
    old_cols = len(rows[0])
    out.extend([0] * (old_cols + copies) + br for br in block)
    return out


def _closed_cap_rows(rows: list[list[int]], copies: int) -> list[list[int]]:
    """Cap a grid: the closing curve crosses everything half as often as the
    top row did and each of the new parallel copies once."""
    if any(v % 2 for v in rows[0]):
        raise ValueError("closed border requires even crossing numbers")
    alpha = [v // 2 for v in rows[0]] + [1] * copies
    return [alpha] + [r + [0] * copies for r in rows]


def _genus1_block(b: int) -> IntMatrix:
    return IntMatrix([[4, 2], [2, b]])


def _torelli_block(y: int) -> IntMatrix:
    return IntMatrix([[16 * y + 4, 8 * y], [8 * y, 4 * y]])


# -- the family variants -----------------------------------------------------------


@dataclass(frozen=True)
class G1Block:
    """One genus-one handle: gram [[4, 2], [2, y]]."""

    y: int
    variant: ClassVar[str] = "G1Block"

    def validate(self) -> None:
        if self.y < 1:
            raise ValueError("G1Block: y must be at least 1")

    def build_gram(self) -> IntMatrix:
        self.validate()
        return _genus1_block(self.y)

    def intersection_grid(self) -> IntersectionGrid:
        self.validate()
        return IntersectionGrid(_g1_grid_rows(self.y))

    def build_bordered(self) -> BorderedGram:
        # y sits at the bottom-right of the gram; the bordered form uses the
        # permutation-similar [[y, 2], [2, 4]], which has the same
        # characteristic polynomial.
        return BorderedGram(
            core=IntMatrix([[0, 2], [2, 4]]), c=1, p=1, y_lower=1,
            label="G1Block (permuted: same char poly, transposed layout)",
        )


@dataclass(frozen=True)
class ThurstonInductive:
    """Open tower: start from [[4, 2], [2, b0]] and repeatedly glue a new
    encircling curve (top-left 4*y_i^2) plus a fresh handle [[4, 2], [2, b_i]].

    steps is a tuple of (b_i, y_i); the dimension is 2 + 3*len(steps)."""

    b0: int
    steps: tuple[tuple[int, int], ...]
    variant: ClassVar[str] = "ThurstonInductive"

    def validate(self) -> None:
        if self.b0 < 1:
            raise ValueError("ThurstonInductive: b0 must be at least 1")
        if not self.steps:
            raise ValueError("ThurstonInductive: needs at least one step (use G1Block otherwise)")
        bs = [self.b0] + [b for b, _ in self.steps]
        if any(b < 1 for b in bs):
            raise ValueError("ThurstonInductive: block parameters must be at least 1")
        if len(set(bs)) != len(bs):
            raise ValueError("ThurstonInductive: block parameters must be pairwise distinct")
        a = 1
        for i, (_, y) in enumerate(self.steps, start=1):
            if y * y - a - 1 < 1:
                raise ValueError(
                    f"ThurstonInductive: step {i} needs y^2 >= {a + 2} (parallel-copy count y^2 - a - 1 >= 1)"
                )
            a = y * y

    def build_gram(self) -> IntMatrix:
        self.validate()
        m = _genus1_block(self.b0)
        for b, y in self.steps:
            m = _assemble(4 * y * y, [(m.rows[0], m), ((4, 2), _genus1_block(b))])
        return m

    def intersection_grid(self) -> IntersectionGrid:
        self.validate()
        rows = _g1_grid_rows(self.b0)
        a = 1
        for b, y in self.steps:
            rows = _tower_step_rows(rows, y * y - a - 1, _g1_grid_rows(b))
            a = y * y
        return IntersectionGrid(rows)

    def build_bordered(self) -> BorderedGram:
        self.validate()
        b_last, _ = self.steps[-1]
        if len(self.steps) == 1:
            inner = _genus1_block(self.b0)
            lower = 2  # y^2 - 1 - 1 >= 1
        else:
            head = replace(self, steps=self.steps[:-1])
            inner = head.build_gram()
            lower = math.isqrt(inner.entry(0, 0) // 4 + 1) + 1
        core = _assemble(0, [(inner.rows[0], inner), ((4, 2), _genus1_block(b_last))])
        return BorderedGram(core=core, c=4, p=2, y_lower=lower, label="ThurstonInductive")


@dataclass(frozen=True)
class ThurstonClosed:
    """Closed capping of an open block or tower: the closing curve's border is
    half the inner first row and the top-left becomes y^2."""

    inner: "G1Block | ThurstonInductive"
    y: int
    variant: ClassVar[str] = "ThurstonClosed"

    def _inner_a(self) -> int:
        return self.inner.build_gram().entry(0, 0) // 4

    def validate(self) -> None:
        self.inner.validate()
        a = self._inner_a()
        if self.y * self.y - a < 1:
            raise ValueError(f"ThurstonClosed: closing requires y^2 > {a} (parallel-copy count y^2 - a >= 1)")

    def build_gram(self) -> IntMatrix:
        self.validate()
        inner = self.inner.build_gram()
        return _assemble(self.y * self.y, [(_halved(inner.rows[0]), inner)])

    def intersection_grid(self) -> IntersectionGrid:
        self.validate()
        rows = self.inner.intersection_grid().matrix.to_lists()
        return IntersectionGrid(_closed_cap_rows(rows, self.y * self.y - self._inner_a()))

    def build_bordered(self) -> BorderedGram:
        self.inner.validate()
        inner = self.inner.build_gram()
        core = _assemble(0, [(_halved(inner.rows[0]), inner)])
        lower = math.isqrt(self._inner_a()) + 1
        return BorderedGram(core=core, c=1, p=2, y_lower=lower, label="ThurstonClosed")


@dataclass(frozen=True)
class TorelliG2Block:
    """The genus-two Torelli block, a 4x4 gram whose top-left is 84 + 16y."""

    y: int
    variant: ClassVar[str] = "TorelliG2Block"

    def validate(self) -> None:
        if self.y < 1:
            raise ValueError("TorelliG2Block: y must be at least 1")

    def build_gram(self) -> IntMatrix:
        self.validate()
        y = self.y
        return IntMatrix(
            [
                [84 + 16 * y, 40 + 8 * y, 40, 16],
                [40 + 8 * y, 20 + 4 * y, 20, 8],
                [40, 20, 20, 8],
                [16, 8, 8, 4],
            ]
        )

    def intersection_grid(self) -> IntersectionGrid:
        raise GridUndetermined("TorelliG2Block: grid not determined by the construction")

    def build_bordered(self) -> BorderedGram:
        raise ValueError(
            "TorelliG2Block has no bordered form: y enters several entries; use parametric()"
        )

    @classmethod
    def parametric(cls) -> ParametricGram:
        return ParametricGram(build=lambda y: cls(y).build_gram(), y_lower=1, label="TorelliG2Block")


@dataclass(frozen=True)
class TorelliG1Block:
    """The genus-one Torelli block C_y = [[16y+4, 8y], [8y, 4y]]."""

    y: int
    variant: ClassVar[str] = "TorelliG1Block"

    def validate(self) -> None:
        if self.y < 1:
            raise ValueError("TorelliG1Block: y must be at least 1")

    def build_gram(self) -> IntMatrix:
        self.validate()
        return _torelli_block(self.y)

    def intersection_grid(self) -> IntersectionGrid:
        raise GridUndetermined("TorelliG1Block: grid not determined by the construction")

    def build_bordered(self) -> BorderedGram:
        raise ValueError(
            "TorelliG1Block has no bordered form: y enters several entries; use parametric()"
        )

    @classmethod
    def parametric(cls) -> ParametricGram:
        return ParametricGram(build=lambda y: cls(y).build_gram(), y_lower=1, label="TorelliG1Block")


@dataclass(frozen=True)
class TorelliTower:
    """Torelli tower: base TorelliG2Block(base_y), then each step glues an
    encircling curve (top-left 4*Y^2) plus a genus-one Torelli block C_y with
    border equal to that block's first row. steps holds (block_y, border_y)."""

    g: int
    base_y: int
    steps: tuple[tuple[int, int], ...]
    variant: ClassVar[str] = "TorelliTower"

    def validate(self) -> None:
        if self.g != 2 + len(self.steps):
            raise ValueError("TorelliTower: g must equal 2 + number of steps")
        if self.base_y < 1:
            raise ValueError("TorelliTower: base_y must be at least 1")
        a = 21 + 4 * self.base_y  # top-left of the base block is 84 + 16*base_y
        for i, (block_y, border_y) in enumerate(self.steps, start=1):
            if block_y < 1:
                raise ValueError("TorelliTower: block parameters must be at least 1")
            if border_y * border_y - a - 4 * block_y - 1 < 1:
                raise ValueError(
                    f"TorelliTower: step {i} needs Y^2 >= {a + 4 * block_y + 2} "
                    "(parallel-copy count Y^2 - a - 4y - 1 >= 1)"
                )
            a = border_y * border_y

    def build_gram(self) -> IntMatrix:
        self.validate()
        m = TorelliG2Block(self.base_y).build_gram()
        for block_y, border_y in self.steps:
            blk = _torelli_block(block_y)
            m = _assemble(4 * border_y * border_y, [(m.rows[0], m), (blk.rows[0], blk)])
        return m

    def intersection_grid(self) -> IntersectionGrid:
        raise GridUndetermined("TorelliTower: grid not determined by the construction")

    def build_bordered(self) -> BorderedGram:
        self.validate()
        if not self.steps:
            raise ValueError("TorelliTower without steps has no bordered form; use TorelliG2Block")
        block_y, _ = self.steps[-1]
        if len(self.steps) == 1:
            inner = TorelliG2Block(self.base_y).build_gram()
        else:
            head = replace(self, g=self.g - 1, steps=self.steps[:-1])
            inner = head.build_gram()
        a = inner.entry(0, 0) // 4
        blk = _torelli_block(block_y)
        core = _assemble(0, [(inner.rows[0], inner), (blk.rows[0], blk)])
        lower = math.isqrt(a + 4 * block_y + 1) + 1
        return BorderedGram(core=core, c=4, p=2, y_lower=lower, label="TorelliTower")


@dataclass(frozen=True)
class Genus3Closed:
    """The fully explicit closed genus-three Torelli example (6x6)."""

    variant: ClassVar[str] = "Genus3Closed"

    ROWS: ClassVar[tuple[tuple[int, ...], ...]] = (
        (500, 248, 232, 112, 80, 32),
        (248, 124, 116, 56, 40, 16),
        (232, 116, 116, 56, 40, 16),
        (112, 56, 56, 28, 20, 8),
        (80, 40, 40, 20, 20, 8),
        (32, 16, 16, 8, 8, 4),
    )

    def validate(self) -> None:
        return None

    def build_gram(self) -> IntMatrix:
        return IntMatrix(self.ROWS)

    def intersection_grid(self) -> IntersectionGrid:
        raise GridUndetermined("Genus3Closed: grid not determined by the construction")

    def build_bordered(self) -> BorderedGram:
        raise ValueError("Genus3Closed is fully explicit: no bordered form")


@dataclass(frozen=True)
class Block1:
    """TorelliG2Block with its third row and column removed (a 3x3 gram)."""

    y: int
    variant: ClassVar[str] = "Block1"

    def validate(self) -> None:
        if self.y < 1:
            raise ValueError("Block1: y must be at least 1")

    def build_gram(self) -> IntMatrix:
        self.validate()
        return delete_index(TorelliG2Block(self.y).build_gram(), 2)

    def intersection_grid(self) -> IntersectionGrid:
        raise GridUndetermined("Block1: grid not determined by the construction")

    def build_bordered(self) -> BorderedGram:
        raise ValueError("Block1 has no bordered form: y enters several entries; use parametric()")

    @classmethod
    def parametric(cls) -> ParametricGram:
        return ParametricGram(build=lambda y: cls(y).build_gram(), y_lower=1, label="Block1")


@dataclass(frozen=True)
class Block2:
    """A single curve pair crossing m times: the 1x1 gram [[m]]. The source
    figure does not pin the crossing count; m = 1 is the default."""

    m: int = 1
    variant: ClassVar[str] = "Block2"

    def validate(self) -> None:
        if self.m < 1:
            raise ValueError("Block2: intersection count m must be positive")

    def build_gram(self) -> IntMatrix:
        self.validate()
        return IntMatrix([[self.m]])

    def intersection_grid(self) -> IntersectionGrid:
        raise GridUndetermined("Block2: grid not determined by the construction")

    def build_bordered(self) -> BorderedGram:
        raise ValueError("Block2 has no bordered form")


@dataclass(frozen=True)
class Block3:
    """Torelli closing block: encircling curve (top-left 4y^2) over k genus-one
    Torelli blocks C_{y_i}, each bordered by its own first row. Handles listed
    in `dropped` (0-based positions into ys) lose their first row and column."""

    k: int
    ys: tuple[int, ...]
    y: int
    dropped: frozenset[int] = frozenset()
    variant: ClassVar[str] = "Block3"

    def validate(self) -> None:
        if self.k != len(self.ys) or self.k < 1:
            raise ValueError("Block3: k must equal the number of handle parameters (and be >= 1)")
        if any(v < 1 for v in self.ys):
            raise ValueError("Block3: handle parameters must be at least 1")
        if len(set(self.ys)) != len(self.ys):
            raise ValueError("Block3: handle parameters must be pairwise distinct")
        if not all(0 <= i < self.k for i in self.dropped):
            raise ValueError("Block3: dropped indices out of range")
        if self.y * self.y - self.k - 4 * sum(self.ys) < 1:
            raise ValueError("Block3: y^2 - k - 4*(y_1+...+y_k) must be at least 1")

    def _pieces(self) -> list[tuple[tuple[int, ...], IntMatrix]]:
        pieces: list[tuple[tuple[int, ...], IntMatrix]] = []
        for i, yi in enumerate(self.ys):
            if i in self.dropped:
                pieces.append(((8 * yi,), IntMatrix([[4 * yi]])))
            else:
                blk = _torelli_block(yi)
                pieces.append((blk.rows[0], blk))
        return pieces

    def build_gram(self) -> IntMatrix:
        self.validate()
        return _assemble(4 * self.y * self.y, self._pieces())

    def intersection_grid(self) -> IntersectionGrid:
        raise GridUndetermined("Block3: grid not determined by the construction")

    def build_bordered(self) -> BorderedGram:
        self.validate()
        core = _assemble(0, self._pieces())
        lower = math.isqrt(self.k + 4 * sum(self.ys)) + 1
        return BorderedGram(core=core, c=4, p=2, y_lower=lower, label="Block3")


@dataclass(frozen=True)
class KBlock:
    """Encircling curve over k genus-one handles [[4, 2], [2, y_i]], each
    bordered by (4, 2); top-left 4y^2 and y^2 - k parallel copies. Handles in
    `dropped` (0-based) lose their separating curve."""

    k: int
    ys: tuple[int, ...]
    y: int
    dropped: frozenset[int] = frozenset()
    variant: ClassVar[str] = "KBlock"

    def validate(self) -> None:
        if self.k != len(self.ys) or self.k < 1:
            raise ValueError("KBlock: k must equal the number of handle parameters (and be >= 1)")
        if any(v < 1 for v in self.ys):
            raise ValueError("KBlock: handle parameters must be at least 1")
        if len(set(self.ys)) != len(self.ys):
            raise ValueError("KBlock: handle parameters must be pairwise distinct")
        if not all(0 <= i < self.k for i in self.dropped):
            raise ValueError("KBlock: dropped indices out of range")
        if self.y * self.y - self.k < 1:
            raise ValueError("KBlock: y^2 - k must be positive")

    def _pieces(self) -> list[tuple[tuple[int, ...], IntMatrix]]:
        pieces: list[tuple[tuple[int, ...], IntMatrix]] = []
        for i, yi in enumerate(self.ys):
            if i in self.dropped:
                pieces.append(((2,), IntMatrix([[yi]])))
            else:
                pieces.append(((4, 2), _genus1_block(yi)))
        return pieces

    def build_gram(self) -> IntMatrix:
        self.validate()
        return _assemble(4 * self.y * self.y, self._pieces())

    def intersection_grid(self) -> IntersectionGrid:
        self.validate()
        copies = self.y * self.y - self.k
        handle_cols = sum(self.ys)
        total = copies + handle_cols
        alpha = [2] * copies
        handle_rows: list[list[int]] = []
        off = copies
        for i, yi in enumerate(self.ys):
            alpha.extend([2] + [0] * (yi - 1))
            sep = [0] * off + [2] + [0] * (total - off - 1)
            nonsep = [0] * off + [1] * yi + [0] * (total - off - yi)
            if i not in self.dropped:
                handle_rows.append(sep)
            handle_rows.append(nonsep)
            off += yi
        return IntersectionGrid([alpha] + handle_rows)

    def build_bordered(self) -> BorderedGram:
        self.validate()
        core = _assemble(0, self._pieces())
        return BorderedGram(core=core, c=4, p=2, y_lower=math.isqrt(self.k) + 1, label="KBlock")


@dataclass(frozen=True)
class KBlockClosed:
    """Closed capping of a KBlock: border halved, top-left y^2."""

    inner: KBlock
    y: int
    variant: ClassVar[str] = "KBlockClosed"

    def validate(self) -> None:
        self.inner.validate()
        if self.y * self.y <= self.inner.y * self.inner.y:
            raise ValueError("KBlockClosed: closing requires y^2 > inner y^2")

    def build_gram(self) -> IntMatrix:
        self.validate()
        inner = self.inner.build_gram()
        return _assemble(self.y * self.y, [(_halved(inner.rows[0]), inner)])

    def intersection_grid(self) -> IntersectionGrid:
        self.validate()
        rows = self.inner.intersection_grid().matrix.to_lists()
        copies = self.y * self.y - self.inner.y * self.inner.y
        return IntersectionGrid(_closed_cap_rows(rows, copies))

    def build_bordered(self) -> BorderedGram:
        self.inner.validate()
        inner = self.inner.build_gram()
        core = _assemble(0, [(_halved(inner.rows[0]), inner)])
        return BorderedGram(core=core, c=1, p=2, y_lower=self.inner.y + 1, label="KBlockClosed")


@dataclass(frozen=True)
class SmallDegree:
    """The small-trace-field-degree family: top-left 64y^2 over g-2 single
    curves with self-crossing numbers z_i (positive multiples of 4), bordered
    by 8z_i. Exactly the first f+1 of the z_i equal 4; the rest are pairwise
    distinct and different from 4."""

    g: int
    f: int
    zs: tuple[int, ...]
    y: int
    variant: ClassVar[str] = "SmallDegree"

    def validate(self) -> None:
        if self.g < 3:
            raise ValueError("SmallDegree: g must be at least 3")
        if len(self.zs) != self.g - 2:
            raise ValueError("SmallDegree: needs exactly g - 2 curve parameters")
        if not 1 <= self.f <= self.g - 3:
            raise ValueError("SmallDegree: f must satisfy 1 <= f <= g - 3")
        if any(z < 4 or z % 4 for z in self.zs):
            raise ValueError("SmallDegree: every z must be a positive multiple of 4")
        if any(z != 4 for z in self.zs[: self.f + 1]):
            raise ValueError("SmallDegree: the first f + 1 curve parameters must equal 4")
        rest = self.zs[self.f + 1 :]
        if any(z == 4 for z in rest):
            raise ValueError("SmallDegree: only the first f + 1 curve parameters may equal 4")
        if len(set(rest)) != len(rest):
            raise ValueError("SmallDegree: the non-repeated curve parameters must be pairwise distinct")
        delta = sum(self.zs) // 4
        if self.y * self.y + self.g - 2 - 4 * delta < 1:
            raise ValueError("SmallDegree: rho = y^2 + g - 2 - 4*delta must be at least 1")

    def build_gram(self) -> IntMatrix:
        self.validate()
        pieces = [((8 * z,), IntMatrix([[z]])) for z in self.zs]
        return _assemble(64 * self.y * self.y, pieces)

    def intersection_grid(self) -> IntersectionGrid:
        raise GridUndetermined("SmallDegree: grid not determined by the construction")

    def build_bordered(self) -> BorderedGram:
        self.validate()
        pieces = [((8 * z,), IntMatrix([[z]])) for z in self.zs]
        core = _assemble(0, pieces)
        delta = sum(self.zs) // 4
        lower = max(1, math.isqrt(max(4 * delta - self.g + 2, 0)) + 1)
        return BorderedGram(core=core, c=64, p=2, y_lower=lower, label="SmallDegree")


@dataclass(frozen=True)
class MgNg:
    """The designated genus-g examples: M_g is the tower over [[4, 2], [2, 13]]
    glued with copies of [[4, 2], [2, 12]] at parameters ys; N_g is its closed
    capping at y_close. dim(M_g) = 3g - 1 and dim(N_g) = 3g."""

    g: int
    ys: tuple[int, ...]
    y_close: "int | None" = None
    closed: bool = False
    variant: ClassVar[str] = "MgNg"

    def validate(self) -> None:
        if self.g < 2:
            raise ValueError("MgNg: g must be at least 2")
        if len(self.ys) != self.g - 1:
            raise ValueError("MgNg: needs exactly g - 1 gluing parameters")
        a = 1
        for i, y in enumerate(self.ys, start=1):
            if y * y - a - 1 < 1:
                raise ValueError(f"MgNg: step {i} needs y^2 > {a + 1} (strictly)")
            a = y * y
        if self.closed:
            if self.y_close is None:
                raise ValueError("MgNg: closed form needs y_close")
            if self.y_close * self.y_close <= self.ys[-1] ** 2:
                raise ValueError("MgNg: y_close^2 must exceed the last gluing parameter squared")

    @classmethod
    def standard(cls, g: int, closed: bool = False) -> "MgNg":
        """The reference parameter choice y_i = i + 1, y_close = g + 1."""
        return cls(g=g, ys=tuple(i + 1 for i in range(1, g)), y_close=g + 1, closed=closed)

    def _open_gram(self) -> IntMatrix:
        m = _genus1_block(13)
        for y in self.ys:
            m = _assemble(4 * y * y, [(m.rows[0], m), ((4, 2), _genus1_block(12))])
        return m

    def build_gram(self) -> IntMatrix:
        self.validate()
        m = self._open_gram()
        if not self.closed:
            return m
        return _assemble(self.y_close * self.y_close, [(_halved(m.rows[0]), m)])

    def intersection_grid(self) -> IntersectionGrid:
        self.validate()
        rows = _g1_grid_rows(13)
        a = 1
        for y in self.ys:
            rows = _tower_step_rows(rows, y * y - a - 1, _g1_grid_rows(12))
            a = y * y
        if self.closed:
            rows = _closed_cap_rows(rows, self.y_close * self.y_close - a)
        return IntersectionGrid(rows)

    def build_bordered(self) -> BorderedGram:
        self.validate()
        if self.closed:
            m = self._open_gram()
            core = _assemble(0, [(_halved(m.rows[0]), m)])
            return BorderedGram(core=core, c=1, p=2, y_lower=self.ys[-1] + 1, label="MgNg closed")
        if self.g == 2:
            inner = _genus1_block(13)
            lower = 2
        else:
            inner = replace(self, g=self.g - 1, ys=self.ys[:-1], closed=False)._open_gram()
            lower = math.isqrt(inner.entry(0, 0) // 4 + 1) + 1
        core = _assemble(0, [(inner.rows[0], inner), ((4, 2), _genus1_block(12))])
        return BorderedGram(core=core, c=4, p=2, y_lower=lower, label="MgNg open")


FamilySpec = Union[
    G1Block,
    ThurstonInductive,
    ThurstonClosed,
    TorelliG2Block,
    TorelliG1Block,
    TorelliTower,
    Genus3Closed,
    Block1,
    Block2,
    Block3,
    KBlock,
    KBlockClosed,
    SmallDegree,
    MgNg,
]

VARIANTS: dict[str, type] = {
    cls.variant: cls
    for cls in (
        G1Block,
        ThurstonInductive,
        ThurstonClosed,
        TorelliG2Block,
        TorelliG1Block,
        TorelliTower,
        Genus3Closed,
        Block1,
        Block2,
        Block3,
        KBlock,
        KBlockClosed,
        SmallDegree,
        MgNg,
    )
}


# -- module-level API ---------------------------------------------------------------


def validate(spec: FamilySpec) -> None:
    spec.validate()


def build_gram(spec: FamilySpec) -> IntMatrix:
    return spec.build_gram()


def build_bordered(spec: FamilySpec) -> BorderedGram:
    return spec.build_bordered()


def intersection_grid(spec: FamilySpec) -> IntersectionGrid:
    return spec.intersection_grid()


@dataclass(frozen=True)
class HilbertResult:
    """Outcome of a specialization search: the smallest certified y, or
    exhaustion (y is None) with the per-candidate status log."""

    y: "int | None"
    verdict: "IrreducibilityVerdict | None"
    tried: tuple[tuple[int, str], ...]

    @property
    def exhausted(self) -> bool:
        return self.y is None


def hilbert_search(
    b: "BorderedGram | ParametricGram",
    y_min: int,
    y_max: int,
    prime_budget: int = 500,
) -> HilbertResult:
    """Smallest y in [y_min, y_max] whose specialized matrix has a certified
    irreducible characteristic polynomial."""
    if y_min > y_max:
        raise ValueError("empty search range: y_min must not exceed y_max")
    if y_min < b.y_lower:
        raise ValueError(f"y_min = {y_min} is below the family lower bound {b.y_lower}")
    log: list[tuple[int, str]] = []
    for y in range(y_min, y_max + 1):
        chi = char_poly(b.specialize(y))
        verdict = certify_irreducible(chi, prime_budget=prime_budget)
        log.append((y, verdict.status))
        if verdict.is_irreducible:
            return HilbertResult(y=y, verdict=verdict, tried=tuple(log))
    return HilbertResult(y=None, verdict=None, tried=tuple(log))


# -- JSON round-trip -------------------------------------------------------------------


def spec_to_json(spec: FamilySpec) -> dict:
    params: dict = {}
    for f in fields(spec):
        v = getattr(spec, f.name)
        if isinstance(v, (G1Block, ThurstonInductive, KBlock)):
            v = spec_to_json(v)
        elif isinstance(v, frozenset):
            v = sorted(v)
        elif isinstance(v, tuple):
            v = [list(x) if isinstance(x, tuple) else x for x in v]
        params[f.name] = v
    return {"variant": spec.variant, "params": params}


def spec_from_json(obj: dict) -> FamilySpec:
    try:
        name = obj["variant"]
        params = dict(obj.get("params", {}))
    except (TypeError, KeyError) as exc:
        raise ValueError("family spec must be {'variant': name, 'params': {...}}") from exc
    cls = VARIANTS.get(name)
    if cls is None:
        raise ValueError(f"unknown family variant {name!r} (known: {', '.join(sorted(VARIANTS))})")
    known = {f.name for f in fields(cls)}
    extra = set(params) - known
    if extra:
        raise ValueError(f"{name}: unknown parameters {sorted(extra)}")
    converted: dict = {}
    try:
        for f in fields(cls):
            if f.name not in params:
                continue
            v = params[f.name]
            if f.name == "inner":
                v = spec_from_json(v)
            elif f.name == "dropped":
                v = frozenset(int(x) for x in v) if not isinstance(v, int) else frozenset((v,))
            elif f.name == "steps":
                v = tuple((int(a), int(b)) for a, b in v)
            elif f.name in ("ys", "zs"):
                # a single handle may be given as a bare number
                v = (int(v),) if isinstance(v, int) else tuple(int(x) for x in v)
            elif f.name == "closed":
                v = bool(v)
            elif v is not None:
                v = int(v)
            converted[f.name] = v
        return cls(**converted)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{name}: missing or malformed parameters ({exc})") from exc
