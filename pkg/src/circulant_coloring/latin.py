"""Commutative idempotent anti-circulant Latin squares of odd order.

The closed form (1-indexed, order q = 2k+1, entries reduced into 1..q):

    l[i][j] = m        if i + j = 2m
    l[i][j] = k+1+m    if i + j = 2m+1

Both branches depend on (i + j) mod 2q only, which makes every row a left
cyclic shift of the previous one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenOrder, IOutOfRange


def _reduce(x: int, q: int) -> int:
    return (x - 1) % q + 1


@dataclass(frozen=True)
class LatinSquare:
    """Order-q square; entries[i][j] holds l_{i+1,j+1} in 1..q."""

    order: int
    entries: tuple[tuple[int, ...], ...]

    def cell(self, i: int, j: int) -> int:
        """1-indexed access, matching the closed-form notation."""
        return self.entries[i - 1][j - 1]

    def rows(self):
        return [list(r) for r in self.entries]


def build_commutative_idempotent(q: int) -> LatinSquare:
    """The closed-form square of odd order q; raises EvenOrder otherwise.

    No idempotent commutative Latin square of even order exists, so even q
    is rejected rather than approximated.
    """
    if q < 1 or q % 2 == 0:
        raise EvenOrder("order must be odd and positive, got %d" % q)
    k = (q - 1) // 2
    rows = []
    for i in range(1, q + 1):
        row = []
        for j in range(1, q + 1):
            s = i + j
            if s % 2 == 0:
                val = s // 2
            else:
                val = k + 1 + (s - 1) // 2
            row.append(_reduce(val, q))
        rows.append(tuple(row))
    return LatinSquare(q, tuple(rows))


def closed_form_entry(q: int, i: int, j: int) -> int:
    """Single cell of the order-q square without building the whole array."""
    if q % 2 == 0:
        raise EvenOrder("order must be odd, got %d" % q)
    k = (q - 1) // 2
    s = (i + j - 2) % (2 * q) + 2  # closed form depends on (i+j) mod 2q
    if s % 2 == 0:
        return _reduce(s // 2, q)
    return _reduce(k + 1 + (s - 1) // 2, q)


def is_latin(sq: LatinSquare) -> bool:
    q = sq.order
    want = set(range(1, q + 1))
    for i in range(q):
        if set(sq.entries[i]) != want:
            return False
        if {sq.entries[j][i] for j in range(q)} != want:
            return False
    return True


def is_commutative(sq: LatinSquare) -> bool:
    q = sq.order
    return all(
        sq.entries[i][j] == sq.entries[j][i] for i in range(q) for j in range(i + 1, q)
    )


def is_idempotent(sq: LatinSquare) -> bool:
    return all(sq.entries[i][i] == i + 1 for i in range(sq.order))


def is_anticirculant(sq: LatinSquare) -> bool:
    """Each row equals the previous row shifted one position to the left."""
    q = sq.order
    for i in range(1, q):
        if sq.entries[i] != sq.entries[i - 1][1:] + sq.entries[i - 1][:1]:
            return False
    return True


def excise_block(sq: LatinSquare, k: int, i: int):
    """Cut the triangular tableau D out of an order-(k+i) square.

    D holds the cells whose column exceeds the row by at least k+1
    (1-indexed), i.e. the top-right triangle starting at column k+2 of row
    1.  Returns (core, d) where core is the square with D and its
    transpose blanked to None, and d maps (row, col) -> entry.  For i = 1
    the square is used whole and D is empty.
    """
    q = sq.order
    if q != k + i:
        raise IOutOfRange("square order %d != k+i = %d" % (q, k + i))
    if not 1 <= i <= k + 1:
        raise IOutOfRange("need 1 <= i <= k+1, got i=%d k=%d" % (i, k))
    d = {}
    core = [list(row) for row in sq.entries]
    for r in range(1, q + 1):
        for c in range(r + k + 1, q + 1):
            d[(r, c)] = sq.cell(r, c)
            core[r - 1][c - 1] = None
            core[c - 1][r - 1] = None
    return core, d


def reconstruct_from_excision(core, d, q: int) -> LatinSquare:
    """Inverse of excise_block: core plus D plus its transpose."""
    rows = [list(r) for r in core]
    for (r, c), val in d.items():
        rows[r - 1][c - 1] = val
        rows[c - 1][r - 1] = val
    return LatinSquare(q, tuple(tuple(r) for r in rows))


def to_csv_rows(sq_or_core) -> list[list[str]]:
    """Plain integer grid; None cells (excised) render blank."""
    rows = sq_or_core.rows() if isinstance(sq_or_core, LatinSquare) else sq_or_core
    return [["" if v is None else str(v) for v in row] for row in rows]
