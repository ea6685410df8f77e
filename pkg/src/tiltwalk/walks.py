"""Exact enumeration of half-line walks and their mod-ell constrained variant.

The classical count ``a[n][m]`` is the number of length-``n`` paths on the
nonnegative integers with steps of +-1 that start at 0 and end at ``m``.  The
constrained count ``b[n][m]`` obeys the same step rule except that the
recursion is modified according to the residue of ``m`` modulo ``ell``:

* ``m = -1 (mod ell)``: ``b[n][m] = a[n][m]`` (copied from the classical walk),
* ``m = m0 (mod ell)`` with ``0 <= m0 < ell - 2``: both neighbours contribute,
* ``m = -2 (mod ell)``: only the left neighbour contributes.

For ``ell = 2`` the middle case is empty.  ``b[n][m]`` equals the multiplicity
of the indecomposable tilting module ``T(m)`` in the n-th tensor power of the
two dimensional tilting module of quantum sl2 at quantum characteristic
``ell``, which is why these counts are exact integers and are kept exact here:
no floating point enters this module.

Tables are immutable after construction and safe for concurrent readers.
Dense tables cost O(N^2) entries of up to N bits each; the ``sequences`` /
``classical_row_sums`` helpers stream two rows at a time so row sums can reach
large n without materialising the table.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator


@dataclass(frozen=True)
class CountTable:
    """Triangular table of walk counts; row ``n`` holds endpoints ``0..n``.

    ``kind`` is ``"classical"`` or ``"modular"``; the latter carries ``ell``.
    """

    rows: tuple[tuple[int, ...], ...]
    kind: str
    ell: int | None = None

    @property
    def order(self) -> int:
        """Largest row index stored."""
        return len(self.rows) - 1

    def entry(self, n: int, m: int) -> int:
        """Count at row ``n``, endpoint ``m``; zero outside the triangle."""
        if n < 0 or n > self.order:
            raise IndexError(f"row {n} not in table of order {self.order}")
        if m < 0 or m > n:
            return 0
        return self.rows[n][m]


@dataclass(frozen=True)
class GrowthSequence:
    """A sequence of exact nonnegative integer counts with a provenance tag."""

    values: tuple[int, ...]
    label: str

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class WalkSequences:
    """Row sums streamed in one pass: classical ``a``, constrained ``b``,
    and the wall counts ``w`` (classical mass on endpoints ``= -1 mod ell``)."""

    ell: int
    a: GrowthSequence
    b: GrowthSequence
    w: GrowthSequence


def _check_ell(ell: int) -> None:
    if ell < 2:
        raise ValueError(f"modulus must be at least 2, got {ell}")


def _stream_rows(n_max: int, ell: int | None) -> Iterator[tuple[int, list[int], list[int] | None]]:
    """Yield ``(n, a_row, b_row)`` for ``n = 0..n_max``; ``b_row`` is None in
    classical-only mode.  Rows are reused by the caller only until the next
    iteration step."""
    if n_max < 0:
        raise ValueError(f"truncation order must be nonnegative, got {n_max}")
    a = [1]
    b: list[int] | None = [1] if ell is not None else None
    yield 0, a, b
    for n in range(1, n_max + 1):
        a_next = [0] * (n + 1)
        # only endpoints with m = n (mod 2) are reachable
        for m in range(n % 2, n + 1, 2):
            left = a[m - 1] if m >= 1 else 0
            right = a[m + 1] if m + 1 < n else 0
            a_next[m] = left + right
        b_next: list[int] | None = None
        if ell is not None and b is not None:
            b_next = [0] * (n + 1)
            for m in range(n % 2, n + 1, 2):
                m0 = m % ell
                if m0 == ell - 1:
                    b_next[m] = a_next[m]
                elif m0 == ell - 2:
                    b_next[m] = b[m - 1] if m >= 1 else 0
                else:
                    left = b[m - 1] if m >= 1 else 0
                    right = b[m + 1] if m + 1 < n else 0
                    b_next[m] = left + right
        a = a_next
        b = b_next
        yield n, a, b


def classical_table(n_max: int) -> CountTable:
    """Table of the unconstrained half-line walk up to row ``n_max``."""
    rows = tuple(tuple(a) for _, a, _ in _stream_rows(n_max, None))
    return CountTable(rows=rows, kind="classical")


def modular_table(ell: int, n_max: int) -> CountTable:
    """Table of the mod-``ell`` constrained walk up to row ``n_max``."""
    _check_ell(ell)
    rows = tuple(tuple(b) for _, _, b in _stream_rows(n_max, ell) if b is not None)
    return CountTable(rows=rows, kind="modular", ell=ell)


def ballot_formula(n: int, m: int) -> int:
    """Closed form for the classical count: C(n,(n-m)/2) - C(n,(n-m)/2-1).

    Zero when ``m > n`` or ``m`` and ``n`` have different parity.
    """
    if n < 0 or m < 0:
        raise ValueError("step count and endpoint must be nonnegative")
    if m > n or (n - m) % 2 != 0:
        return 0
    j = (n - m) // 2
    second = math.comb(n, j - 1) if j >= 1 else 0
    return math.comb(n, j) - second


def row_sum(table: CountTable, n: int) -> int:
    """Total count of walks of length ``n`` regardless of endpoint."""
    if n < 0 or n > table.order:
        raise IndexError(f"row {n} not in table of order {table.order}")
    return sum(table.rows[n])


def residue_sum(table: CountTable, n: int, r: int, ell: int) -> int:
    """Sum of row ``n`` over endpoints congruent to ``r`` modulo ``ell``.

    Only meaningful for the classical table (the constrained table thins
    residue classes by construction), so other kinds are rejected.
    """
    _check_ell(ell)
    if table.kind != "classical":
        raise ValueError("residue sums are defined on the classical table")
    if not 0 <= r < ell:
        raise ValueError(f"residue {r} not in range 0..{ell - 1}")
    if n < 0 or n > table.order:
        raise IndexError(f"row {n} not in table of order {table.order}")
    return sum(table.rows[n][m] for m in range(r, n + 1, ell))


def wall_count(ell: int, n: int) -> int:
    """Classical mass on endpoints ``m`` with ``m + 1 = 0 (mod ell)``.

    This is the number of wall summands in the n-th tensor power of the two
    dimensional tilting module; computed by streaming, no table is stored.
    """
    _check_ell(ell)
    if n < 0:
        raise ValueError(f"row index must be nonnegative, got {n}")
    for k, a_row, _ in _stream_rows(n, None):
        if k == n:
            return sum(a_row[m] for m in range(ell - 1, n + 1, ell))
    raise AssertionError("unreachable")


def classical_row_sums(n_max: int) -> GrowthSequence:
    """Streamed row sums of the classical table for ``n = 0..n_max``."""
    values = tuple(sum(a) for _, a, _ in _stream_rows(n_max, None))
    return GrowthSequence(values=values, label="halfline")


def classical_residue_sums(ell: int, r: int, n_max: int) -> GrowthSequence:
    """Streamed residue-class sums of the classical table."""
    _check_ell(ell)
    if not 0 <= r < ell:
        raise ValueError(f"residue {r} not in range 0..{ell - 1}")
    values = tuple(
        sum(a[m] for m in range(r, n + 1, ell)) for n, a, _ in _stream_rows(n_max, None)
    )
    return GrowthSequence(values=values, label=f"halfline residue {r} mod {ell}")


def sequences(ell: int, n_max: int) -> WalkSequences:
    """Stream ``a_n``, ``b_n`` and the wall counts ``w_n`` in a single pass."""
    _check_ell(ell)
    a_vals: list[int] = []
    b_vals: list[int] = []
    w_vals: list[int] = []
    for n, a_row, b_row in _stream_rows(n_max, ell):
        assert b_row is not None
        a_vals.append(sum(a_row))
        b_vals.append(sum(b_row))
        w_vals.append(sum(a_row[m] for m in range(ell - 1, n + 1, ell)))
    return WalkSequences(
        ell=ell,
        a=GrowthSequence(tuple(a_vals), "halfline"),
        b=GrowthSequence(tuple(b_vals), f"mod-{ell} constrained"),
        w=GrowthSequence(tuple(w_vals), f"wall counts mod {ell}"),
    )


def table_to_csv(table: CountTable) -> str:
    """Render as a square matrix, rows padded with zeros, LF line endings."""
    size = table.order + 1
    lines = []
    for row in table.rows:
        padded = list(row) + [0] * (size - len(row))
        lines.append(",".join(str(v) for v in padded))
    return "\n".join(lines) + "\n"


def table_to_json(table: CountTable) -> str:
    """Render the triangular rows with entries as decimal strings.

    Strings rather than numbers: entries outgrow 64-bit integers quickly and
    many JSON consumers silently truncate.
    """
    payload = {
        "kind": table.kind,
        "ell": table.ell,
        "order": table.order,
        "rows": [[str(v) for v in row] for row in table.rows],
    }
    return json.dumps(payload, indent=2)


def table_from_json(text: str) -> CountTable:
    """Inverse of :func:`table_to_json`."""
    payload = json.loads(text)
    rows = tuple(tuple(int(v) for v in row) for row in payload["rows"])
    return CountTable(rows=rows, kind=payload["kind"], ell=payload["ell"])
