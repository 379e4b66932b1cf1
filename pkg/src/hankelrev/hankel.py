"""Hankel matrices, exact integer determinants, and binomial transforms.

Sequences are plain lists of arbitrary-precision ints.  Determinants use
the Bareiss fraction-free elimination: every intermediate entry is a minor
of the input matrix, every division is exact, and no rationals appear.
"""

from __future__ import annotations

import csv
import io
import json
import math
import operator
from dataclasses import dataclass
from typing import Sequence


def hankel_matrix(terms: Sequence[int], n: int) -> list[list[int]]:
    """The (n+1) x (n+1) matrix with entry (i, j) = terms[i + j]."""
    if n < 0:
        raise ValueError("matrix index must be non-negative")
    needed = 2 * n + 1
    if len(terms) < needed:
        raise ValueError(
            f"hankel matrix of index {n} needs at least {needed} terms,"
            f" got {len(terms)}"
        )
    return [[operator.index(terms[i + j]) for j in range(n + 1)] for i in range(n + 1)]


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix, by Bareiss elimination.

    Row swaps (with sign tracking) handle zero pivots; a pivot column that
    is zero from the pivot row down means the determinant is zero.
    """
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square and non-empty")
    m = [[operator.index(x) for x in row] for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((r for r in range(k + 1, n) if m[r][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                quotient, remainder = divmod(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev)
                assert remainder == 0  # Bareiss intermediates are exact minors
                m[i][j] = quotient
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def hankel_transform(terms: Sequence[int], depth: int) -> list[int]:
    """Determinants of the Hankel matrices of index 0..depth."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    needed = 2 * depth + 1
    if len(terms) < needed:
        raise ValueError(
            f"hankel transform of depth {depth} needs at least {needed} terms,"
            f" got {len(terms)}"
        )
    return [det_exact(hankel_matrix(terms, n)) for n in range(depth + 1)]


@dataclass(frozen=True)
class HankelTriple:
    """Hankel transforms of a sequence and of its first and second shifts."""

    h: tuple[int, ...]
    h_star: tuple[int, ...]
    h_star_star: tuple[int, ...]
    depth: int

    def __post_init__(self) -> None:
        expected = self.depth + 1
        if not (len(self.h) == len(self.h_star) == len(self.h_star_star) == expected):
            raise ValueError("each transform must carry depth + 1 entries")

    def rows(self) -> list[tuple[int, int, int, int]]:
        return [
            (n, self.h[n], self.h_star[n], self.h_star_star[n])
            for n in range(self.depth + 1)
        ]

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["n", "h", "h_star", "h_star_star"])
        for row in self.rows():
            writer.writerow([str(v) for v in row])
        return buffer.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "depth": str(self.depth),
                "h": [str(v) for v in self.h],
                "h_star": [str(v) for v in self.h_star],
                "h_star_star": [str(v) for v in self.h_star_star],
            }
        )


def hankel_triple(terms: Sequence[int], depth: int) -> HankelTriple:
    """Hankel transforms of ``terms``, ``terms[1:]`` and ``terms[2:]``."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    needed = 2 * depth + 3
    if len(terms) < needed:
        raise ValueError(
            f"hankel triple of depth {depth} needs at least {needed} terms,"
            f" got {len(terms)}"
        )
    return HankelTriple(
        h=tuple(hankel_transform(terms, depth)),
        h_star=tuple(hankel_transform(terms[1:], depth)),
        h_star_star=tuple(hankel_transform(terms[2:], depth)),
        depth=depth,
    )


def binomial_transform(terms: Sequence[int]) -> list[int]:
    """b_n = sum_k C(n, k) * a_k, same length as the input."""
    return [
        sum(math.comb(n, k) * operator.index(terms[k]) for k in range(n + 1))
        for n in range(len(terms))
    ]


def inverse_binomial_transform(terms: Sequence[int]) -> list[int]:
    """a_n = sum_k (-1)^(n-k) * C(n, k) * b_k; inverts binomial_transform."""
    return [
        sum(
            (-1) ** (n - k) * math.comb(n, k) * operator.index(terms[k])
            for k in range(n + 1)
        )
        for n in range(len(terms))
    ]


def pascal_matrix(n: int) -> list[list[int]]:
    """Lower-triangular (n+1) x (n+1) matrix of binomial coefficients."""
    if n < 0:
        raise ValueError("matrix index must be non-negative")
    rows: list[list[int]] = [[1]]
    for i in range(1, n + 1):
        prev = rows[-1]
        rows.append([1] + [prev[k - 1] + prev[k] for k in range(1, i)] + [1])
    return [row + [0] * (n + 1 - len(row)) for row in rows]


def sequence_to_json(terms: Sequence[int]) -> str:
    """Serialize a sequence as a JSON array of decimal strings."""
    return json.dumps([str(operator.index(t)) for t in terms])


def sequence_from_json(text: str) -> list[int]:
    data = json.loads(text)
    if not isinstance(data, list) or not all(isinstance(s, str) for s in data):
        raise ValueError("expected a JSON array of decimal strings")
    return [int(s) for s in data]
