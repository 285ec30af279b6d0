"""Convolution triangles, the invert transform, and base-triangle lifts.

The triangle entry at (n, k) is the sum, over all ordered k-tuples of
positive integers summing to n, of the products of the input sequence at
those indices. Summing a row gives one application of the invert transform
(generating functions: G = F / (1 - F)); iterating it produces the higher
levels. The lift formulas express any level's entries through the level-1
triangle alone.
"""

from dataclasses import dataclass
from functools import reduce

from .families import DEFAULT_N_MAX, FamilySpec, Seq, base_sequence
from .kernel import binomial, compositions


@dataclass(frozen=True)
class ConvolutionTriangle:
    """Table of k-fold convolution sums for 1 <= k <= n <= n_max.

    ``rows[n-1][k-1]`` holds the (n, k) entry. ``m`` tags the transform
    level the triangle belongs to (its first column is the level-(m-1)
    sequence); ``origin`` records the input sequence's lineage.
    """

    rows: tuple[tuple[int, ...], ...]
    m: int = 1
    origin: str = ""

    @property
    def n_max(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> int:
        """Entry at (n, k); 0 outside 1 <= k <= n, error for n out of range."""
        if not 1 <= n <= len(self.rows):
            raise IndexError(f"row {n} outside 1..{len(self.rows)}")
        if k < 1 or k > n:
            return 0
        return self.rows[n - 1][k - 1]

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= len(self.rows):
            raise IndexError(f"row {n} outside 1..{len(self.rows)}")
        return self.rows[n - 1]

    def row_sum(self, n: int) -> int:
        return sum(self.row(n))


def convolution_triangle(f: Seq, n_max: int | None = None, m: int = 1) -> ConvolutionTriangle:
    """Build the triangle for ``f`` by the column recurrence.

    Column 1 is ``f`` itself; each further column convolves ``f`` against
    the previous one: entry(n, k) = sum over i of f(i) * entry(n-i, k-1).
    """
    if n_max is None:
        n_max = f.n_max
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > f.n_max:
        raise ValueError(f"n_max {n_max} exceeds sequence truncation {f.n_max}")
    values = f.values
    rows = [[values[n - 1]] for n in range(1, n_max + 1)]
    for n in range(2, n_max + 1):
        row = rows[n - 1]
        for k in range(2, n + 1):
            row.append(
                sum(values[i - 1] * rows[n - i - 1][k - 2] for i in range(1, n - k + 2))
            )
    return ConvolutionTriangle(tuple(tuple(r) for r in rows), m=m, origin=f.origin)


def convolution_by_definition(f: Seq, n: int, k: int) -> int:
    """Entry at (n, k) evaluated straight from the composition sum.

    Exponential in n; kept as the independent slow route the recurrence is
    checked against.
    """
    if not 1 <= k <= n <= f.n_max:
        raise ValueError(f"need 1 <= k <= n <= {f.n_max}, got ({n}, {k})")
    return sum(
        reduce(lambda acc, i: acc * f(i), parts, 1) for parts in compositions(n, k)
    )


def invert_transform(f: Seq) -> Seq:
    """One application of the invert transform: row sums of f's triangle."""
    triangle = convolution_triangle(f)
    return Seq(
        tuple(triangle.row_sum(n) for n in range(1, f.n_max + 1)),
        origin=f"invert({f.origin})" if f.origin else "invert",
    )


def family_sequence(spec: FamilySpec, m: int, n_max: int = DEFAULT_N_MAX) -> Seq:
    """The family's sequence after m invert transforms; m = 0 is the base."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    seq = base_sequence(spec, n_max)
    for _ in range(m):
        seq = invert_transform(seq)
    if m > 0:
        seq = Seq(seq.values, origin=f"invert^{m}({spec.label()})")
    return seq


def family_triangle(spec: FamilySpec, m: int, n_max: int = DEFAULT_N_MAX) -> ConvolutionTriangle:
    """Level-m triangle: convolution triangle of the level-(m-1) sequence."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return convolution_triangle(family_sequence(spec, m - 1, n_max), m=m)


def lift_triangle_entry(base: ConvolutionTriangle, m: int, n: int, k: int) -> int:
    """Level-m entry at (n, k) computed from the level-1 triangle.

    Sum over i from k to n of (m-1)^(i-k) * C(i-1, k-1) * base(n, i),
    with 0**0 = 1 so m = 1 returns the base entry itself.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not 1 <= k <= n <= base.n_max:
        raise IndexError(f"need 1 <= k <= n <= {base.n_max}, got ({n}, {k})")
    return sum(
        (m - 1) ** (i - k) * binomial(i - 1, k - 1) * base.entry(n, i)
        for i in range(k, n + 1)
    )


def lift_sequence_entry(base: ConvolutionTriangle, m: int, n: int) -> int:
    """Level-m sequence value at n from the level-1 triangle.

    Sum over i from 1 to n of m^(i-1) * base(n, i).
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not 1 <= n <= base.n_max:
        raise IndexError(f"need 1 <= n <= {base.n_max}, got {n}")
    return sum(m ** (i - 1) * base.entry(n, i) for i in range(1, n + 1))


def triangle_to_csv(triangle: ConvolutionTriangle) -> str:
    """CSV serialization with header n,k,value, one entry per line."""
    lines = ["n,k,value"]
    for n in range(1, triangle.n_max + 1):
        for k, value in enumerate(triangle.row(n), start=1):
            lines.append(f"{n},{k},{value}")
    return "\n".join(lines) + "\n"


def triangle_to_tsv(triangle: ConvolutionTriangle) -> str:
    """Row-per-n TSV layout: line n holds the n values of row n."""
    return (
        "\n".join(
            "\t".join(str(v) for v in triangle.row(n))
            for n in range(1, triangle.n_max + 1)
        )
        + "\n"
    )
