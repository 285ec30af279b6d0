"""OEIS b-file parsing, rendering, and prefix comparison.

A b-file is plain text, one "index value" pair per line, LF endings,
optionally preceded or interleaved with comment lines starting with '#'.
Indices must be strictly increasing. Sequence comparison aligns a computed
1-indexed prefix against the file under a small constant index shift, since
the file's offset need not be 1.
"""

from dataclasses import dataclass
from pathlib import Path

#: Index shifts tried during alignment, in preference order.
ALIGNMENT_SHIFTS = (0, -1, 1, -2, 2)


@dataclass(frozen=True)
class BFile:
    """Ordered (index, value) pairs with strictly increasing indices."""

    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        indices = [i for i, _ in self.entries]
        if any(b <= a for a, b in zip(indices, indices[1:])):
            raise ValueError("b-file indices must be strictly increasing")

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def parse_bfile(text: str) -> BFile:
    """Parse b-file text; raises ValueError on malformed lines."""
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {line!r}")
        try:
            entries.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {line!r}") from None
    return BFile(tuple(entries))


def render_bfile(bfile: BFile) -> str:
    """Render as canonical b-file text (LF endings, no comments)."""
    return "".join(f"{i} {v}\n" for i, v in bfile.entries)


def load_bfile(path) -> BFile:
    return parse_bfile(Path(path).read_text())


@dataclass(frozen=True)
class SequenceMatch:
    """Outcome of aligning a computed prefix against a b-file.

    ``shift`` is the chosen index shift (computed index n is compared with
    file index n + shift), or None when no shift gives any overlap.
    ``compared`` lists (n, computed, file value) over the overlap at that
    shift; ``mismatches`` is its disagreeing subset.
    """

    shift: int | None
    compared: tuple[tuple[int, int, int], ...]
    mismatches: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return self.shift is not None and not self.mismatches

    @property
    def empty(self) -> bool:
        return not self.compared


def match_sequence(values, bfile: BFile) -> SequenceMatch:
    """Align 1-indexed ``values`` (list or Seq.values) with ``bfile``.

    Tries each shift in ALIGNMENT_SHIFTS; a shift with full agreement and
    the largest overlap wins. If none agrees, the shift with the fewest
    mismatches (largest overlap on ties) is reported as a witness.
    """
    values = tuple(values)
    table = bfile.as_dict()
    candidates = []
    for shift in ALIGNMENT_SHIFTS:
        compared = tuple(
            (n, values[n - 1], table[n + shift])
            for n in range(1, len(values) + 1)
            if n + shift in table
        )
        if not compared:
            continue
        mismatches = tuple(row for row in compared if row[1] != row[2])
        candidates.append((len(mismatches), -len(compared), shift, compared, mismatches))
    if not candidates:
        return SequenceMatch(None, (), ())
    # fewest mismatches, then widest overlap; ALIGNMENT_SHIFTS order breaks ties
    best = min(candidates, key=lambda c: (c[0], c[1], ALIGNMENT_SHIFTS.index(c[2])))
    return SequenceMatch(best[2], best[3], best[4])
