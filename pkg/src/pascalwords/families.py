"""Initial sequences: four binomial-coefficient families plus custom input.

Each named family fixes a base sequence of binomial coefficients together
with a word model (the words whose counts the sequence gives); custom
sequences carry values only and have no word model.
"""

from dataclasses import dataclass
from pathlib import Path

ROW = "row"
DIAGONAL = "diagonal"
CENTRAL = "central"
CENTRAL_ADJACENT = "central-adjacent"
CUSTOM = "custom"

KINDS = (ROW, DIAGONAL, CENTRAL, CENTRAL_ADJACENT, CUSTOM)

#: Default truncation bound for sequences built without an explicit length.
DEFAULT_N_MAX = 64


@dataclass(frozen=True)
class FamilySpec:
    """Tagged choice of base family.

    ``a`` is required (and >= 1) for the row and diagonal families;
    ``custom_values`` is the nonempty 1-indexed value tuple for ``custom``.
    """

    kind: str
    a: int | None = None
    custom_values: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.kind in (ROW, DIAGONAL):
            if self.a is None or self.a < 1:
                raise ValueError(f"{self.kind} family needs a parameter a >= 1")
        elif self.a is not None:
            raise ValueError(f"{self.kind} family takes no parameter a")
        if self.kind == CUSTOM:
            if not self.custom_values:
                raise ValueError("custom family needs a nonempty value tuple")
        elif self.custom_values is not None:
            raise ValueError(f"{self.kind} family takes no custom values")

    @staticmethod
    def row(a: int) -> "FamilySpec":
        return FamilySpec(ROW, a=a)

    @staticmethod
    def diagonal(a: int) -> "FamilySpec":
        return FamilySpec(DIAGONAL, a=a)

    @staticmethod
    def central() -> "FamilySpec":
        return FamilySpec(CENTRAL)

    @staticmethod
    def central_adjacent() -> "FamilySpec":
        return FamilySpec(CENTRAL_ADJACENT)

    @staticmethod
    def custom(values) -> "FamilySpec":
        return FamilySpec(CUSTOM, custom_values=tuple(int(v) for v in values))

    def label(self) -> str:
        if self.kind in (ROW, DIAGONAL):
            return f"{self.kind}(a={self.a})"
        if self.kind == CUSTOM:
            return f"custom[{len(self.custom_values)}]"
        return self.kind


@dataclass(frozen=True)
class Seq:
    """A truncated, 1-indexed integer sequence.

    ``values[0]`` holds the value at index 1; call the object with an index
    in 1..n_max to read a value. ``origin`` records where the sequence came
    from (family label, transform lineage, or file).
    """

    values: tuple[int, ...]
    origin: str = ""

    def __post_init__(self):
        if not self.values:
            raise ValueError("sequence must hold at least one value")

    @property
    def n_max(self) -> int:
        return len(self.values)

    def __call__(self, n: int) -> int:
        if not 1 <= n <= len(self.values):
            raise IndexError(f"index {n} outside 1..{len(self.values)}")
        return self.values[n - 1]


def base_value(spec: FamilySpec, n: int) -> int:
    """Value at index n (>= 1) of the family's base sequence."""
    from .kernel import binomial

    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    if spec.kind == ROW:
        return binomial(spec.a, n - 1)
    if spec.kind == DIAGONAL:
        return binomial(n + spec.a - 2, spec.a - 1)
    if spec.kind == CENTRAL:
        return binomial(2 * n - 2, n - 1)
    if spec.kind == CENTRAL_ADJACENT:
        return binomial(2 * n - 1, n)
    # custom
    if n > len(spec.custom_values):
        raise IndexError(
            f"custom sequence has {len(spec.custom_values)} values, index {n} requested"
        )
    return spec.custom_values[n - 1]


def base_sequence(spec: FamilySpec, n_max: int = DEFAULT_N_MAX) -> Seq:
    """The base sequence truncated to indices 1..n_max."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return Seq(tuple(base_value(spec, n) for n in range(1, n_max + 1)), spec.label())


def word_length(spec: FamilySpec, i: int) -> int:
    """Length of the words counted by the base value at index i.

    Row/diagonal words have length i-1; central words 2i-2; central-adjacent
    words 2i-1. Custom sequences carry no word model.
    """
    if spec.kind == CUSTOM:
        raise ValueError("custom sequences have no word model")
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    if spec.kind in (ROW, DIAGONAL):
        return i - 1
    if spec.kind == CENTRAL:
        return 2 * i - 2
    return 2 * i - 1


def load_custom_values(path) -> FamilySpec:
    """Read a custom sequence from a text file: one integer per line, 1-indexed.

    Blank lines and lines starting with '#' are skipped.
    """
    values = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            values.append(int(stripped))
        except ValueError:
            raise ValueError(f"{path}:{lineno}: not an integer: {stripped!r}") from None
    if not values:
        raise ValueError(f"{path}: no values found")
    return FamilySpec.custom(values)
