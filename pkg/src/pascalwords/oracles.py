"""Brute-force enumeration of the restricted words and paths the formulas count.

These are the ground-truth counters every closed form and triangle is checked
against. They favor being obviously correct over being fast: words are
generated exhaustively and filtered, Dyck paths are enumerated step by step,
and only the lattice-path counter uses dynamic programming. Hard caps guard
against accidental runaway enumeration.

Word conventions, fixed once for all counters:

* Letters below the family parameter ``a`` are "low"; a word is checked by
  its maximal contiguous runs of low letters (the blocks between higher
  letters), never by scattered subsequences. The ``reading`` keyword exposes
  the scattered-subsequence alternative for side-by-side comparison.
* "Ascending" runs are strictly increasing; "no-rise" runs are weakly
  decreasing.
"""

import itertools
from functools import lru_cache

from .families import CENTRAL, CENTRAL_ADJACENT, CUSTOM, DIAGONAL, ROW, FamilySpec
from .kernel import compositions

#: A word is a tuple of letters; a Dyck path a tuple of +1/-1 steps.
Word = tuple[int, ...]
DyckPath = tuple[int, ...]

MAX_WORD_LENGTH = 16
MAX_ENUMERATION = 1 << 26
MAX_DYCK_SEMILENGTH = 12

READINGS = ("block", "subsequence")


def _guard_enumeration(alphabet_size: int, length: int) -> None:
    if length > MAX_WORD_LENGTH:
        raise ValueError(
            f"word length {length} exceeds the enumeration cap {MAX_WORD_LENGTH}"
        )
    if alphabet_size**max(length, 0) > MAX_ENUMERATION:
        raise ValueError(
            f"enumerating {alphabet_size}**{length} words exceeds the search budget"
        )


def _check_nk(n: int, k: int) -> None:
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")


# ---------------------------------------------------------------------------
# Run-restricted words over {0..a+m-1} (low letters restricted, rest free)


def _low_runs_ok(word: Word, a: int, ascending: bool) -> bool:
    prev = -1
    for x in word:
        if x >= a:
            prev = -1
        else:
            if prev >= 0 and (x <= prev if ascending else x > prev):
                return False
            prev = x
    return True


def _low_subsequence_ok(word: Word, a: int, ascending: bool) -> bool:
    prev = -1
    for x in word:
        if x < a:
            if prev >= 0 and (x <= prev if ascending else x > prev):
                return False
            prev = x
    return True


@lru_cache(maxsize=None)
def _run_word_tallies(
    a: int, m: int, n: int, ascending: bool, blockwise: bool
) -> tuple[int, ...]:
    """counts[j] = number of valid words of length n-1 with j top letters."""
    size = a + m
    length = n - 1
    _guard_enumeration(size, length)
    top = size - 1
    check = _low_runs_ok if blockwise else _low_subsequence_ok
    counts = [0] * (length + 1)
    for word in itertools.product(range(size), repeat=length):
        if check(word, a, ascending):
            counts[word.count(top)] += 1
    return tuple(counts)


def _count_run_words(
    a: int, m: int, n: int, k: int | None, ascending: bool, reading: str
) -> int:
    if a < 1 or m < 0 or n < 1:
        raise ValueError(f"need a >= 1, m >= 0, n >= 1, got ({a}, {m}, {n})")
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}, got {reading!r}")
    if k is not None:
        _check_nk(n, k)
        if m < 1:
            raise ValueError("a letter count k needs m >= 1 (no top letter at m = 0)")
    tallies = _run_word_tallies(a, m, n, ascending, reading == "block")
    if k is None:
        return sum(tallies)
    return tallies[k - 1]


def count_increasing_run_words(
    a: int, m: int, n: int, k: int | None = None, reading: str = "block"
) -> int:
    """Words of length n-1 over {0..a+m-1} whose low runs strictly increase.

    With ``k`` given, only words with exactly k-1 copies of the top letter
    a+m-1 are counted (requires m >= 1); otherwise all valid words count.
    """
    return _count_run_words(a, m, n, k, ascending=True, reading=reading)


def count_decreasing_run_words(
    a: int, m: int, n: int, k: int | None = None, reading: str = "block"
) -> int:
    """Words of length n-1 over {0..a+m-1} whose low runs have no rise.

    Same letter-count restriction as :func:`count_increasing_run_words`.
    """
    return _count_run_words(a, m, n, k, ascending=False, reading=reading)


def count_weakly_decreasing_words(a: int, length: int) -> int:
    """Weakly decreasing words of the given length over {0..a-1}.

    Enumerated as reversed multiset selections, one word per multiset.
    """
    if a < 1 or length < 0:
        raise ValueError(f"need a >= 1 and length >= 0, got ({a}, {length})")
    if length > MAX_WORD_LENGTH:
        raise ValueError(
            f"word length {length} exceeds the enumeration cap {MAX_WORD_LENGTH}"
        )
    return sum(1 for _ in itertools.combinations_with_replacement(range(a), length))


# ---------------------------------------------------------------------------
# Ternary marker words with balanced binary runs


@lru_cache(maxsize=None)
def count_balanced_run_words(n: int, k: int) -> int:
    """Ternary words of length 2n-k-1 with k-1 letters 2 and balanced runs.

    Every maximal run of binary letters must hold as many zeros as ones;
    empty runs are allowed, so 2s may touch each other and the word ends.
    """
    _check_nk(n, k)
    length = 2 * n - k - 1
    _guard_enumeration(3, length)
    need = k - 1
    total = 0
    for word in itertools.product((0, 1, 2), repeat=length):
        balance = 0
        markers = 0
        for x in word:
            if x == 2:
                if balance:
                    break
                markers += 1
                if markers > need:
                    break
            elif x == 1:
                balance += 1
            else:
                balance -= 1
        else:
            if balance == 0 and markers == need:
                total += 1
    return total


@lru_cache(maxsize=None)
def _plus_one_run_tallies(n: int) -> tuple[int, ...]:
    """counts[j] = valid words of length 2n-1 with j marker letters."""
    length = 2 * n - 1
    _guard_enumeration(3, length)
    counts = [0] * n
    for word in itertools.product((0, 1, 2), repeat=length):
        balance = 0
        run_len = 0
        markers = 0
        for x in word:
            if x == 2:
                # empty run means a leading or doubled marker
                if run_len == 0 or balance != 1:
                    markers = -1
                    break
                markers += 1
                balance = 0
                run_len = 0
            else:
                run_len += 1
                balance += 1 if x == 1 else -1
        if markers >= 0 and run_len > 0 and balance == 1 and markers < n:
            counts[markers] += 1
    return tuple(counts)


def count_plus_one_run_words(n: int, k: int) -> int:
    """Ternary words of length 2n-1, k-1 letters 2, runs with one extra one.

    No 2 at either end and no two adjacent 2s, so every maximal binary run
    is nonempty and must hold exactly one more one than zeros.
    """
    _check_nk(n, k)
    return _plus_one_run_tallies(n)[k - 1]


# ---------------------------------------------------------------------------
# Marker words assembled from family blocks


@lru_cache(maxsize=None)
def _family_block_words(spec: FamilySpec, i: int) -> tuple[Word, ...]:
    """All words of the family's block set at index i, each listed once."""
    if spec.kind == ROW:
        # strictly increasing words of length i-1 over {0..a-1}
        return tuple(itertools.combinations(range(spec.a), i - 1))
    if spec.kind == DIAGONAL:
        # weakly decreasing words of length i-1 over {0..a-1}
        return tuple(
            tuple(reversed(c))
            for c in itertools.combinations_with_replacement(range(spec.a), i - 1)
        )
    # central: binary words of length 2i-2 with equally many zeros and ones
    length = 2 * i - 2
    words = []
    for positions in itertools.combinations(range(length), i - 1):
        word = [0] * length
        for p in positions:
            word[p] = 1
        words.append(tuple(word))
    return tuple(words)


def count_marker_words(spec: FamilySpec, n: int, k: int) -> int:
    """Words made of k family blocks joined by k-1 marker letters.

    For every ordered way of splitting n into k positive indices, each block
    ranges over the family's word set at its index; the assembled words are
    collected into a set, so any collision between splits would show up as a
    count mismatch. Only families whose empty word is a valid block qualify.
    """
    if spec.kind == CENTRAL_ADJACENT:
        raise ValueError(
            "central-adjacent has no empty block word; marker construction does not apply"
        )
    if spec.kind == CUSTOM:
        raise ValueError("custom sequences have no word model")
    _check_nk(n, k)
    if spec.kind == CENTRAL:
        marker = 2
        longest = 2 * n - k - 1
    else:
        marker = spec.a
        longest = n - 1
    if longest > MAX_WORD_LENGTH:
        raise ValueError(
            f"word length {longest} exceeds the enumeration cap {MAX_WORD_LENGTH}"
        )
    words: set[Word] = set()
    for parts in compositions(n, k):
        for blocks in itertools.product(*(_family_block_words(spec, i) for i in parts)):
            word: list[int] = []
            for t, block in enumerate(blocks):
                if t:
                    word.append(marker)
                word.extend(block)
            words.add(tuple(word))
    return len(words)


# ---------------------------------------------------------------------------
# Dyck paths


def dyck_paths(semilength: int):
    """Yield every Dyck path of the given semilength as a tuple of +1/-1."""
    if semilength < 0:
        raise ValueError(f"semilength must be >= 0, got {semilength}")
    if semilength > MAX_DYCK_SEMILENGTH:
        raise ValueError(
            f"semilength {semilength} exceeds the enumeration cap {MAX_DYCK_SEMILENGTH}"
        )
    path: list[int] = []

    def extend(ups_left: int, downs_left: int, height: int):
        if not ups_left and not downs_left:
            yield tuple(path)
            return
        if ups_left:
            path.append(1)
            yield from extend(ups_left - 1, downs_left, height + 1)
            path.pop()
        if downs_left and height > 0:
            path.append(-1)
            yield from extend(ups_left, downs_left - 1, height - 1)
            path.pop()

    yield from extend(semilength, semilength, 0)


def count_peaks(steps: DyckPath) -> int:
    """Number of up-steps immediately followed by a down-step."""
    return sum(1 for s, t in zip(steps, steps[1:]) if s == 1 and t == -1)


@lru_cache(maxsize=None)
def count_two_peak_dyck_paths(semilength: int) -> int:
    """Dyck paths of the given semilength with exactly two peaks.

    Returns 0 at semilength 1 (a single peak is forced) so that product
    sums over compositions need no special-casing.
    """
    if semilength < 1:
        raise ValueError(f"semilength must be >= 1, got {semilength}")
    return sum(1 for p in dyck_paths(semilength) if count_peaks(p) == 2)


def count_two_peak_concatenations(n: int, k: int) -> int:
    """Dyck paths of semilength n+k that split into k two-peak Dyck paths.

    Counted as ordered factorizations: over each composition of n+k into k
    semilengths, the factor counts multiply. The valley between consecutive
    peaks touches the ground at most once, so a path admits at most one such
    split and the factorization sum counts each path once.
    """
    _check_nk(n, k)
    total = 0
    for parts in compositions(n + k, k):
        product = 1
        for s in parts:
            product *= count_two_peak_dyck_paths(s)
            if not product:
                break
        total += product
    return total


# ---------------------------------------------------------------------------
# Lattice paths with diagonal steps off the main diagonal only


def count_diagonal_step_paths(n: int, k: int) -> int:
    """Monotone lattice paths to (n-1, n-1) with k-1 on-diagonal unit diagonal steps.

    Steps are (1,0), (0,1), and exactly k-1 steps (1,1), where a diagonal
    step may only leave from a point with equal coordinates. The endpoint
    (n-1, n-1) is what k monotone blocks spanning n-k cells in total plus
    k-1 unit diagonal steps add up to. Counted by dynamic programming over
    (x, y, diagonal steps used).
    """
    _check_nk(n, k)
    size = n - 1
    diag = k - 1
    ways = [[[0] * (diag + 1) for _ in range(size + 1)] for _ in range(size + 1)]
    ways[0][0][0] = 1
    for x in range(size + 1):
        for y in range(size + 1):
            for d in range(diag + 1):
                if x == 0 and y == 0 and d == 0:
                    continue
                total = 0
                if x > 0:
                    total += ways[x - 1][y][d]
                if y > 0:
                    total += ways[x][y - 1][d]
                if d > 0 and x > 0 and x == y:
                    total += ways[x - 1][y - 1][d - 1]
                ways[x][y][d] = total
    return ways[size][size][diag]
