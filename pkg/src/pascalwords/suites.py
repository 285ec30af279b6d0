"""Named verification suites behind the CLI's verify command.

Each suite compares an independent reference route (brute-force enumeration,
or the convolution engine where a formula is under test) against the route
being checked, and returns a CheckReport. Cases store the reference side as
``expected`` and the checked side as ``actual``. Default bounds are the
acceptance bounds; a caller-supplied ``n_max`` replaces the primary bound
and shrinks secondary ones, with the enumeration caps erroring on bounds
that would run away.
"""

from .closed_forms import (
    central_adjacent_closed_form,
    central_closed_form,
    check_alternating_vanishing,
    check_binomial_split,
    check_double_factorial_product,
    check_power_of_four,
    check_shifted_double_factorial_product,
    closed_form,
)
from .families import CENTRAL, FamilySpec
from .kernel import binomial
from .oracles import (
    count_balanced_run_words,
    count_decreasing_run_words,
    count_diagonal_step_paths,
    count_increasing_run_words,
    count_marker_words,
    count_plus_one_run_words,
    count_two_peak_concatenations,
    count_two_peak_dyck_paths,
    count_weakly_decreasing_words,
)
from .report import CheckReport
from .transforms import (
    family_sequence,
    family_triangle,
    lift_sequence_entry,
    lift_triangle_entry,
)

SUITE_NAMES = ("closed-forms", "identities", "words", "paths", "lifts", "all")

#: Largest triangle the CLI will build; guards accidental huge runs.
TRIANGLE_N_CAP = 512

P4_LENGTH_NOTE = (
    "count_plus_one_run_words enumerates words of length 2n-1 (k blocks of odd "
    "lengths 2i-1 joined by k-1 markers); the length n+k-1 quoted alongside "
    "this count elsewhere is inconsistent with that bookkeeping."
)


def _check_triangle_bound(n_max: int) -> None:
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    if n_max > TRIANGLE_N_CAP:
        raise ValueError(f"n_max {n_max} exceeds the triangle cap {TRIANGLE_N_CAP}")


def _grid_families() -> list[FamilySpec]:
    return (
        [FamilySpec.row(a) for a in (1, 2, 3, 4)]
        + [FamilySpec.diagonal(a) for a in (1, 2, 3, 4)]
        + [FamilySpec.central(), FamilySpec.central_adjacent()]
    )


def closed_forms_suite(n_max: int | None = None) -> CheckReport:
    """Closed forms for every family against the convolution engine."""
    bound = n_max or 24
    _check_triangle_bound(bound)
    report = CheckReport("closed-forms")
    for spec in _grid_families():
        triangle = family_triangle(spec, 1, bound)
        for n in range(1, bound + 1):
            report.add(
                "closed_form_row",
                {"family": spec.label(), "n": n, "k": "1..n"},
                list(triangle.row(n)),
                [closed_form(spec, n, k) for k in range(1, n + 1)],
            )
    return report


def identities_suite(n_max: int | None = None) -> CheckReport:
    """Standalone identities, aggregated per outer parameter."""
    split_bound = n_max or 30
    product_bound = n_max or 200
    vanishing_bound = n_max or 30
    power_bound = n_max or 60
    report = CheckReport("identities")
    for u in range(1, split_bound + 1):
        outcome = "holds"
        for v in range(1, u + 1):
            for w in range(1, v + 1):
                result = check_binomial_split(u, v, w)
                if not result.holds:
                    outcome = f"fails at v={v} w={w}: {result.lhs} != {result.rhs}"
                    break
            if outcome != "holds":
                break
        report.add("check_binomial_split", {"u": u, "v": "1..u", "w": "1..v"}, "holds", outcome)
    for n in range(1, product_bound + 1):
        result = check_double_factorial_product(n)
        report.add("check_double_factorial_product", {"n": n}, result.rhs, result.lhs)
        result = check_shifted_double_factorial_product(n)
        report.add("check_shifted_double_factorial_product", {"n": n}, result.rhs, result.lhs)
    for k in range(1, vanishing_bound + 1):
        outcome = "holds"
        for j in range(k):
            result = check_alternating_vanishing(k, j)
            if not result.holds:
                outcome = f"fails at j={j}: {result.lhs} != 0"
                break
        report.add("check_alternating_vanishing", {"k": k, "j": "0..k-1"}, "holds", outcome)
    for n in range(2, power_bound + 1):
        result = check_power_of_four(n)
        report.add("check_power_of_four", {"n": n}, result.rhs, result.lhs)
    return report


def words_suite(n_max: int | None = None) -> CheckReport:
    """Brute-force word counts against triangles, sequences, and closed forms."""
    p12_bound = n_max or 10
    p34_bound = min(n_max, 8) if n_max else 7
    norise_bound = min(n_max, 12) if n_max else 12
    marker_bound = min(n_max, 9) if n_max else 9
    report = CheckReport("words")

    run_checks = (
        ("count_increasing_run_words", count_increasing_run_words, FamilySpec.row),
        ("count_decreasing_run_words", count_decreasing_run_words, FamilySpec.diagonal),
    )
    for name, count_fn, make_spec in run_checks:
        for a in (1, 2, 3):
            spec = make_spec(a)
            for m in (1, 2):
                seq = family_sequence(spec, m, p12_bound)
                triangle = family_triangle(spec, m, p12_bound)
                for n in range(1, p12_bound + 1):
                    report.add(
                        name,
                        {"a": a, "m": m, "n": n, "k": "1..n"},
                        [count_fn(a, m, n, k) for k in range(1, n + 1)],
                        list(triangle.row(n)),
                    )
                    report.add(
                        name,
                        {"a": a, "m": m, "n": n, "k": None},
                        count_fn(a, m, n),
                        seq(n),
                    )

    for a in range(1, 6):
        for length in range(norise_bound + 1):
            report.add(
                "count_weakly_decreasing_words",
                {"a": a, "length": length},
                count_weakly_decreasing_words(a, length),
                binomial(length + a - 1, a - 1),
            )
    # alphabet-growth recurrence: adding a letter sums the shorter counts
    for a in range(1, 5):
        for length in range(norise_bound + 1):
            report.add(
                "count_weakly_decreasing_words_recurrence",
                {"a": a, "length": length},
                sum(count_weakly_decreasing_words(a, j) for j in range(length + 1)),
                count_weakly_decreasing_words(a + 1, length),
            )

    for n in range(1, p34_bound + 1):
        for k in range(1, n + 1):
            report.add(
                "count_balanced_run_words",
                {"n": n, "k": k},
                count_balanced_run_words(n, k),
                central_closed_form(n, k),
            )
            report.add(
                "count_plus_one_run_words",
                {"n": n, "k": k},
                count_plus_one_run_words(n, k),
                central_adjacent_closed_form(n, k),
            )
    report.note(P4_LENGTH_NOTE)

    marker_specs = [FamilySpec.row(a) for a in (1, 2, 3)]
    marker_specs += [FamilySpec.diagonal(a) for a in (1, 2, 3)]
    marker_specs.append(FamilySpec.central())
    for spec in marker_specs:
        bound = marker_bound if spec.kind == CENTRAL else min(marker_bound, p12_bound)
        triangle = family_triangle(spec, 1, bound)
        for n in range(1, bound + 1):
            report.add(
                "count_marker_words",
                {"family": spec.label(), "n": n, "k": "1..n"},
                [count_marker_words(spec, n, k) for k in range(1, n + 1)],
                list(triangle.row(n)),
            )
    try:
        count_marker_words(FamilySpec.central_adjacent(), 2, 1)
        outcome = "no error"
    except ValueError:
        outcome = "ValueError"
    report.add(
        "count_marker_words_rejects_central_adjacent",
        {"family": "central-adjacent"},
        "ValueError",
        outcome,
    )
    return report


def paths_suite(n_max: int | None = None) -> CheckReport:
    """Dyck-path and lattice-path counts against word counts and binomials."""
    peak_bound = min(n_max, 12) if n_max else 8
    concat_bound = min(n_max, 11) if n_max else 8
    lattice_bound = (n_max + 2) if n_max else 10
    report = CheckReport("paths")
    for s in range(2, peak_bound + 1):
        report.add(
            "count_two_peak_dyck_paths",
            {"semilength": s},
            binomial(s, 2),
            count_two_peak_dyck_paths(s),
        )
    for n in range(1, concat_bound + 1):
        for k in range(1, min(4, n) + 1):
            report.add(
                "count_two_peak_concatenations",
                {"n": n, "k": k},
                count_decreasing_run_words(3, 1, n, k),
                count_two_peak_concatenations(n, k),
            )
    for n in range(1, lattice_bound):
        for k in range(1, min(n, lattice_bound - n) + 1):
            report.add(
                "count_diagonal_step_paths",
                {"n": n, "k": k},
                count_balanced_run_words(n, k),
                count_diagonal_step_paths(n, k),
            )
    return report


def lifts_suite(n_max: int | None = None) -> CheckReport:
    """Base-triangle lift formulas against direct level-m computation."""
    bound = n_max or 16
    _check_triangle_bound(bound)
    report = CheckReport("lifts")
    for spec in _grid_families():
        base = family_triangle(spec, 1, bound)
        for m in (1, 2, 3):
            triangle = family_triangle(spec, m, bound)
            seq = family_sequence(spec, m, bound)
            for n in range(1, bound + 1):
                report.add(
                    "lift_triangle_entry",
                    {"family": spec.label(), "m": m, "n": n, "k": "1..n"},
                    list(triangle.row(n)),
                    [lift_triangle_entry(base, m, n, k) for k in range(1, n + 1)],
                )
                report.add(
                    "lift_sequence_entry",
                    {"family": spec.label(), "m": m, "n": n},
                    seq(n),
                    lift_sequence_entry(base, m, n),
                )
    return report


_SUITES = {
    "closed-forms": closed_forms_suite,
    "identities": identities_suite,
    "words": words_suite,
    "paths": paths_suite,
    "lifts": lifts_suite,
}


def run_suite(name: str, n_max: int | None = None) -> CheckReport:
    """Run one named suite, or all of them merged under the name 'all'."""
    if name == "all":
        merged = CheckReport("all")
        for suite_name in SUITE_NAMES[:-1]:
            merged.extend(_SUITES[suite_name](n_max))
        return merged
    if name not in _SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    return _SUITES[name](n_max)
