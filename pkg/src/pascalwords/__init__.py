"""Exact convolution triangles and invert transforms for binomial families.

The library builds, for four binomial-coefficient base sequences (a row of
the Pascal triangle, a diagonal, the central column, and its neighbor), the
triangles of k-fold convolution sums and their iterated invert transforms,
exposes per-family closed forms and identity checks, and verifies every
count against brute-force enumeration of the restricted words, Dyck paths,
and lattice paths being counted.
"""

from .bfile import BFile, load_bfile, match_sequence, parse_bfile, render_bfile
from .closed_forms import (
    IdentityResult,
    central_adjacent_closed_form,
    central_closed_form,
    check_alternating_vanishing,
    check_binomial_split,
    check_double_factorial_product,
    check_power_of_four,
    check_shifted_double_factorial_product,
    closed_form,
    diagonal_closed_form,
    row_closed_form,
)
from .families import (
    DEFAULT_N_MAX,
    FamilySpec,
    Seq,
    base_sequence,
    base_value,
    load_custom_values,
    word_length,
)
from .kernel import binomial, compositions, double_factorial_odd, rising_even_product
from .oracles import (
    count_balanced_run_words,
    count_decreasing_run_words,
    count_diagonal_step_paths,
    count_increasing_run_words,
    count_marker_words,
    count_peaks,
    count_plus_one_run_words,
    count_two_peak_concatenations,
    count_two_peak_dyck_paths,
    count_weakly_decreasing_words,
    dyck_paths,
)
from .report import CheckCase, CheckReport
from .suites import run_suite
from .transforms import (
    ConvolutionTriangle,
    convolution_by_definition,
    convolution_triangle,
    family_sequence,
    family_triangle,
    invert_transform,
    lift_sequence_entry,
    lift_triangle_entry,
    triangle_to_csv,
    triangle_to_tsv,
)

__version__ = "0.1.0"

__all__ = [
    "BFile",
    "CheckCase",
    "CheckReport",
    "ConvolutionTriangle",
    "DEFAULT_N_MAX",
    "FamilySpec",
    "IdentityResult",
    "Seq",
    "base_sequence",
    "base_value",
    "binomial",
    "central_adjacent_closed_form",
    "central_closed_form",
    "check_alternating_vanishing",
    "check_binomial_split",
    "check_double_factorial_product",
    "check_power_of_four",
    "check_shifted_double_factorial_product",
    "closed_form",
    "compositions",
    "convolution_by_definition",
    "convolution_triangle",
    "count_balanced_run_words",
    "count_decreasing_run_words",
    "count_diagonal_step_paths",
    "count_increasing_run_words",
    "count_marker_words",
    "count_peaks",
    "count_plus_one_run_words",
    "count_two_peak_concatenations",
    "count_two_peak_dyck_paths",
    "count_weakly_decreasing_words",
    "diagonal_closed_form",
    "double_factorial_odd",
    "dyck_paths",
    "family_sequence",
    "family_triangle",
    "invert_transform",
    "lift_sequence_entry",
    "lift_triangle_entry",
    "load_bfile",
    "load_custom_values",
    "match_sequence",
    "parse_bfile",
    "render_bfile",
    "rising_even_product",
    "row_closed_form",
    "run_suite",
    "triangle_to_csv",
    "triangle_to_tsv",
    "word_length",
]
