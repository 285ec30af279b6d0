import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pascalwords.families import FamilySpec, Seq, base_sequence
from pascalwords.transforms import (
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

ALL_FAMILIES = [
    FamilySpec.row(1),
    FamilySpec.row(2),
    FamilySpec.row(3),
    FamilySpec.diagonal(1),
    FamilySpec.diagonal(2),
    FamilySpec.diagonal(3),
    FamilySpec.central(),
    FamilySpec.central_adjacent(),
]

# sequences with f(1) = 1, as the triangles of the named families all have
small_seqs = st.lists(st.integers(-6, 6), min_size=0, max_size=11).map(
    lambda tail: Seq((1, *tail), origin="hypothesis")
)
any_seqs = st.lists(st.integers(-6, 6), min_size=1, max_size=12).map(
    lambda vals: Seq(tuple(vals), origin="hypothesis")
)


def test_triangle_hand_values():
    tri = convolution_triangle(base_sequence(FamilySpec.row(2), 6))
    assert tri.entry(3, 2) == 4  # 1*2 + 2*1
    tri = convolution_triangle(base_sequence(FamilySpec.central(), 6))
    assert tri.entry(3, 2) == 4  # 1*2 + 2*1


def test_triangle_entry_out_of_range():
    tri = convolution_triangle(base_sequence(FamilySpec.row(2), 4))
    assert tri.entry(3, 4) == 0
    assert tri.entry(3, 0) == 0
    with pytest.raises(IndexError):
        tri.entry(5, 1)


def test_triangle_rejects_overlong_request():
    seq = base_sequence(FamilySpec.row(2), 4)
    with pytest.raises(ValueError):
        convolution_triangle(seq, 5)


@settings(max_examples=60, deadline=None)
@given(any_seqs)
def test_recurrence_matches_composition_sum(seq):
    tri = convolution_triangle(seq)
    for n in range(1, seq.n_max + 1):
        for k in range(1, n + 1):
            assert tri.entry(n, k) == convolution_by_definition(seq, n, k)


@settings(max_examples=60, deadline=None)
@given(small_seqs)
def test_triangle_borders(seq):
    tri = convolution_triangle(seq)
    for n in range(1, seq.n_max + 1):
        assert tri.entry(n, 1) == seq(n)
        assert tri.entry(n, n) == seq(1) ** n


@settings(max_examples=60, deadline=None)
@given(any_seqs)
def test_invert_is_triangle_row_sums(seq):
    inverted = invert_transform(seq)
    tri = convolution_triangle(seq)
    for n in range(1, seq.n_max + 1):
        assert inverted(n) == tri.row_sum(n)


@settings(max_examples=80, deadline=None)
@given(any_seqs)
def test_invert_satisfies_convolution_identity(seq):
    # the defining equation g = f + f*g as an exact discrete convolution
    g = invert_transform(seq)
    for n in range(1, seq.n_max + 1):
        convolved = sum(seq(i) * g(n - i) for i in range(1, n))
        assert g(n) == seq(n) + convolved


def test_invert_known_sequences():
    assert family_sequence(FamilySpec.row(2), 1, 5).values == (1, 3, 6, 13, 28)
    ones = Seq((1,) * 10, origin="ones")
    assert invert_transform(ones).values == tuple(2 ** (n - 1) for n in range(1, 11))
    assert family_sequence(FamilySpec.diagonal(1), 1, 10).values == tuple(
        2 ** (n - 1) for n in range(1, 11)
    )
    assert family_sequence(FamilySpec.diagonal(1), 2, 8).values == tuple(
        3 ** (n - 1) for n in range(1, 9)
    )


def test_family_sequence_m_zero_is_base():
    for spec in ALL_FAMILIES:
        assert family_sequence(spec, 0, 8).values == base_sequence(spec, 8).values


def test_family_triangle_first_column():
    for spec in ALL_FAMILIES:
        for m in (1, 2, 3):
            tri = family_triangle(spec, m, 8)
            lower = family_sequence(spec, m - 1, 8)
            for n in range(1, 9):
                assert tri.entry(n, 1) == lower(n)
                assert tri.entry(n, n) == 1


def test_lift_hand_values():
    base = family_triangle(FamilySpec.row(2), 1, 8)
    assert lift_sequence_entry(base, 1, 4) == 13  # 0 + 6 + 6 + 1
    assert lift_sequence_entry(base, 1, 1) == 1
    assert lift_triangle_entry(base, 2, 3, 1) == 6  # equals level-1 value at n=3


def test_lift_m1_collapses_to_base():
    for spec in ALL_FAMILIES:
        base = family_triangle(spec, 1, 10)
        for n in range(1, 11):
            for k in range(1, n + 1):
                assert lift_triangle_entry(base, 1, n, k) == base.entry(n, k)


@pytest.mark.parametrize("spec", ALL_FAMILIES, ids=lambda s: s.label())
def test_lift_consistency_small(spec):
    n_max = 10
    base = family_triangle(spec, 1, n_max)
    for m in (1, 2, 3):
        tri = family_triangle(spec, m, n_max)
        seq = family_sequence(spec, m, n_max)
        for n in range(1, n_max + 1):
            assert lift_sequence_entry(base, m, n) == seq(n)
            for k in range(1, n + 1):
                assert lift_triangle_entry(base, m, n, k) == tri.entry(n, k)


@settings(max_examples=40, deadline=None)
@given(small_seqs, st.integers(1, 3))
def test_lift_holds_for_arbitrary_base(seq, m):
    # the lift identities do not depend on which sequence seeds the triangle
    base = convolution_triangle(seq)
    level = seq
    for _ in range(m - 1):
        level = invert_transform(level)
    tri = convolution_triangle(level)
    for n in range(1, seq.n_max + 1):
        assert lift_sequence_entry(base, m, n) == tri.row_sum(n)
        for k in range(1, n + 1):
            assert lift_triangle_entry(base, m, n, k) == tri.entry(n, k)


def test_lift_range_errors():
    base = family_triangle(FamilySpec.row(2), 1, 5)
    with pytest.raises(IndexError):
        lift_triangle_entry(base, 2, 6, 1)
    with pytest.raises(IndexError):
        lift_sequence_entry(base, 2, 0)
    with pytest.raises(ValueError):
        lift_triangle_entry(base, 0, 3, 1)


def test_csv_serialization():
    tri = family_triangle(FamilySpec.central(), 1, 3)
    text = triangle_to_csv(tri)
    assert text.splitlines()[0] == "n,k,value"
    assert "3,1,6" in text.splitlines()
    assert "3,2,4" in text.splitlines()
    assert "3,3,1" in text.splitlines()


def test_tsv_serialization():
    tri = family_triangle(FamilySpec.central(), 1, 3)
    assert triangle_to_tsv(tri) == "1\n2\t1\n6\t4\t1\n"
