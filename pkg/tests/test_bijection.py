import json

import pytest
from hypothesis import given

from bressoud.bijection import (
    ConditionViolation,
    NotDDistinctError,
    NotDistinctError,
    PaddedParts,
    StepTrace,
    check_trace_weights,
    forward,
    inverse,
    regroup_by_residue,
    sort_parts,
    staircase,
    staircase_add,
    staircase_subtract,
    trace,
)
from bressoud.partition import (
    BRESSOUD,
    BRESSOUD_DUAL,
    EMPTY,
    ResiduePermutation,
    all_permutations,
    is_d_distinct,
    is_distinct,
    make_partition,
    satisfies_conditions,
)
from conftest import gapped, partitions, perm_and_d_distinct, perms
from oracles import meets_theorem_conditions


def P(*parts):
    return make_partition(parts)


def test_staircase():
    assert staircase(3, 2) == (5, 3, 1)
    assert staircase(0, 4) == ()
    assert staircase(4, 1) == (4, 3, 2, 1)


@pytest.mark.parametrize(
    "parts,d,values",
    [((6, 3), 2, (3, 2)), ((5, 3, 1), 2, (0, 0, 0)), ((), 3, ()), ((9, 5, 1), 3, (2, 1, 0))],
)
def test_staircase_subtract(parts, d, values):
    b = staircase_subtract(P(*parts), d)
    assert b.values == values
    assert b.m == len(parts)


def test_staircase_subtract_rejects():
    with pytest.raises(NotDDistinctError, match="not 2-distinct at parts 5,4"):
        staircase_subtract(P(5, 4, 1), 2)


def test_regroup_dual():
    g = regroup_by_residue(PaddedParts((3, 2), 2), BRESSOUD_DUAL)
    # top level holds residue pi(1)-1 = 0, bottom holds pi(0)-1 = 1
    assert g.groups == ((3,), (2,))
    assert g.residues == (1, 0)
    assert g.stack() == (2, 3)
    assert g.group_sizes == (1, 1)


def test_regroup_original():
    g = regroup_by_residue(PaddedParts((3, 2), 2), BRESSOUD)
    assert g.stack() == (3, 2)  # odd on top, even below


def test_regroup_zeros_join_residue_zero():
    g = regroup_by_residue(PaddedParts((0, 0, 0), 2), BRESSOUD_DUAL)
    assert g.top_down() == [(1, 0, (0, 0, 0)), (0, 1, ())]


def test_regroup_d_mismatch():
    with pytest.raises(ValueError):
        regroup_by_residue(PaddedParts((1,), 3), BRESSOUD)


def test_staircase_add_examples():
    g = regroup_by_residue(staircase_subtract(P(6, 3), 2), BRESSOUD_DUAL)
    assert staircase_add(g) == (5, 4)
    g = regroup_by_residue(staircase_subtract(P(8, 1), 2), BRESSOUD_DUAL)
    assert g.stack() == (0, 5)
    assert staircase_add(g) == (3, 6)
    empty = regroup_by_residue(PaddedParts((), 3), ResiduePermutation((1, 2, 0)))
    assert staircase_add(empty) == ()


def test_sort_parts():
    assert sort_parts((3, 6)).parts == (6, 3)
    assert sort_parts((5, 4)).parts == (5, 4)
    assert sort_parts(()) == EMPTY
    with pytest.raises(ValueError):
        sort_parts((3, 0))


@pytest.mark.parametrize(
    "src,image,dst",
    [
        ((6, 3), (0, 1), (5, 4)),
        ((8, 1), (0, 1), (6, 3)),
        ((5, 3, 1), (0, 1), (5, 3, 1)),
        ((5, 3, 1), (1, 0), (5, 3, 1)),
        ((9, 5, 1), (2, 0, 1), (7, 6, 2)),
        ((), (0, 1), ()),
        ((), (2, 0, 1), ()),
    ],
)
def test_forward_inverse_examples(src, image, dst):
    pi = ResiduePermutation(image)
    assert forward(P(*src), pi).parts == dst
    assert inverse(P(*dst), pi).parts == src


def test_forward_rejects_non_d_distinct():
    with pytest.raises(NotDDistinctError):
        forward(P(5, 4, 1), BRESSOUD_DUAL)


def test_inverse_condition_violation():
    with pytest.raises(ConditionViolation, match="condition c_1 violated") as exc:
        inverse(P(2, 1), BRESSOUD_DUAL)
    assert exc.value.s == 1
    assert exc.value.part == 1
    assert exc.value.bound == 2


def test_inverse_reports_first_failing_condition():
    # d=3, pi=(0,1,2): part 4 (residue 1) clears 3*#{res 0}=3, part 2 (residue 2) does not clear 3*2=6
    pi = ResiduePermutation((0, 1, 2))
    with pytest.raises(ConditionViolation) as exc:
        inverse(P(4, 3, 2), pi)
    assert exc.value.s == 2
    with pytest.raises(ConditionViolation) as exc:
        inverse(P(3, 1), pi)
    assert exc.value.s == 1


def test_inverse_rejects_repeats():
    with pytest.raises(NotDistinctError, match="3,3"):
        inverse(P(4, 3, 3), BRESSOUD)


def test_trace_forward_example():
    t = trace(P(6, 3), BRESSOUD_DUAL, "forward")
    assert t.after_step1.values == (3, 2)
    assert t.after_step1.staircase == (3, 1)
    assert t.after_step3 == (5, 4)
    assert t.output.parts == (5, 4)
    assert check_trace_weights(t)


def test_trace_empty():
    t = trace(EMPTY, ResiduePermutation((1, 0, 2)), "forward")
    assert t.after_step1.values == ()
    assert t.after_step2.stack() == ()
    assert t.after_step3 == ()
    assert t.output == EMPTY


def test_trace_inverse_example():
    t = trace(P(6, 3), BRESSOUD_DUAL, "inverse")
    assert t.after_step3 == (3, 6)
    assert t.after_step1.values == (5, 0)
    assert t.output.parts == (8, 1)
    assert check_trace_weights(t)


def test_trace_bad_direction():
    with pytest.raises(ValueError):
        trace(P(3), BRESSOUD, "sideways")


def test_trace_json_schema():
    obj = json.loads(trace(P(8, 1), BRESSOUD_DUAL).to_json())
    assert obj == {
        "direction": "forward",
        "d": 2,
        "pi": [0, 1],
        "input": [8, 1],
        "after_step1": {"values": [5, 0], "staircase": [3, 1]},
        "groups": [
            {"level": 1, "residue": 0, "target_residue": 1, "values": [0]},
            {"level": 0, "residue": 1, "target_residue": 0, "values": [5]},
        ],
        "after_step3": [3, 6],
        "output": [6, 3],
    }


def test_trace_render_has_separator_rows():
    text = trace(P(6, 3), BRESSOUD_DUAL).render()
    assert "###|###\n#|##\n" in text
    assert text.endswith("#####\n####\n")


@given(perm_and_d_distinct())
def test_roundtrip_forward_then_inverse(case):
    pi, lam = case
    mu = forward(lam, pi)
    assert inverse(mu, pi) == lam


@given(perm_and_d_distinct())
def test_forward_preserves_weight_and_length(case):
    pi, lam = case
    mu = forward(lam, pi)
    assert mu.weight == lam.weight
    assert len(mu) == len(lam)


@given(perm_and_d_distinct())
def test_forward_lands_in_target(case):
    pi, lam = case
    mu = forward(lam, pi)
    assert is_distinct(mu)
    assert satisfies_conditions(mu, pi)
    assert meets_theorem_conditions(mu.parts, pi.image)


@given(perm_and_d_distinct())
def test_step3_residue_shift(case):
    pi, lam = case
    t = trace(lam, pi)
    d = pi.d
    rows = iter(t.after_step3)
    for j, residue, values in t.after_step2.top_down():
        for v in values:
            assert v % d == residue
            assert next(rows) % d == pi(j)


@given(perm_and_d_distinct())
def test_trace_weights_and_json_roundtrip(case):
    pi, lam = case
    for t in (trace(lam, pi, "forward"), trace(forward(lam, pi), pi, "inverse")):
        assert check_trace_weights(t)
        assert StepTrace.from_dict(json.loads(t.to_json())) == t


@given(partitions(max_parts=6, max_part=25), perms(max_d=4))
def test_inverse_succeeds_iff_conditions(mu, pi):
    if not is_distinct(mu):
        with pytest.raises(NotDistinctError):
            inverse(mu, pi)
        return
    try:
        lam = inverse(mu, pi)
    except ConditionViolation:
        assert not satisfies_conditions(mu, pi)
    else:
        assert satisfies_conditions(mu, pi)
        assert is_d_distinct(lam, pi.d)
        assert forward(lam, pi) == mu


@given(gapped(1))
def test_d1_is_identity(lam):
    assert forward(lam, ResiduePermutation((0,))) == lam


def test_theorem_instances_read_as_stated():
    # original: every even part exceeds twice the number of odd parts
    for lam in [P(9, 5, 1), P(11, 6, 3), P(10, 7, 4, 1), P(12)]:
        mu = forward(lam, BRESSOUD)
        odd = sum(x % 2 for x in mu)
        assert all(x > 2 * odd for x in mu if x % 2 == 0)
        mu = forward(lam, BRESSOUD_DUAL)
        even = sum(1 for x in mu if x % 2 == 0)
        assert all(x > 2 * even for x in mu if x % 2)


def test_all_perms_small_exhaustive_roundtrip():
    from bressoud.enumeration import d_distinct_partitions

    for d in range(1, 4):
        for pi in all_permutations(d):
            for n in range(16):
                for lam in d_distinct_partitions(n, d):
                    assert inverse(forward(lam, pi), pi) == lam
