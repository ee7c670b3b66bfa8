import itertools
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tiealg.symgroup import (
    CaseViolation,
    InX,
    Permutation,
    Reflected,
    all_permutations,
    coset_reps,
    coxeter_gen,
    deodhar_case,
    parabolic_subgroup,
    s_ij,
    split_Y,
    w_ab,
)
from tiealg.words import IndexOutOfRange

SPLITS = [(a, n - a) for n in range(1, 6) for a in range(n + 1)]
INNER = [(a, b) for a, b in SPLITS if a and b]


def perms(n):
    return st.permutations(list(range(1, n + 1))).map(Permutation)


def test_coxeter_generators():
    assert coxeter_gen(1, 3) == Permutation([2, 1, 3])
    assert coxeter_gen(2, 3) == Permutation([1, 3, 2])
    assert repr(coxeter_gen(1, 3)) == "[2,1,3]"
    for i in (1, 2):
        assert (coxeter_gen(i, 3) * coxeter_gen(i, 3)).is_identity()
    with pytest.raises(IndexOutOfRange):
        coxeter_gen(3, 3)
    with pytest.raises(IndexOutOfRange):
        coxeter_gen(0, 3)


def test_composition_applies_left_factor_first():
    p, q = Permutation([2, 3, 1]), Permutation([1, 3, 2])
    r = p * q
    assert all(r(k) == q(p(k)) for k in (1, 2, 3))


@given(perms(5), perms(5), perms(5))
def test_group_laws(p, q, r):
    e = Permutation.identity(5)
    assert (p * q) * r == p * (q * r)
    assert p * e == p == e * p
    assert (p * p.inverse()).is_identity()
    assert p ** 3 == p * p * p


@given(perms(5))
def test_length_is_inversion_count(p):
    inv = sum(1 for i, j in itertools.combinations(range(5), 2) if p[i] > p[j])
    assert p.length() == inv


def test_w_examples():
    assert w_ab(1, 1) == Permutation([2, 1])
    assert w_ab(3, 0).is_identity() and w_ab(0, 2).is_identity()
    assert (w_ab(2, 1) * w_ab(1, 2)).is_identity()
    assert s_ij(2, 1, 2) == coxeter_gen(1, 2)


@pytest.mark.parametrize("a,b", SPLITS)
def test_w1_inverse(a, b):
    assert w_ab(a, b).inverse() == w_ab(b, a)


@pytest.mark.parametrize("a,b", INNER)
def test_w2_conjugation(a, b):
    n = a + b
    w = w_ab(a, b)
    for k in range(1, n):
        if k < b:
            assert w * coxeter_gen(k, n) == coxeter_gen(a + k, n) * w
        elif k > b:
            assert w * coxeter_gen(k, n) == coxeter_gen(k - b, n) * w


@pytest.mark.parametrize("a,b", SPLITS)
def test_w3_parabolic(a, b):
    w = w_ab(a, b)
    left = {h * w for h in parabolic_subgroup(a, b)}
    right = {w * h for h in parabolic_subgroup(b, a)}
    assert left == right


@pytest.mark.parametrize("a,b", SPLITS)
def test_w4_cosets(a, b):
    sys_ab, sys_ba = coset_reps(a, b), coset_reps(b, a)
    assert set(sys_ab.reps) == {sys_ab.w * x for x in sys_ba.reps}
    assert sys_ab.w in sys_ab.reps


@pytest.mark.parametrize("a,b", SPLITS)
def test_coset_reps_minimal_and_complete(a, b):
    n = a + b
    system = coset_reps(a, b)
    assert len(system.reps) == factorial(n) // (factorial(a) * factorial(b))
    sub = parabolic_subgroup(a, b)
    covered = set()
    for x in system.reps:
        coset = {h * x for h in sub}
        assert not coset & covered
        covered |= coset
        assert all(y.length() > x.length() for y in coset if y != x)
    assert covered == set(all_permutations(n))


def test_coset_examples():
    assert set(coset_reps(1, 1).reps) == {Permutation([1, 2]), Permutation([2, 1])}
    assert len(coset_reps(2, 1).reps) == 3


def test_deodhar_examples():
    assert deodhar_case(coset_reps(1, 1), Permutation([1, 2]), 1) == InX(Permutation([2, 1]))
    assert deodhar_case(coset_reps(2, 1), Permutation([1, 2, 3]), 1) == Reflected(1)


@pytest.mark.parametrize("a,b", [(a, n - a) for n in range(1, 5) for a in range(n + 1)])
def test_deodhar_total_and_exclusive(a, b):
    system = coset_reps(a, b)
    n = a + b
    for x in system.reps:
        for i in range(1, n):
            case = deodhar_case(system, x, i)
            xs = x * coxeter_gen(i, n)
            if isinstance(case, InX):
                assert case.xs == xs and xs in system.reps
            else:
                assert i != 0 and case.generator != a
                assert xs == coxeter_gen(case.generator, n) * x
                assert xs not in system.reps


def test_deodhar_rejects_non_representative():
    with pytest.raises(ValueError):
        deodhar_case(coset_reps(2, 1), Permutation([2, 1, 3]), 1)
    assert issubclass(CaseViolation, RuntimeError)


@pytest.mark.parametrize("m", [1, 2])
def test_split_Y(m):
    system = coset_reps(m, m)
    ys = split_Y(m)
    image = {system.w * y for y in ys}
    assert len(ys) * 2 == len(system.reps)
    assert not image & set(ys)
    assert image | set(ys) == set(system.reps)


def test_split_Y_examples():
    assert split_Y(1) == [Permutation([1, 2])]
    assert [list(y) for y in split_Y(2)] == [[1, 2, 3, 4], [1, 3, 2, 4], [1, 4, 2, 3]]
