import itertools
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import elements
from tiealg import hyperoct as H
from tiealg import linalg
from tiealg.rewrite import mul_reduced, span_basis
from tiealg.specht import Partition, partitions, rep_dim
from tiealg.symgroup import Permutation
from tiealg.words import Element

P = Partition
PHI = Partition(())


def bipartitions(n):
    return [H.Bipartition(a, b) for k in range(n + 1) for a in partitions(k) or [PHI]
            for b in (partitions(n - k) if n - k else [PHI])]


def signed_map(g):
    # g as a map on {-n..-1, 1..n}: k -> (-1)^sign * perm(k)
    return {k: (-1) ** g.signs[k - 1] * g.perm(k) for k in range(1, g.n + 1)}


def elements_w(n):
    return st.sampled_from(H.group_elements(n))


def test_bipartition_listing():
    assert len(bipartitions(2)) == 5
    assert len(bipartitions(3)) == 10


def test_group_order():
    for n in (1, 2, 3):
        assert len(set(H.group_elements(n))) == 2 ** n * factorial(n)


@given(elements_w(3), elements_w(3))
def test_product_matches_signed_maps(g, h):
    fg, fh, fgh = signed_map(g), signed_map(h), signed_map(g * h)
    for k in range(1, 4):
        x = fg[k]
        y = fh[abs(x)] * (1 if x > 0 else -1)
        assert fgh[k] == y


@given(elements_w(3), elements_w(3), elements_w(3))
def test_group_axioms(g, h, k):
    assert (g * h) * k == g * (h * k)
    assert (g * g.inverse()) == H.WElement.identity(3)
    assert g * H.WElement.identity(3) == g


def test_generators():
    n = 4
    for i in range(1, n):
        s, t = H.s_element(i, n), H.t_element(i, n)
        assert s * t * s == H.t_element(i + 1, n)
    ts = H.t_element(1, n) * H.s_element(1, n)
    assert ts * ts * ts * ts == H.WElement.identity(n)
    assert ts * ts != H.WElement.identity(n)


def test_e_idempotents():
    n = 3
    e1, e2 = H.e_element(1, n), H.e_element(2, n)
    assert e1 * e1 == e1 and e2 * e2 == e2
    assert e1 * e2 == e2 * e1
    s1 = H.GroupAlgebraElement.basis(H.s_element(1, n))
    assert s1 * e1 == e1 * s1
    with pytest.raises(ValueError):
        H.e_element(3, 3)


def test_psi_examples():
    n = 3
    assert H.psi(Element.parse("E1", n)) == H.e_element(1, n)
    assert H.psi(Element.parse("T2", n)) == H.GroupAlgebraElement.basis(H.s_element(2, n))
    assert H.psi(Element.parse("T2^-1", n)) == H.psi(Element.parse("T2", n))
    assert H.psi(Element.parse("T1 T1", n)) == H.GroupAlgebraElement.one(n)


@given(elements(3), elements(3))
def test_psi_multiplicative_on_reduced_products(a, b):
    assert H.psi(mul_reduced(a, b)) == H.psi(a) * H.psi(b)


@pytest.mark.parametrize("bp", bipartitions(3) + bipartitions(4), ids=lambda b: b.label())
def test_induced_reps(bp):
    r = H.induced_rep(bp)
    assert r.dim == comb(bp.n, bp.a) * rep_dim(bp.alpha) * rep_dim(bp.beta)
    assert r.check_group_relations()
    # each t_r is diagonal with b entries -1 per Dirac block
    d = r.dim
    for t in r.t_matrices:
        assert all(t[i][j] == 0 for i in range(d) for j in range(d) if i != j)
    for k in range(d):
        assert sum(1 for t in r.t_matrices if t[k][k] == -1) == bp.b
    H.to_erep(r).check_relations()


@pytest.mark.parametrize("bp", bipartitions(3), ids=lambda b: b.label())
def test_tie_matrices_are_diagonal_projections(bp):
    rep = H.to_erep(H.induced_rep(bp))
    for e in rep.E:
        for i, row in enumerate(e):
            for j, x in enumerate(row):
                assert x == (x if i == j and x in (0, 1) else 0)


def test_tie_matrices_mixed_example():
    rep = H.to_erep(H.induced_rep(H.Bipartition.parse("[2],[1]")))
    diag = [tuple(e[k][k] for k in range(3)) for e in rep.E]
    assert diag == [(1, 0, 0), (0, 0, 1)]


def test_uniform_tie_statement():
    # the uniform e_r = I (r != a), 0 (r = a) statement holds exactly when one side is empty
    for bp in bipartitions(3):
        assert H.cor_e_holds(bp) == (bp.a == 0 or bp.b == 0)


@pytest.mark.parametrize("text", ["[2],[1]", "[1,1],[1]", "[1],[2]", "[1],[1]", "[2],[1,1]", "[1],[1,1,1]"])
def test_swap_intertwiner(text):
    bp = H.Bipartition.parse(text)
    phi = H.swap_intertwiner(bp)
    assert linalg.rank(phi) == len(phi)


@pytest.mark.parametrize("alpha", partitions(3), ids=str)
def test_tie_one_equals_empty_beta(alpha):
    a = H.phi1_rep(alpha)
    b = H.to_erep(H.induced_rep(H.Bipartition(alpha, PHI)))
    x = H.find_intertwiner(a, b)
    assert H.intertwines(x, a, b)


def test_find_intertwiner_rejects_non_isomorphic():
    a = H.phi0_rep(P([3]))
    b = H.phi1_rep(P([3]))
    with pytest.raises(H.IntertwinerFailure):
        H.find_intertwiner(a, b)


def test_plus_minus_n2():
    plus, minus = H.plus_minus_split(P([1]))
    assert plus.T == (((1,),),) and plus.E == (((0,),),)
    assert minus.T == (((-1,),),) and minus.E == (((0,),),)
    reps = H.irreps_E2()
    sig = {(r.T[0][0][0], r.E[0][0][0]) for r in reps}
    assert sig == {(1, 1), (-1, 1), (1, 0), (-1, 0)}


@pytest.mark.parametrize("alpha", [P([2]), P([1, 1])], ids=str)
def test_plus_minus_n4(alpha):
    plus, minus = H.plus_minus_split(alpha)
    full = H.to_erep(H.induced_rep(H.Bipartition(alpha, alpha)))
    assert plus.dim + minus.dim == full.dim
    assert plus.commutant_dim() == 1 and minus.commutant_dim() == 1
    with pytest.raises(H.IntertwinerFailure):
        H.find_intertwiner(plus, minus)


def test_irreps_E3():
    reps = H.irreps_E3()
    assert [r.dim for r in reps] == [1, 1, 2, 1, 1, 2, 3, 3]
    assert sum(r.dim ** 2 for r in reps) == 30
    words = span_basis(3).words
    chars = [r.character(words) for r in reps]
    assert len(set(chars)) == 8
    for r in reps:
        assert r.relation_failures() == []
        assert r.commutant_dim() == 1


def test_certificate():
    cert = H.semisimplicity_certificate()
    assert cert.rank == 30
    assert cert.phi0_rank == 6
    assert cert.psi_only_rank == 24
    assert len(cert.witness_columns) == 30
    data = cert.to_json()
    assert data["witness_labels"][0].startswith("phi0:")


def test_image_ranks_n4():
    from tiealg.rewrite import engine

    words = engine(4).normal_words
    assert H.image_rank(words, 4, ("psi",)) == 192
    assert H.image_rank(words, 4, ("phi0", "phi1", "psi")) == 216


@pytest.mark.parametrize("a,b", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_conjugate_signs(a, b):
    for signs in itertools.product((0, 1), repeat=a + b):
        out = H.conjugate_signs(a, b, signs)
        assert sorted(out) == sorted(signs)
        assert H.conjugate_signs(b, a, out) == tuple(signs)


def test_conjugate_signs_moves_blocks():
    assert H.conjugate_signs(2, 1, (1, 1, 0)) in {(0, 1, 1), (1, 0, 1)}


def test_relation_violation_detected():
    bad = H.ERep(2, (((Fraction(2),),),), (((Fraction(1),),),), "bad")
    assert bad.relation_failures() == ["(9) i=1"]
    with pytest.raises(H.RelationViolation):
        bad.check_relations()


def test_json_export():
    import json

    data = json.loads(H.ereps_json(H.irreps_E2()))
    assert [r["dim"] for r in data["reps"]] == [1, 1, 1, 1]
