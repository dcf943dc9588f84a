import itertools
import math

import pytest
from hypothesis import given

from cycloschur.combi import (
    Node, StdTableau, add_node, addable_nodes, diagram, dominance_ge, enumerate_all_ssts,
    enumerate_compositions, enumerate_multipartitions, enumerate_ssts, enumerate_std_tableaux,
    format_multipartition, gamma, gamma_inv, is_in_gamma_image, node_precedes, pad,
    parse_multipartition, parse_node, remove_node, removable_nodes, special_sst, std_count,
    superstandard, tableau_T_lambda, tableau_perm, trim, weight_tableau, weyl_dim,
)

from strategies import multipartitions


# independent oracles -------------------------------------------------------

def brute_std_count(la):
    """Count fillings of the diagram by 1..n increasing along rows and columns."""
    nodes = diagram(la)
    count = 0
    for perm in itertools.permutations(range(1, len(nodes) + 1)):
        t = dict(zip(nodes, perm))
        if all(t[(i, j, k)] < t[(i, j + 1, k)] for (i, j, k) in nodes if (i, j + 1, k) in t) and \
           all(t[(i, j, k)] < t[(i + 1, j, k)] for (i, j, k) in nodes if (i + 1, j, k) in t):
            count += 1
    return count


def brute_sst_count(la, m):
    """Count fillings by labels (a, c), k <= c, a <= m_c, rows weakly and columns
    strictly increasing in the order (c, a)."""
    nodes = [tuple(x) for x in diagram(la)]
    labels = [(a, c) for c in range(1, len(m) + 1) for a in range(1, m[c - 1] + 1)]
    key = lambda lab: (lab[1], lab[0])
    count = 0
    for fill in itertools.product(labels, repeat=len(nodes)):
        t = dict(zip(nodes, fill))
        if any(t[x][1] < x[2] for x in nodes):
            continue
        if any(key(t[(i, j, k)]) > key(t[(i, j + 1, k)]) for (i, j, k) in nodes if (i, j + 1, k) in t):
            continue
        if any(key(t[(i, j, k)]) >= key(t[(i + 1, j, k)]) for (i, j, k) in nodes if (i + 1, j, k) in t):
            continue
        count += 1
    return count


# examples -----------------------------------------------------------------

def test_enumerate_multipartitions_examples():
    assert enumerate_multipartitions(0, 3) == [((), (), ())]
    assert len(enumerate_multipartitions(1, 3)) == 3
    assert enumerate_multipartitions(2, 2) == [
        ((2,), ()), ((1, 1), ()), ((1,), (1,)), ((), (2,)), ((), (1, 1))]


def test_node_order_examples():
    assert node_precedes((1, 2, 1), (2, 1, 1))
    assert node_precedes((3, 1, 1), (1, 1, 2))
    assert not node_precedes((1, 1, 2), (1, 5, 2))
    assert not node_precedes((1, 5, 2), (1, 1, 2))


def test_removable_and_addable_examples():
    assert removable_nodes(((2,), (1,))) == [Node(1, 2, 1), Node(1, 1, 2)]
    assert addable_nodes(((), (1,)), (2, 2)) == [Node(1, 1, 1), Node(1, 2, 2), Node(2, 1, 2)]
    assert removable_nodes(((), (), ())) == []


def test_gamma_examples():
    m = (2, 2)
    assert gamma(((1,), (1,)), m) == ((1, 0), (1, 1))
    assert gamma_inv(gamma(((1,), (1,)), m), m) == ((1, 0), (1,))
    assert not is_in_gamma_image(((2, 0), (2, 0)), m)
    with pytest.raises(ValueError):
        gamma_inv(((2, 0), (2, 0)), m)


def test_dominance_examples():
    m = (2, 1)
    assert dominance_ge(((2,), ()), ((1, 1), ()), m)
    assert dominance_ge(((1,), (1,)), ((1,), (1,)), m)
    assert not dominance_ge(((1,), (1,)), ((2,), ()), m)
    with pytest.raises(ValueError):
        dominance_ge(((1,), ()), ((2,), ()), m)


def test_std_tableaux_examples():
    assert std_count(((1,), (1,))) == 2
    assert std_count(((2,), ())) == 1
    assert sum(std_count(la) ** 2 for la in enumerate_multipartitions(2, 2)) == 8
    la = ((1,), (1,))
    tabs = enumerate_std_tableaux(la)
    assert superstandard(la) in tabs


def test_tableau_perm_examples():
    la = ((1,), (1,))
    t_la = superstandard(la)
    assert tableau_perm(t_la) == (0, 1)
    other = next(t for t in enumerate_std_tableaux(la) if t != t_la)
    assert tableau_perm(other) == (1, 0)


def test_weyl_dim_examples():
    assert weyl_dim(((2, 1),), (3,)) == 8
    assert weyl_dim(((1,), (1,)), (2, 2)) == 8
    assert brute_sst_count(((2, 1),), (3,)) == 8
    assert brute_sst_count(((1,), (1,)), (2, 2)) == 8


def test_unique_sst_of_own_weight():
    for n in range(1, 5):
        for la in enumerate_multipartitions(n, 2):
            m = (n, n)
            assert enumerate_ssts(la, pad(la, m), m) == [tableau_T_lambda(la)]


def test_special_sst_example():
    la, x, m = ((1,), (1,)), (1, 1, 1), (2, 2)
    T = special_sst(la, x, m)
    assert T[Node(1, 1, 1)] == (2, 2)
    assert T[Node(1, 1, 2)] == (1, 2)
    with pytest.raises(ValueError):
        special_sst(la, (1, 2, 1), m)


def test_special_sst_is_semistandard_and_restricts():
    for n in range(1, 6):
        for la in enumerate_multipartitions(n, 2):
            m = (n, n)
            for x in removable_nodes(la):
                T = special_sst(la, x, m)
                assert T.is_semistandard()
                rest, node = T.remove_label((m[-1], 2))
                assert node == x
                assert rest == tableau_T_lambda(remove_node(la, x))


def test_superstandard_weight_tableau_is_T_lambda():
    for n in range(5):
        for r in (1, 2):
            for la in enumerate_multipartitions(n, r):
                assert weight_tableau(superstandard(la), la) == tableau_T_lambda(la)


def test_text_formats():
    assert parse_multipartition("[[2,1],[1]]") == ((2, 1), (1,))
    assert parse_multipartition("[[],[]]") == ((), ())
    assert format_multipartition(((2, 1), ())) == "[[2,1],[]]"
    assert parse_node("(1,2,3)") == Node(1, 2, 3)
    for bad in ("[[2],[1", "[[1,2]]", "[]", "[[a]]"):
        with pytest.raises(ValueError):
            parse_multipartition(bad)


def test_compositions_have_declared_shape():
    for mu in enumerate_compositions(3, (2, 3)):
        assert [len(c) for c in mu] == [2, 3]
        assert sum(map(sum, mu)) == 3


# properties -----------------------------------------------------------------

@given(multipartitions(max_n=5))
def test_remove_then_add_is_identity(la):
    for x in removable_nodes(la):
        mu = remove_node(la, x)
        assert x in addable_nodes(mu)
        assert add_node(mu, x) == trim(la)


@given(multipartitions(max_n=5))
def test_node_order_is_strict_total_on_corners(la):
    for nodes in (removable_nodes(la), addable_nodes(la)):
        keys = [(x.comp, x.row) for x in nodes]
        assert len(set(keys)) == len(keys)
        for a, b in itertools.combinations(nodes, 2):
            assert node_precedes(a, b) != node_precedes(b, a)


@given(multipartitions(max_n=6))
def test_std_count_branching_recursion(la):
    if sum(map(sum, la)) == 0:
        assert std_count(la) == 1
    else:
        assert std_count(la) == sum(std_count(remove_node(la, x)) for x in removable_nodes(la))


@given(multipartitions(max_n=5, r_values=(1, 2)))
def test_std_count_matches_brute_force(la):
    assert std_count(la) == brute_std_count(la)
    tabs = enumerate_std_tableaux(la)
    assert len(tabs) == std_count(la)
    assert all(t.is_standard() for t in tabs)


@given(multipartitions(max_n=3, r_values=(1, 2)))
def test_weyl_dim_matches_brute_force(la):
    m = tuple(max(sum(map(sum, la)), 1) for _ in la)
    assert weyl_dim(la, m) == brute_sst_count(la, m)


@given(multipartitions(max_n=5, r_values=(1, 2, 3)))
def test_weyl_dim_matches_enumeration(la):
    m = tuple(max(sum(map(sum, la)), 2) for _ in la)
    assert weyl_dim(la, m) == len(enumerate_all_ssts(la, m))


@pytest.mark.parametrize("n,r", [(n, r) for n in range(6) for r in (1, 2, 3)])
def test_sum_of_squares_is_hecke_dimension(n, r):
    assert sum(std_count(la) ** 2 for la in enumerate_multipartitions(n, r)) == r ** n * math.factorial(n)


def test_nonempty_sst_set_implies_dominance():
    for n in range(1, 5):
        m = (n, n)
        for la in enumerate_multipartitions(n, 2):
            for T in enumerate_all_ssts(la, m):
                assert dominance_ge(pad(la, m), T.weight(m), m)
