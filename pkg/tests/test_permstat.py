import math

import pytest

from bigrassmannian.errors import BoundExceeded, SizeMismatch
from bigrassmannian.permstat import (
    Permutation,
    all_bigrassmannians,
    beta,
    bigrassmannians_below,
    bruhat_leq,
    bruhat_order_bfs,
    compose,
    descents,
    enumerate_sn,
    inverse,
    inversions,
    is_bigrassmannian,
    length,
    length_and_beta,
    rothe_diagram,
)

# (word, length, beta) over the whole of S_4
S4_TABLE = [
    ("1234", 0, 0), ("2134", 1, 1), ("3124", 2, 3), ("4123", 3, 6),
    ("1243", 1, 1), ("2143", 2, 2), ("3142", 3, 5), ("4132", 4, 7),
    ("1324", 1, 1), ("2314", 2, 3), ("3214", 3, 4), ("4213", 4, 7),
    ("1342", 2, 3), ("2341", 3, 6), ("3241", 4, 7), ("4231", 5, 9),
    ("1423", 2, 3), ("2413", 3, 5), ("3412", 4, 8), ("4312", 5, 9),
    ("1432", 3, 4), ("2431", 4, 7), ("3421", 5, 9), ("4321", 6, 10),
]


@pytest.mark.parametrize("word,ell,bet", S4_TABLE)
def test_s4_table(word, ell, bet):
    w = Permutation.parse(word)
    assert length(w) == ell
    assert beta(w) == bet
    assert length_and_beta(w) == (ell, bet)


def test_beta_worked_example():
    # 3412: inversions (1,3),(2,3),(1,4),(2,4) give 2+1+3+2 = 8
    w = Permutation.parse("3412")
    assert beta(w) == 8
    assert inversions(w) == frozenset({(1, 3), (2, 3), (1, 4), (2, 4)})


def test_beta_methods_agree():
    for n in range(1, 7):
        for w in enumerate_sn(n):
            b = beta(w)
            assert beta(w, "square-sum") == b
            assert beta(w, "linear-sum") == b


def test_beta_of_inverse():
    for n in range(1, 7):
        for w in enumerate_sn(n):
            assert beta(w) == beta(inverse(w))


def test_beta_maximum_is_tetrahedral():
    for n in range(2, 7):
        top = Permutation(range(n, 0, -1))
        assert beta(top) == math.comb(n + 1, 3)
        assert max(beta(w) for w in enumerate_sn(n)) == math.comb(n + 1, 3)


def test_length_counts_inversions():
    assert length(Permutation.parse("1234")) == 0
    assert length(Permutation.parse("4321")) == 6
    for w in enumerate_sn(4):
        assert length(w) == len(inversions(w))


def test_is_bigrassmannian():
    assert is_bigrassmannian(Permutation.parse("1324"))
    assert not is_bigrassmannian(Permutation.identity(4))
    assert len(all_bigrassmannians(4)) == 10


def test_descents():
    assert descents(Permutation.parse("3412")) == [2]
    assert descents(Permutation.identity(5)) == []


def test_bruhat_reflexive_and_examples():
    w = Permutation.parse("2341")
    assert bruhat_leq(w, w)
    assert bruhat_leq(Permutation.parse("2134"), w)
    assert not bruhat_leq(Permutation.parse("4123"), w)


def test_bruhat_size_mismatch():
    with pytest.raises(SizeMismatch):
        bruhat_leq(Permutation.identity(3), Permutation.identity(4))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bruhat_prefix_matches_bfs_closure(n):
    below = bruhat_order_bfs(n)
    perms = list(enumerate_sn(n))
    for w in perms:
        for u in perms:
            assert bruhat_leq(u, w) == (u in below[w])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_bigrassmannians_below_counts_beta(n):
    for w in enumerate_sn(n):
        assert len(bigrassmannians_below(w)) == beta(w)


def test_bigrassmannians_below_examples():
    assert bigrassmannians_below(Permutation.identity(4)) == frozenset()
    assert len(bigrassmannians_below(Permutation.parse("3412"))) == 8
    below_top = bigrassmannians_below(Permutation.parse("4321"))
    assert below_top == frozenset(all_bigrassmannians(4))


def test_rothe_diagram():
    assert rothe_diagram(Permutation.identity(4)) == frozenset()
    assert len(rothe_diagram(Permutation.parse("35241"))) == 7
    for w in enumerate_sn(5):
        assert len(rothe_diagram(w)) == length(w)


def test_group_operations():
    w = Permutation.parse("3412")
    assert inverse(w) == w
    assert compose(w, inverse(w)) == Permutation.identity(4)
    assert len(list(enumerate_sn(4))) == 24
    words = [p.word for p in enumerate_sn(4)]
    assert words == sorted(words)


def test_enumeration_bound():
    with pytest.raises(BoundExceeded):
        list(enumerate_sn(10))


def test_parse_large_n_comma_form():
    w = Permutation.parse("10,3,1,2,4,5,6,7,8,9")
    assert w.n == 10 and w(1) == 10
    assert str(w) == "10,3,1,2,4,5,6,7,8,9"


def test_rejects_non_permutation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 3))
