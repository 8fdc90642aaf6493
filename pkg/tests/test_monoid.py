import random
from itertools import product

import pytest

from stylic.columns import act_word, gamma_minus
from stylic.core import (
    Alphabet,
    canonical_inflation_exponents,
    decreasing_word,
    increasing_word,
    inflate,
    parse_word,
    shift_down_word,
    support,
    theta,
)
from stylic.monoid import (
    EMPTY_NTABLEAU,
    NTableau,
    SetPartition,
    all_partitions_of_subsets,
    bell_number,
    complete_elements_bijection_check,
    d_operator,
    delta_word,
    enumerate_styl,
    from_partition,
    left_insert,
    n_insert,
    n_tableau,
    n_tableau_recursive,
    parse_partition,
    pi,
    theta_tableau,
    to_partition,
    up,
    zero_tableau,
)
from stylic.tableaux import p_tableau, young_leq

FIVE_ROW_TABLEAU = NTableau(((1, 2, 3, 4, 5), (2, 4, 5), (4, 5)))  # abcde/bde/de


def words_up_to(n, maxlen):
    for length in range(maxlen + 1):
        yield from product(range(1, n + 1), repeat=length)


def test_bell_numbers():
    assert [bell_number(k) for k in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]


def test_up():
    assert up(2, frozenset({1, 3, 4})) == 3
    assert up(4, frozenset({1, 2})) is None
    assert up(1, frozenset({2})) == 2


def test_delta_word():
    assert delta_word(parse_word("acbd")) == parse_word("c")
    assert delta_word(()) == ()
    assert delta_word(parse_word("aa")) == ()
    assert delta_word(parse_word("cabd")) == parse_word("cc")


def test_d_operator():
    assert d_operator(frozenset(), frozenset({1, 2})) == frozenset()
    assert d_operator(frozenset({2, 4}), frozenset({1, 2, 3})) == frozenset({2, 4})
    # a subset with a larger minimum maps onto the whole target
    rng = random.Random(2)
    for _ in range(100):
        c = frozenset(x for x in range(1, 8) if rng.random() < 0.6)
        b = frozenset(x for x in c if rng.random() < 0.6)
        if b and c and b < c and min(b) > min(c):
            assert d_operator(b, c) == b


def test_n_insert_examples():
    assert n_insert(EMPTY_NTABLEAU, 1) == NTableau(((1,),))
    t = NTableau(((1, 2, 4),))
    assert n_insert(t, 4) == t  # largest letter already present
    t = EMPTY_NTABLEAU
    for x in parse_word("cabd"):
        t = n_insert(t, x)
    assert t == NTableau(((1, 2, 3, 4), (3,)))


def test_n_tableau_examples():
    target = NTableau(((1, 2, 3, 4), (3,)))
    assert n_tableau(parse_word("cabd")) == target
    assert n_tableau(parse_word("cdab")) == target
    assert n_tableau(()) == EMPTY_NTABLEAU
    assert n_tableau(FIVE_ROW_TABLEAU.row_word()) == FIVE_ROW_TABLEAU


def test_n_tableau_recursive_agrees():
    for w in words_up_to(3, 6):
        assert n_tableau(w) == n_tableau_recursive(w)


def test_ntableau_validation():
    with pytest.raises(ValueError):
        NTableau(((1, 1),))
    with pytest.raises(ValueError):
        NTableau(((1, 2), (3,)))  # upper row not contained in lower
    with pytest.raises(ValueError):
        NTableau(((1, 2), (1,)))  # minima not increasing


def test_left_insert_examples():
    assert left_insert(1, NTableau(((2,),))) == NTableau(((1, 2),))
    t = NTableau(((1, 2), (2,)))
    assert left_insert(2, t) == t
    assert left_insert(1, NTableau(((2, 3), (3,)))) == NTableau(((1, 2, 3), (3,)))


def test_left_insert_duplicate_bumps_are_removed():
    # inserting b into rows {a,c,d} / {c,d}: b joins both rows, and the
    # shared bump target c is removed from the upper row
    t = NTableau(((1, 3, 4), (3, 4)))
    assert left_insert(2, t) == NTableau(((1, 2, 3, 4), (2, 4)))
    assert left_insert(2, t) == n_tableau((2,) + t.row_word())


def test_left_insert_into_empty():
    assert left_insert(3, NTableau(())) == NTableau(((3,),))


def test_left_insert_matches_left_multiplication():
    for n in (2, 3):
        alphabet = Alphabet(n)
        monoid = enumerate_styl(alphabet)
        for e in monoid.elements:
            for x in alphabet.letters:
                assert left_insert(x, e.tableau) == n_tableau((x,) + e.tableau.row_word())


def test_partition_bijection_examples():
    assert to_partition(FIVE_ROW_TABLEAU) == parse_partition("ac/b/de")
    assert to_partition(EMPTY_NTABLEAU) == SetPartition(())
    assert from_partition(SetPartition(())) == EMPTY_NTABLEAU
    assert to_partition(NTableau(((1, 2),))) == parse_partition("ab")
    assert from_partition(parse_partition("ab")) == NTableau(((1, 2),))


def test_partition_bijection_is_inverse():
    for alphabet in (Alphabet(3), Alphabet(4)):
        for r in all_partitions_of_subsets(alphabet):
            assert to_partition(from_partition(r)) == r
    for w in words_up_to(3, 5):
        t = n_tableau(w)
        assert from_partition(to_partition(t)) == t


def test_pi_examples():
    assert pi(parse_word("cabd")) == parse_partition("abd/c")
    assert pi(()) == SetPartition(())
    assert pi(FIVE_ROW_TABLEAU.row_word()) == parse_partition("ac/b/de")


def test_partition_text_and_validation():
    assert parse_partition("13/28/457/6").render(digits=True) == "13/28/457/6"
    assert parse_partition("ac/b/de").render() == "ac/b/de"
    assert parse_partition("b/ac").blocks == ((1, 3), (2,))  # reordered by minima
    with pytest.raises(ValueError):
        SetPartition(((1, 2), (2, 3)))


def test_enumerate_small_sizes():
    assert len(enumerate_styl(Alphabet(1))) == 2
    assert len(enumerate_styl(Alphabet(2))) == 5
    assert len(enumerate_styl(Alphabet(3))) == 15


def test_enumeration_limit():
    with pytest.raises(ValueError):
        enumerate_styl(Alphabet(7))
    # explicit override allows it (not exercised at size 7 here)
    assert len(enumerate_styl(Alphabet(4), max_size=4)) == 52


def test_multiplication():
    a4 = Alphabet(4)
    monoid = enumerate_styl(a4)
    cabd = monoid.class_of_word(parse_word("cabd"))
    cdab = monoid.class_of_word(parse_word("cdab"))
    assert cabd == cdab
    for i in range(len(monoid)):
        assert monoid.multiply(monoid.identity, i) == i
        assert monoid.multiply(i, monoid.identity) == i
        assert monoid.multiply(monoid.zero, i) == monoid.zero
        assert monoid.multiply(i, monoid.zero) == monoid.zero


def test_multiplication_matches_word_concatenation():
    a3 = Alphabet(3)
    monoid = enumerate_styl(a3)
    words = list(words_up_to(3, 3))
    for u in words:
        for v in words:
            assert monoid.multiply(
                monoid.class_of_word(u), monoid.class_of_word(v)
            ) == monoid.class_of_word(u + v)


def test_zero_element():
    assert zero_tableau(Alphabet(1)) == NTableau(((1,),))
    z4 = zero_tableau(Alphabet(4))
    assert z4.boxes() == 10
    assert z4 == n_tableau(parse_word("dcba"))


def test_idempotents():
    a2 = Alphabet(2)
    monoid = enumerate_styl(a2)
    idem = monoid.idempotents()
    assert len(idem) == 4
    assert monoid.identity in idem
    assert monoid.class_of_word(parse_word("ba")) in idem
    assert monoid.class_of_word(parse_word("ab")) not in idem
    expected = {monoid.class_of_word(decreasing_word(s)) for s in a2.subsets()}
    assert set(idem) == expected


def test_j_order_small():
    monoid = enumerate_styl(Alphabet(3))
    order = monoid.j_order()
    assert len(monoid) == 15
    assert order.coranks[monoid.identity] == 0
    assert order.coranks[monoid.zero] == 6 == order.height
    assert len(set(order.down_sets)) == len(monoid)
    # every element sits between zero and the identity
    for i in range(len(monoid)):
        assert order.leq(monoid.zero, i)
        assert order.leq(i, monoid.identity)


def test_word_equals_reinserted_row_word():
    a3 = Alphabet(3)
    monoid = enumerate_styl(a3)
    for w in words_up_to(3, 5):
        assert monoid.class_of_word(w) == monoid.class_of_word(n_tableau(w).row_word())


def test_both_tableaux_share_their_first_column():
    from stylic.columns import EMPTY_COLUMN

    for w in words_up_to(3, 6):
        first = act_word(w, EMPTY_COLUMN)
        assert n_tableau(w).first_column() == first
        assert p_tableau(w).first_column() == first


def test_knuth_classes_refine_stylic_classes():
    a3 = Alphabet(3)
    monoid = enumerate_styl(a3)
    by_tableau = {}
    for w in words_up_to(3, 5):
        by_tableau.setdefault(p_tableau(w), set()).add(monoid.class_of_word(w))
    assert all(len(classes) == 1 for classes in by_tableau.values())


def test_support_is_a_class_invariant():
    a3 = Alphabet(3)
    monoid = enumerate_styl(a3)
    seen = {}
    for w in words_up_to(3, 5):
        i = monoid.class_of_word(w)
        assert seen.setdefault(i, support(w)) == support(w)


def test_small_letter_absorption():
    # a letter below everything in u satisfies (a u a) = (u a) in the monoid
    rng = random.Random(4)
    a4 = Alphabet(4)
    monoid = enumerate_styl(a4)
    for _ in range(200):
        a = rng.randint(1, 4)
        u = tuple(rng.randint(a, 4) for _ in range(rng.randint(0, 5)))
        assert monoid.class_of_word((a,) + u + (a,)) == monoid.class_of_word(u + (a,))


def test_inflation_simulates_n_algorithm():
    for n in (2, 3):
        for w in words_up_to(n, 5):
            if not w:
                continue
            inflated = inflate(w, canonical_inflation_exponents(len(w)))
            nt = n_tableau(w)
            pt = p_tableau(inflated)
            assert len(nt.rows) == len(pt.rows)
            for nrow, prow in zip(nt.rows, pt.rows):
                assert frozenset(nrow) == frozenset(prow)


def test_delta_of_decreasing_row_words():
    # bumped letters of x u_k ... u_1, for nested increasing rows, reduce to
    # the images of each row in the next one up
    rng = random.Random(8)
    a5 = Alphabet(5)
    monoid = enumerate_styl(a5)
    for _ in range(150):
        sets: list[frozenset] = []
        current = frozenset(x for x in a5.letters if rng.random() < 0.7)
        while current:
            sets.append(current)
            current = frozenset(x for x in current if rng.random() < 0.5)
        if not sets:
            continue
        k = len(sets)
        x = tuple(rng.randint(1, 5) for _ in range(rng.randint(0, 3)))
        xs = support(x)
        # the word x u_k ... u_1, supports nested downward from sets[0]
        word = x + tuple(
            letter for i in range(k - 1, -1, -1) for letter in increasing_word(sets[i])
        )
        rhs = delta_word(x)
        for i in range(k - 1, -1, -1):
            target = (sets[i + 1] if i + 1 < k else frozenset()) | xs
            rhs = rhs + increasing_word(d_operator(target, sets[i]))
        assert monoid.class_of_word(delta_word(word)) == monoid.class_of_word(rhs)


def test_shape_monotone_under_insertions():
    a3 = Alphabet(3)
    monoid = enumerate_styl(a3)
    for e in monoid.elements:
        for x in a3.letters:
            for s in (n_insert(e.tableau, x), left_insert(x, e.tableau)):
                if s != e.tableau:
                    assert young_leq(e.tableau.shape(), s.shape())
                    assert e.tableau.shape() != s.shape()


def test_theta_compatibility():
    a3 = Alphabet(3)
    for w in words_up_to(3, 5):
        assert n_tableau(theta(w, a3)) == theta_tableau(n_tableau(w), a3)
    monoid = enumerate_styl(a3)
    for e in monoid.elements:
        for x in a3.letters:
            left = theta_tableau(left_insert(x, e.tableau), a3)
            right = n_insert(theta_tableau(e.tableau, a3), a3.theta_letter(x))
            assert left == right


def test_subalphabet_embedding():
    big = Alphabet(4)
    monoid = enumerate_styl(big)
    small_monoid = enumerate_styl(Alphabet(2))
    for u in words_up_to(2, 4):
        for v in words_up_to(2, 3):
            small_equal = small_monoid.class_of_word(u) == small_monoid.class_of_word(v)
            big_equal = monoid.class_of_word(u) == monoid.class_of_word(v)
            assert small_equal == big_equal


def test_complete_elements():
    for n in (1, 2, 3, 4):
        assert complete_elements_bijection_check(Alphabet(n))


def test_complete_element_worked_example():
    a4 = Alphabet(4)
    w = parse_word("acbd")
    assert delta_word(w) == (3,)
    u = shift_down_word(delta_word(w))
    assert u == (2,)
    gamma = frozenset({1})
    assert act_word(w, gamma) == frozenset({3, 2, 1})
    assert act_word(u, gamma) == frozenset({2, 1})
    assert act_word(u, gamma) == gamma_minus(act_word(w, gamma), a4)


def test_monoid_json_export():
    monoid = enumerate_styl(Alphabet(2))
    data = monoid.to_json()
    assert data["size"] == 5
    assert len(data["table"]) == 5
    words = [e["word"] for e in data["elements"]]
    assert "1" in words  # the identity renders as 1
    dot = monoid.jorder_dot()
    assert dot.startswith("digraph") and dot.count("->") == len(monoid.j_order().hasse_edges)
