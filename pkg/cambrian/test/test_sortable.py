#! /usr/bin/env python3

import itertools

import pytest

from cambrian import coxeter, sortable
from cambrian.coxeter import bounded_join, bounded_meet, enumerate_elements, weak_leq
from cambrian.notation import load_system, parse_gamma, parse_word
from cambrian.semilattice import build_cambrian, cambrian_join
from cambrian.sortable import (alpha_positions, congruence_fiber, congruence_fibers,
                               enumerate_sortables, is_sortable_blocks, is_sortable_recursive,
                               lex_first_positions, pi_down, position_closure_check,
                               reduced_words_of_coxeter_element, sorting_word)

A3 = load_system('A3')
A4 = load_system('A4')
B3 = load_system('B3')
AFFINE = load_system('A2-affine')


def _three_tests(w, gamma):
    return (is_sortable_blocks(w, gamma), is_sortable_recursive(w, gamma),
            position_closure_check(w, gamma))


def test_sorting_word_in_s5():
    sw = sorting_word(parse_word(A4, 's1,s2,s1,s4'), parse_gamma(A4))
    assert str(sw) == 's1 s2 s4 | s1'
    assert sw.positions == (1, 2, 4, 5)
    assert sw.grid == ((1, 1, 0, 1), (1, 0, 0, 0))


def test_identity():
    gamma = parse_gamma(A3)
    sw = sorting_word(A3.identity, gamma)
    assert str(sw) == ''
    assert sw.positions == ()
    assert _three_tests(A3.identity, gamma) == (True, True, True)


def test_alpha_and_verdicts_in_s4():
    gamma = parse_gamma(A3)
    u = parse_word(A3, 's1,s2,s3,s2')
    v = parse_word(A3, 's2,s3,s2,s1')
    assert alpha_positions(u, gamma) == {1, 2, 3, 5}
    assert alpha_positions(v, gamma) == {2, 3, 5, 7}
    assert _three_tests(u, gamma) == (True, True, True)
    assert _three_tests(v, gamma) == (False, False, False)


def test_sortable_counts():
    assert len(enumerate_sortables(parse_gamma(A3), 6)) == 14
    assert len(enumerate_sortables(parse_gamma(A3, 's2,s1,s3'), 6)) == 14
    assert len(enumerate_sortables(parse_gamma(B3), 9)) == 20
    assert len(enumerate_sortables(parse_gamma(B3, 's3,s1,s2'), 9)) == 20
    assert len(enumerate_sortables(parse_gamma(load_system('H3')), 15)) == 32


def test_generator_matches_filter():
    for system, cap in ((A3, 6), (B3, 9), (AFFINE, 7)):
        for gamma in (parse_gamma(system), parse_gamma(system, 's2,s3,s1')):
            direct = enumerate_sortables(gamma, cap)
            filtered = [w for w in enumerate_elements(system, cap) if is_sortable_blocks(w, gamma)]
            assert direct == filtered


def test_three_characterisations_agree():
    for system, cap in ((A3, None), (B3, None), (AFFINE, 8)):
        for word in itertools.permutations(range(3)):
            gamma = sortable.CoxeterElementWord(system, word)
            for w in enumerate_elements(system, cap):
                assert len(set(_three_tests(w, gamma))) == 1


def test_sorting_word_is_lexicographically_first():
    for system in (A3, B3):
        gamma = parse_gamma(system, 's2,s1,s3')
        for w in enumerate_elements(system):
            assert lex_first_positions(w, gamma) == sorting_word(w, gamma).positions


def test_sorting_word_spells_the_element():
    gamma = parse_gamma(AFFINE, 's3,s1,s2')
    for w in enumerate_elements(AFFINE, 6):
        assert AFFINE.element(sorting_word(w, gamma).letters) is w


def test_projection_example():
    gamma = parse_gamma(A3)
    assert pi_down(parse_word(A3, 's2,s3,s2,s1'), gamma) is parse_word(A3, 's2,s3,s2')


def test_projection_laws():
    for system in (A3, B3):
        gamma = parse_gamma(system)
        elements = enumerate_elements(system)
        for w in elements:
            x = pi_down(w, gamma)
            assert is_sortable_blocks(x, gamma)
            assert weak_leq(x, w)
            assert pi_down(x, gamma) is x
        for u, v in itertools.product(elements, repeat=2):
            if weak_leq(u, v):
                assert weak_leq(pi_down(u, gamma), pi_down(v, gamma))


def test_projection_commutes_with_meets():
    for system in (A3, B3):
        gamma = parse_gamma(system, 's2,s3,s1')
        elements = enumerate_elements(system)
        for u, v in itertools.combinations(elements, 2):
            meet = bounded_meet([u, v], elements)
            projected = bounded_meet([pi_down(u, gamma), pi_down(v, gamma)], elements)
            assert pi_down(meet, gamma) is projected


def test_projection_on_infinite_group():
    gamma = parse_gamma(AFFINE)
    for w in enumerate_elements(AFFINE, 6):
        x = pi_down(w, gamma)
        assert is_sortable_blocks(x, gamma)
        assert weak_leq(x, w)


def test_fibers():
    gamma = parse_gamma(A3)
    fibers = congruence_fibers(gamma)
    assert len(fibers) == 14
    members = [w for ws in fibers.values() for w in ws]
    assert sorted(members, key=lambda w: (w.length, w.word)) == enumerate_elements(A3)
    for x, ws in fibers.items():
        assert x is ws[0]
        assert all(weak_leq(x, w) for w in ws)
    assert tuple(congruence_fiber(A3.identity, gamma)) == fibers[A3.identity]
    assert len(congruence_fibers(parse_gamma(B3))) == 20


def test_reduced_words_of_coxeter_elements():
    words = reduced_words_of_coxeter_element(parse_gamma(B3, 's2,s1,s3'))
    assert [str(g) for g in words] == ['s2,s1,s3', 's2,s3,s1']
    assert len(reduced_words_of_coxeter_element(parse_gamma(A3))) == 1
    assert len(reduced_words_of_coxeter_element(parse_gamma(A4, 's1,s3,s2,s4'))) == 5


def test_errors():
    with pytest.raises(sortable.NotACoxeterElementError):
        sortable.CoxeterElementWord(A3, [0, 0, 1])
    with pytest.raises(sortable.NotACoxeterElementError):
        sortable.CoxeterElementWord(A3, [0, 5])
    partial = sortable.CoxeterElementWord(A3, [0, 1])
    with pytest.raises(sortable.NotInParabolicError):
        sorting_word(A3.generator(2), partial)
    with pytest.raises(sortable.NotInParabolicError):
        lex_first_positions(A3.generator(2), partial)
    with pytest.raises(coxeter.SystemMismatchError):
        sorting_word(B3.generator(0), parse_gamma(A3))


def test_caches_are_bounded():
    for cached in (sorting_word, pi_down):
        assert cached.cache_info().maxsize == sortable.CACHE_SIZE
    gamma = parse_gamma(B3)
    for w in enumerate_elements(B3):
        pi_down(w, gamma)
    assert pi_down.cache_info().currsize <= sortable.CACHE_SIZE


def test_positions_grow_along_the_order():
    for system, cap in ((A3, 6), (B3, 9), (AFFINE, 7)):
        for word in ((0, 1, 2), (2, 0, 1)):
            gamma = sortable.CoxeterElementWord(system, word)
            P = build_cambrian(gamma, cap)
            for u, v in P.comparable_pairs():
                assert alpha_positions(u, gamma) <= alpha_positions(v, gamma)


def test_projection_commutes_with_joins():
    for system, cap in ((A3, 6), (B3, 9), (AFFINE, 7)):
        gamma = parse_gamma(system, 's2,s3,s1')
        P = build_cambrian(gamma, cap)
        elements = enumerate_elements(system, cap)
        for u, v in itertools.combinations(elements, 2):
            try:
                join = bounded_join([u, v], cap, elements)
            except coxeter.NoUpperBoundWithinCapError:
                continue
            assert pi_down(join, gamma) is cambrian_join([pi_down(u, gamma), pi_down(v, gamma)], P)


def test_blocks_do_not_depend_on_the_word_for_gamma():
    for system, text in ((A3, 's1,s3,s2'), (B3, 's1,s3,s2'), (A4, 's1,s3,s2,s4')):
        words = reduced_words_of_coxeter_element(parse_gamma(system, text))
        assert len(words) > 1
        for w in enumerate_elements(system):
            block_sets = {tuple(frozenset(b) for b in sorting_word(w, gamma).blocks)
                          for gamma in words}
            assert len(block_sets) == 1
