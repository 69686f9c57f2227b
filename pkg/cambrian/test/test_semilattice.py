#! /usr/bin/env python3

import collections
import itertools

import pytest

from cambrian import coxeter, semilattice
from cambrian.coxeter import bounded_join, bounded_meet, enumerate_elements, weak_leq
from cambrian.notation import load_system, parse_gamma, parse_word
from cambrian.semilattice import (ClosedInterval, atoms, build_cambrian, cambrian_join,
                                  cambrian_meet, cover_oracle, interval, is_nuclear,
                                  nuclear_witnesses)
from cambrian.sortable import is_sortable_blocks

A3 = load_system('A3')
B3 = load_system('B3')
AFFINE = load_system('A2-affine')


def test_sizes():
    a3 = build_cambrian(parse_gamma(A3), 6)
    b3 = build_cambrian(parse_gamma(B3), 9)
    assert (len(a3), len(a3.hasse_edges())) == (14, 21)
    assert (len(b3), len(b3.hasse_edges())) == (20, 30)


def test_every_element_has_rank_many_neighbours():
    P = build_cambrian(parse_gamma(B3, 's2,s1,s3'), 9)
    for w in P:
        assert len(P.upper_covers(w)) + len(P.lower_covers(w)) == 3


def test_covers_match_oracle():
    for gamma, cap in ((parse_gamma(A3), 6), (parse_gamma(B3), 9), (parse_gamma(AFFINE), 7)):
        P = build_cambrian(gamma, cap)
        assert P.hasse_edges() == cover_oracle(P)


def test_order_is_weak_order():
    P = build_cambrian(parse_gamma(AFFINE, 's2,s1,s3'), 6)
    for u in P:
        for v in P:
            assert P.leq(u, v) == weak_leq(u, v)


def test_truncation_cap_zero():
    P = build_cambrian(parse_gamma(AFFINE), 0)
    assert list(P) == [AFFINE.identity]
    with pytest.raises(semilattice.BadCapError):
        build_cambrian(parse_gamma(AFFINE), -1)


def test_interval_errors():
    P = build_cambrian(parse_gamma(A3), 6)
    s1, s3 = A3.generator(0), A3.generator(2)
    with pytest.raises(semilattice.NotComparableError):
        interval(P, s1, s3)
    with pytest.raises(semilattice.NotInPosetError):
        interval(P, A3.identity, parse_word(A3, 's2,s1'))
    small = build_cambrian(parse_gamma(A3), 2)
    with pytest.raises(semilattice.OutOfTruncationError):
        interval(small, A3.identity, parse_word(A3, 's1,s2,s3'))


def test_whole_lattice():
    P = build_cambrian(parse_gamma(A3), 6)
    top = P.elements[-1]
    whole = interval(P, P.bottom, top)
    assert len(whole) == 14
    assert [str(a) for a in atoms(whole)] == ['s1', 's2', 's3']
    assert is_nuclear(whole)
    assert cambrian_join(atoms(whole), P) is top


def test_joins_and_meets():
    P = build_cambrian(parse_gamma(A3), 6)
    s1, s2, s3 = (A3.generator(i) for i in range(3))
    assert cambrian_meet([s1, s2], P) is A3.identity
    assert cambrian_join([s1, s2], P) is parse_word(A3, 's1,s2,s1')
    assert cambrian_join([s1, s3], P) is parse_word(A3, 's1,s3')
    with pytest.raises(coxeter.EmptyInputError):
        cambrian_join([], P)


def test_join_within_truncation():
    gamma = parse_gamma(AFFINE)
    P = build_cambrian(gamma, 6)
    elements = enumerate_elements(AFFINE, 6)
    for u in P:
        for v in P:
            try:
                join = bounded_join([u, v], 6, elements)
            except coxeter.NoUpperBoundWithinCapError:
                with pytest.raises(coxeter.NoUpperBoundWithinCapError):
                    cambrian_join([u, v], P)
                continue
            assert is_sortable_blocks(join, gamma)
            assert cambrian_join([u, v], P) is join


def test_degenerate_interval_is_nuclear():
    P = build_cambrian(parse_gamma(B3), 9)
    for w in P:
        assert is_nuclear(interval(P, w, w))


def test_nuclear_witnesses():
    for system in (A3, B3):
        P = build_cambrian(parse_gamma(system, 's2,s3,s1'), 9)
        checked = 0
        for u, v in P.comparable_pairs():
            closed = ClosedInterval(P, u, v)
            witnesses = nuclear_witnesses(closed)
            if witnesses is None:
                continue
            checked += 1
            assert len(witnesses) <= 1
            assert bool(witnesses) == is_nuclear(closed)
        assert checked


def test_first_seven_ranks_of_affine_a2():
    P = build_cambrian(parse_gamma(AFFINE), 7)
    assert (len(P), len(P.hasse_edges())) == (19, 25)
    ranks = collections.Counter(w.length for w in P)
    assert [ranks[k] for k in range(8)] == [1, 3, 3, 4, 2, 2, 2, 2]


def test_meets_of_sortables_are_weak_order_meets():
    for system, text in ((A3, 's1,s2,s3'), (A3, 's2,s1,s3'), (B3, 's1,s2,s3'), (B3, 's3,s1,s2')):
        gamma = parse_gamma(system, text)
        P = build_cambrian(gamma, 9)
        elements = enumerate_elements(system)
        for u, v in itertools.combinations(P, 2):
            meet = bounded_meet([u, v], elements)
            assert is_sortable_blocks(meet, gamma)
            assert cambrian_meet([u, v], P) is meet


def _least(candidates, leq):
    least = [z for z in candidates if all(leq(z, y) for y in candidates)]
    assert len(least) == 1
    return least[0]


def test_lower_intervals_are_lattices():
    for gamma, cap in ((parse_gamma(A3), 6), (parse_gamma(B3), 9), (parse_gamma(AFFINE), 7)):
        P = build_cambrian(gamma, cap)
        for v in P:
            members = interval(P, P.bottom, v).members
            for x, y in itertools.combinations(members, 2):
                uppers = [z for z in members if P.leq(x, z) and P.leq(y, z)]
                lowers = [z for z in members if P.leq(z, x) and P.leq(z, y)]
                assert _least(uppers, P.leq) is cambrian_join([x, y], P)
                assert _least(lowers, lambda a, b: P.leq(b, a)) is cambrian_meet([x, y], P)
