# coding: utf-8
"""Truncated Cambrian semilattices and their closed intervals.

The gamma-sortable elements, ordered by the weak order, form the Cambrian
semilattice.  For an infinite group only the elements up to a length cap
are built; an interval [u, v] with v in the truncation is still complete,
since everything below v is shorter than v.

>>> from cambrian.coxeter import CoxeterSystem
>>> from cambrian.sortable import CoxeterElementWord
>>> A3 = CoxeterSystem([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
>>> P = build_cambrian(CoxeterElementWord(A3, [0, 1, 2]), 6)
>>> len(P), len(P.hasse_edges())
(14, 21)
>>> [str(a) for a in atoms(interval(P, P.bottom, P.elements[-1]))]
['s1', 's2', 's3']

"""
import itertools
import logging

import networkx

from cambrian.coxeter import (EmptyInputError, NoUpperBoundWithinCapError, element_key,
                              left_descents, weak_leq)
from cambrian.sortable import enumerate_sortables

__all__ = ['CambrianPoset', 'ClosedInterval', 'build_cambrian', 'interval',
           'cambrian_join', 'cambrian_meet', 'atoms', 'is_nuclear',
           'nuclear_witnesses', 'cover_oracle']

logger = logging.getLogger(__name__)


class Error(Exception):
    """Parent class for Cambrian semilattice exceptions"""
    pass


class BadCapError(Error):
    """Raised when the length cap is negative.

    Attributes:
        cap

    """
    def __init__(self, cap):
        self.cap = cap

    def __str__(self):
        return "The length cap must be a non-negative integer, not {!r}".format(self.cap)


class NotComparableError(Error):
    """Raised when an interval is asked for with u not below v.

    Attributes:
        bottom, top

    """
    def __init__(self, bottom, top):
        self.bottom = bottom
        self.top = top

    def __str__(self):
        return "{} is not below {} in the Cambrian order".format(self.bottom, self.top)


class OutOfTruncationError(Error):
    """Raised when an element is longer than the cap the poset was built with.

    Attributes:
        element, cap

    """
    def __init__(self, element, cap):
        self.element = element
        self.cap = cap

    def __str__(self):
        return "{} has length {} beyond the cap {}".format(
            self.element, self.element.length, self.cap)


class NotInPosetError(Error):
    """Raised when an element is not sortable for the poset's gamma.

    Attributes:
        element, gamma

    """
    def __init__(self, element, gamma):
        self.element = element
        self.gamma = gamma

    def __str__(self):
        return "{} is not {}-sortable".format(self.element, self.gamma)


class CambrianPoset(object):
    '''The gamma-sortable elements of length <= cap under the weak order.

    ``order`` holds an edge u -> v for every strict relation u < v and
    ``hasse`` is its transitive reduction; both are networkx digraphs
    whose nodes are the elements.
    '''
    def __init__(self, gamma, cap, elements, order):
        self.gamma = gamma
        self.cap = cap
        self.elements = tuple(elements)
        self.order = order
        self.hasse = networkx.transitive_reduction(order)
        self._position = {w: k for k, w in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, w):
        return w in self._position

    def __repr__(self):
        return "<CambrianPoset gamma={} cap={} elements={}>".format(
            self.gamma, self.cap, len(self.elements))

    @property
    def bottom(self):
        return self.elements[0]

    def position(self, w):
        return self._position[w]

    def leq(self, u, v):
        return u == v or self.order.has_edge(u, v)

    def is_cover(self, u, v):
        return self.hasse.has_edge(u, v)

    def upper_covers(self, u):
        return sorted(self.hasse.successors(u), key=element_key)

    def lower_covers(self, v):
        return sorted(self.hasse.predecessors(v), key=element_key)

    def hasse_edges(self):
        return sorted(self.hasse.edges(), key=lambda e: (self._position[e[0]], self._position[e[1]]))

    def comparable_pairs(self):
        '''Every (u, v) with u <= v, ordered by the positions of u then v.'''
        for u in self.elements:
            above = list(self.order.successors(u))
            yield u, u
            for v in sorted(above, key=self.position):
                yield u, v


def build_cambrian(gamma, cap):
    if cap < 0:
        raise BadCapError(cap)
    elements = enumerate_sortables(gamma, cap)
    order = networkx.DiGraph()
    order.add_nodes_from(elements)
    for u, v in itertools.combinations(elements, 2):
        # elements come in length order, so only u <= v can hold
        if u.length < v.length and weak_leq(u, v):
            order.add_edge(u, v)
    poset = CambrianPoset(gamma, cap, elements, order)
    logger.debug('Built Cambrian poset for {} to length {}: {} elements, {} covers'.format(
        gamma, cap, len(poset), poset.hasse.number_of_edges()))
    return poset


def cover_oracle(poset):
    '''Cover pairs found by looking for an element strictly between.

    Slow but independent of the transitive reduction.
    '''
    covers = []
    for u, v in poset.order.edges():
        if not any(poset.order.has_edge(u, z) and poset.order.has_edge(z, v)
                   for z in poset.elements):
            covers.append((u, v))
    return sorted(covers, key=lambda e: (poset.position(e[0]), poset.position(e[1])))


class ClosedInterval(object):
    '''The elements z of a Cambrian poset with bottom <= z <= top.

    ``graph`` is the Hasse diagram induced on the members.
    '''
    def __init__(self, poset, bottom, top):
        self.poset = poset
        self.bottom = bottom
        self.top = top
        self.members = tuple(z for z in poset.elements
                             if poset.leq(bottom, z) and poset.leq(z, top))
        self.graph = poset.hasse.subgraph(self.members).copy()

    def __len__(self):
        return len(self.members)

    def __contains__(self, z):
        return z in self.graph

    def __repr__(self):
        return "<ClosedInterval [{}, {}]>".format(self.bottom, self.top)

    @property
    def gamma(self):
        return self.poset.gamma

    def covers(self):
        position = self.poset.position
        return sorted(self.graph.edges(), key=lambda e: (position(e[0]), position(e[1])))

    def upper_covers(self, z):
        return sorted(self.graph.successors(z), key=element_key)


def _check_member(poset, w):
    if w.length > poset.cap:
        raise OutOfTruncationError(w, poset.cap)
    if w not in poset:
        raise NotInPosetError(w, poset.gamma)


def interval(poset, u, v):
    '''The closed interval [u, v] of a Cambrian poset.'''
    _check_member(poset, u)
    _check_member(poset, v)
    if not poset.leq(u, v):
        raise NotComparableError(u, v)
    return ClosedInterval(poset, u, v)


def cambrian_join(xs, poset):
    '''Least upper bound inside the poset.'''
    xs = list(xs)
    if not xs:
        raise EmptyInputError('join')
    uppers = [z for z in poset.elements if all(poset.leq(x, z) for x in xs)]
    if not uppers:
        raise NoUpperBoundWithinCapError(poset.cap)
    return min(uppers, key=element_key)


def cambrian_meet(xs, poset):
    '''Greatest lower bound inside the poset.'''
    xs = list(xs)
    if not xs:
        raise EmptyInputError('meet')
    lowers = [z for z in poset.elements if all(poset.leq(z, x) for x in xs)]
    return max(lowers, key=element_key)


def atoms(closed):
    '''Upper covers of the bottom inside the interval.'''
    return closed.upper_covers(closed.bottom)


def is_nuclear(closed):
    '''True if the top is the join of the atoms; [u, u] counts as nuclear.'''
    if closed.bottom == closed.top:
        return True
    return cambrian_join(atoms(closed), closed.poset) == closed.top


def nuclear_witnesses(closed):
    '''The elements v' with s not below v', v' covered by the top and [u, v'] nuclear.

    Here s is the first letter of gamma, and the interval [u, v] must have
    s not below u but below v; otherwise None is returned.  For such an
    interval, [u, v] is nuclear exactly when there is one witness.
    '''
    s = closed.gamma.initial
    u, v = closed.bottom, closed.top
    if s in left_descents(u) or s not in left_descents(v):
        return None
    return [z for z in closed.poset.lower_covers(v)
            if z in closed and s not in left_descents(z)
            and is_nuclear(ClosedInterval(closed.poset, u, z))]
