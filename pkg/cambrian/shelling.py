# coding: utf-8
"""Edge labels, maximal chains and the topology of Cambrian intervals.

A cover u < v of a Cambrian poset is labelled by the first position of
gamma^infinity that the sorting word of v uses and that of u does not.
With these labels every closed interval has exactly one rising maximal
chain, and it comes first in lexicographic order.  The falling chains
then give the Moebius function and the homotopy type of the open
interval.

>>> from cambrian.coxeter import CoxeterSystem
>>> from cambrian.sortable import CoxeterElementWord
>>> from cambrian.semilattice import build_cambrian, interval
>>> B3 = CoxeterSystem([[1, 3, 2], [3, 1, 4], [2, 4, 1]])
>>> gamma = CoxeterElementWord(B3, [0, 1, 2])
>>> label_edge(B3.element([1, 2, 1, 2]), B3.element([0, 1, 2] * 3), gamma)
1
>>> P = build_cambrian(gamma, 9)
>>> report = analyse_interval(interval(P, P.bottom, P.elements[-1]))
>>> report.el_passed, report.mobius_recursive, report.nuclear, report.homotopy
(True, -1, True, 'sphere(1)')

"""
import collections
import logging

import networkx

from cambrian.semilattice import ClosedInterval, atoms, build_cambrian, is_nuclear
from cambrian.sortable import alpha_positions, enumerate_sortables, sorting_word

__all__ = ['MaximalChain', 'ELVerdict', 'HomotopyType', 'IntervalReport',
           'InvarianceReport', 'SpanningTree', 'label_edge', 'edge_labels',
           'maximal_chains', 'lex_leq', 'el_check', 'rising_chain',
           'mobius_recursive', 'mobius_chains', 'mobius_order_complex',
           'homotopy_type', 'chain_census', 'analyse_interval',
           'invariance_check', 'spanning_tree']

logger = logging.getLogger(__name__)


class Error(Exception):
    """Parent class for shelling exceptions"""
    pass


class NotACoverError(Error):
    """Raised when a label is asked of a pair that is not a cover.

    Attributes:
        bottom, top

    """
    def __init__(self, bottom, top):
        self.bottom = bottom
        self.top = top

    def __str__(self):
        return "{} is not covered by {}".format(self.bottom, self.top)


class ELPreconditionUnverifiedError(Error):
    """Raised when a falling-chain count is asked of an interval that fails the EL check.

    Attributes:
        closed, reason

    """
    def __init__(self, closed, reason):
        self.closed = closed
        self.reason = reason

    def __str__(self):
        return "Labelling of {} is not EL ({}), so falling chains say nothing".format(
            self.closed, self.reason)


class MultipleFallingChainsError(Error):
    """Raised when an interval has more than one falling chain.

    Attributes:
        closed, count

    """
    def __init__(self, closed, count):
        self.closed = closed
        self.count = count

    def __str__(self):
        return "{} has {} falling chains; at most one was expected".format(self.closed, self.count)


class WordsNotSameElementError(Error):
    """Raised when words offered as one Coxeter element spell different elements.

    Attributes:
        first, other

    """
    def __init__(self, first, other):
        self.first = first
        self.other = other

    def __str__(self):
        return "{} and {} are not reduced words of the same Coxeter element".format(
            self.first, self.other)


class MaximalChain(collections.namedtuple("MaximalChain", "elements labels")):
    '''A chain of covers from bottom to top with its labels.'''
    __slots__ = ()

    @property
    def length(self):
        return len(self.labels)

    @property
    def rising(self):
        return all(a < b for a, b in zip(self.labels, self.labels[1:]))

    @property
    def falling(self):
        return all(a >= b for a, b in zip(self.labels, self.labels[1:]))

    @property
    def kind(self):
        if self.rising:
            return 'rising'
        if self.falling:
            return 'falling'
        return 'neither'


ELVerdict = collections.namedtuple("ELVerdict", "passed reason rising witnesses")


class HomotopyType(collections.namedtuple("HomotopyType", "kind dimension")):
    '''Contractible (no dimension) or a sphere of the given dimension.'''
    __slots__ = ()

    def __str__(self):
        if self.kind == 'contractible':
            return 'contractible'
        return 'sphere({})'.format(self.dimension)


IntervalReport = collections.namedtuple(
    "IntervalReport",
    "bottom top size covers chains census el_passed el_reason "
    "mobius_recursive mobius_chains mobius_order_complex atoms nuclear homotopy problems")


class InvarianceReport(collections.namedtuple("InvarianceReport", "words intervals mismatches")):
    __slots__ = ()

    @property
    def consistent(self):
        return not self.mismatches


class SpanningTree(collections.namedtuple("SpanningTree", "edges failures")):
    '''Edges (u, v, label) of the rising chains from the bottom, and anything that went wrong.'''
    __slots__ = ()

    @property
    def verified(self):
        return not self.failures


def label_edge(u, v, gamma, poset=None):
    '''min(alpha(v) - alpha(u)) for u below v.

    When a poset is given the pair must be one of its covers.  Without
    one the label is simply evaluated, which also makes sense for u < v
    that are not covers.
    '''
    if poset is not None and not poset.is_cover(u, v):
        raise NotACoverError(u, v)
    difference = alpha_positions(v, gamma) - alpha_positions(u, gamma)
    if not difference:
        raise NotACoverError(u, v)
    return min(difference)


def _labeling(gamma):
    return lambda u, v: label_edge(u, v, gamma)


def edge_labels(closed, gamma=None):
    '''{(u, v): label} for the covers of an interval.'''
    if gamma is None:
        gamma = closed.gamma
    return collections.OrderedDict(((u, v), label_edge(u, v, gamma)) for u, v in closed.covers())


def maximal_chains(closed, labeling=None):
    '''All maximal chains of an interval, walking the Hasse diagram depth first.

    ``labeling`` maps a cover (u, v) to its label and defaults to
    ``label_edge`` with the interval's gamma.
    '''
    labeling = labeling or _labeling(closed.gamma)
    chains = []

    def walk(path, labels):
        z = path[-1]
        if z == closed.top:
            chains.append(MaximalChain(tuple(path), tuple(labels)))
            return
        for y in closed.upper_covers(z):
            walk(path + [y], labels + [labeling(z, y)])

    walk([closed.bottom], [])
    return chains


def lex_leq(p, q):
    '''p <= q in the lexicographic order on words, a prefix being smaller.

    >>> lex_leq((1, 2), (1, 2, 0)), lex_leq((1, 3), (1, 2, 5)), lex_leq((), ())
    (True, False, True)

    '''
    for a, b in zip(p, q):
        if a != b:
            return a < b
    return len(p) <= len(q)


def el_check(closed, labeling=None, chains=None):
    '''Check for one rising chain that is strictly first in lexicographic order.'''
    if chains is None:
        chains = maximal_chains(closed, labeling)
    rising = tuple(c for c in chains if c.rising)
    if not rising:
        return ELVerdict(False, 'no rising chain', rising, ())
    if len(rising) > 1:
        return ELVerdict(False, 'several rising chains', rising, rising)
    first = rising[0]
    for chain in chains:
        if chain is not first and (chain.labels == first.labels
                                   or not lex_leq(first.labels, chain.labels)):
            return ELVerdict(False, 'rising chain is not lexicographically first',
                             rising, (first, chain))
    return ELVerdict(True, '', rising, ())


def rising_chain(closed, labeling=None):
    '''The unique rising chain, or None if there is not exactly one.'''
    rising = [c for c in maximal_chains(closed, labeling) if c.rising]
    if len(rising) == 1:
        return rising[0]
    return None


def mobius_recursive(closed):
    '''mu(u, v) by mu(u, u) = 1 and mu(u, z) = -sum of mu(u, y) over u <= y < z.'''
    poset = closed.poset
    mu = {}
    # members are in length order, so everything below z is already done
    for z in closed.members:
        if z == closed.bottom:
            mu[z] = 1
        else:
            mu[z] = -sum(value for y, value in mu.items() if poset.leq(y, z))
    return mu[closed.top]


def _verified(closed, verdict, chains):
    if chains is None:
        chains = maximal_chains(closed)
    if verdict is None:
        verdict = el_check(closed, chains=chains)
    if not verdict.passed:
        raise ELPreconditionUnverifiedError(closed, verdict.reason)
    return [c for c in chains if c.falling]


def mobius_chains(closed, verdict=None, chains=None):
    '''Even falling chains minus odd falling chains; needs an EL labelling.'''
    falling = _verified(closed, verdict, chains)
    return sum(1 if chain.length % 2 == 0 else -1 for chain in falling)


def mobius_order_complex(closed):
    '''Reduced Euler characteristic of the order complex of the open interval.

    Faces are the chains of the open interval (the empty chain included),
    counted by size.
    '''
    if closed.bottom == closed.top:
        return 1
    poset = closed.poset
    inside = [z for z in closed.members if z != closed.bottom and z != closed.top]
    # ending[z][k] = number of chains of k elements whose largest element is z
    ending = {}
    for z in inside:
        counts = collections.Counter({1: 1})
        for y, below in ending.items():
            if poset.leq(y, z):
                for k, c in below.items():
                    counts[k + 1] += c
        ending[z] = counts
    total = -1
    for counts in ending.values():
        for k, c in counts.items():
            total += c if k % 2 == 1 else -c
    return total


def homotopy_type(closed, verdict=None, chains=None):
    '''Contractible with no falling chain, else a sphere of dimension t - 2.'''
    falling = _verified(closed, verdict, chains)
    if not falling:
        return HomotopyType('contractible', None)
    if len(falling) > 1:
        raise MultipleFallingChainsError(closed, len(falling))
    return HomotopyType('sphere', falling[0].length - 2)


def chain_census(closed, gamma=None, chains=None):
    '''Numbers of rising and of falling maximal chains.'''
    if chains is None:
        chains = maximal_chains(closed, _labeling(closed.gamma if gamma is None else gamma))
    return (sum(1 for c in chains if c.rising), sum(1 for c in chains if c.falling))


def _census_table(chains):
    table = collections.Counter((chain.kind, chain.length) for chain in chains)
    return [[kind, length, table[kind, length]] for kind, length in sorted(table)]


def analyse_interval(closed):
    '''Run every interval analysis and collect the results as an IntervalReport.'''
    chains = maximal_chains(closed)
    verdict = el_check(closed, chains=chains)
    falling = [c for c in chains if c.falling]
    mu = mobius_recursive(closed)
    mu_complex = mobius_order_complex(closed)
    nuclear = is_nuclear(closed)
    atom_count = len(atoms(closed))

    mu_chains = None
    homotopy = None
    problems = []
    if verdict.passed:
        mu_chains = mobius_chains(closed, verdict, chains)
        if len(falling) <= 1:
            homotopy = str(homotopy_type(closed, verdict, chains))
        else:
            problems.append('{} falling chains'.format(len(falling)))
    else:
        problems.append('EL check failed: {}'.format(verdict.reason))

    if mu != mu_complex or (mu_chains is not None and mu != mu_chains):
        problems.append('Moebius values disagree')
    if abs(mu) > 1:
        problems.append('|mu| = {}'.format(abs(mu)))
    if nuclear != (len(falling) == 1):
        problems.append('nuclear flag does not match the falling chains')
    if nuclear != (mu == (-1) ** atom_count):
        problems.append('nuclear flag does not match mu = (-1)^atoms')
    for chain in verdict.rising:
        if chain.length != closed.top.length - closed.bottom.length:
            problems.append('rising chain is shorter than the length difference')
    if closed.bottom != closed.top:
        first = label_edge(closed.bottom, closed.top, closed.gamma)
        if any(first not in chain.labels for chain in chains):
            problems.append('smallest label {} missing from a chain'.format(first))
    if any(len(set(chain.labels)) != chain.length for chain in chains):
        problems.append('repeated label along a chain')

    if problems:
        logger.warning('Interval [{}, {}]: {}'.format(closed.bottom, closed.top, '; '.join(problems)))
    return IntervalReport(
        bottom=str(closed.bottom), top=str(closed.top), size=len(closed),
        covers=len(closed.covers()), chains=len(chains), census=_census_table(chains),
        el_passed=verdict.passed, el_reason=verdict.reason,
        mobius_recursive=mu, mobius_chains=mu_chains, mobius_order_complex=mu_complex,
        atoms=atom_count, nuclear=nuclear, homotopy=homotopy, problems=problems)


def invariance_check(gamma_words, cap):
    '''Compare rising and falling chain counts across reduced words of one gamma.'''
    words = list(gamma_words)
    first = words[0]
    for other in words[1:]:
        if not first.same_element(other):
            raise WordsNotSameElementError(first, other)

    poset = build_cambrian(first, cap)
    mismatches = []
    for other in words[1:]:
        if set(enumerate_sortables(other, cap)) != set(poset.elements):
            mismatches.append(('sortable elements', str(other)))

    intervals = 0
    for u, v in poset.comparable_pairs():
        closed = ClosedInterval(poset, u, v)
        censuses = [chain_census(closed, gamma) for gamma in words]
        intervals += 1
        if any(census != censuses[0] for census in censuses[1:]):
            mismatches.append((str(u), str(v)))
    logger.debug('Compared {} words of {} over {} intervals'.format(len(words), first, intervals))
    return InvarianceReport(tuple(str(w) for w in words), intervals, mismatches)


def spanning_tree(poset):
    '''The rising chains from the bottom to each element, checked to form a spanning tree.

    For every element the labels of its rising chain must be the positions
    of its sorting word, so the chain length is the element's length, and
    every tree edge must extend a sorting word by one letter.
    '''
    gamma = poset.gamma
    n = len(gamma)
    labelled = {}
    failures = []
    for w in poset.elements:
        chain = rising_chain(ClosedInterval(poset, poset.bottom, w))
        if chain is None:
            failures.append((str(w), 'no unique rising chain'))
            continue
        sw = sorting_word(w, gamma)
        if chain.length != w.length:
            failures.append((str(w), 'rising chain length {}'.format(chain.length)))
        if chain.labels != sw.positions:
            failures.append((str(w), 'labels {} do not spell the sorting word'.format(chain.labels)))
        if tuple(gamma.word[(i - 1) % n] for i in chain.labels) != sw.letters:
            failures.append((str(w), 'labels decode to the wrong letters'))
        for x, y, label in zip(chain.elements, chain.elements[1:], chain.labels):
            labelled[x, y] = label

    tree = networkx.DiGraph()
    tree.add_nodes_from(poset.elements)
    tree.add_edges_from(labelled)
    if not networkx.is_arborescence(tree):
        failures.append(('', 'rising chains do not form a spanning tree'))
    for x, y in labelled:
        below, above = sorting_word(x, gamma).positions, sorting_word(y, gamma).positions
        if above[:len(below)] != below:
            failures.append((str(y), 'tree edge from {} is not a prefix extension'.format(x)))

    position = poset.position
    edges = sorted(((x, y, label) for (x, y), label in labelled.items()),
                   key=lambda e: (position(e[0]), position(e[1])))
    return SpanningTree(edges, failures)
