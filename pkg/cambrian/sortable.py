# coding: utf-8
"""Sorting words, sortable elements and the projection pi_down.

A Coxeter element gamma is a product of the generators, each used once,
held here as one of its reduced words.  Writing gamma^infinity = gamma
gamma gamma ..., the gamma-sorting word of w is the lexicographically
first reduced word of w seen as a subword of gamma^infinity.  Cut into the
copies of gamma it falls into, it is a sequence of blocks, and w is
gamma-sortable when those blocks are nested.  The positions the sorting
word occupies in gamma^infinity form the set alpha(w).

>>> from cambrian.coxeter import CoxeterSystem
>>> S5 = CoxeterSystem([[1, 3, 2, 2], [3, 1, 3, 2], [2, 3, 1, 3], [2, 2, 3, 1]])
>>> gamma = CoxeterElementWord(S5, [0, 1, 2, 3])
>>> sw = sorting_word(S5.element([0, 1, 0, 3]), gamma)
>>> print(sw)
s1 s2 s4 | s1
>>> sw.positions
(1, 2, 4, 5)
>>> is_sortable_blocks(S5.element([0, 1, 0, 3]), gamma)
True

"""
import collections
import functools
import itertools
import logging

from cambrian.coxeter import (GroupNotFiniteError, SystemMismatchError, element_key,
                              enumerate_elements, is_finite, left_descents, multiply,
                              reduced_words, restrict, right_descents, support)

__all__ = ['CoxeterElementWord', 'SortingWord', 'sorting_word', 'alpha_positions',
           'is_sortable_blocks', 'is_sortable_recursive', 'position_closure_check',
           'positions_closed', 'pi_down', 'enumerate_sortables', 'congruence_fiber',
           'congruence_fibers', 'reduced_words_of_coxeter_element',
           'lex_first_positions']

logger = logging.getLogger(__name__)

# sorting words and projections kept across calls
CACHE_SIZE = 1 << 16


class Error(Exception):
    """Parent class for sortable element exceptions"""
    pass


class NotACoxeterElementError(Error):
    """Raised when a word repeats a generator or leaves the generators.

    Attributes:
        word

    """
    def __init__(self, word):
        self.word = word

    def __str__(self):
        return "{} is not a product of distinct generators".format(list(self.word))


class NotInParabolicError(Error):
    """Raised when an element uses generators missing from gamma.

    Attributes:
        element, gamma

    """
    def __init__(self, element, gamma):
        self.element = element
        self.gamma = gamma

    def __str__(self):
        return "{} does not lie in the parabolic subgroup generated by {}".format(
            self.element, self.gamma)


class CoxeterElementWord(object):
    '''A reduced word for a Coxeter element of a standard parabolic subgroup.

    Normally the word uses every generator once; during recursions it may
    use a subset of them.

    >>> from cambrian.coxeter import CoxeterSystem
    >>> A3 = CoxeterSystem([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
    >>> gamma = CoxeterElementWord(A3, [0, 1, 2])
    >>> print(gamma.rotated())
    s2,s3,s1
    >>> print(gamma.without_initial())
    s2,s3
    >>> gamma.same_element(CoxeterElementWord(A3, [0, 2, 1]))
    False
    >>> CoxeterElementWord(A3, [0, 1, 0]) # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    NotACoxeterElementError: [0, 1, 0] is not a product of distinct generators

    '''
    __slots__ = ('system', 'word')

    def __init__(self, system, word):
        word = tuple(word)
        if (len(set(word)) != len(word)
                or any(not (isinstance(s, int) and 0 <= s < system.rank) for s in word)):
            raise NotACoxeterElementError(word)
        self.system = system
        self.word = word

    @property
    def generators(self):
        return frozenset(self.word)

    @property
    def initial(self):
        return self.word[0]

    def is_full(self):
        return len(self.word) == self.system.rank

    def element(self):
        return self.system.element(self.word)

    def index(self, s):
        return self.word.index(s)

    def rotated(self):
        '''s gamma s, for s the first letter'''
        return CoxeterElementWord(self.system, self.word[1:] + self.word[:1])

    def without_initial(self):
        '''s gamma, a Coxeter element of the parabolic without s'''
        return CoxeterElementWord(self.system, self.word[1:])

    def same_element(self, other):
        return self.system is other.system and self.element() == other.element()

    def __len__(self):
        return len(self.word)

    def __eq__(self, other):
        return (isinstance(other, CoxeterElementWord)
                and self.system is other.system and self.word == other.word)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(('gamma', self.word))

    def __str__(self):
        return ','.join(self.system.names[s] for s in self.word)

    def __repr__(self):
        return "<CoxeterElementWord {}>".format(self)


class SortingWord(collections.namedtuple("SortingWord", "gamma blocks positions")):
    '''The blocks of a sorting word and the positions it takes in gamma^infinity.'''
    __slots__ = ()

    @property
    def letters(self):
        return tuple(itertools.chain.from_iterable(self.blocks))

    @property
    def grid(self):
        '''The exponents delta[i][j], one row per block.'''
        return tuple(tuple(1 if s in block else 0 for s in self.gamma.word)
                     for block in self.blocks)

    def __str__(self):
        names = self.gamma.system.names
        return ' | '.join(' '.join(names[s] for s in block) for block in self.blocks)


def _check_gamma(w, gamma):
    if w.system is not gamma.system:
        raise SystemMismatchError()


@functools.lru_cache(maxsize=CACHE_SIZE)
def sorting_word(w, gamma):
    '''Scan gamma^infinity, taking each letter that is a left descent of what is left.'''
    _check_gamma(w, gamma)
    system = w.system
    n = len(gamma)
    rest = w
    blocks = []
    positions = []
    while rest.length:
        offset = len(blocks) * n
        block = []
        for j, s in enumerate(gamma.word):
            if s in left_descents(rest):
                block.append(s)
                positions.append(offset + j + 1)
                rest = multiply(system.generator(s), rest)
        if not block:
            raise NotInParabolicError(w, gamma)
        blocks.append(tuple(block))
    return SortingWord(gamma, tuple(blocks), tuple(positions))


def alpha_positions(w, gamma):
    '''The set of positions of the sorting word of w in gamma^infinity.

    >>> from cambrian.coxeter import CoxeterSystem
    >>> A3 = CoxeterSystem([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
    >>> gamma = CoxeterElementWord(A3, [0, 1, 2])
    >>> sorted(alpha_positions(A3.element([0, 1, 2, 1]), gamma))
    [1, 2, 3, 5]
    >>> sorted(alpha_positions(A3.element([1, 2, 1, 0]), gamma))
    [2, 3, 5, 7]

    '''
    return frozenset(sorting_word(w, gamma).positions)


def is_sortable_blocks(w, gamma):
    blocks = sorting_word(w, gamma).blocks
    return all(set(later) <= set(earlier) for earlier, later in zip(blocks, blocks[1:]))


def is_sortable_recursive(w, gamma):
    '''Sortability by induction on length and rank.

    With s the first letter of gamma: if s is a left descent of w then w
    is sortable when sw is (s gamma s)-sortable; otherwise w must lie in
    the parabolic without s and be (s gamma)-sortable there.
    '''
    _check_gamma(w, gamma)
    system = w.system
    while w.length:
        if not len(gamma):
            return False
        s = gamma.initial
        if s in left_descents(w):
            w = multiply(system.generator(s), w)
            gamma = gamma.rotated()
        elif s in support(w):
            return False
        else:
            gamma = gamma.without_initial()
    return True


def positions_closed(positions, n):
    '''True if i - n is a position whenever i > n is.

    >>> positions_closed({1, 2, 3, 5}, 3), positions_closed({2, 3, 5, 7}, 3), positions_closed(set(), 3)
    (True, False, True)

    '''
    positions = set(positions)
    return all(i - n in positions for i in positions if i > n)


def position_closure_check(w, gamma):
    return positions_closed(sorting_word(w, gamma).positions, len(gamma))


@functools.lru_cache(maxsize=CACHE_SIZE)
def pi_down(w, gamma):
    '''The largest gamma-sortable element below w in the weak order.'''
    _check_gamma(w, gamma)
    system = w.system
    if not w.length or not len(gamma):
        return system.identity
    s = gamma.initial
    if s in left_descents(w):
        below = pi_down(multiply(system.generator(s), w), gamma.rotated())
        return multiply(system.generator(s), below)
    rest = gamma.without_initial()
    return pi_down(restrict(w, rest.generators), rest)


def enumerate_sortables(gamma, max_len):
    '''Every gamma-sortable element of length at most max_len.

    Candidates are nested block sequences read as subwords of
    gamma^infinity whose every prefix is reduced; a candidate is kept when
    it is the sorting word of the element it spells.  The result is
    ordered by length, then canonical word.

    >>> from cambrian.coxeter import CoxeterSystem
    >>> A3 = CoxeterSystem([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
    >>> len(enumerate_sortables(CoxeterElementWord(A3, [0, 1, 2]), 6))
    14

    '''
    system = gamma.system
    n = len(gamma)
    found = [system.identity]

    def extend(w, positions, previous, copy):
        for size in range(1, len(previous) + 1):
            if w.length + size > max_len:
                break
            for block in itertools.combinations(previous, size):
                x = w
                spelled = list(positions)
                for s in block:
                    if s in right_descents(x):
                        break
                    x = multiply(x, system.generator(s))
                    spelled.append(copy * n + gamma.index(s) + 1)
                else:
                    if sorting_word(x, gamma).positions == tuple(spelled):
                        found.append(x)
                    extend(x, spelled, block, copy + 1)

    extend(system.identity, [], gamma.word, 0)
    found.sort(key=element_key)
    logger.debug('{} sortable elements of length <= {} for gamma = {}'.format(
        len(found), max_len, gamma))
    return found


def congruence_fiber(x, gamma):
    '''All w in the (finite) group with pi_down(w) = x.'''
    system = gamma.system
    if not is_finite(system):
        raise GroupNotFiniteError(system.name)
    return [w for w in enumerate_elements(system) if pi_down(w, gamma) == x]


def congruence_fibers(gamma):
    '''The fibers of pi_down over a finite group, keyed by their sortable bottoms.'''
    system = gamma.system
    if not is_finite(system):
        raise GroupNotFiniteError(system.name)
    fibers = collections.OrderedDict()
    for w in enumerate_elements(system):
        fibers.setdefault(pi_down(w, gamma), []).append(w)
    return collections.OrderedDict(
        (x, tuple(fibers[x])) for x in sorted(fibers, key=element_key))


def reduced_words_of_coxeter_element(gamma):
    '''All orderings of gamma's generators spelling the same element.

    >>> from cambrian.coxeter import CoxeterSystem
    >>> B3 = CoxeterSystem([[1, 3, 2], [3, 1, 4], [2, 4, 1]])
    >>> [str(g) for g in reduced_words_of_coxeter_element(CoxeterElementWord(B3, [0, 1, 2]))]
    ['s1,s2,s3']
    >>> [str(g) for g in reduced_words_of_coxeter_element(CoxeterElementWord(B3, [1, 0, 2]))]
    ['s2,s1,s3', 's2,s3,s1']

    '''
    target = gamma.element()
    found = []
    for word in itertools.permutations(sorted(gamma.word)):
        other = CoxeterElementWord(gamma.system, word)
        if other.element() == target:
            found.append(other)
    return found


def lex_first_positions(w, gamma):
    '''Positions of the lexicographically first reduced word of w inside gamma^infinity.

    Every reduced word is placed as far left as it will go and the
    smallest placement wins.  This walks all reduced words, so keep it
    for small groups.
    '''
    _check_gamma(w, gamma)
    if not support(w) <= gamma.generators:
        raise NotInParabolicError(w, gamma)
    n = len(gamma)
    best = None
    for word in reduced_words(w):
        placed = []
        last = 0
        for s in word:
            j = gamma.index(s) + 1
            last = j + n * max(0, (last - j) // n + 1)
            placed.append(last)
        placed = tuple(placed)
        if best is None or placed < best:
            best = placed
    return best
