# coding: utf-8
"""Coxeter systems, their elements, and the weak order.

A Coxeter system is given by its Coxeter matrix.  The group acts on the
span of the simple roots through the standard geometric representation,
with ``2B(a_i, a_j) = -2cos(pi/m[i][j])`` and ``-2`` where the entry is
infinite.  All scalars are exact (see ``cambrian.field``).

Elements are stored with their canonical word, the lexicographically
smallest reduced word when generators are compared by index, together
with the images of the simple roots under the element and under its
inverse.  Left descents come from the second, right descents from the
first.

>>> A3 = CoxeterSystem([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
>>> w = A3.element([1, 0, 1])
>>> w.word, w.length
((0, 1, 0), 3)
>>> sorted(left_descents(w)), sorted(right_descents(A3.element([2, 1])))
([0, 1], [1])
>>> weak_leq(A3.element([0]), w), weak_leq(A3.element([2]), w)
(True, False)

"""
import collections
import itertools
import logging
import math
import threading

from cambrian.field import CosineField, field_level

__all__ = ['INFINITY', 'CoxeterDiagram', 'CoxeterSystem', 'GroupElement', 'Root',
           'validate_matrix', 'coxeter_diagram', 'simple_reflection_action',
           'left_descents', 'left_descents_by_length', 'right_descents',
           'multiply', 'inverse', 'support', 'weak_leq', 'restrict',
           'inversion_set', 'element_key', 'enumerate_elements',
           'bounded_join', 'bounded_meet', 'is_finite', 'longest_element',
           'reduced_words']

logger = logging.getLogger(__name__)

INFINITY = math.inf

# non-canonical words remembered per system
WORD_CACHE_SIZE = 1 << 16

CoxeterDiagram = collections.namedtuple("CoxeterDiagram", "vertices edges labels")


class Error(Exception):
    """Parent class for Coxeter system exceptions"""
    pass


class MatrixError(Error):
    """Parent class for Coxeter matrix validation exceptions"""
    pass


class NotSquareError(MatrixError):
    """Raised when the rows of a matrix do not form a square grid.

    Attributes:
        shape

    """
    def __init__(self, shape):
        self.shape = shape

    def __str__(self):
        return "A Coxeter matrix must be square, not rows of lengths {}".format(self.shape)


class BadEntryError(MatrixError):
    """Raised when an entry is neither a positive integer nor infinity.

    Attributes:
        i, j, value

    """
    def __init__(self, i, j, value):
        self.i = i
        self.j = j
        self.value = value

    def __str__(self):
        return "Entry m[{}][{}] = {!r} is not a positive integer or infinity".format(
            self.i + 1, self.j + 1, self.value)


class NotSymmetricError(MatrixError):
    """Raised when m[i][j] and m[j][i] differ.

    Attributes:
        i, j, upper, lower

    """
    def __init__(self, i, j, upper, lower):
        self.i = i
        self.j = j
        self.upper = upper
        self.lower = lower

    def __str__(self):
        return "Entries m[{0}][{1}] = {2} and m[{1}][{0}] = {3} differ".format(
            self.i + 1, self.j + 1, self.upper, self.lower)


class BadDiagonalError(MatrixError):
    """Raised when a diagonal entry is not 1.

    Attributes:
        i, value

    """
    def __init__(self, i, value):
        self.i = i
        self.value = value

    def __str__(self):
        return "Diagonal entry m[{0}][{0}] = {1} should be 1".format(self.i + 1, self.value)


class EntryTooSmallError(MatrixError):
    """Raised when an off-diagonal entry is less than 2.

    Attributes:
        i, j, value

    """
    def __init__(self, i, j, value):
        self.i = i
        self.j = j
        self.value = value

    def __str__(self):
        return "Off-diagonal entry m[{}][{}] = {} should be at least 2".format(
            self.i + 1, self.j + 1, self.value)


class GeneratorNamesError(Error):
    """Raised when generator names are missing, repeated or the wrong number.

    Attributes:
        names, rank

    """
    def __init__(self, names, rank):
        self.names = names
        self.rank = rank

    def __str__(self):
        return "Need {} distinct generator names, got {}".format(self.rank, list(self.names))


class UnknownGeneratorError(Error):
    """Raised when a word uses an index outside the generators.

    Attributes:
        generator, rank

    """
    def __init__(self, generator, rank):
        self.generator = generator
        self.rank = rank

    def __str__(self):
        return "Generator index {} is not in range for rank {}".format(self.generator, self.rank)


class MixedSignRootError(Error):
    """Raised when a vector that should be a root has coordinates of both signs.

    Attributes:
        signs

    """
    def __init__(self, signs):
        self.signs = signs

    def __str__(self):
        return "Vector with coordinate signs {} is not a root".format(list(self.signs))


class SystemMismatchError(Error):
    """Raised when elements of different Coxeter systems are combined"""
    def __str__(self):
        return "Elements belong to different Coxeter systems"


class EmptyInputError(Error):
    """Raised when a join or meet is asked of no elements.

    Attributes:
        operation

    """
    def __init__(self, operation):
        self.operation = operation

    def __str__(self):
        return "The {} of an empty set is not available here".format(self.operation)


class NoUpperBoundWithinCapError(Error):
    """Raised when no common upper bound has length within the cap.

    Attributes:
        cap

    """
    def __init__(self, cap):
        self.cap = cap

    def __str__(self):
        return "No common upper bound of length <= {}; widen the cap to decide".format(self.cap)


class GroupNotFiniteError(Error):
    """Raised when an operation needs the whole of an infinite group.

    Attributes:
        name

    """
    def __init__(self, name):
        self.name = name

    def __str__(self):
        return "The Coxeter group {} is infinite".format(self.name or '(unnamed)')


def validate_matrix(raw):
    '''Check a Coxeter matrix and return it as a tuple of tuples.

    Entries are positive integers, or ``INFINITY``.

    >>> validate_matrix([[1, 3], [3, 1]])
    ((1, 3), (3, 1))
    >>> validate_matrix([[1, 3, 2], [3, 1, 4], [2, 4, 1]])[1]
    (3, 1, 4)
    >>> validate_matrix([[1, 2], [3, 1]]) # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    NotSymmetricError: Entries m[1][2] = 2 and m[2][1] = 3 differ
    >>> validate_matrix([[1, 1], [1, 1]]) # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    EntryTooSmallError: Off-diagonal entry m[1][2] = 1 should be at least 2

    '''
    rows = [list(row) for row in raw]
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise NotSquareError([len(row) for row in rows])

    for i, j in itertools.product(range(n), repeat=2):
        m = rows[i][j]
        if m == INFINITY:
            continue
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise BadEntryError(i, j, m)

    for i in range(n):
        if rows[i][i] != 1:
            raise BadDiagonalError(i, rows[i][i])

    for i, j in itertools.combinations(range(n), 2):
        if rows[i][j] != rows[j][i]:
            raise NotSymmetricError(i, j, rows[i][j], rows[j][i])
        if rows[i][j] < 2:
            raise EntryTooSmallError(i, j, rows[i][j])

    return tuple(tuple(row) for row in rows)


def coxeter_diagram(matrix):
    '''Vertices, edges (m >= 3) and edge labels (m >= 4) of the Coxeter diagram.

    >>> d = coxeter_diagram([[1, 3, 2], [3, 1, 4], [2, 4, 1]])
    >>> d.edges
    ((0, 1), (1, 2))
    >>> d.labels
    {(1, 2): 4}

    '''
    matrix = validate_matrix(matrix)
    n = len(matrix)
    edges = tuple((i, j) for i, j in itertools.combinations(range(n), 2) if matrix[i][j] >= 3)
    labels = {(i, j): matrix[i][j] for (i, j) in edges if matrix[i][j] >= 4}
    return CoxeterDiagram(tuple(range(n)), edges, labels)


class Root(tuple):
    '''Coordinates in the simple-root basis, compared and hashed by exact value.'''
    __slots__ = ()

    def __hash__(self):
        return hash(tuple(tuple(c.to_list()) for c in self))

    def support(self):
        return frozenset(k for k, c in enumerate(self) if c.to_list())


def _combine(root, factor, other):
    '''root - factor * other'''
    return Root(a - factor * b for a, b in zip(root, other))


class CoxeterSystem(object):
    '''A Coxeter system with its geometric representation.

    ``matrix`` is the Coxeter matrix (``INFINITY`` for infinite entries),
    ``names`` the generator names used for output (``s1``, ``s2``, ... by
    default).  Generators are addressed by index everywhere else.

    >>> B3 = CoxeterSystem([[1, 3, 2], [3, 1, 4], [2, 4, 1]], name='B3')
    >>> B3.rank, B3.names, B3.field
    (3, ('s1', 's2', 's3'), CosineField(4))
    >>> [B3.field.as_expr(c) for c in B3.reflect(1, B3.simple_root(2))]
    [0, sqrt(2), 1]

    '''
    def __init__(self, matrix, names=None, name=''):
        self.matrix = validate_matrix(matrix)
        self.rank = len(self.matrix)
        if names is None:
            names = ['s{}'.format(i + 1) for i in range(self.rank)]
        self.names = tuple(names)
        if len(self.names) != self.rank or len(set(self.names)) != self.rank:
            raise GeneratorNamesError(self.names, self.rank)
        self.name = name

        self.field = CosineField(field_level(itertools.chain.from_iterable(self.matrix)))
        self.form = tuple(tuple(self._form_value(m) for m in row) for row in self.matrix)
        self.simple_roots = tuple(
            Root(self.field.one if k == i else self.field.zero for k in range(self.rank))
            for i in range(self.rank))

        self._lock = threading.Lock()
        self._by_word = collections.OrderedDict()
        self._by_canonical = {}
        self._finite = None
        self.identity = self.element(())
        logger.debug('Coxeter system {} of rank {} over {}'.format(name, self.rank, self.field))

    def __repr__(self):
        return "CoxeterSystem({!r}, name={!r})".format(self.matrix, self.name)

    def _form_value(self, m):
        if m == INFINITY:
            return self.field.rational(-2)
        return -self.field.two_cos_pi_over(m)

    def simple_root(self, i):
        return self.simple_roots[i]

    def reflect(self, i, root):
        '''The image of a root under the simple reflection s_i.'''
        pairing = self.field.zero
        for k, c in enumerate(root):
            if self.matrix[k][i] != 2:
                pairing = pairing + c * self.form[k][i]
        coordinates = list(root)
        coordinates[i] = root[i] - pairing
        return Root(coordinates)

    def root_sign(self, root):
        '''+1 for a positive root, -1 for a negative one.'''
        signs = [self.field.sign(c) for c in root]
        if all(s >= 0 for s in signs) and any(s > 0 for s in signs):
            return 1
        if all(s <= 0 for s in signs) and any(s < 0 for s in signs):
            return -1
        raise MixedSignRootError(signs)

    def generator(self, i):
        return self.element((i,))

    def element(self, word=()):
        '''The group element spelled by a word of generator indices.'''
        word = tuple(word)
        with self._lock:
            found = self._by_canonical.get(word)
            if found is None:
                found = self._by_word.get(word)
                if found is not None:
                    self._by_word.move_to_end(word)
        if found is not None:
            return found

        for s in word:
            if not (isinstance(s, int) and 0 <= s < self.rank):
                raise UnknownGeneratorError(s, self.rank)

        images, coimages = self._track(word)
        canonical = self._canonical_word(coimages)
        with self._lock:
            found = self._by_canonical.get(canonical)
            if found is None:
                found = GroupElement(self, canonical, images, coimages)
                self._by_canonical[canonical] = found
            if word != canonical:
                self._by_word[word] = found
                if len(self._by_word) > WORD_CACHE_SIZE:
                    self._by_word.popitem(last=False)
        return found

    def _track(self, word):
        # images[j] = w(a_j) and coimages[j] = w^-1(a_j) for the prefix read so far
        images = list(self.simple_roots)
        coimages = list(self.simple_roots)
        for s in word:
            column = images[s]
            images = [root if self.matrix[j][s] == 2 else _combine(root, self.form[j][s], column)
                      for j, root in enumerate(images)]
            coimages = [self.reflect(s, root) for root in coimages]
        return tuple(images), tuple(coimages)

    def _canonical_word(self, coimages):
        # peel the smallest left descent until nothing is left
        rest = list(coimages)
        word = []
        while True:
            for i, root in enumerate(rest):
                if self.root_sign(root) < 0:
                    break
            else:
                return tuple(word)
            word.append(i)
            pivot = rest[i]
            rest = [root if self.matrix[j][i] == 2 else _combine(root, self.form[j][i], pivot)
                    for j, root in enumerate(rest)]

    def format_word(self, word):
        if not word:
            return 'e'
        return ','.join(self.names[s] for s in word)


class GroupElement(object):
    '''An element of a Coxeter group, in canonical form.

    Build these with ``CoxeterSystem.element``; equal elements of the same
    system are the same object.
    '''
    __slots__ = ('system', 'word', 'images', 'coimages')

    def __init__(self, system, word, images, coimages):
        self.system = system
        self.word = word
        self.images = images
        self.coimages = coimages

    @property
    def length(self):
        return len(self.word)

    def __eq__(self, other):
        return (isinstance(other, GroupElement)
                and self.system is other.system and self.word == other.word)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.word)

    def __str__(self):
        return self.system.format_word(self.word)

    def __repr__(self):
        return "<GroupElement {}>".format(self)


def element_key(w):
    '''Sort key: length, then canonical word.'''
    return (len(w.word), w.word)


def _same_system(*elements):
    system = elements[0].system
    if any(x.system is not system for x in elements):
        raise SystemMismatchError()
    return system


def simple_reflection_action(system, i, root):
    '''sigma_i(r) = r - 2B(r, a_i) a_i

    >>> A2 = CoxeterSystem([[1, 3], [3, 1]])
    >>> A2.root_sign(simple_reflection_action(A2, 0, A2.simple_root(0)))
    -1
    >>> simple_reflection_action(A2, 0, A2.simple_root(1)) == Root(A2.field.one for _ in range(2))
    True

    '''
    if len(root) != system.rank:
        raise UnknownGeneratorError(len(root), system.rank)
    return system.reflect(i, root)


def left_descents(w):
    '''Generators s with l(sw) < l(w), found as the negative roots among w^-1(a_s).'''
    return frozenset(i for i, root in enumerate(w.coimages) if w.system.root_sign(root) < 0)


def right_descents(w):
    '''Generators s with l(ws) < l(w), found as the negative roots among w(a_s).'''
    return frozenset(i for i, root in enumerate(w.images) if w.system.root_sign(root) < 0)


def left_descents_by_length(w):
    system = w.system
    return frozenset(i for i in range(system.rank)
                     if multiply(system.generator(i), w).length < w.length)


def multiply(u, v):
    system = _same_system(u, v)
    if not v.word:
        return u
    if not u.word:
        return v
    return system.element(u.word + v.word)


def inverse(w):
    return w.system.element(reversed(w.word))


def support(w):
    '''Generators occurring in (every) reduced word of w.'''
    return frozenset(w.word)


def weak_leq(u, v):
    '''Right weak order: l(v) = l(u) + l(u^-1 v).'''
    _same_system(u, v)
    if u.length > v.length:
        return False
    return v.length == u.length + multiply(inverse(u), v).length


def restrict(w, generators):
    '''The parabolic part w_J of w for J = generators.

    >>> B3 = CoxeterSystem([[1, 3, 2], [3, 1, 4], [2, 4, 1]])
    >>> w = B3.element([1, 2, 1])
    >>> restrict(w, {1, 2}) is w, restrict(w, {0}) is B3.identity
    (True, True)
    >>> print(restrict(B3.element([0, 1, 2]), {1, 2}))
    e
    >>> print(restrict(B3.element([1, 2, 0]), {1, 2}))
    s2,s3

    '''
    generators = frozenset(generators)
    system = w.system
    u, v = system.identity, w
    while True:
        descents = left_descents(v) & generators
        if not descents:
            return u
        s = min(descents)
        u = multiply(u, system.generator(s))
        v = multiply(system.generator(s), v)


def inversion_set(w):
    '''The roots s1...s(j-1)(a_sj) read along the canonical word.

    >>> A2 = CoxeterSystem([[1, 3], [3, 1]])
    >>> a1, a2 = A2.simple_roots
    >>> inversion_set(A2.element([0, 1])) == {a1, Root(x + y for x, y in zip(a1, a2))}
    True

    '''
    system = w.system
    roots = set()
    for k, s in enumerate(w.word):
        roots.add(system.element(w.word[:k]).images[s])
    return frozenset(roots)


def is_finite(system):
    '''True if the bilinear form is positive definite.

    Pivots of Gaussian elimination are all positive exactly then.

    >>> is_finite(CoxeterSystem([[1, 3, 3], [3, 1, 3], [3, 3, 1]]))
    False
    >>> is_finite(CoxeterSystem([[1, 5, 2], [5, 1, 3], [2, 3, 1]]))
    True

    '''
    if system._finite is None:
        field = system.field
        rows = [list(row) for row in system.form]
        finite = True
        for k in range(system.rank):
            pivot = rows[k][k]
            if field.sign(pivot) <= 0:
                finite = False
                break
            for i in range(k + 1, system.rank):
                factor = rows[i][k] / pivot
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[k])]
        system._finite = finite
    return system._finite


def enumerate_elements(system, cap=None):
    '''All elements of length <= cap, ordered by length then canonical word.

    With no cap the whole group is listed, which needs a finite group.

    >>> A3 = CoxeterSystem([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
    >>> len(enumerate_elements(A3)), len(enumerate_elements(A3, 2))
    (24, 9)

    '''
    if cap is None and not is_finite(system):
        raise GroupNotFiniteError(system.name)
    found = [system.identity]
    level = [system.identity]
    length = 0
    while level and (cap is None or length < cap):
        following = {}
        for w in level:
            descents = right_descents(w)
            for s in range(system.rank):
                if s not in descents:
                    z = multiply(w, system.generator(s))
                    following[z.word] = z
        level = [following[word] for word in sorted(following)]
        found.extend(level)
        length += 1
    logger.debug('Enumerated {} elements of {} up to length {}'.format(
        len(found), system.name, length))
    return found


def longest_element(system):
    '''The unique longest element w_o of a finite group.'''
    if not is_finite(system):
        raise GroupNotFiniteError(system.name)
    w = system.identity
    while True:
        ascents = [s for s in range(system.rank) if s not in right_descents(w)]
        if not ascents:
            return w
        w = multiply(w, system.generator(ascents[0]))


def bounded_join(xs, cap, universe=None):
    '''Least common upper bound among the elements of length <= cap.

    ``universe`` must hold every element of length <= cap; it is
    enumerated when not supplied.

    >>> A3 = CoxeterSystem([[1, 3, 2], [3, 1, 3], [2, 3, 1]])
    >>> print(bounded_join([A3.element([0]), A3.element([1])], 6))
    s1,s2,s1

    '''
    xs = list(xs)
    if not xs:
        raise EmptyInputError('join')
    system = _same_system(*xs)
    if universe is None:
        universe = enumerate_elements(system, cap)
    uppers = [z for z in universe
              if z.length <= cap and all(weak_leq(x, z) for x in xs)]
    if not uppers:
        raise NoUpperBoundWithinCapError(cap)
    return min(uppers, key=element_key)


def bounded_meet(xs, universe=None):
    '''Greatest common lower bound.

    ``universe`` must hold every element below the shortest member of xs.
    '''
    xs = list(xs)
    if not xs:
        raise EmptyInputError('meet')
    system = _same_system(*xs)
    if universe is None:
        universe = enumerate_elements(system, min(x.length for x in xs))
    lowers = [z for z in universe if all(weak_leq(z, x) for x in xs)]
    return max(lowers, key=element_key)


def reduced_words(w):
    '''Every reduced word of w, in lexicographic order.

    >>> A2 = CoxeterSystem([[1, 3], [3, 1]])
    >>> list(reduced_words(A2.element([0, 1, 0])))
    [(0, 1, 0), (1, 0, 1)]

    '''
    if not w.word:
        yield ()
        return
    system = w.system
    for s in sorted(left_descents(w)):
        for tail in reduced_words(multiply(system.generator(s), w)):
            yield (s,) + tail
