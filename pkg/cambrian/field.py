# coding: utf-8
"""Exact real scalars for the geometric representation of a Coxeter group.

Every value 2cos(pi/m) that the bilinear form of a Coxeter system needs
lies in the real field generated by ``2cos(pi/L)``, where ``L`` is the least
common multiple of the matrix entries that are at least 4.  Entries 1, 2
and 3 give the rational cosines -2, 0 and 1, so simply-laced systems
(and the affine type A systems) get by with plain rationals.

Elements are sympy ``ANP`` residues modulo the minimal polynomial of the
generator, so ring operations and zero tests are exact.  Signs are
decided by evaluating the residue with mpmath interval arithmetic, and
the working precision is doubled until the interval misses zero.

>>> F = CosineField(4)
>>> F.degree
2
>>> root_two = F.two_cos_pi_over(4)
>>> F.as_expr(root_two)
sqrt(2)
>>> F.as_expr(root_two * root_two)
2
>>> F.sign(root_two - F.rational(3, 2))
-1

"""
import functools
import logging
import math
import threading

import mpmath
import sympy
from sympy.polys.domains import QQ
from sympy.polys.polyclasses import ANP

__all__ = ['CosineField', 'field_level']

logger = logging.getLogger(__name__)

START_PRECISION = 53
MAX_PRECISION = 1 << 15
SIGN_CACHE_SIZE = 1 << 14

# mpmath keeps its interval precision in module state
_interval_lock = threading.Lock()


class Error(Exception):
    """Parent class for field exceptions"""
    pass


class SignUndecidedError(Error):
    """Raised when interval evaluation never separates a value from zero.

    Attributes:
        coefficients
        precision

    """
    def __init__(self, coefficients, precision):
        self.coefficients = coefficients
        self.precision = precision

    def __str__(self):
        return "No certified sign for {} at {} bits".format(list(self.coefficients), self.precision)


class LevelError(Error):
    """Raised when 2cos(pi/m) is asked of a field that does not contain it.

    Attributes:
        m
        level

    """
    def __init__(self, m, level):
        self.m = m
        self.level = level

    def __str__(self):
        return "2cos(pi/{}) is not in the field generated by 2cos(pi/{})".format(self.m, self.level)


def field_level(entries):
    '''Least common multiple of the finite entries that need irrational cosines.

    >>> field_level([1, 3, 2, 4, 6])
    12
    >>> field_level([1, 2, 3, math.inf])
    1
    >>> field_level([5, 4, 1])
    20

    '''
    level = 1
    for m in entries:
        if m != math.inf and m >= 4:
            level = level * m // math.gcd(level, m)
    return level


@functools.lru_cache(maxsize=SIGN_CACHE_SIZE)
def _certified_sign(level, coefficients):
    '''Sign of sum(c * alpha**k) with alpha = 2cos(pi/level), coefficients highest first.'''
    iv = mpmath.iv
    precision = START_PRECISION
    with _interval_lock:
        saved = iv.prec
        try:
            while precision <= MAX_PRECISION:
                iv.prec = precision
                alpha = 2 * iv.cos(iv.pi / level)
                value = iv.mpf(0)
                for c in coefficients:
                    value = value * alpha + iv.mpf(int(c.numerator)) / int(c.denominator)
                if (value > 0) is True:
                    return 1
                if (value < 0) is True:
                    return -1
                precision *= 2
                logger.debug('Refining sign of {} to {} bits'.format(list(coefficients), precision))
        finally:
            iv.prec = saved
    raise SignUndecidedError(coefficients, MAX_PRECISION)


class CosineField(object):
    '''The real field Q(2cos(pi/level)) with exact arithmetic and certified signs.

    Values are sympy ``ANP`` objects, so ``+``, ``-``, ``*`` and ``/`` work
    on them directly.  Use the field's own methods to make values, to test
    for zero and to decide signs.

    >>> F = CosineField(5)
    >>> phi = F.two_cos_pi_over(5)
    >>> F.is_zero(phi * phi - phi - F.one)
    True
    >>> F.sign(phi - F.rational(8, 5)), F.sign(phi - F.rational(17, 10))
    (1, -1)
    >>> CosineField(1).degree
    1

    '''
    def __init__(self, level=1):
        self.level = level
        x = sympy.Symbol('x')
        self.generator_expr = 2 * sympy.cos(sympy.pi / level)
        poly = sympy.Poly(sympy.minimal_polynomial(self.generator_expr, x), x, domain=QQ)
        self.degree = poly.degree()
        self.modulus = [QQ.convert(c) for c in poly.all_coeffs()]
        self.zero = self.element([])
        self.one = self.element([1])
        if self.degree == 1:
            self.generator = self.element([-self.modulus[1] / self.modulus[0]])
        else:
            self.generator = self.element([1, 0])
        logger.debug('Field level {} has degree {}'.format(level, self.degree))

    def __repr__(self):
        return "CosineField({})".format(self.level)

    def element(self, coefficients):
        '''Residue with the given rational coefficients, highest power first.

        The list must already be shorter than the minimal polynomial.
        '''
        return ANP([QQ.convert(c) for c in coefficients], self.modulus, QQ)

    def rational(self, numerator, denominator=1):
        return self.element([QQ(numerator, denominator)])

    def two_cos_pi_over(self, m):
        '''The value 2cos(pi/m) for an integer m >= 1.

        >>> F = CosineField(6)
        >>> [F.as_expr(F.two_cos_pi_over(m)) for m in (1, 2, 3, 6)]
        [-2, 0, 1, sqrt(3)]
        >>> F.two_cos_pi_over(4) # doctest: +IGNORE_EXCEPTION_DETAIL
        Traceback (most recent call last):
        ...
        LevelError: 2cos(pi/4) is not in the field generated by 2cos(pi/6)

        '''
        if m == 1:
            return self.rational(-2)
        if m == 2:
            return self.zero
        if m == 3:
            return self.one
        if self.level % m:
            raise LevelError(m, self.level)
        # 2cos(k t) from 2cos(t) by the Chebyshev recurrence
        previous, current = self.rational(2), self.generator
        for _ in range(self.level // m - 1):
            previous, current = current, self.generator * current - previous
        return current

    def coefficients(self, a):
        return tuple(a.to_list())

    def is_zero(self, a):
        return not a.to_list()

    def sign(self, a):
        '''Certified sign of a value: -1, 0 or +1.'''
        coefficients = self.coefficients(a)
        if not coefficients:
            return 0
        if len(coefficients) == 1:
            return 1 if coefficients[0] > 0 else -1
        return _certified_sign(self.level, coefficients)

    def as_expr(self, a):
        '''The value as a sympy expression, for display.'''
        coefficients = self.coefficients(a)
        terms = [sympy.Rational(int(c.numerator), int(c.denominator)) * self.generator_expr ** k
                 for k, c in enumerate(reversed(coefficients))]
        return sympy.expand(sympy.Add(*terms))

    def as_float(self, a):
        return float(self.as_expr(a))
