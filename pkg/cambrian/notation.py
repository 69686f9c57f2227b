# coding: utf-8
"""Read and write Coxeter systems, words and Coxeter elements.

A Coxeter system file is a JSON object like this::

    {
        "name": "B3",
        "generators": ["s1", "s2", "s3"],
        "matrix": [[1, 3, 2], [3, 1, 4], [2, 4, 1]]
    }

where a matrix entry of ``0`` or ``"inf"`` stands for infinity.  Several
systems come bundled with the package and can be named instead of given
as a path.

Words are comma-separated generator names; ``e`` (or nothing at all)
is the identity.

>>> B3 = load_system('B3')
>>> w = parse_word(B3, 's2, s3, s2, s3')
>>> print(w)
s2,s3,s2,s3
>>> parse_word(B3, format_word(w)) is w
True
>>> print(parse_gamma(B3))
s1,s2,s3

"""
import json
import os
import pkgutil

from cambrian.coxeter import INFINITY, CoxeterSystem
from cambrian.sortable import CoxeterElementWord

__all__ = ['BUNDLED_SYSTEMS', 'load_system', 'parse_system', 'parse_letters',
           'parse_word', 'parse_gamma', 'format_word', 'format_sorting_word',
           'format_positions']

BUNDLED_SYSTEMS = {
    'A2': 'coxeter-A2.json',
    'A3': 'coxeter-A3.json',
    'A4': 'coxeter-A4.json',
    'B3': 'coxeter-B3.json',
    'H3': 'coxeter-H3.json',
    'A2-affine': 'coxeter-A2-affine.json',
    'I2-infinity': 'coxeter-I2-infinity.json',
}

IDENTITY_NAMES = ('', 'e', 'ε')


class Error(Exception):
    """Parent class for notation exceptions"""
    pass


class ParseError(Error):
    """Parent class for parsing exceptions"""
    pass


class SystemFileError(ParseError):
    """Raised when a Coxeter system file cannot be read or understood.

    Attributes:
        source, reason

    """
    def __init__(self, source, reason):
        self.source = source
        self.reason = reason

    def __str__(self):
        return "Cannot read a Coxeter system from {}: {}".format(self.source, self.reason)


class WordParseError(ParseError):
    """Raised when a word uses a name that is not a generator.

    Attributes:
        text, name

    """
    def __init__(self, text, name):
        self.text = text
        self.name = name

    def __str__(self):
        return "'{}' in '{}' is not a generator name".format(self.name, self.text)


class GammaParseError(ParseError):
    """Raised when a Coxeter element does not use every generator exactly once.

    Attributes:
        text, names

    """
    def __init__(self, text, names):
        self.text = text
        self.names = names

    def __str__(self):
        return "'{}' is not an ordering of the generators {}".format(self.text, ','.join(self.names))


def _entry(value):
    # bool is an int, so false must not pass for 0
    if isinstance(value, int) and not isinstance(value, bool) and value == 0:
        return INFINITY
    if value == 'inf':
        return INFINITY
    return value


def _check_names(names, source):
    '''Generator names must read back from a formatted word.'''
    if not isinstance(names, list):
        raise SystemFileError(source, "'generators' is not a list of names")
    for name in names:
        if not isinstance(name, str):
            raise SystemFileError(source, "generator name {!r} is not a string".format(name))
        if name.strip() in IDENTITY_NAMES:
            raise SystemFileError(source, "generator name {!r} stands for the identity".format(name))
        if ',' in name or name != name.strip():
            raise SystemFileError(
                source, "generator name {!r} has a comma or surrounding spaces".format(name))


def parse_system(text, source='<string>'):
    '''Build a CoxeterSystem from the text of a system file.

    >>> system = parse_system('{"generators": ["a", "b"], "matrix": [[1, "inf"], [0, 1]]}')
    >>> system.matrix, system.names
    (((1, inf), (inf, 1)), ('a', 'b'))

    '''
    try:
        document = json.loads(text)
    except ValueError as e:
        raise SystemFileError(source, 'not JSON ({})'.format(e))
    if not isinstance(document, dict):
        raise SystemFileError(source, 'expected an object')
    for field in ('generators', 'matrix'):
        if field not in document:
            raise SystemFileError(source, "no '{}' field".format(field))
    try:
        matrix = [[_entry(value) for value in row] for row in document['matrix']]
    except TypeError:
        raise SystemFileError(source, "'matrix' is not a list of rows")
    _check_names(document['generators'], source)
    name = document.get('name', os.path.splitext(os.path.basename(source))[0])
    return CoxeterSystem(matrix, names=document['generators'], name=name)


def load_system(source):
    '''A bundled system by name, or a system file by path.'''
    if source in BUNDLED_SYSTEMS:
        text = pkgutil.get_data('cambrian', BUNDLED_SYSTEMS[source]).decode('utf-8')
        return parse_system(text, source)
    try:
        with open(source, encoding='utf-8') as handle:
            text = handle.read()
    except (IOError, OSError) as e:
        raise SystemFileError(source, e.strerror or str(e))
    return parse_system(text, source)


def parse_letters(system, text):
    '''Generator indices for a comma-separated list of names.'''
    text = text.strip()
    if text in IDENTITY_NAMES:
        return ()
    index = {name: i for i, name in enumerate(system.names)}
    letters = []
    for name in text.split(','):
        name = name.strip()
        if name not in index:
            raise WordParseError(text, name)
        letters.append(index[name])
    return tuple(letters)


def parse_word(system, text):
    return system.element(parse_letters(system, text))


def parse_gamma(system, text=None):
    '''A Coxeter element given by names; all generators in order when text is None.

    >>> A3 = load_system('A3')
    >>> parse_gamma(A3, 's1,s2') # doctest: +IGNORE_EXCEPTION_DETAIL
    Traceback (most recent call last):
    ...
    GammaParseError: 's1,s2' is not an ordering of the generators s1,s2,s3

    '''
    if text is None:
        return CoxeterElementWord(system, range(system.rank))
    letters = parse_letters(system, text)
    if sorted(letters) != list(range(system.rank)):
        raise GammaParseError(text, system.names)
    return CoxeterElementWord(system, letters)


def format_word(w):
    return str(w)


def format_sorting_word(sw):
    return str(sw)


def format_positions(positions):
    '''
    >>> format_positions({5, 1, 2, 3})
    '1 2 3 5'
    '''
    return ' '.join(str(i) for i in sorted(positions))
