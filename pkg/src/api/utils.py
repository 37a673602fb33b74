#!/usr/bin/env python
# -*- coding: utf-8 -*-

import math
from fractions import Fraction
from functools import reduce

from typing import Any
from typing import Optional
from typing import IO
from typing import Iterable
from typing import Union

from . import errmsg

__all__ = [
    'read_txt_file',
    'open_file',
    'parse_fraction',
    'fraction_str',
    'ceil_fraction',
    'lcm'
]

__doc__ = """Utils module contains helpers for several tasks, like reading files
or converting exact rationals from and to their text form"""

Rational = Union[int, Fraction]


def read_txt_file(fname: str) -> str:
    """Reads a txt file, regardless of its encoding
    """
    encodings = ['utf-8-sig', 'cp1252']
    with open(fname, 'rb') as f:
        content = bytes(f.read())

    for i in encodings:
        try:
            result = content.decode(i)
            return result
        except UnicodeDecodeError:
            pass

    errmsg.error('Invalid file encoding. Use one of: %s' % ', '.join(encodings), fname)
    return ''


def open_file(fname: str, mode: str = 'rb', encoding: str = 'utf-8') -> IO[Any]:
    """ An open() wrapper which allows encoding
    :param fname: file name (string)
    :param mode: file mode (string) optional
    :param encoding: optional encoding (string). Ignored if not in text mode
    :return: an open file handle
    """
    if 't' not in mode or not encoding:
        return open(fname, mode)

    return open(fname, mode, encoding=encoding)


def parse_fraction(num: Optional[Union[str, int, Fraction]]) -> Optional[Fraction]:
    """ Given a rational number as a string ("p/q", "p" or a finite decimal
    like "0.001"), return its exact value, or None if it could not be parsed.
    Ints and Fractions are returned as Fractions.
    """
    if isinstance(num, bool):
        return None
    if isinstance(num, (int, Fraction)):
        return Fraction(num)

    num = (num or "").strip()
    if not num:
        return None

    try:
        return Fraction(num)
    except (ValueError, ZeroDivisionError):
        pass

    return None


def fraction_str(value: Rational) -> str:
    """ Text form of a rational: "p/q", or "p" for integers
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return '%i/%i' % (value.numerator, value.denominator)


def ceil_fraction(value: Rational) -> int:
    """ Exact ceiling of a rational
    """
    value = Fraction(value)
    return -((-value.numerator) // value.denominator)


def lcm(values: Iterable[int]) -> int:
    """ Least common multiple of positive integers (1 for an empty input)
    """
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)

