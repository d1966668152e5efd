"""Exact ordered rings, monomial matrices and automorphism decomposition.

Thin layer over the compiled module: every value is the JSON document the
`posmat` command line tool reads and writes, decoded into plain Python data.
"""

import json

from . import _posmat
from ._posmat import Error, NotAUnit, NotMonomial, ParseError, UnsupportedRing, suite_names

__all__ = [
    "Error", "NotAUnit", "NotMonomial", "ParseError", "UnsupportedRing",
    "add", "decompose", "factor", "gen_oracle", "gen_word", "inverse", "mul", "neg",
    "sign", "suite_names", "to_string", "verify",
]


def _enc(x):
    return x if isinstance(x, str) else json.dumps(x)


def decompose(description, seed=0, words=50, force_k=False):
    return json.loads(_posmat.decompose(_enc(description), seed, words, force_k))


def factor(matrix):
    return json.loads(_posmat.factor(_enc(matrix)))


def verify(suite, ring="Q", n=3, trials=100, seed=0):
    return json.loads(_posmat.verify(str(suite), ring, n, trials, seed))


def gen_word(n, ring="Q", length=8, seed=0):
    return json.loads(_posmat.gen_word(n, ring, length, seed))


def gen_oracle(n, ring="Q", seed=0):
    return json.loads(_posmat.gen_oracle(n, ring, seed))


def add(a, b):
    return json.loads(_posmat.add(_enc(a), _enc(b)))


def mul(a, b):
    return json.loads(_posmat.mul(_enc(a), _enc(b)))


def neg(a):
    return json.loads(_posmat.neg(_enc(a)))


def inverse(a):
    return json.loads(_posmat.inverse(_enc(a)))


def sign(a):
    return _posmat.sign(_enc(a))


def to_string(a):
    return _posmat.to_string(_enc(a))
