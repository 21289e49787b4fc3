"""Sparse Laurent polynomials in one variable ``q`` with integer coefficients.

Values are immutable.  The zero polynomial has no terms; no stored
coefficient is ever zero.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping, Tuple, Union

from .errors import ZeroPolynomial

__all__ = ["LaurentPoly", "q", "ONE", "ZERO"]

Coercible = Union["LaurentPoly", int]


class LaurentPoly:
    """An element of Z[q, q^-1] stored as ``{exponent: coefficient}``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[Tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            exp, coeff = int(exp), int(coeff)
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {d: c for d, c in sorted(acc.items()) if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, int]) -> "LaurentPoly":
        # terms already reduced: no zeros, sorted keys not required
        obj = cls.__new__(cls)
        obj._terms = dict(sorted(terms.items()))
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "LaurentPoly":
        """``sum q^d`` over an iterable of exponents (with repetition)."""
        acc: dict[int, int] = {}
        for d in degrees:
            acc[d] = acc.get(d, 0) + 1
        return cls._raw(acc)

    @classmethod
    def constant(cls, c: int) -> "LaurentPoly":
        return cls({0: c})

    @staticmethod
    def coerce(x: Coercible) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return LaurentPoly({0: x})
        raise TypeError(f"cannot interpret {x!r} as a Laurent polynomial")

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[Tuple[int, int]]:
        """(exponent, coefficient) pairs in ascending exponent order."""
        return list(self._terms.items())

    def coefficient(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms.items())

    def mindeg(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("mindeg of the zero polynomial")
        return next(iter(self._terms))

    def maxdeg(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("maxdeg of the zero polynomial")
        return next(reversed(self._terms))

    def degree_extrema(self) -> Tuple[int, int]:
        return self.mindeg(), self.maxdeg()

    def evaluate(self, x=1):
        """Substitute ``q = x``.  Negative powers need an invertible ``x``."""
        if x == 1:
            return sum(self._terms.values())
        return sum(c * x**d for d, c in self._terms.items())

    def is_bar_invariant(self) -> bool:
        return all(self._terms.get(-d) == c for d, c in self._terms.items())

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # -- arithmetic ---------------------------------------------------------

    def bar(self) -> "LaurentPoly":
        return LaurentPoly._raw({-d: c for d, c in self._terms.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``q**k``."""
        return LaurentPoly._raw({d + k: c for d, c in self._terms.items()})

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw({d: -c for d, c in self._terms.items()})

    def __pos__(self) -> "LaurentPoly":
        return self

    def _combine(self, other: "LaurentPoly", sign: int) -> "LaurentPoly":
        out = dict(self._terms)
        for d, c in other._terms.items():
            v = out.get(d, 0) + sign * c
            if v:
                out[d] = v
            else:
                out.pop(d, None)
        return LaurentPoly._raw(out)

    def __add__(self, other: Coercible) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "LaurentPoly":
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other: Coercible) -> "LaurentPoly":
        return LaurentPoly.coerce(other)._combine(self, -1)

    def __mul__(self, other: Coercible) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._raw({d: c * other for d, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, int] = {}
        for d1, c1 in self._terms.items():
            for d2, c2 in other._terms.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return LaurentPoly._raw({d: c for d, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if self.is_monomial() and abs(self.terms()[0][1]) == 1:
                d, c = self.terms()[0]
                return LaurentPoly({d * k: c ** (-k)})
            raise ValueError("only unit monomials have negative powers")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- serialization ------------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    def to_text(self) -> str:
        """Canonical text form, ascending exponents: ``q^-2 + 3 + 2*q^4``."""
        if not self._terms:
            return "0"
        out = []
        for i, (d, c) in enumerate(self._terms.items()):
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if mag == 1 else f"{mag}*{var}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    _TERM = re.compile(
        r"""\s*([+-])?\s*               # sign
            (?:(\d+)\s*\*?\s*)?         # coefficient
            (?:(q)(?:\^\{?\s*([+-]?\d+)\s*\}?)?)?  # q, q^k, q^{k}
            \s*""",
        re.VERBOSE,
    )

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly":
        """Parse the text form; also accepts ``q^{k}`` and omitted ``*``."""
        s = text.strip()
        if s in ("", "0", "."):
            return ZERO
        terms: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse Laurent polynomial {text!r} at {pos}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) is not None else 1
            if m.group(3) is None:
                exp = 0
            else:
                exp = int(m.group(4)) if m.group(4) is not None else 1
            terms[exp] = terms.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(terms)

    def to_json(self) -> dict[str, str]:
        return {str(d): str(c) for d, c in self._terms.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, str]) -> "LaurentPoly":
        return cls({int(d): int(c) for d, c in obj.items()})

    def to_latex(self) -> str:
        """Descending-degree LaTeX, e.g. ``q^{3}+q``; zero renders as ``.``."""
        if not self._terms:
            return "."
        parts = []
        for d, c in reversed(list(self._terms.items())):
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                var = "q" if d == 1 else f"q^{{{d}}}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(sign + body)
        return "".join(parts)


ZERO = LaurentPoly()
ONE = LaurentPoly({0: 1})
q = LaurentPoly({1: 1})
