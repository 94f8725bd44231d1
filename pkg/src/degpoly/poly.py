"""Exact sparse polynomials with nonnegative integer coefficients.

A polynomial is stored as a map from exponent to coefficient with no zero
coefficients kept (the zero polynomial is the empty map), so equality is
plain term-map equality and all arithmetic is exact integer arithmetic.

The module also carries the comparison used to present degree-polynomial
sequences non-increasingly, the tensor product (which multiplies exponents
instead of adding them), and the two exponent transforms (scaling and
reflection) needed by the graph-operation formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Union

from .errors import (
    DegreeBoundError,
    NegativeCoefficientError,
    NegativeValueError,
    PolyParseError,
    ZeroOperandError,
)

TermsLike = Union[Mapping[int, int], Iterable[tuple[int, int]], None]


class DegreePoly:
    """Sparse univariate polynomial over the nonnegative integers.

    Instances are immutable value objects: hashable, comparable for
    equality by their term maps, and safe to share between workers.
    """

    __slots__ = ("_terms", "_pairs")

    def __init__(self, terms: TermsLike = None):
        acc: dict[int, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exponent, coefficient in items:
                if not isinstance(exponent, int) or not isinstance(coefficient, int):
                    raise TypeError("exponents and coefficients must be exact integers")
                if exponent < 0:
                    raise ValueError(f"negative exponent {exponent}")
                if coefficient < 0:
                    raise ValueError(f"negative coefficient {coefficient}")
                if coefficient == 0:
                    continue
                acc[exponent] = acc.get(exponent, 0) + coefficient
        self._terms = acc
        # Descending-exponent pairs: canonical identity used for eq/hash.
        self._pairs = tuple(sorted(acc.items(), reverse=True))

    # -- construction helpers ------------------------------------------------

    @classmethod
    def zero(cls) -> "DegreePoly":
        return cls()

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "DegreePoly":
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value: int) -> "DegreePoly":
        return cls({0: value})

    @classmethod
    def from_pairs(cls, pairs: Iterable[Iterable[int]]) -> "DegreePoly":
        """Decode the structured ``[[exponent, coefficient], ...]`` form."""
        return cls((int(e), int(c)) for e, c in pairs)

    @classmethod
    def parse(cls, text: str) -> "DegreePoly":
        return parse_poly(text)

    # -- views ---------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        if not self._pairs:
            raise ValueError("the zero polynomial has no degree")
        return self._pairs[0][0]

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def support(self) -> tuple[int, ...]:
        """Exponents with nonzero coefficient, descending."""
        return tuple(e for e, _ in self._pairs)

    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def to_pairs(self) -> list[list[int]]:
        """Structured encoding: [exponent, coefficient] pairs, descending."""
        return [[e, c] for e, c in self._pairs]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DegreePoly):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "DegreePoly") -> "DegreePoly":
        if not isinstance(other, DegreePoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return DegreePoly(out)

    def __sub__(self, other: "DegreePoly") -> "DegreePoly":
        if not isinstance(other, DegreePoly):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            new = out.get(e, 0) - c
            if new < 0:
                raise NegativeCoefficientError(
                    f"subtraction drops coefficient of x^{e} below zero"
                )
            out[e] = new
        return DegreePoly(out)

    def __mul__(self, other: "DegreePoly") -> "DegreePoly":
        if not isinstance(other, DegreePoly):
            return NotImplemented
        out: dict[int, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                e = ea + eb
                out[e] = out.get(e, 0) + ca * cb
        return DegreePoly(out)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"DegreePoly.parse({format_poly(self)!r})"


@dataclass(frozen=True)
class CoeffStats:
    """Coefficient sums of a polynomial.

    ``total`` is the sum of all coefficients, ``even_total``/``odd_total``
    split it by exponent parity (exponent 0 counts as even), and
    ``first_moment`` is the exponent-weighted sum -- equivalently the sum of
    the coefficients of the derivative.
    """

    total: int
    even_total: int
    odd_total: int
    first_moment: int


def coeff_stats(poly: DegreePoly) -> CoeffStats:
    total = even_total = odd_total = first_moment = 0
    for exponent, coefficient in poly:
        total += coefficient
        if exponent % 2 == 0:
            even_total += coefficient
        else:
            odd_total += coefficient
        first_moment += exponent * coefficient
    return CoeffStats(total, even_total, odd_total, first_moment)


def coeff_sum(poly: DegreePoly) -> int:
    """Sum of all coefficients (0 for the zero polynomial)."""
    return sum(c for _, c in poly)


# -- the sequence-presentation order ------------------------------------------

LESS, EQUAL, GREATER = -1, 0, 1


def compare_polys(f: DegreePoly, g: DegreePoly) -> int:
    """Compare two nonzero polynomials; returns -1, 0 or 1.

    The cascade: the larger coefficient sum wins; on a tie, coefficients are
    compared along the exponents where both polynomials are nonzero, from the
    highest such exponent down.  If that exhausts without deciding, the full
    coefficient vectors are compared from the highest exponent at which they
    differ (a documented extension: the shared-support cascade alone cannot
    separate e.g. 2x^3 from x^2+x).
    """
    if f.is_zero or g.is_zero:
        raise ZeroOperandError("comparison is undefined for the zero polynomial")
    if f == g:
        return EQUAL
    sf, sg = coeff_sum(f), coeff_sum(g)
    if sf != sg:
        return LESS if sf < sg else GREATER
    shared = sorted(set(f.support()) & set(g.support()), reverse=True)
    for exponent in shared:
        a, b = f.coefficient(exponent), g.coefficient(exponent)
        if a != b:
            return LESS if a < b else GREATER
    for exponent in sorted(set(f.support()) | set(g.support()), reverse=True):
        a, b = f.coefficient(exponent), g.coefficient(exponent)
        if a != b:
            return LESS if a < b else GREATER
    raise AssertionError("distinct polynomials with identical terms")


def presentation_key(poly: DegreePoly) -> tuple:
    """A transitive total-order key consistent with the comparison fallback.

    Sorting by this key descending gives the canonical starting arrangement
    for :func:`sort_polys_desc`; it orders by coefficient sum, then by the
    coefficient vector read from the highest exponent down.
    """
    return (coeff_sum(poly), tuple(poly))


def sort_polys_desc(polys: Iterable[DegreePoly]) -> list[DegreePoly]:
    """Arrange nonzero polynomials so every adjacent pair is non-increasing.

    The pairwise comparison is not transitive in general (see the tests for
    an explicit 3-cycle), so a plain sort is not well defined.  Instead the
    polynomials are first arranged by the transitive :func:`presentation_key`
    and then placed one by one before the first element they are >= to; the
    result is a deterministic function of the input multiset in which every
    adjacent pair satisfies ``compare_polys(seq[i], seq[i+1]) >= 0``.
    """
    pending = sorted(polys, key=presentation_key, reverse=True)
    out: list[DegreePoly] = []
    for p in pending:
        for i, q in enumerate(out):
            if compare_polys(p, q) >= 0:
                out.insert(i, p)
                break
        else:
            out.append(p)
    return out


# -- transforms ----------------------------------------------------------------


def tensor_product(f: DegreePoly, g: DegreePoly) -> DegreePoly:
    """Tensor product: coefficient of x^t sums a_i*b_j over exponent pairs
    with i*j = t.  Zero times anything is zero."""
    if f.is_zero or g.is_zero:
        return DegreePoly.zero()
    out: dict[int, int] = {}
    for ei, ci in f:
        for ej, cj in g:
            e = ei * ej
            out[e] = out.get(e, 0) + ci * cj
    return DegreePoly(out)


def scale_exponents(f: DegreePoly, n: int) -> DegreePoly:
    """Map every exponent i to i*n, keeping coefficients."""
    if n < 1:
        raise ValueError(f"scale factor must be positive, got {n}")
    return DegreePoly({e * n: c for e, c in f})


def reflect_exponents(f: DegreePoly, n: int) -> DegreePoly:
    """Map every exponent i to n-i, keeping coefficients; needs deg(f) <= n."""
    if n < 0:
        raise ValueError(f"reflection bound must be nonnegative, got {n}")
    if f.is_zero:
        return DegreePoly.zero()
    if f.degree > n:
        raise DegreeBoundError(
            f"cannot reflect at {n}: polynomial has degree {f.degree}"
        )
    return DegreePoly({n - e: c for e, c in f})


# -- text format ----------------------------------------------------------------


def format_poly(poly: DegreePoly) -> str:
    """Render with descending exponents: ``x^3+2x^2``, ``2x``, ``3``, ``0``."""
    if poly.is_zero:
        return "0"
    parts = []
    for exponent, coefficient in poly:
        if exponent == 0:
            parts.append(str(coefficient))
            continue
        coeff_txt = "" if coefficient == 1 else str(coefficient)
        var_txt = "x" if exponent == 1 else f"x^{exponent}"
        parts.append(coeff_txt + var_txt)
    return "+".join(parts)


def parse_poly(text: str) -> DegreePoly:
    """Parse the text syntax: terms like ``2x^2``, ``x``, ``7`` joined by
    ``+``; whitespace is ignored; ``0`` is the zero polynomial."""
    i, n = 0, len(text)

    def skip_ws(i: int) -> int:
        while i < n and text[i].isspace():
            i += 1
        return i

    def read_int(i: int) -> tuple[int, int]:
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise PolyParseError("expected a number", start)
        return int(text[start:i]), i

    terms: list[tuple[int, int]] = []
    i = skip_ws(i)
    if i == n:
        raise PolyParseError("empty polynomial", i)
    while True:
        i = skip_ws(i)
        if i < n and text[i] in "-−":
            raise NegativeValueError("negative values are not allowed", i)
        coefficient = 1
        has_coeff = i < n and text[i].isdigit()
        if has_coeff:
            coefficient, i = read_int(i)
        i = skip_ws(i)
        if i < n and text[i] == "x":
            i += 1
            exponent = 1
            i = skip_ws(i)
            if i < n and text[i] == "^":
                i = skip_ws(i + 1)
                if i < n and text[i] in "-−":
                    raise NegativeValueError("negative values are not allowed", i)
                exponent, i = read_int(i)
        elif has_coeff:
            exponent = 0
        else:
            raise PolyParseError("expected a term", i)
        terms.append((exponent, coefficient))
        i = skip_ws(i)
        if i == n:
            break
        if text[i] != "+":
            raise PolyParseError(f"unexpected character {text[i]!r}", i)
        i += 1
    return DegreePoly(terms)
