"""Exact sparse multivariate polynomials over the rationals.

Variables live in one fixed, ordered universe::

    x < y < y1 < y2 < c_0 < c_1 < ...

``y1`` and ``y2`` are the jet coordinates standing for y' and y''; the
``c_i`` are unknowns of a linear ansatz.  A monomial is stored sparsely as a
sorted tuple of ``(variable_index, exponent)`` pairs, so polynomials in a
few jet variables and many unknowns stay small.  Coefficients are
:class:`fractions.Fraction` and zero coefficients are never stored, which
makes structural equality the same thing as polynomial equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

__all__ = [
    "JET_VARS",
    "Monomial",
    "Poly",
    "PolyError",
    "Scalar",
    "add",
    "mul",
    "pdiff",
    "prem",
    "subst",
    "unknown",
    "var_index",
    "var_name",
]

JET_VARS = ("x", "y", "y1", "y2")

Monomial = Tuple[Tuple[int, int], ...]
Scalar = Union[int, Fraction]


class PolyError(ValueError):
    pass


def var_index(name: str) -> int:
    try:
        return JET_VARS.index(name)
    except ValueError:
        pass
    if name.startswith("c_") and name[2:].isdigit():
        return len(JET_VARS) + int(name[2:])
    raise PolyError(f"unknown variable {name!r}")


def var_name(index: int) -> str:
    if index < 0:
        raise PolyError(f"negative variable index {index}")
    if index < len(JET_VARS):
        return JET_VARS[index]
    return f"c_{index - len(JET_VARS)}"


def unknown(i: int) -> "Poly":
    """The ansatz unknown ``c_i`` as a polynomial."""
    return Poly.var(len(JET_VARS) + i)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = dict(a)
    for v, e in b:
        out[v] = out.get(v, 0) + e
    return tuple(sorted(out.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _split(m: Monomial, v: int) -> Tuple[int, Monomial]:
    """Return (exponent of v, monomial with v removed)."""
    for i, (w, e) in enumerate(m):
        if w == v:
            return e, m[:i] + m[i + 1:]
    return 0, m


def _with_power(m: Monomial, v: int, e: int) -> Monomial:
    if e == 0:
        return m
    return tuple(sorted(m + ((v, e),)))


def _as_index(v: Union[str, int]) -> int:
    return var_index(v) if isinstance(v, str) else v


class Poly:
    """Immutable canonical polynomial.

    Arithmetic operators accept ints and Fractions on either side.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if c:
                    clean[m] = Fraction(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "Poly":
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls({(): c})

    @classmethod
    def var(cls, v: Union[str, int]) -> "Poly":
        return cls._raw({((_as_index(v), 1),): Fraction(1)})

    @classmethod
    def coerce(cls, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return cls.const(other)
        raise TypeError(f"cannot convert {type(other).__name__} to Poly")

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def variables(self) -> frozenset:
        """Indices of the variables that actually occur."""
        return frozenset(v for m in self._terms for v, _ in m)

    def variable_names(self) -> frozenset:
        return frozenset(var_name(v) for v in self.variables())

    def contains(self, v: Union[str, int]) -> bool:
        return _as_index(v) in self.variables()

    def degree(self, v: Union[str, int, None] = None) -> int:
        """Degree in ``v``, or total degree when ``v`` is None; -1 for zero."""
        if not self._terms:
            return -1
        if v is None:
            return max(_mono_degree(m) for m in self._terms)
        vi = _as_index(v)
        return max(_split(m, vi)[0] for m in self._terms)

    def coeff(self, v: Union[str, int], k: int) -> "Poly":
        """Coefficient of ``v**k`` as a polynomial free of ``v``."""
        vi = _as_index(v)
        out = {}
        for m, c in self._terms.items():
            e, rest = _split(m, vi)
            if e == k:
                out[rest] = c
        return Poly._raw(out)

    def leading_coeff(self, v: Union[str, int]) -> "Poly":
        return self.coeff(v, self.degree(v))

    def collect(self, keep: Iterable[Union[str, int]]) -> Dict[Monomial, "Poly"]:
        """Group terms by their monomial in the ``keep`` variables.

        The values are polynomials in the remaining variables.
        """
        keep_idx = {_as_index(v) for v in keep}
        groups: Dict[Monomial, Dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            key = tuple(p for p in m if p[0] in keep_idx)
            rest = tuple(p for p in m if p[0] not in keep_idx)
            groups.setdefault(key, {})[rest] = c
        return {k: Poly._raw(v) for k, v in groups.items()}

    def sorted_terms(self) -> list:
        """Terms in graded lexicographic order, largest first."""
        if not self._terms:
            return []
        width = max((v for m in self._terms for v, _ in m), default=-1) + 1

        def key(item):
            m = item[0]
            dense = [0] * width
            for v, e in m:
                dense[v] = e
            return (-_mono_degree(m), [-e for e in dense])

        return sorted(self._terms.items(), key=key)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Poly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Poly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly()
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolyError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- calculus and substitution ---------------------------------------

    def diff(self, v: Union[str, int]) -> "Poly":
        vi = _as_index(v)
        out = {}
        for m, c in self._terms.items():
            e, rest = _split(m, vi)
            if e:
                out[_with_power(rest, vi, e - 1)] = c * e
        return Poly._raw(out)

    def subs(self, v: Union[str, int], r: Union["Poly", Scalar]) -> "Poly":
        vi = _as_index(v)
        r = Poly.coerce(r)
        powers = {0: Poly.const(1)}
        acc: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e, rest = _split(m, vi)
            if e not in powers:
                powers[e] = r ** e
            for m2, c2 in powers[e]._terms.items():
                mm = _mono_mul(rest, m2)
                acc[mm] = acc.get(mm, 0) + c * c2
        return Poly({m: c for m, c in acc.items() if c})

    def __repr__(self):
        from .parse import print_canonical

        return f"Poly({print_canonical(self)!r})"

    def __str__(self):
        from .parse import print_canonical

        return print_canonical(self)


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def pdiff(p: Poly, v: Union[str, int]) -> Poly:
    return p.diff(v)


def subst(p: Poly, v: Union[str, int], r: Union[Poly, Scalar]) -> Poly:
    return p.subs(v, r)


def prem(g: Poly, f: Poly, v: Union[str, int]) -> Tuple[Poly, Poly, int]:
    """Pseudo-divide ``g`` by ``f`` as polynomials in ``v``.

    Returns ``(remainder, quotient, power)`` with

        lc(f)**power * g == quotient * f + remainder,   deg_v(remainder) < deg_v(f)

    where ``lc`` is the leading coefficient in ``v``.  ``power`` counts the
    elimination steps actually taken, so it never exceeds
    ``deg_v(g) - deg_v(f) + 1``.
    """
    n = f.degree(v)
    if n < 1:
        raise PolyError(f"divisor does not contain {v if isinstance(v, str) else var_name(v)}")
    vi = _as_index(v)
    lc = f.coeff(vi, n)
    r, q, power = g, Poly(), 0
    while r and r.degree(vi) >= n:
        m = r.degree(vi)
        t = r.coeff(vi, m) * Poly._raw({((vi, m - n),) if m > n else (): Fraction(1)})
        q = lc * q + t
        r = lc * r - t * f
        power += 1
    return r, q, power
