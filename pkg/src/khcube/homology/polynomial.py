"""Laurent polynomials in one variable with integer coefficients."""

from __future__ import annotations

from collections import defaultdict


class LaurentPolynomial:
    """Finitely supported ``{exponent: coefficient}``; zeros are dropped."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        c = {}
        for e, x in dict(coeffs or {}).items():
            if x:
                c[int(e)] = int(x)
        self._c = c

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coefficient})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def pairs(self) -> list:
        """``(exponent, coefficient)`` pairs in increasing exponent order."""
        return sorted(self._c.items())

    def __getitem__(self, e):
        return self._c.get(e, 0)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other})
        out = defaultdict(int, self._c)
        for e, x in other._c.items():
            out[e] += x
        return LaurentPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -x for e, x in self._c.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: other * x for e, x in self._c.items()})
        out = defaultdict(int)
        for e, x in self._c.items():
            for f, y in other._c.items():
                out[e + f] += x * y
        return LaurentPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        base = self
        if n < 0:
            # only monomials are invertible
            if len(self._c) != 1 or next(iter(self._c.values())) not in (1, -1):
                raise ValueError(f"{self} is not invertible")
            ((e, x),) = self._c.items()
            base, n = LaurentPolynomial({-e: x}), -n
        result = LaurentPolynomial({0: 1})
        for _ in range(n):
            result = result * base
        return result

    def substitute_inverse(self) -> "LaurentPolynomial":
        """``p(q^-1)``."""
        return LaurentPolynomial({-e: x for e, x in self._c.items()})

    def __call__(self, q):
        return sum(x * q ** e for e, x in self._c.items())

    def __repr__(self):
        return f"LaurentPolynomial({self._c!r})"

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for e, x in sorted(self._c.items(), reverse=True):
            mono = "" if e == 0 else "q" if e == 1 else f"q^{e}"
            if mono and abs(x) == 1:
                coef = "-" if x < 0 else ""
            else:
                coef = str(x)
            parts.append(coef + mono)
        return " + ".join(parts).replace("+ -", "- ")


Q = LaurentPolynomial({1: 1})
