"""Dense integer polynomials in one variable q."""
from __future__ import annotations

from itertools import zip_longest


class QPolynomial:
    """Immutable polynomial with integer coefficients, lowest degree first.

    >>> q = QPolynomial.q()
    >>> p = (q - 1)**3 + q * (q - 1)
    >>> str(p), p.descending()
    ('-1 + 2*q - 2*q^2 + q^3', 'q^3 - 2q^2 + 2q - 1')
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self._hash = hash(self.coeffs)

    @classmethod
    def q(cls) -> QPolynomial:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> QPolynomial:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> QPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def q_minus_one_power(cls, k: int) -> QPolynomial:
        return cls((-1, 1)) ** k

    @staticmethod
    def _coerce(other):
        if isinstance(other, QPolynomial):
            return other
        if isinstance(other, int):
            return QPolynomial((other,))
        return NotImplemented

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QPolynomial(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = QPolynomial((1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> QPolynomial:
        """Multiply by q^k."""
        return QPolynomial((0,) * k + self.coeffs) if self.coeffs else self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    # -- inspection -------------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reverse(self, n: int) -> QPolynomial:
        """q^n P(1/q); requires n >= degree."""
        if self.degree > n:
            raise ValueError(f"degree {self.degree} exceeds {n}")
        c = self.coeffs + (0,) * (n + 1 - len(self.coeffs))
        return QPolynomial(reversed(c))

    # -- serialization -------------------------------------------------------------
    def __str__(self):
        """Canonical ascending form ``c0 + c1*q + c2*q^2``, zero terms omitted."""
        if not self.coeffs:
            return "0"
        return _render(((k, c) for k, c in enumerate(self.coeffs) if c), "*")

    def descending(self) -> str:
        """Textbook form, highest power first: ``q^3 - 2q^2 + 2q - 1``."""
        if not self.coeffs:
            return "0"
        terms = [(k, c) for k, c in enumerate(self.coeffs) if c]
        return _render(reversed(terms), "")

    def __repr__(self):
        return f"QPolynomial({str(self)!r})"

    def to_json(self) -> list[int]:
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data) -> QPolynomial:
        return cls(data)


def _render(terms, times: str) -> str:
    parts = []
    for k, c in terms:
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            var = "q" if k == 1 else f"q^{k}"
            body = var if mag == 1 else f"{mag}{times}{var}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)
