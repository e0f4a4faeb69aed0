"""Truncated power series in q with exact integer coefficients.

Everything here is integer arithmetic.  Identities whose natural form has a
factor 1/2 are checked after multiplying through by 2, and the cube root of
unity never appears as a number: the product (zq;q)(z^-1 q;q) at a primitive
cube root collapses to (q^3;q^3)/(q;q), which is how :func:`dissection_G` is
assembled.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class Series:
    """Coefficients of q^0 .. q^N, where N is the precision.

    Binary operations between series of different precision return the
    smaller precision; nothing is ever extended implicitly.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], precision: int | None = None):
        c = [int(x) for x in coeffs]
        if precision is not None:
            if precision < 0:
                raise ValueError("precision must be >= 0")
            c = (c + [0] * (precision + 1 - len(c)))[: precision + 1]
        if not c:
            raise ValueError("a series needs at least the constant term")
        self._c = tuple(c)

    @classmethod
    def one(cls, precision: int) -> Series:
        return cls([1], precision)

    @classmethod
    def monomial(cls, exponent: int, precision: int, coeff: int = 1) -> Series:
        c = [0] * (precision + 1)
        if exponent <= precision:
            c[exponent] = coeff
        return cls(c)

    @property
    def precision(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._c

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.precision:
            raise IndexError(f"q^{n} is outside precision {self.precision}")
        return self._c[n]

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        head = ", ".join(map(str, self._c[:8]))
        more = ", ..." if len(self._c) > 8 else ""
        return f"Series([{head}{more}], precision={self.precision})"

    def truncate(self, precision: int) -> Series:
        if precision > self.precision:
            raise ValueError("cannot raise precision by truncation")
        return Series(self._c[: precision + 1])

    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            return other
        if isinstance(other, int):
            return Series([other], self.precision)
        return NotImplemented

    def __add__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.precision, other.precision)
        return Series([a + b for a, b in zip(self._c[: n + 1], other._c)])

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series([-a for a in self._c])

    def __sub__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Series:
        return (-self) + other

    def __mul__(self, other) -> Series:
        if isinstance(other, int):
            return Series([a * other for a in self._c])
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.precision, other.precision)
        a, b = self._c, other._c
        out = [0] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                bj = b[j]
                if bj:
                    out[i + j] += ai * bj
        return Series(out)

    __rmul__ = __mul__

    def invert(self) -> Series:
        """Multiplicative inverse; the constant term must be +1 or -1."""
        c0 = self._c[0]
        if c0 not in (1, -1):
            raise ValueError(f"constant term {c0} is not a unit")
        n = self.precision
        a = self._c
        nz = [(i, a[i]) for i in range(1, n + 1) if a[i]]
        b = [0] * (n + 1)
        b[0] = c0
        for m in range(1, n + 1):
            s = 0
            for i, ai in nz:
                if i > m:
                    break
                s += ai * b[m - i]
            b[m] = -c0 * s
        return Series(b)

    def __truediv__(self, other) -> Series:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.invert()

    def __rtruediv__(self, other) -> Series:
        return self._coerce(other) * self.invert()

    def __pow__(self, e: int) -> Series:
        if e < 0:
            return self.invert() ** (-e)
        result = Series.one(self.precision)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def substitute_pow(self, m: int) -> Series:
        """q -> q^m, keeping the same precision."""
        if m < 1:
            raise ValueError("m must be positive")
        n = self.precision
        out = [0] * (n + 1)
        for i, a in enumerate(self._c):
            if i * m > n:
                break
            out[i * m] = a
        return Series(out)


def _times_binomials(c: list[int], exponents: Iterable[int], sign: int) -> None:
    # in place: c *= prod (1 - sign*q^e)
    n = len(c) - 1
    for e in exponents:
        if e > n:
            break
        for x in range(n, e - 1, -1):
            c[x] -= sign * c[x - e]


def eta_like(m: int, N: int) -> Series:
    """(q^m; q^m)_inf truncated at q^N."""
    if m < 1:
        raise ValueError("m must be positive")
    c = [1] + [0] * N
    _times_binomials(c, range(m, N + 1, m), 1)
    return Series(c)


def pochhammer(j: int, m: int, sign: int, N: int) -> Series:
    """(sign*q^j; q^m)_inf = prod_{n>=0} (1 - sign*q^(j+nm)) truncated at q^N."""
    if j < 1 or m < 1:
        raise ValueError("j and m must be positive")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    c = [1] + [0] * N
    _times_binomials(c, range(j, N + 1, m), sign)
    return Series(c)


def lambert_pdt(N: int) -> Series:
    """sum_{k>=1} (q^k + q^2k) / (1 + q^3k), by geometric expansion."""
    c = [0] * (N + 1)
    for k in range(1, N + 1):
        sign = 1
        for start in range(0, N + 1, 3 * k):
            if start + k > N:
                break
            c[start + k] += sign
            if start + 2 * k <= N:
                c[start + 2 * k] += sign
            sign = -sign
    return Series(c)


def theta_alt(N: int) -> Series:
    """sum over all integers n of (-1)^n q^(n^2)."""
    c = [0] * (N + 1)
    c[0] = 1
    n = 1
    while n * n <= N:
        c[n * n] = 2 if n % 2 == 0 else -2
        n += 1
    return Series(c)


def pd_prefactor(N: int) -> Series:
    """(q^6;q^6) / ((q;q)(q^2;q^2)(q^3;q^3))."""
    return eta_like(6, N) / (eta_like(1, N) * eta_like(2, N) * eta_like(3, N))


def pdt_gf(N: int) -> Series:
    """Generating function of PD_t: the prefactor times the Lambert sum."""
    return pd_prefactor(N) * lambert_pdt(N)


def lambert_eta_quotient(N: int) -> Series:
    """(q^3;q^3)^6 (q^2;q^2) / ((q^6;q^6)^3 (q;q)^2), which should equal
    twice the Lambert sum plus one."""
    e1, e2, e3, e6 = (eta_like(m, N) for m in (1, 2, 3, 6))
    return e3 ** 6 * e2 / (e6 ** 3 * e1 ** 2)


def check_lambert_identity(N: int) -> bool:
    return lambert_pdt(N) * 2 + 1 == lambert_eta_quotient(N)


def check_theta_identity(N: int) -> bool:
    """(q;q)^2/(q^2;q^2) == (q;q^2)^2 (q^2;q^2) == sum (-1)^n q^(n^2)."""
    e1, e2 = eta_like(1, N), eta_like(2, N)
    lhs = e1 ** 2 / e2
    middle = pochhammer(1, 2, 1, N) ** 2 * e2
    return lhs == middle == theta_alt(N)


def dissection_G(N: int) -> Series:
    """Twice the generating function of sum_i N_dt(i,3;n) zeta^i:

    (q^3;q^3)^4/(q^6;q^6)^2 - theta / ((q^3;q^6)^2 (q^6;q^6)).
    """
    e3, e6 = eta_like(3, N), eta_like(6, N)
    first = e3 ** 4 / e6 ** 2
    second = theta_alt(N) / (pochhammer(3, 6, 1, N) ** 2 * e6)
    return first - second


class LaurentPolySeries:
    """Power series in q whose coefficients are Laurent polynomials in z,
    each stored as a dict exponent -> nonzero integer."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Sequence[dict[int, int]]):
        self._c = tuple({e: v for e, v in sorted(d.items()) if v} for d in coeffs)

    @property
    def precision(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, n: int) -> dict[int, int]:
        return dict(self._c[n])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPolySeries):
            return NotImplemented
        return self._c == other._c

    def __mul__(self, other: Series) -> LaurentPolySeries:
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.precision, other.precision)
        out: list[dict[int, int]] = [{} for _ in range(n + 1)]
        for i in range(n + 1):
            for j in range(n + 1 - i):
                b = other[j]
                if not b:
                    continue
                acc = out[i + j]
                for e, v in self._c[i].items():
                    acc[e] = acc.get(e, 0) + v * b
        return LaurentPolySeries(out)

    __rmul__ = __mul__

    def at_one(self) -> Series:
        """Specialize z = 1."""
        return Series([sum(d.values()) for d in self._c])

    def __repr__(self) -> str:
        return f"LaurentPolySeries(precision={self.precision})"


def crank_gf(N: int) -> LaurentPolySeries:
    """(q;q) / ((zq;q)(z^-1 q;q)) with q-precision N."""
    c: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(N)]
    for n in range(1, N + 1):
        for shift in (1, -1):
            # c *= 1/(1 - z^shift q^n); ascending order reuses updated terms
            for e in range(n, N + 1):
                src = c[e - n]
                if not src:
                    continue
                dst = c[e]
                for ze, v in src.items():
                    dst[ze + shift] = dst.get(ze + shift, 0) + v
    for n in range(1, N + 1):
        for e in range(N, n - 1, -1):
            src = c[e - n]
            if not src:
                continue
            dst = c[e]
            for ze, v in src.items():
                dst[ze] = dst.get(ze, 0) - v
    return LaurentPolySeries(c)
