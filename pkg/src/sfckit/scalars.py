"""Exact arithmetic in cyclotomic fields Q(zeta_n).

Values are represented by rational coefficient vectors in the power basis
1, z, ..., z^(phi(n)-1) of Q[z]/Phi_n(z), where Phi_n is the n-th cyclotomic
polynomial.  Phi_n is irreducible over Q, so every nonzero value is
invertible.  All coefficients are fractions.Fraction; there is no floating
point anywhere.   Values are immutable and safe to share between workers.

Two values are equal iff they agree after promoting both into Q(zeta_m) for
m = lcm of their orders.  Hashing reduces to the conductor (the least order
containing the value), so equal values hash equal regardless of the order
they were built at.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _polydiv_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (low degree first); den monic, remainder 0."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            out[i - dd] = c
            for j in range(dd + 1):
                num[i - dd + j] -= c * den[j]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, low degree first, monic."""
    if n < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {n}")
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    for d in _divisors(n):
        if d < n:
            num = _polydiv_exact(num, cyclotomic_polynomial(d))
    return tuple(num)


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[tuple[int, ...], ...]:
    """z^k mod Phi_n for 0 <= k <= max(2*phi-2, n-1), as integer vectors."""
    poly = cyclotomic_polynomial(n)
    phi = len(poly) - 1
    kmax = max(2 * phi - 2, n - 1, 0)
    cur = [0] * phi
    cur[0] = 1
    rows = [tuple(cur)]
    for _ in range(kmax):
        top = cur[phi - 1]
        cur = [0] + cur[: phi - 1]
        if top:
            for i in range(phi):
                cur[i] -= top * poly[i]
        rows.append(tuple(cur))
    return tuple(rows)


def _solve_exact(columns: list[tuple[int, ...]], target: tuple[Fraction, ...]):
    """Solve sum_k c_k * columns[k] = target over Q; None if inconsistent."""
    ncols = len(columns)
    rows = [[Fraction(col[i]) for col in columns] + [target[i]] for i in range(len(target))]
    pivot_of_col = [-1] * ncols
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivot_of_col[c] = r
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols]:
            return None
    sol = [Fraction(0)] * ncols
    for c in range(ncols):
        if pivot_of_col[c] >= 0:
            sol[c] = rows[pivot_of_col[c]][ncols]
    return sol


class Cyclotomic:
    """An element of Q(zeta_n), in canonical reduced form for its order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs):
        phi = euler_phi(order)
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != phi:
            raise ValueError(f"order {order} needs {phi} coefficients, got {len(cs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", cs)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic values are immutable")

    def __reduce__(self):
        return (Cyclotomic, (self.order, self.coeffs))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(q) -> "Cyclotomic":
        return Cyclotomic(1, (Fraction(q),))

    @staticmethod
    def zeta(n: int, k: int = 1) -> "Cyclotomic":
        if n < 1:
            raise ValueError(f"root-of-unity order must be >= 1, got {n}")
        row = _power_table(n)[k % n]
        return Cyclotomic(n, row)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        if not any(self.coeffs[1:]):
            return True
        return self.canonical().order == 1

    def rational_value(self) -> Fraction:
        c = self.canonical()
        if c.order != 1:
            raise ValueError(f"{self!r} is not rational")
        return c.coeffs[0]

    def _promoted_coeffs(self, m: int) -> list[Fraction]:
        if m == self.order:
            return list(self.coeffs)
        step = m // self.order
        table = _power_table(m)
        out = [Fraction(0)] * euler_phi(m)
        for k, c in enumerate(self.coeffs):
            if c:
                for i, r in enumerate(table[k * step]):
                    if r:
                        out[i] += c * r
        return out

    def promote(self, m: int) -> "Cyclotomic":
        """Embed into Q(zeta_m); m must be a multiple of the order."""
        if m % self.order:
            raise ValueError(f"cannot promote order {self.order} to non-multiple {m}")
        return Cyclotomic(m, self._promoted_coeffs(m))

    def canonical(self) -> "Cyclotomic":
        """Equivalent value at its conductor (least possible order)."""
        order, coeffs = self.order, tuple(self.coeffs)
        changed = True
        while changed and order > 1:
            changed = False
            for p in _prime_factors(order):
                d = order // p
                step = order // d
                table = _power_table(order)
                cols = [table[k * step] for k in range(euler_phi(d))]
                sol = _solve_exact(cols, coeffs)
                if sol is not None:
                    order, coeffs = d, tuple(sol)
                    changed = True
                    break
        return Cyclotomic(order, coeffs)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic(1, (Fraction(x),))
        return None

    def _aligned(self, other: "Cyclotomic"):
        if self.order == other.order:
            return self.order, list(self.coeffs), list(other.coeffs)
        m = lcm(self.order, other.order)
        return m, self._promoted_coeffs(m), other._promoted_coeffs(m)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m, a, b = self._aligned(other)
        return Cyclotomic(m, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        m, a, b = self._aligned(other)
        return Cyclotomic(m, [x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other.__sub__(self)

    def __neg__(self):
        return Cyclotomic(self.order, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.order == 1:
            q = self.coeffs[0]
            return Cyclotomic(other.order, [q * c for c in other.coeffs])
        if other.order == 1:
            q = other.coeffs[0]
            return Cyclotomic(self.order, [q * c for c in self.coeffs])
        m, a, b = self._aligned(other)
        phi = euler_phi(m)
        conv = [Fraction(0)] * (2 * phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        out = conv[:phi]
        table = _power_table(m)
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                for i, r in enumerate(table[k]):
                    if r:
                        out[i] += c * r
        return Cyclotomic(m, out)

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        if self.order == 1:
            return Cyclotomic(1, (1 / self.coeffs[0],))
        # extended Euclid in Q[z] against the (irreducible) Phi_n
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = phi_poly, list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def deg(p):
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        while deg(r1) > 0:
            q = [Fraction(0)] * (deg(r0) - deg(r1) + 1)
            rem = list(r0)
            for i in range(deg(r0), deg(r1) - 1, -1):
                if rem[i]:
                    f = rem[i] / r1[deg(r1)]
                    q[i - deg(r1)] = f
                    for j in range(deg(r1) + 1):
                        rem[i - deg(r1) + j] -= f * r1[j]
            new_s = list(s0) + [Fraction(0)] * max(0, len(q) + len(s1) - 1 - len(s0))
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        if sc:
                            new_s[i + j] -= qc * sc
            r0, r1 = r1, rem
            s0, s1 = s1, new_s
        if deg(r1) != 0:
            raise ZeroDivisionError("division by zero in cyclotomic field")
        c = r1[deg(r1)]
        inv = [x / c for x in s1]
        # reduce mod Phi_n back into the basis
        phi = euler_phi(self.order)
        out = [Fraction(0)] * phi
        table = _power_table(self.order)
        for k, x in enumerate(inv):
            if x:
                if k < phi:
                    out[k] += x
                else:
                    for i, r in enumerate(table[k]):
                        if r:
                            out[i] += x * r
        return Cyclotomic(self.order, out)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.inverse() ** (-e)
        acc = Cyclotomic.rational(1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base if e > 1 else base
            e >>= 1
        return acc

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.order == other.order:
            return self.coeffs == other.coeffs
        m, a, b = self._aligned(other)
        return a == b

    def __bool__(self):
        return not self.is_zero()

    def __hash__(self):
        c = self.canonical()
        return hash((c.order, c.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self})"

    def __str__(self):
        c = self.canonical()
        if c.order == 1:
            return str(c.coeffs[0])
        terms = []
        for k, q in enumerate(c.coeffs):
            if not q:
                continue
            if k == 0:
                terms.append(str(q))
                continue
            z = f"z{c.order}" if k == 1 else f"z{c.order}^{k}"
            if q == 1:
                terms.append(z)
            elif q == -1:
                terms.append(f"-{z}")
            else:
                terms.append(f"{q}*{z}")
        return " + ".join(terms).replace("+ -", "- ")


ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)
MINUS_ONE = Cyclotomic.rational(-1)


def root_of_unity(n: int, k: int) -> Cyclotomic:
    """zeta_n^k; root_of_unity(n, k)**n == 1."""
    return Cyclotomic.zeta(n, k)


def minus_one_pow(x: int) -> Cyclotomic:
    """(-1)^x for a parity bit x."""
    if x not in (0, 1):
        raise ValueError(f"parity bit must be 0 or 1, got {x}")
    return MINUS_ONE if x else ONE
