"""Resultants, integer roots and univariate Euclidean gcd."""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import VariableAbsent, ZeroPolynomial
from .polynomial import Poly, exact_divide


def resultant(p: Poly, q: Poly, var) -> Poly:
    """Res_var(p, q): determinant of the Sylvester matrix, coefficients in the other variables.

    Computed with fraction-free Bareiss elimination, so every intermediate
    division is exact in the coefficient ring.
    """
    ring = p.ring
    if isinstance(var, str):
        if var not in ring:
            raise VariableAbsent(f"{var} is not a variable of {ring}")
        i = ring.index(var)
    else:
        i = var
    if p.has_negative_exponents() or q.has_negative_exponents():
        raise ValueError("resultant needs nonnegative exponents")
    if not p or not q:
        return ring.zero
    m, n = p.degree_in(i), q.degree_in(i)
    pc, qc = p.coeffs_in(i), q.coeffs_in(i)
    if m == 0 and n == 0:
        return ring.one
    if m == 0:
        return pc[0] ** n
    if n == 0:
        return qc[0] ** m
    size = m + n
    zero = ring.zero
    rows = []
    for r in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[r + k] = pc.get(m - k, zero)
        rows.append(row)
    for r in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[r + k] = qc.get(n - k, zero)
        rows.append(row)
    return bareiss_det(rows, ring)


def bareiss_det(rows, ring) -> Poly:
    a = [list(r) for r in rows]
    size = len(a)
    sign = 1
    prev = ring.one
    for k in range(size - 1):
        if not a[k][k]:
            swap = next((r for r in range(k + 1, size) if a[r][k]), None)
            if swap is None:
                return ring.zero
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                a[r][c] = exact_divide(a[r][c] * a[k][k] - a[r][k] * a[k][c], prev)
            a[r][k] = ring.zero
        prev = a[k][k]
    det = a[size - 1][size - 1]
    return -det if sign < 0 else det


def to_coeff_list(p: Poly, var=0) -> list[Fraction]:
    """Dense coefficients (lowest degree first) of a univariate polynomial."""
    i = var if isinstance(var, int) else p.ring.index(var)
    if p.variables_used() - {i}:
        raise ValueError(f"{p} is not univariate")
    deg = p.degree_in(i)
    out = [Fraction(0)] * (deg + 1)
    for e, c in p.terms.items():
        if e[i] < 0:
            raise ValueError("negative exponent")
        out[e[i]] = c
    return out


def _trim(a):
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def euclid_gcd(a: list, b: list) -> list:
    """Monic gcd of two dense coefficient lists by the Euclidean algorithm."""
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, _dense_rem(a, b)
    if not a:
        return []
    lc = a[-1]
    return [x / lc for x in a]


def _dense_rem(a, b):
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lb
        shift = len(a) - len(b)
        for j, y in enumerate(b):
            a[shift + j] -= c * y
        a = _trim(a)
        if not a:
            break
    return a


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _root_bound(ints) -> int:
    """Fujiwara bound 2 * max |c_{n-i}/c_n|^(1/i), rounded up to a power of two."""
    n = len(ints) - 1
    lead = abs(ints[-1])
    best = 0
    for i in range(1, n + 1):
        ratio = Fraction(abs(ints[n - i]), lead)
        if i == n:
            ratio /= 2
        if not ratio:
            continue
        k = 1 << -(-math.ceil(ratio).bit_length() // i)
        best = max(best, k)
    return 2 * best


def _candidates(c0: int, bound: int) -> list[int]:
    c0 = abs(c0)
    if bound * bound < c0:
        return [d for d in range(1, bound + 1) if c0 % d == 0]
    return [d for d in _divisors(c0) if d <= bound]


def integer_roots(p: Poly) -> list[int]:
    """All distinct integer roots of a nonzero univariate rational polynomial, ascending."""
    if not p:
        raise ZeroPolynomial("every integer is a root of the zero polynomial")
    used = p.variables_used()
    if len(used) > 1:
        raise ValueError(f"{p} is not univariate")
    if not used:
        return []
    coeffs = to_coeff_list(p, next(iter(used)))
    coeffs = [Fraction(c) for c in coeffs]
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    roots = []
    low = next(k for k, c in enumerate(ints) if c)
    if low > 0:
        roots.append(0)
    ints = ints[low:]
    for d in _candidates(ints[0], _root_bound(ints)):
        for r in (d, -d):
            if _horner(ints, r) == 0:
                roots.append(r)
    return sorted(set(roots))


def _horner(coeffs, x):
    v = 0
    for c in reversed(coeffs):
        v = v * x + c
    return v
