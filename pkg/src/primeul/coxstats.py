"""Statistics on (signed) permutations and the type-specific formulas.

Permutations are tuples in one-line notation over 1..n; signed permutations
are window tuples w_1..w_n with entries in {-n..-1, 1..n} whose absolute
values form a permutation (w(-i) = -w(i) implicitly).  Indexing convention
for the classical families: eulerian_a(m) is the descent polynomial of the
symmetric group on m letters, so that peul_a(m) = z * eulerian_a(m - 1) is
the polynomial of the braid arrangement in R^m for m >= 2.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from math import comb

from .egf import DEFAULT_ORDER, TruncatedEgf, egf_exp, egf_log, egf_sqrt
from .intpoly import IntPoly, ONE, Z, ZERO

# ---------------------------------------------------------------------------
# element generation

def all_permutations(n: int):
    return permutations(range(1, n + 1))


def all_signed(n: int):
    for p in permutations(range(1, n + 1)):
        for signs in product((1, -1), repeat=n):
            yield tuple(s * x for s, x in zip(signs, p))


def all_even_signed(n: int):
    for w in all_signed(n):
        if sum(1 for x in w if x < 0) % 2 == 0:
            yield w


def signed_cycles(w):
    """Orbits of w on {-n..-1, 1..n}, each orbit a frozenset."""
    n = len(w)

    def image(i: int) -> int:
        return w[i - 1] if i > 0 else -w[-i - 1]

    seen = set()
    out = []
    for start in range(1, n + 1):
        for s in (start, -start):
            if s in seen:
                continue
            orbit = set()
            i = s
            while i not in orbit:
                orbit.add(i)
                i = image(i)
            seen |= orbit
            out.append(frozenset(orbit))
    return out


def is_balanced_cycle(orbit: frozenset) -> bool:
    return orbit == frozenset(-x for x in orbit)


def cuspidal_sn(n: int):
    """Long cycles of the symmetric group: (n-1)! of them."""
    for w in all_permutations(n):
        seen = [False] * (n + 1)
        i, length = 1, 0
        while not seen[i]:
            seen[i] = True
            length += 1
            i = w[i - 1]
        if length == n:
            yield w


def cuspidal_bn(n: int):
    """Signed permutations whose cycle decomposition is all balanced."""
    for w in all_signed(n):
        if all(is_balanced_cycle(c) for c in signed_cycles(w)):
            yield w


# ---------------------------------------------------------------------------
# statistics

def des_a(w) -> int:
    """Descents of the window read as a word: positions with w_i > w_{i+1}."""
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def des_b(w) -> int:
    """Coxeter descents of a signed permutation: prepend w(0) = 0."""
    return des_a(w) + (1 if w[0] < 0 else 0)


def des_d(w) -> int:
    """Coxeter descents of an even signed permutation: w(0) = -w(2)."""
    if len(w) < 2:
        raise ValueError("type D needs n >= 2")
    return des_a(w) + (1 if -w[1] > w[0] else 0)


def exc(w) -> int:
    """Excedances of an ordinary permutation: positions with w(i) > i."""
    return sum(1 for i in range(1, len(w)) if w[i - 1] > i)


def exc_a(w) -> int:
    """Excedances of the window as a signed word."""
    return sum(1 for i in range(1, len(w)) if w[i - 1] > i)


def fneg(w) -> int:
    return sum(1 for x in w if x < 0)


def fexc(w) -> int:
    return 2 * exc_a(w) + fneg(w)


def exc_b(w) -> int:
    return (fexc(w) + 1) // 2


def _rtl_max_positions(absw) -> list[int]:
    """Positions of the right-to-left maxima of a word of distinct values."""
    out = []
    best = 0
    for i in range(len(absw) - 1, -1, -1):
        if absw[i] > best:
            best = absw[i]
            out.append(i)
    return out


def bw_a(n: int):
    """Permutations with first letter n."""
    for rest in permutations(range(1, n)):
        yield (n,) + rest


def bw_b(n: int):
    """Signed permutations whose right-to-left maxima (of |w|) are negative."""
    for w in all_signed(n):
        absw = tuple(abs(x) for x in w)
        if all(w[i] < 0 for i in _rtl_max_positions(absw)):
            yield w


def bw_d(n: int):
    """Even signed permutations with negative right-to-left maxima, |w_1| != n."""
    if n < 2:
        raise ValueError("type D needs n >= 2")
    for w in all_even_signed(n):
        if abs(w[0]) == n:
            continue
        absw = tuple(abs(x) for x in w)
        if all(w[i] < 0 for i in _rtl_max_positions(absw)):
            yield w


def _distribution(stat, elements) -> IntPoly:
    counts: dict[int, int] = {}
    for w in elements:
        k = stat(w)
        counts[k] = counts.get(k, 0) + 1
    if not counts:
        return ZERO
    out = [0] * (max(counts) + 1)
    for k, c in counts.items():
        out[k] = c
    return IntPoly(tuple(out))


def peul_a_exc(n: int) -> IntPoly:
    return _distribution(exc, cuspidal_sn(n))


def peul_b_excb(n: int) -> IntPoly:
    return _distribution(exc_b, cuspidal_bn(n))


def peul_a_des(n: int) -> IntPoly:
    return _distribution(des_a, bw_a(n))


def peul_b_des(n: int) -> IntPoly:
    return _distribution(des_b, bw_b(n))


def peul_d_des(n: int) -> IntPoly:
    return _distribution(des_d, bw_d(n))


# ---------------------------------------------------------------------------
# Eulerian polynomials and the recursions

@lru_cache(maxsize=None)
def eulerian_a(n: int) -> IntPoly:
    """Descent polynomial of the symmetric group on n letters.

    E_n = (1 + (n-1) z) E_{n-1} + z (1-z) E_{n-1}', with E_0 = 1.
    """
    if n < 0:
        raise ValueError("n >= 0 required")
    e = ONE
    for m in range(1, n + 1):
        e = (ONE + (m - 1) * Z) * e + Z * (ONE - Z) * e.derivative()
    return e


@lru_cache(maxsize=None)
def eulerian_b(n: int) -> IntPoly:
    """Descent polynomial of the group of signed permutations of n letters.

    E_n = (1 + (2n-1) z) E_{n-1} + 2 z (1-z) E_{n-1}', with E_0 = 1.
    """
    if n < 0:
        raise ValueError("n >= 0 required")
    e = ONE
    for m in range(1, n + 1):
        e = (ONE + (2 * m - 1) * Z) * e + 2 * Z * (ONE - Z) * e.derivative()
    return e


@lru_cache(maxsize=None)
def peul_a(n: int) -> IntPoly:
    """Polynomial of the rank n-1 braid arrangement: z * eulerian_a(n-1)."""
    if n < 0:
        raise ValueError("n >= 0 required")
    if n <= 1:
        return ONE
    return Z * eulerian_a(n - 1)


@lru_cache(maxsize=None)
def peul_b_rec(n: int) -> IntPoly:
    """Quadratic recursion for the type B polynomials:

    P_n = z P_{n-1} + sum_{k=1}^{n-1} C(n-1, k) 2^k P_{n-1-k} peul_a(k+1).
    """
    if n < 0:
        raise ValueError("n >= 0 required")
    table = [ONE]
    for m in range(1, n + 1):
        acc = Z * table[m - 1]
        for k in range(1, m):
            acc = acc + comb(m - 1, k) * 2 ** k * table[m - 1 - k] * peul_a(k + 1)
        table.append(acc)
    return table[n]


@lru_cache(maxsize=None)
def peul_b_diffrec(n: int) -> IntPoly:
    """Differential recursion P_n = (2n-1) z P_{n-1} + 2 z (1-z) P_{n-1}'."""
    if n < 0:
        raise ValueError("n >= 0 required")
    p = ONE
    for m in range(1, n + 1):
        p = (2 * m - 1) * Z * p + 2 * Z * (ONE - Z) * p.derivative()
    return p


@lru_cache(maxsize=None)
def peul_d_rec(n: int) -> IntPoly:
    """Quadratic recursion for type D, with P_0 = 1 and P_1 = 0:

    P_n = (z-1)^2 P^B_{n-2} + sum_{k=0}^{n-2} C(n-2, k) 2^k (
          (z-1) P_{n-2-k} peul_a(k+1) + 2 P_{n-1-k} peul_a(k+1)
          + P_{n-2-k} peul_a(k+2)).
    """
    if n < 0:
        raise ValueError("n >= 0 required")
    zm1 = Z - ONE
    table = [ONE, ZERO]
    for m in range(2, n + 1):
        acc = zm1 ** 2 * peul_b_rec(m - 2)
        for k in range(m - 1):
            c = comb(m - 2, k) * 2 ** k
            acc = acc + c * (zm1 * table[m - 2 - k] * peul_a(k + 1)
                             + 2 * table[m - 1 - k] * peul_a(k + 1)
                             + table[m - 2 - k] * peul_a(k + 2))
        table.append(acc)
    return table[n]


def peul_dnk(n: int, k: int) -> IntPoly:
    """P of type D with k coordinate hyperplanes added:

    P_{D_{n,k}} = P_{D_n} + k z^n P^B_{n-1}(1/z),

    the reversal being z times the coefficient-reverse of P^B_{n-1}.
    Uses the convention P_{D_1} = 0, so the k = 0, n = 1 value is the
    convention's 0 rather than the polynomial of the empty arrangement.
    """
    if n < 1 or not 0 <= k <= n:
        raise ValueError("need n >= 1 and 0 <= k <= n")
    out = peul_d_rec(n)
    if k:
        out = out + k * peul_b_rec(n - 1).reverse(n - 1) * Z
    return out


# ---------------------------------------------------------------------------
# 2-inversion sequences

def inversion_sequences_2(n: int):
    """All integer sequences with 0 <= e_i <= 2(i-1)."""
    return product(*(range(2 * i + 1) for i in range(n)))


def asc_2(e) -> int:
    """Ascents of a 2-inversion sequence: e_i/(2i-1) < e_{i+1}/(2i+1),
    compared exactly by cross-multiplication."""
    return sum(1 for i in range(len(e) - 1)
               if e[i] * (2 * i + 3) < e[i + 1] * (2 * i + 1))


def half_eulerian(n: int) -> IntPoly:
    """Ascent distribution over all (2n-1)!! 2-inversion sequences."""
    if n < 0:
        raise ValueError("n >= 0 required")
    return _distribution(asc_2, inversion_sequences_2(n))


# ---------------------------------------------------------------------------
# identities

def binomial_identity_checks(nmax: int) -> bool:
    """Both convolution identities up to nmax:

    sum_k C(n,k) E^B_k E^B_{n-k} = 2^n eulerian_a(n+1)  and the same shape
    with the primitive polynomials: sum = 2^n peul_a(n+1).
    """
    for n in range(nmax + 1):
        lhs_e = ZERO
        lhs_p = ZERO
        for k in range(n + 1):
            c = comb(n, k)
            lhs_e = lhs_e + c * eulerian_b(k) * eulerian_b(n - k)
            lhs_p = lhs_p + c * peul_b_rec(k) * peul_b_rec(n - k)
        if lhs_e != 2 ** n * eulerian_a(n + 1):
            return False
        if lhs_p != 2 ** n * peul_a(n + 1):
            return False
    return True


def eulerian_egf(order: int = DEFAULT_ORDER) -> TruncatedEgf:
    """The series A(z, x) with coefficient eulerian_a(n) at x^n/n!."""
    return TruncatedEgf.from_polys([eulerian_a(n) for n in range(order + 1)], order)


def generating_function_check(order: int = DEFAULT_ORDER) -> bool:
    """Coefficientwise check of the three closed-form generating series:

      type A: 1 + log A(z, x)
      type B: exp(x(z-1)) A(z, 2x)^(1/2)
      type D: (exp(x(z-1)) - z x) A(z, 2x)^(1/2)

    against peul_a, peul_b_rec and peul_d_rec for all n <= order.
    """
    A = eulerian_egf(order)
    exp_zm1 = egf_exp(TruncatedEgf.x_times(Z - ONE, order))
    sqrt_a2 = egf_sqrt(A.scale_x(2))
    type_a = TruncatedEgf.constant(1, order) + egf_log(A)
    type_b = exp_zm1 * sqrt_a2
    type_d = (exp_zm1 - TruncatedEgf.x_times(Z, order)) * sqrt_a2
    for n in range(order + 1):
        if type_a.coeff_intpoly(n) != peul_a(n):
            return False
        if type_b.coeff_intpoly(n) != peul_b_rec(n):
            return False
        if type_d.coeff_intpoly(n) != peul_d_rec(n):
            return False
    return True
