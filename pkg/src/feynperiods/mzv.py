"""Zeta values, multiple zeta values, and their exact bookkeeping.

Multiple zeta values are the nested sums

    zeta(n_1, ..., n_r) = sum over 0 < k_1 < ... < k_r of
                          1 / (k_1^{n_1} * ... * k_r^{n_r})

convergent when the last index is >= 2.  The weight is n_1 + ... + n_r and
the depth is r.

Numerical evaluation runs in ``decimal`` arithmetic: a direct partial sum
plus an Euler-Maclaurin tail whose error bound is computed term by term,
never assumed.  For depth >= 2 the truncated outer sum is completed by the
recursively evaluated lower-depth value minus its own tail, the latter
expanded as a power series in the cutoff whose coefficients again involve
lower-depth values; every series remainder carries an explicit bound, which
is what makes fourteen digits cheap for indices like (3, 5) or (2, 2).

Exact structures: Bernoulli numbers, the even-zeta evaluation
``zeta(2n) = c * pi^(2n)`` with rational c, the shuffle-free "stuffle"
product check ``zeta(m) zeta(n) = zeta(m,n) + zeta(n,m) + zeta(m+n)``, and
the encoding of an index as an iterated-integral word in the letters 0/1.

The weight-8 combination P35 is evaluated as

    P35 = -(216/5) zeta(3,5) - 81 zeta(5) zeta(3) + (522/5) zeta(8).

(The zeta(8) coefficient is sometimes quoted as 552/5; only 522/5 is
consistent with the coefficient ratio 3024/7308 = 216/522 = 12/29 that the
Galois analysis of the corresponding amplitude pins down, so 522/5 is used
here.)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache

# pi to 50 digits, for float-accurate even zeta values
_PI = Decimal("3.14159265358979323846264338327950288419716939937511")

# zeta(n) <= zeta(2) for n >= 2; used in coarse tail majorants
_ZETA2_UPPER = Decimal("1.6449340668482265")


@lru_cache(maxsize=None)
def bernoulli(n):
    """Bernoulli number B_n as an exact Fraction (B_1 = -1/2)."""
    if n < 0:
        raise ValueError("Bernoulli numbers need n >= 0")
    if n == 0:
        return Fraction(1)
    if n > 1 and n % 2:
        return Fraction(0)
    acc = Fraction(0)
    for k in range(n):
        acc += math.comb(n + 1, k) * bernoulli(k)
    return -acc / (n + 1)


def euler_even_zeta(n):
    """zeta(n) for even n as (rational coefficient of pi^n, floating value).

    The closed form ``zeta(2m) = (-1)^(m+1) B_{2m} 2^(2m-1) / (2m)! * pi^(2m)``
    gives zeta(2) = pi^2/6, zeta(4) = pi^4/90, zeta(6) = pi^6/945, ...
    """
    if n < 2 or n % 2:
        raise ValueError("euler_even_zeta needs an even index n >= 2")
    m = n // 2
    c = (-1) ** (m + 1) * bernoulli(n) * 2 ** (n - 1) / math.factorial(n)
    with localcontext() as ctx:
        ctx.prec = 40
        value = Decimal(c.numerator) / Decimal(c.denominator) * _PI ** n
    return c, float(value)


def _series_tail(n, start, terms=6):
    """(tail, bound) for ``sum_{k >= start} k^-n`` by Euler-Maclaurin.

    The correction terms alternate in sign, so the bound is the magnitude of
    the first omitted term.
    """
    k = Decimal(start)
    tail = k ** (1 - n) / (n - 1) + k ** (-n) / 2
    for j in range(1, terms + 1):
        b = bernoulli(2 * j)
        rising = 1
        for i in range(2 * j - 1):
            rising *= n + i
        coeff = Fraction(b) * rising / math.factorial(2 * j)
        tail += Decimal(coeff.numerator) / Decimal(coeff.denominator) * k ** (-(n + 2 * j - 1))
    b = bernoulli(2 * terms + 2)
    rising = 1
    for i in range(2 * terms + 1):
        rising *= n + i
    coeff = Fraction(b) * rising / math.factorial(2 * terms + 2)
    bound = abs(Decimal(coeff.numerator) / Decimal(coeff.denominator)) * k ** (
        -(n + 2 * terms + 1)
    )
    return tail, bound


def _power_tail_series(n, terms=6):
    """``sum_{k >= a} k^-n`` as a power series in 1/a with an error term.

    Returns ``(series, err)`` where the series is ``{p: c}`` meaning
    ``sum_p c * a^-p``, and ``err = (e_c, e_p)`` bounds the truncation by
    ``e_c * a^-e_p`` for every a >= 1 (first omitted Euler-Maclaurin term;
    the corrections alternate).  Symbolic counterpart of :func:`_series_tail`.
    """
    series = {n - 1: Decimal(1) / (n - 1), n: Decimal("0.5")}
    for j in range(1, terms + 1):
        b = bernoulli(2 * j)
        rising = 1
        for i in range(2 * j - 1):
            rising *= n + i
        coeff = Fraction(b) * rising / math.factorial(2 * j)
        series[n + 2 * j - 1] = Decimal(coeff.numerator) / Decimal(coeff.denominator)
    b = bernoulli(2 * terms + 2)
    rising = 1
    for i in range(2 * terms + 1):
        rising *= n + i
    coeff = abs(Fraction(b) * rising / math.factorial(2 * terms + 2))
    err = (Decimal(coeff.numerator) / Decimal(coeff.denominator), n + 2 * terms + 1)
    return series, err


def _mzv_tail_series(indices, tol):
    """Tail of the mzv sum with the outermost variable >= a, as a power series.

    For an index with all entries >= 2, writes

        R(a) = sum over k_1 < ... < k_r with k_r >= a

    as ``sum_p c_p a^-p`` plus error terms ``[(e_c, e_p), ...]`` (each
    bounding a contribution by ``e_c * a^-e_p``).  Conditioning on the
    outermost variable gives the recursion
    ``R(a) = M' * tail_{n_r}(a) - sum_{j >= a} R'(j) j^-n_r`` with M' the
    full lower-depth value, which turns lower-depth series into this one.
    """
    idx = tuple(indices)
    if idx[0] == 1 or any(n < 2 for n in idx):
        raise ValueError("tail series needs all indices >= 2")
    if len(idx) == 1:
        series, err = _power_tail_series(idx[0])
        return series, [err]

    prefix, last = idx[:-1], idx[-1]
    sub_series, sub_errs = _mzv_tail_series(prefix, tol / 2)
    sub_value, sub_bound = _mzv_decimal(prefix, tol / 2)

    series = {}
    errs = {}

    def add_series(scale, base):
        for p, c in base.items():
            series[p] = series.get(p, Decimal(0)) + scale * c

    def add_err(scale, p):
        if scale:
            errs[p] = errs.get(p, Decimal(0)) + abs(scale)

    head, head_err = _power_tail_series(last)
    add_series(sub_value, head)
    # uncertainty of M' multiplies the whole tail_{n_r} series
    for p, c in head.items():
        add_err(sub_bound * c, p)
    add_err(sub_value * head_err[0] + sub_bound * head_err[0], head_err[1])

    for p_i, c_i in sub_series.items():
        piece, piece_err = _power_tail_series(p_i + last)
        add_series(-c_i, piece)
        add_err(c_i * piece_err[0], piece_err[1])
    for e_c, e_p in sub_errs:
        piece, piece_err = _power_tail_series(e_p + last)
        for p, c in piece.items():
            add_err(e_c * c, p)
        add_err(e_c * piece_err[0], piece_err[1])
    return series, [(c, p) for p, c in sorted(errs.items())]


def _zeta_decimal(n, tol, cutoff=None):
    """(value, error bound) for zeta(n), integer n >= 2, in Decimal."""
    if cutoff is not None:
        start = max(2, int(cutoff) + 1)
    else:
        start = 16
        while _series_tail(n, start)[1] > tol / 4:
            start *= 2
            if start > 1 << 22:
                break
    partial = Decimal(0)
    one = Decimal(1)
    for k in range(start - 1, 0, -1):  # small terms first
        partial += one / Decimal(k) ** n
    tail, bound = _series_tail(n, start)
    return partial + tail, bound


def _log_power_integral(s, n, lower):
    """``integral_{lower}^inf (1 + ln x)^s x^-n dx`` exactly, s integer >= 0.

    Repeated integration by parts:
    ``L^(1-n) * sum_j C(s,j) (1+ln L)^(s-j) j! / (n-1)^(j+1)``.
    """
    big_l = Decimal(lower)
    log_l = 1 + big_l.ln()
    total = Decimal(0)
    for j in range(s + 1):
        total += (
            Decimal(math.comb(s, j))
            * log_l ** (s - j)
            * Decimal(math.factorial(j))
            / Decimal(n - 1) ** (j + 1)
        )
    return big_l ** (1 - n) * total


def _validate_indices(indices):
    idx = tuple(int(n) for n in indices)
    if not idx:
        raise ValueError("empty index")
    if any(n < 1 for n in idx):
        raise ValueError(f"indices must be positive integers: {idx}")
    if idx[-1] < 2:
        raise ValueError(f"divergent index {idx}: the last entry must be >= 2")
    return idx


def _mzv_decimal(indices, tol, cutoff=None):
    """(value, error bound) for an admissible index, in Decimal."""
    idx = _validate_indices(indices)
    depth = len(idx)
    if depth == 1:
        return _zeta_decimal(idx[0], tol, cutoff=cutoff)
    prefix, b = idx[:-1], idx[-1]
    accelerated = all(n >= 2 for n in prefix)
    ones = sum(1 for n in prefix if n == 1)

    if accelerated:
        sub_series, sub_errs = _mzv_tail_series(prefix, tol / 8)
        sub_value, sub_bound = _mzv_decimal(prefix, tol / 8)

        def tail_pieces(l):
            # the full truncated depth-(r-1) sum at k < a splits as
            # M' - R'(a); summing against a^-b turns the series for R'
            # into numeric Euler-Maclaurin tails, every piece bounded
            a = l + 1
            t_b, tb_b = _series_tail(b, a)
            corr = sub_value * t_b
            bound = sub_bound * (t_b + tb_b) + sub_value * tb_b
            for p_i, c_i in sorted(sub_series.items()):
                t_q, tb_q = _series_tail(p_i + b, a)
                corr -= c_i * t_q
                bound += abs(c_i) * tb_q
            for e_c, e_p in sub_errs:
                t_q, tb_q = _series_tail(e_p + b, a)
                bound += e_c * (t_q + tb_q)
            return corr, bound

        def bound_at(l):
            return tail_pieces(l)[1]

    else:

        def bound_at(l):
            zprod = _ZETA2_UPPER ** sum(1 for n in prefix if n >= 2)
            return zprod * _log_power_integral(ones, b, l)

    if cutoff is not None:
        big_l = max(int(cutoff), depth + 1)
    else:
        big_l = 256
        # the crude majorant needs its integrand decreasing past the cutoff
        while big_l <= max(256, math.ceil(math.exp(ones / b))):
            big_l *= 2
        while bound_at(big_l) > tol / 2 and big_l < 1 << 21:
            big_l *= 2
        if bound_at(big_l) > tol:
            raise ValueError(
                f"cannot certify the requested accuracy for {idx}: "
                f"truncation bound {float(bound_at(big_l)):.2e} at cutoff {big_l}"
            )

    one = Decimal(1)
    sums = [Decimal(0)] * (depth + 1)
    exponents = list(idx)
    for l in range(1, big_l + 1):
        dl = Decimal(l)
        powers = {n: one / dl ** n for n in set(exponents)}
        for i in range(depth, 1, -1):
            s_prev = sums[i - 1]
            if s_prev:
                sums[i] += s_prev * powers[exponents[i - 1]]
        sums[1] += powers[exponents[0]]
    value = sums[depth]

    if accelerated:
        corr, bound = tail_pieces(big_l)
        value += corr
    else:
        bound = bound_at(big_l)
    return value, bound


def _digits_to_tol(target_digits):
    if target_digits < 1:
        raise ValueError("target_digits must be >= 1")
    return Decimal(1).scaleb(-int(target_digits)) / 2


def zeta(n, target_digits=12):
    """zeta(n) for integer n >= 2, accurate to ``target_digits`` decimals."""
    n = int(n)
    if n < 2:
        raise ValueError("zeta(n) needs n >= 2")
    with localcontext() as ctx:
        ctx.prec = target_digits + 15
        value, _ = _zeta_decimal(n, _digits_to_tol(target_digits))
    return float(value)


def mzv(indices, target_digits=12):
    """Multiple zeta value of an admissible index tuple, as a float.

    Raises when the requested accuracy cannot be certified: an index
    containing a 1 converges too slowly for the implemented tail bounds
    beyond a few digits, while indices with all entries >= 2 reach
    14 digits comfortably.
    """
    value, _ = mzv_with_error(indices, target_digits)
    return float(value)


def mzv_with_error(indices, target_digits=12, cutoff=None):
    """(value, certified error bound) as Decimals.

    ``cutoff`` pins the outer truncation point instead of choosing it from
    the accuracy target; the returned bound then reports what that cutoff
    actually certifies.  Intended for convergence diagnostics.
    """
    with localcontext() as ctx:
        ctx.prec = target_digits + 15
        value, bound = _mzv_decimal(indices, _digits_to_tol(target_digits), cutoff=cutoff)
        # rounding slack: the partial sums do O(depth * cutoff) operations
        slack = Decimal(len(tuple(indices)) * 4) * Decimal(10) ** (7 - ctx.prec)
        return +value, +(bound + slack)


def stuffle_check(m, n, tol=1e-10):
    """Check ``zeta(m) zeta(n) = zeta(m,n) + zeta(n,m) + zeta(m+n)`` numerically.

    The identity is the shuffle of the two defining sums: split the double
    sum over (j, k) into j < k, j > k, and the diagonal j = k.
    """
    if m < 2 or n < 2:
        raise ValueError("stuffle check needs both indices >= 2")
    digits = max(6, int(-math.log10(tol)) + 3)
    with localcontext() as ctx:
        ctx.prec = digits + 15
        zm, _ = _zeta_decimal(m, _digits_to_tol(digits))
        zn, _ = _zeta_decimal(n, _digits_to_tol(digits))
        lhs = zm * zn
        rhs = (
            _mzv_decimal((m, n), _digits_to_tol(digits))[0]
            + _mzv_decimal((n, m), _digits_to_tol(digits))[0]
            + _zeta_decimal(m + n, _digits_to_tol(digits))[0]
        )
        return abs(lhs - rhs) <= Decimal(str(tol))


@dataclass(frozen=True)
class IteratedIntegralWord:
    """Iterated-integral encoding of an admissible index.

    ``letters`` spells the forms dx/x (letter 0) and dx/(1-x) (letter 1)
    left to right; the word for (n_1, ..., n_r) is
    ``1 0^(n_1 - 1) 1 0^(n_2 - 1) ... 1 0^(n_r - 1)`` with overall sign
    (-1)^r.  The word length equals the weight.
    """

    sign: int
    letters: tuple[int, ...]

    @property
    def weight(self):
        return len(self.letters)


def iterated_integral_word(indices):
    idx = _validate_indices(indices)
    letters = []
    for n in idx:
        letters.append(1)
        letters.extend([0] * (n - 1))
    return IteratedIntegralWord(sign=(-1) ** len(idx), letters=tuple(letters))


def p35(target_digits=12):
    """The weight-8 combination -(216/5) zeta(3,5) - 81 zeta(5) zeta(3) + (522/5) zeta(8)."""
    with localcontext() as ctx:
        ctx.prec = target_digits + 15
        tol = _digits_to_tol(target_digits + 2)
        z35, _ = _mzv_decimal((3, 5), tol)
        z5, _ = _zeta_decimal(5, tol)
        z3, _ = _zeta_decimal(3, tol)
        z8, _ = _zeta_decimal(8, tol)
        value = (
            Decimal(-216) / 5 * z35 - 81 * z5 * z3 + Decimal(522) / 5 * z8
        )
    return float(value)


def p35_period(target_digits=12):
    """``32 * P35``: the parametric period this combination multiplies at six loops."""
    return 32 * p35(target_digits)
