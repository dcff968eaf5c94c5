"""Closed-form Laplace-Beltrami action on trace polynomials over SO(N).

Base formulas, with D the group Laplacian for the Frobenius metric:

* ``D p_1   = -(N-1)/2 p_1``
* ``D p_m   = m(1+(-1)^m)/4 p_0 + m sum_{i=0}^{floor((m-1)/2)} p_{m-2i}
  - m(N+1)/2 p_m - m/2 sum_{j=1}^{m-1} p_j p_{m-j}``          (m >= 2)
* ``D p_1^q = -((N-1) q p_1^q + q(q-1)(p_2 - N) p_1^{q-2}) / 2``  (q >= 2)
* ``2 <grad p_m, grad p_m'> = m m' (p_{m-m'} - p_{m+m'})``        (m >= m')

A general monomial is assembled through the Riemannian product rule,
splitting off the p_1-power factor the way the small worked cases group
their terms.  No output term ever exceeds the input degree, which is what
makes the flag of spaces invariant and the restricted operator block
triangular.

The SO(3) and SO(4) fast paths below are separate closed forms, kept
independent of the general assembly so the two derivations can cross-check
each other:

* SO(3), trace basis:  ``D p_m = m(m-1)/2 p_0 - m sum_{j<m} p_j - m(m+1)/2 p_m``
* SO(3), power basis:  ``D p_1^j = -(j(j+1)/2) p_1^j + j(j-1) p_1^{j-1}
  + (3/2) j(j-1) p_1^{j-2}``
* SO(4): the reduced form of ``D (p_1^l p_2^m)`` in p_1, p_2, with vanishing
  combinatorial prefactors guarding the small l, m cases.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .npoly import NPoly
from .partitions import EMPTY, Partition
from .tracepoly import GENERAL, SO3, SO4, GroupMode, TracePoly

_N = NPoly.var()


def _ones(count: int) -> Partition:
    return Partition((1,) * count) if count else EMPTY


@lru_cache(maxsize=None)
def lap_pm(m: int) -> TracePoly:
    """Laplacian of the power-sum trace p_m, dimension kept symbolic."""
    if m < 0:
        raise ValueError("power index must be nonnegative")
    if m == 0:
        return TracePoly.zero(GENERAL)
    if m == 1:
        return TracePoly.monomial(Partition((1,)), (_N - 1) * Fraction(-1, 2), GENERAL)
    terms: dict[Partition, NPoly] = {}

    def add(part: Partition, coeff) -> None:
        terms[part] = terms.get(part, NPoly(0)) + coeff

    add(EMPTY, _N * Fraction(m * (1 + (-1) ** m), 4))
    for i in range((m - 1) // 2 + 1):
        add(Partition((m - 2 * i,)), NPoly(m))
    add(Partition((m,)), (_N + 1) * Fraction(-m, 2))
    for j in range(1, m):
        add(Partition.of(j, m - j), NPoly(Fraction(-m, 2)))
    return TracePoly(terms, GENERAL)


@lru_cache(maxsize=None)
def lap_p1_pow(q: int) -> TracePoly:
    """Laplacian of the pure power p_1^q, dimension kept symbolic."""
    if q < 0:
        raise ValueError("exponent must be nonnegative")
    if q == 0:
        return TracePoly.zero(GENERAL)
    if q == 1:
        return lap_pm(1)
    terms = {
        _ones(q): (_N - 1) * Fraction(-q, 2),
        Partition.of(2, *(1,) * (q - 2)): NPoly(Fraction(-q * (q - 1), 2)),
        _ones(q - 2): _N * Fraction(q * (q - 1), 2),
    }
    return TracePoly(terms, GENERAL)


def grad_inner_pm(m: int, mp: int) -> TracePoly:
    """Tangential-gradient inner product <grad p_m, grad p_m'> on SO(N)."""
    if m < 0 or mp < 0:
        raise ValueError("indices must be nonnegative")
    if m < mp:
        m, mp = mp, m
    if mp == 0:
        return TracePoly.zero(GENERAL)
    half = Fraction(m * mp, 2)
    terms: dict[Partition, NPoly] = {}
    if m == mp:
        terms[EMPTY] = _N * half
    else:
        terms[Partition((m - mp,))] = NPoly(half)
    terms[Partition((m + mp,))] = NPoly(-half)
    return TracePoly(terms, GENERAL)


def _lap_product(parts: tuple[int, ...]) -> TracePoly:
    """Plain product-rule assembly over the factors p_{m_i}."""
    out = TracePoly.zero(GENERAL)
    for i, mi in enumerate(parts):
        rest = Partition.of(*(parts[:i] + parts[i + 1:]))
        out = out + TracePoly.monomial(rest, 1, GENERAL) * lap_pm(mi)
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            rest = Partition.of(*(parts[:i] + parts[i + 1:j] + parts[j + 1:]))
            out = out + TracePoly.monomial(rest, 2, GENERAL) * grad_inner_pm(parts[i], parts[j])
    return out


@lru_cache(maxsize=None)
def lap_partition(partition: Partition) -> TracePoly:
    """Laplacian of the trace monomial indexed by ``partition``.

    Splits into three cases: all parts >= 2 (direct product rule), all parts
    equal to 1 (the p_1-power formula), and the mixed case, where the
    p_1-power factor is peeled off and the cross term uses the closed
    gradient pairing of p_{m_i} against p_1^q.
    """
    parts = partition.parts
    s = len(parts)
    if s == 0:
        return TracePoly.zero(GENERAL)
    r = sum(1 for p in parts if p >= 2)
    if r == 0:
        return lap_p1_pow(s)
    if r == s:
        return _lap_product(parts)
    big = parts[:r]
    q = s - r
    big_poly = TracePoly.monomial(Partition(big), 1, GENERAL)
    ones_poly = TracePoly.monomial(_ones(q), 1, GENERAL)
    out = _lap_product(big) * ones_poly + big_poly * lap_p1_pow(q)
    ones_less = TracePoly.monomial(_ones(q - 1), 1, GENERAL)
    for i, mi in enumerate(big):
        rest = TracePoly.monomial(Partition.of(*(big[:i] + big[i + 1:])), 1, GENERAL)
        bracket = TracePoly.power_sum(mi - 1, GENERAL) - TracePoly.power_sum(mi + 1, GENERAL)
        out = out + rest * ones_less * bracket * Fraction(mi * q)
    return out


def lap_partition_product_rule(partition: Partition) -> TracePoly:
    """Same operator, assembled term by term from the plain product rule.

    Kept as an independent route so the grouped assembly above can be
    cross-checked exactly.
    """
    if not partition.parts:
        return TracePoly.zero(GENERAL)
    return _lap_product(partition.parts)


@lru_cache(maxsize=None)
def so3_lap_power(j: int) -> TracePoly:
    """Laplacian of p_1^j on SO(3), already reduced to powers of p_1."""
    if j < 0:
        raise ValueError("exponent must be nonnegative")
    if j == 0:
        return TracePoly.zero(SO3)
    if j == 1:
        return TracePoly.monomial(Partition((1,)), -1, SO3)
    return TracePoly(
        {
            _ones(j): Fraction(-j * (j + 1), 2),
            _ones(j - 1): Fraction(j * (j - 1)),
            _ones(j - 2): Fraction(3 * j * (j - 1), 2),
        },
        SO3,
    )


def so3_lap_pm_btrace(m: int) -> dict[int, Fraction]:
    """Column of the SO(3) Laplacian on p_m in the trace basis {p_0, ..., p_k}.

    Maps basis index to coordinate: m(m-1)/2 on p_0, -m on every p_j with
    1 <= j < m, and -m(m+1)/2 on p_m.
    """
    if m < 0:
        raise ValueError("index must be nonnegative")
    if m == 0:
        return {}
    if m == 1:
        return {1: Fraction(-1)}
    col = {0: Fraction(m * (m - 1), 2), m: Fraction(-m * (m + 1), 2)}
    for j in range(1, m):
        col[j] = Fraction(-m)
    return col


@lru_cache(maxsize=None)
def so4_lap_monomial(l: int, m: int) -> TracePoly:
    """Laplacian of p_1^l p_2^m on SO(4), reduced to the p_1, p_2 generators."""
    if l < 0 or m < 0:
        raise ValueError("exponents must be nonnegative")
    p1 = TracePoly.power_sum(1, SO4)
    p2 = TracePoly.power_sum(2, SO4)

    def mono(a: int, b: int) -> TracePoly:
        return TracePoly.monomial(Partition.of(*([2] * b + [1] * a)), 1, SO4)

    out = TracePoly.zero(SO4)
    if m >= 2:
        square = p1 * p1 - 4
        out = out + mono(l, m - 2) * square * square * (m * (m - 1))
    if m >= 1:
        out = out + mono(l, m - 1) * (p1 * p1 * (l - 2 * m + 1) + (4 - 4 * l)) * m
    if l >= 2:
        out = out + mono(l - 2, m) * (p2 - 4) * Fraction(-l * (l - 1), 2)
    return out + mono(l, m) * Fraction(-(6 * m * l + 2 * m * m + 3 * l + 4 * m), 2)


def lap(a: TracePoly, mode: GroupMode | None = None) -> TracePoly:
    """Laplacian of an arbitrary trace polynomial; linear in the input.

    In general mode this extends ``lap_partition`` by linearity (with the
    dimension substituted when fixed).  In SO(3)/SO(4) mode the dedicated
    closed forms are used and the result stays in the reduced basis.
    """
    if mode is not None and mode != a.mode:
        raise ValueError(f"mode mismatch: polynomial is {a.mode}, requested {mode}")
    mode = a.mode
    out = TracePoly.zero(mode)
    if mode.tag == "general":
        for part, coeff in a.terms.items():
            base = lap_partition(part)
            if not mode.symbolic:
                base = base.substitute_n(mode.n)
            out = out + base * coeff
        return out
    if mode.tag == "so3":
        for part, coeff in a.terms.items():
            out = out + so3_lap_power(len(part)) * coeff
        return out
    for part, coeff in a.terms.items():
        l = sum(1 for p in part if p == 1)
        m = sum(1 for p in part if p == 2)
        out = out + so4_lap_monomial(l, m) * coeff
    return out
