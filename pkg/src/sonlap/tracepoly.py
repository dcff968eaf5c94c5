"""Exact algebra of trace polynomials with group-specific reductions.

A trace polynomial is a finite linear combination of monomials
``p_lam(U) = tr(U^{m_1}) ... tr(U^{m_s})`` indexed by integer partitions.
While the dimension N is symbolic, coefficients live in :class:`NPoly`;
once a concrete dimension has been substituted they are plain rationals.

The empty partition stands for the constant 1, and the degree-zero trace
p_0 is the constant N, represented internally as N times the empty
partition.  On SO(3) every p_m is a Chebyshev polynomial in p_1
(``p_m = 1 + 2 T_m((p_1 - 1)/2)``); on SO(4) the Cayley-Hamilton identity
rewrites every p_m as a polynomial in p_1 and p_2.  ``TracePoly.reduce``
performs those rewrites onto the canonical generator sets; no reduction
exists for N >= 5, where the monomials are treated as free generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .npoly import NPoly
from .partitions import EMPTY, Partition


@dataclass(frozen=True)
class GroupMode:
    """Which relations are in force: symbolic N, fixed N, or a reduced group."""

    tag: str  # "general" | "so3" | "so4"
    n: int | None = None  # None only for symbolic general mode

    def __post_init__(self) -> None:
        if self.tag not in ("general", "so3", "so4"):
            raise ValueError(f"unknown mode tag {self.tag!r}")
        if self.tag == "so3" and self.n != 3:
            raise ValueError("so3 mode requires n=3")
        if self.tag == "so4" and self.n != 4:
            raise ValueError("so4 mode requires n=4")
        if self.tag == "general" and self.n is not None and self.n < 2:
            raise ValueError("dimension must be at least 2")

    @property
    def symbolic(self) -> bool:
        return self.n is None

    def __str__(self) -> str:
        if self.tag == "general":
            return "general N" if self.symbolic else f"general at N={self.n}"
        return self.tag.upper().replace("SO", "SO(") + ")"


GENERAL = GroupMode("general", None)
SO3 = GroupMode("so3", 3)
SO4 = GroupMode("so4", 4)


def general_at(n: int) -> GroupMode:
    """General (unreduced) mode with the dimension fixed to ``n``."""
    return GroupMode("general", int(n))


def _coerce_coeff(value, mode: GroupMode):
    if mode.symbolic:
        return value if isinstance(value, NPoly) else NPoly(value)
    if isinstance(value, NPoly):
        return value.constant_value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Fraction):
        return value
    raise TypeError(f"bad coefficient type {type(value).__name__}")


def _allowed_parts(mode: GroupMode) -> set[int] | None:
    if mode.tag == "so3":
        return {1}
    if mode.tag == "so4":
        return {1, 2}
    return None


class TracePoly:
    """Linear combination of partition-indexed trace monomials."""

    __slots__ = ("_terms", "mode")

    def __init__(self, terms=None, mode: GroupMode = GENERAL):
        allowed = _allowed_parts(mode)
        data = {}
        for part, coeff in (terms or {}).items():
            if not isinstance(part, Partition):
                part = Partition.of(*part)
            if allowed is not None and any(p not in allowed for p in part):
                raise ValueError(f"monomial {part} is not reduced for {mode}")
            c = _coerce_coeff(coeff, mode)
            if part in data:
                c = data[part] + c
            if c:
                data[part] = c
            else:
                data.pop(part, None)
        self._terms = data
        self.mode = mode

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, mode: GroupMode = GENERAL) -> "TracePoly":
        return cls({}, mode)

    @classmethod
    def constant(cls, value, mode: GroupMode = GENERAL) -> "TracePoly":
        return cls({EMPTY: value}, mode)

    @classmethod
    def monomial(cls, part: Partition, coeff=1, mode: GroupMode = GENERAL) -> "TracePoly":
        return cls({part: coeff}, mode)

    @classmethod
    def power_sum(cls, m: int, mode: GroupMode = GENERAL) -> "TracePoly":
        """p_m; for m = 0 the constant N (symbolic or numeric)."""
        if m < 0:
            raise ValueError("power index must be nonnegative")
        if m == 0:
            value = NPoly.var() if mode.symbolic else mode.n
            return cls({EMPTY: value}, mode)
        return cls({Partition((m,)): 1}, mode)

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Partition, object]:
        return dict(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        return max((p.degree for p in self._terms), default=0)

    def coeff(self, part: Partition):
        zero = NPoly(0) if self.mode.symbolic else Fraction(0)
        return self._terms.get(part, zero)

    @property
    def constant_term(self):
        return self.coeff(EMPTY)

    def sorted_terms(self) -> list[tuple[Partition, object]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, NPoly)):
            other = TracePoly.constant(other, self.mode)
        if not isinstance(other, TracePoly):
            return NotImplemented
        return self.mode == other.mode and self._terms == other._terms

    __hash__ = None  # mutable-by-convention container; identity hashing would mislead

    # -- arithmetic --------------------------------------------------------

    def _rhs(self, other) -> "TracePoly":
        if isinstance(other, TracePoly):
            if other.mode != self.mode:
                raise ValueError(f"mode mismatch: {self.mode} vs {other.mode}")
            return other
        return TracePoly.constant(other, self.mode)

    def __add__(self, other) -> "TracePoly":
        rhs = self._rhs(other)
        out = dict(self._terms)
        for part, coeff in rhs._terms.items():
            s = out.get(part, 0) + coeff
            if s:
                out[part] = s
            else:
                out.pop(part, None)
        return TracePoly(out, self.mode)

    __radd__ = __add__

    def __neg__(self) -> "TracePoly":
        return TracePoly({p: -c for p, c in self._terms.items()}, self.mode)

    def __sub__(self, other) -> "TracePoly":
        return self + (-self._rhs(other))

    def __rsub__(self, other) -> "TracePoly":
        return (-self) + other

    def __mul__(self, other) -> "TracePoly":
        if isinstance(other, (int, Fraction, NPoly)):
            if not other:
                return TracePoly.zero(self.mode)
            return TracePoly({p: c * other for p, c in self._terms.items()}, self.mode)
        rhs = self._rhs(other)
        out: dict[Partition, object] = {}
        for p1, c1 in self._terms.items():
            for p2, c2 in rhs._terms.items():
                key = p1.concat(p2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return TracePoly(out, self.mode)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TracePoly":
        if exponent < 0:
            raise ValueError("negative power")
        out = TracePoly.constant(1, self.mode)
        for _ in range(exponent):
            out = out * self
        return out

    # -- mode changes ------------------------------------------------------

    def substitute_n(self, n: int) -> "TracePoly":
        """Evaluate every coefficient at N = n; result stays unreduced."""
        if not self.mode.symbolic:
            raise ValueError("coefficients are already numeric")
        mode = general_at(n)
        return TracePoly({p: c.subs(n) for p, c in self._terms.items()}, mode)

    def reduce(self, mode: GroupMode) -> "TracePoly":
        """Rewrite onto the reduced generator set of SO(3) or SO(4).

        Idempotent; requires numeric coefficients at the matching dimension.
        """
        if mode.tag == "so3":
            table = so3_pm_in_p1
        elif mode.tag == "so4":
            table = so4_pm_in_p1p2
        else:
            raise ValueError("reduction target must be SO3 or SO4")
        if self.mode == mode:
            return self
        if self.mode.symbolic:
            raise ValueError("substitute a concrete N before reducing")
        if self.mode.n != mode.n:
            raise ValueError(f"operand lives at N={self.mode.n}, target needs N={mode.n}")
        out = TracePoly.zero(mode)
        for part, coeff in self._terms.items():
            factor = TracePoly.constant(coeff, mode)
            for m in part:
                factor = factor * table(m)
            out = out + factor
        return out

    # -- rendering ---------------------------------------------------------

    def _label(self, part: Partition) -> str | None:
        if not part.parts:
            return None
        if self.mode.tag == "so3":
            j = len(part)
            return "p_1" if j == 1 else f"p_1^{j}"
        if self.mode.tag == "so4":
            l = sum(1 for p in part if p == 1)
            m = sum(1 for p in part if p == 2)
            bits = []
            if l:
                bits.append("p_1" if l == 1 else f"p_1^{l}")
            if m:
                bits.append("p_2" if m == 1 else f"p_2^{m}")
            return " ".join(bits)
        if part.degree == 1:
            return "p_1"
        return "p_(" + ",".join(str(x) for x in part.padded()) + ")"

    def _constant_str(self, coeff) -> tuple[str, str]:
        # returns (sign, body) for the degree-zero term
        if self.mode.symbolic and isinstance(coeff, NPoly):
            try:
                ratio = coeff.div_by_var()
            except ValueError:
                return _coeff_chunk(coeff, None)
            return _coeff_chunk(ratio, "p_0")
        return _coeff_chunk(coeff, None)

    def pretty(self) -> str:
        """Human-readable form: highest degree first, padded partition labels."""
        if not self._terms:
            return "0"
        if self.mode.tag == "so4":
            # inside a weight: p_1 powers first, then increasing p_2 count
            inner = lambda part: tuple(part.parts)
        else:
            inner = lambda part: tuple(-p for p in part.parts)
        items = sorted(
            self._terms.items(),
            key=lambda kv: (-kv[0].degree, inner(kv[0])),
        )
        chunks = []
        for part, coeff in items:
            label = self._label(part)
            sign, body = self._constant_str(coeff) if label is None else _coeff_chunk(coeff, label)
            if not chunks:
                chunks.append(body if sign == "+" else f"-{body}")
            else:
                chunks.append(f"{'+' if sign == '+' else '-'} {body}")
        return " ".join(chunks)

    def to_json_obj(self) -> list:
        """List of term records with partition parts and exponent->rational maps."""
        out = []
        for part, coeff in self.sorted_terms():
            if isinstance(coeff, NPoly):
                cmap = {str(e): str(c) for e, c in sorted(coeff.coeffs.items())}
            else:
                cmap = {"0": str(coeff)}
            out.append({"partition": list(part.parts), "coeff": cmap})
        return out

    @classmethod
    def from_json_obj(cls, obj: list, mode: GroupMode) -> "TracePoly":
        terms = {}
        for rec in obj:
            part = Partition.of(*rec["partition"])
            coeffs = {int(e): Fraction(v) for e, v in rec["coeff"].items()}
            terms[part] = NPoly(coeffs) if mode.symbolic else NPoly(coeffs).constant_value
        return cls(terms, mode)

    def __str__(self) -> str:
        return self.pretty()

    def __repr__(self) -> str:
        return f"TracePoly({self.pretty()!r}, mode={self.mode})"


def _coeff_chunk(coeff, label: str | None) -> tuple[str, str]:
    """Split a coefficient into a sign and a printable magnitude."""
    if isinstance(coeff, NPoly):
        items = coeff.coeffs
        if not items:
            return "+", "0"
        lead = items[max(items)]
        sign = "+" if lead > 0 else "-"
        mag = coeff if lead > 0 else -coeff
        body = str(mag) if len(items) == 1 else f"({mag})"
        if label is None:
            return sign, body
        if mag == 1 and len(items) == 1:
            return sign, label
        return sign, f"{body}*{label}"
    coeff = Fraction(coeff)
    sign = "+" if coeff >= 0 else "-"
    mag = abs(coeff)
    if label is None:
        return sign, str(mag)
    if mag == 1:
        return sign, label
    return sign, f"{mag}*{label}"


@lru_cache(maxsize=None)
def so3_pm_in_p1(m: int) -> TracePoly:
    """p_m on SO(3) as a polynomial in p_1, via 1 + 2*T_m((p_1 - 1)/2)."""
    if m < 0:
        raise ValueError("power index must be nonnegative")
    one = TracePoly.constant(1, SO3)
    x = (TracePoly.power_sum(1, SO3) - 1) * Fraction(1, 2)
    if m == 0:
        cheb = one
    elif m == 1:
        cheb = x
    else:
        prev, cur = one, x
        for _ in range(m - 1):
            prev, cur = cur, x * cur * 2 - prev
        cheb = cur
    return cheb * 2 + 1


@lru_cache(maxsize=None)
def so4_pm_in_p1p2(m: int) -> TracePoly:
    """p_m on SO(4) as a polynomial in p_1, p_2 via the Cayley-Hamilton recurrence.

    p_{s+1} = p_1 p_s - (p_1^2 - p_2)/2 p_{s-1} + p_1 p_{s-2} - p_{s-3},
    seeded with p_0 = 4 and p_3 = -p_1^3/2 + 3 p_1 p_2 / 2 + 3 p_1.
    """
    if m < 0:
        raise ValueError("power index must be nonnegative")
    p1 = TracePoly.power_sum(1, SO4)
    p2 = TracePoly.power_sum(2, SO4)
    if m == 0:
        return TracePoly.constant(4, SO4)
    if m == 1:
        return p1
    if m == 2:
        return p2
    if m == 3:
        return p1 * p1 * p1 * Fraction(-1, 2) + p1 * p2 * Fraction(3, 2) + p1 * 3
    half_q = (p1 * p1 - p2) * Fraction(1, 2)
    return (
        p1 * so4_pm_in_p1p2(m - 1)
        - half_q * so4_pm_in_p1p2(m - 2)
        + p1 * so4_pm_in_p1p2(m - 3)
        - so4_pm_in_p1p2(m - 4)
    )


def so3_basis_change(a: TracePoly, target: str, k: int | None = None) -> list[Fraction]:
    """Coordinates of ``a`` in an SO(3) flag basis of order ``k``.

    ``target`` is ``"bprime"`` for {p_0, p_1, p_1^2, ..., p_1^k} or
    ``"btrace"`` for {p_0, p_1, p_2, ..., p_k}.  A constant c contributes the
    exact coordinate c/3 on the p_0 slot.  The trace-basis conversion inverts
    the monic triangular relation p_m = p_1^m + (lower order).
    """
    if target not in ("bprime", "btrace"):
        raise ValueError(f"unknown SO(3) basis {target!r}")
    red = a if a.mode == SO3 else a.reduce(SO3)
    deg = red.degree
    if k is None:
        k = deg
    if deg > k:
        raise ValueError(f"degree {deg} exceeds basis order {k}")
    powers = {len(part): coeff for part, coeff in red._terms.items()}
    coords = [Fraction(0)] * (k + 1)
    if target == "bprime":
        for j, c in powers.items():
            coords[j] = c / 3 if j == 0 else c
        return coords
    work = dict(powers)
    for m in range(k, 0, -1):
        c = work.get(m, Fraction(0))
        if not c:
            continue
        coords[m] = c
        for part, pc in so3_pm_in_p1(m)._terms.items():
            j = len(part)
            work[j] = work.get(j, Fraction(0)) - c * pc
    coords[0] = work.get(0, Fraction(0)) / 3
    return coords


def so3_from_coordinates(coords, target: str) -> TracePoly:
    """Inverse of :func:`so3_basis_change`: rebuild the SO(3)-reduced polynomial."""
    if target not in ("bprime", "btrace"):
        raise ValueError(f"unknown SO(3) basis {target!r}")
    out = TracePoly.constant(Fraction(coords[0]) * 3, SO3)
    for m in range(1, len(coords)):
        c = coords[m]
        if not c:
            continue
        if target == "bprime":
            out = out + TracePoly.monomial(Partition((1,) * m), c, SO3)
        else:
            out = out + so3_pm_in_p1(m) * c
    return out
