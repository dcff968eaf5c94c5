"""Flag bases, the restricted Laplacian matrix, exact spectra and characters.

The graded flag of trace-polynomial spaces gives the restricted operator an
upper block triangular matrix whose diagonal blocks carry the whole
spectrum.  For SO(3) and SO(4) the proven bases make every entry an exact
rational; eigenvalues are extracted by exact characteristic polynomials and
deflation against the closed-form candidate set, and eigenspaces by exact
elimination.  For general N only the spanning-set expression table is
emitted (the monomials are not proven independent), and eigen-extraction is
refused.

Irreducible characters are constructed independently of the matrices -- the
SO(3) ones from the trace-sum / Chebyshev double-binomial forms, the SO(4)
ones from a product of Chebyshev expansions rewritten symmetrically in
p_1, p_2 -- and then located inside the computed eigenspaces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

from .laplacian import lap, lap_partition, so3_lap_pm_btrace, so3_lap_power, so4_lap_monomial
from .npoly import NPoly
from .partitions import EMPTY, Partition, enumerate_upto
from .tracepoly import (
    GENERAL,
    SO3,
    SO4,
    GroupMode,
    TracePoly,
    general_at,
    so3_basis_change,
)

BASIS_IDS = ("general", "bprime", "btrace", "so4")


# ---------------------------------------------------------------------------
# bases


@dataclass(frozen=True)
class FlagBasis:
    """Ordered basis (or spanning set) of the flag space of order k."""

    mode: GroupMode
    basis_id: str
    k: int
    elements: tuple
    weights: tuple[int, ...]
    block_starts: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.elements)

    def block_ranges(self) -> list[tuple[int, int, int]]:
        """(start, end, weight) for each graded block."""
        ends = self.block_starts[1:] + (len(self.elements),)
        return [
            (start, end, self.weights[start])
            for start, end in zip(self.block_starts, ends)
        ]

    def label(self, index: int) -> str:
        return _render_label(self.basis_id, self.elements[index])


def _render_label(basis_id: str, element) -> str:
    if basis_id == "bprime":
        j = element
        return "p_0" if j == 0 else ("p_1" if j == 1 else f"p_1^{j}")
    if basis_id == "btrace":
        return f"p_{element}"
    if basis_id == "so4":
        l, m = element
        if l == 0 and m == 0:
            return "p_0"
        bits = []
        if l:
            bits.append("p_1" if l == 1 else f"p_1^{l}")
        if m:
            bits.append("p_2" if m == 1 else f"p_2^{m}")
        return " ".join(bits)
    part: Partition = element
    if not part.parts:
        return "p_0"
    if part.degree == 1:
        return "p_1"
    return "p_(" + ",".join(str(x) for x in part.padded()) + ")"


def basis_for(mode: GroupMode, basis_id: str, k: int) -> FlagBasis:
    """Deterministic ordered basis of the order-k flag space.

    ``general``: all partitions of degree <= k (spanning set, p_0 first).
    ``bprime``:  p_0, p_1, p_1^2, ..., p_1^k on SO(3).
    ``btrace``:  p_0, p_1, p_2, ..., p_k on SO(3).
    ``so4``:     p_0 then p_1^l p_2^m by weight l+2m, ties by increasing m.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if basis_id not in BASIS_IDS:
        raise ValueError(f"unknown basis {basis_id!r}")
    if basis_id == "general":
        if mode.tag != "general":
            raise ValueError("the partition spanning set belongs to general mode")
        elements = tuple(enumerate_upto(k))
        weights = tuple(p.degree for p in elements)
    elif basis_id in ("bprime", "btrace"):
        if mode != SO3:
            raise ValueError(f"basis {basis_id!r} requires SO(3) mode")
        elements = tuple(range(k + 1))
        weights = tuple(range(k + 1))
    else:
        if mode != SO4:
            raise ValueError("basis 'so4' requires SO(4) mode")
        elems: list[tuple[int, int]] = [(0, 0)]
        wts = [0]
        for w in range(1, k + 1):
            for m in range(w // 2 + 1):
                elems.append((w - 2 * m, m))
                wts.append(w)
        elements = tuple(elems)
        weights = tuple(wts)
    starts = [0]
    for i in range(1, len(elements)):
        if weights[i] != weights[i - 1]:
            starts.append(i)
    return FlagBasis(mode, basis_id, k, elements, weights, tuple(starts))


# ---------------------------------------------------------------------------
# coordinates


def coordinates(poly: TracePoly, basis: FlagBasis) -> list[Fraction]:
    """Exact coordinates of ``poly`` in a proven basis; raises on mismatch."""
    if basis.basis_id in ("bprime", "btrace"):
        return so3_basis_change(poly, basis.basis_id, basis.k)
    if basis.basis_id == "so4":
        red = poly if poly.mode == SO4 else poly.reduce(SO4)
        if red.degree > basis.k:
            raise ValueError(f"degree {red.degree} exceeds basis order {basis.k}")
        index = {elem: i for i, elem in enumerate(basis.elements)}
        coords = [Fraction(0)] * basis.dim
        for part, coeff in red.terms.items():
            if not part.parts:
                coords[0] += coeff / 4
                continue
            key = (sum(1 for p in part if p == 1), sum(1 for p in part if p == 2))
            pos = index.get(key)
            if pos is None:
                raise ValueError(f"coordinate extraction failure at monomial {part}")
            coords[pos] += coeff
        return coords
    if basis.basis_id == "general" and not basis.mode.symbolic:
        index = {elem: i for i, elem in enumerate(basis.elements)}
        coords = [Fraction(0)] * basis.dim
        for part, coeff in poly.terms.items():
            if not part.parts:
                coords[0] += Fraction(coeff) / basis.mode.n
                continue
            pos = index.get(part)
            if pos is None:
                raise ValueError(f"coordinate extraction failure at monomial {part}")
            coords[pos] += coeff
        return coords
    raise ValueError("use coordinates_general for the symbolic spanning set")


def coordinates_general(poly: TracePoly, basis: FlagBasis) -> list[NPoly]:
    """Spanning-set coordinates with symbolic coefficients; p_0 slot = c/N."""
    if basis.basis_id != "general" or not basis.mode.symbolic:
        raise ValueError("symbolic coordinates require the general spanning set")
    index = {elem: i for i, elem in enumerate(basis.elements)}
    coords = [NPoly(0)] * basis.dim
    for part, coeff in poly.terms.items():
        if not part.parts:
            coords[0] = coords[0] + coeff.div_by_var()
            continue
        pos = index.get(part)
        if pos is None:
            raise ValueError(f"coordinate extraction failure at monomial {part}")
        coords[pos] = coords[pos] + coeff
    return coords


# ---------------------------------------------------------------------------
# the matrix


@dataclass(frozen=True)
class FlagMatrix:
    """Exact matrix of the restricted Laplacian; column j = coords of D(basis[j])."""

    basis: FlagBasis
    entries: tuple[tuple, ...]  # rows of Fraction (numeric) or NPoly (symbolic)

    @property
    def dim(self) -> int:
        return self.basis.dim

    def column(self, j: int) -> list:
        return [row[j] for row in self.entries]

    def diagonal_block(self, start: int, end: int) -> list[list]:
        return [[self.entries[i][j] for j in range(start, end)] for i in range(start, end)]


def _is_zero_entry(value) -> bool:
    return not value


def build_matrix(mode: GroupMode, basis_id: str, k: int) -> FlagMatrix:
    """Assemble the order-k flag matrix and assert block triangularity."""
    basis = basis_for(mode, basis_id, k)
    columns = []
    for element in basis.elements:
        if basis_id == "bprime":
            col = so3_basis_change(so3_lap_power(element), "bprime", k)
        elif basis_id == "btrace":
            coldict = so3_lap_pm_btrace(element)
            col = [coldict.get(i, Fraction(0)) for i in range(k + 1)]
        elif basis_id == "so4":
            l, m = element
            col = coordinates(so4_lap_monomial(l, m), basis)
        else:
            image = lap_partition(element)
            if mode.symbolic:
                col = coordinates_general(image, basis)
            else:
                col = coordinates(image.substitute_n(mode.n), basis)
        columns.append(col)
    entries = tuple(tuple(columns[j][i] for j in range(basis.dim)) for i in range(basis.dim))
    for start, end, _ in basis.block_ranges():
        for i in range(end, basis.dim):
            for j in range(start, end):
                if not _is_zero_entry(entries[i][j]):
                    raise ArithmeticError(
                        f"block triangularity violated at entry ({i},{j}); reduction bug"
                    )
    return FlagMatrix(basis, entries)


# ---------------------------------------------------------------------------
# exact linear algebra over Fraction


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    mat = [list(row) for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if mat[i][c]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = mat[r][c]
        mat[r] = [v / inv for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def _nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    mat, pivots = _rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis


def _primitive(vec: list[Fraction]) -> list[Fraction]:
    """Scale to coprime integers with a positive leading nonzero entry."""
    denom = lcm(*(v.denominator for v in vec)) if vec else 1
    ints = [v * denom for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, abs(v.numerator))
    if g:
        ints = [v / g for v in ints]
    lead = next((v for v in ints if v), Fraction(0))
    if lead < 0:
        ints = [-v for v in ints]
    return ints


def _in_span(vectors: list[list[Fraction]], target: list[Fraction]) -> bool:
    if not vectors:
        return all(not t for t in target)
    rows = [[v[i] for v in vectors] + [target[i]] for i in range(len(target))]
    _, pivots = _rref(rows)
    return len(vectors) not in pivots


def _matmul(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(a)
    return [
        [sum((a[i][t] * b[t][j] for t in range(size)), Fraction(0)) for j in range(size)]
        for i in range(size)
    ]


def _char_poly(block: list[list[Fraction]]) -> list[Fraction]:
    """Monic characteristic polynomial of a small exact matrix (descending)."""
    size = len(block)
    coeffs = [Fraction(1)]
    work = [list(row) for row in block]
    for k in range(1, size + 1):
        ck = -sum(work[i][i] for i in range(size)) / k
        coeffs.append(ck)
        if k == size:
            break
        for i in range(size):
            work[i][i] += ck
        work = _matmul(block, work)
    return coeffs


def _deflate(coeffs: list[Fraction], root: Fraction) -> tuple[list[Fraction], Fraction]:
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + root * out[-1])
    return out[:-1], out[-1]


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    scale = lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    cands = set()
    if ints[-1] == 0:
        cands.add(Fraction(0))
    lead = abs(ints[0])
    tail = abs(next((v for v in reversed(ints) if v), 0))

    def divisors(v: int) -> set[int]:
        return {d for d in range(1, v + 1) if v % d == 0} if v else {1}

    for p in divisors(tail):
        for q in divisors(lead):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    return sorted(cands)


# ---------------------------------------------------------------------------
# spectra


@dataclass(frozen=True)
class SpectrumEntry:
    """One eigenvalue with the parameter labels producing it."""

    eigenvalue: Fraction
    labels: tuple
    geometric_multiplicity: int | None = None


def _so4_eig(k1: int, k2: int) -> Fraction:
    return -Fraction(k1 * (k1 + 2) + k2 * (k2 + 2), 4)


def _closed_candidates(mode: GroupMode, weight: int) -> list[tuple[Fraction, object]]:
    if mode.tag == "so3":
        return [(Fraction(-weight * (weight + 1), 2), weight)]
    return [
        (_so4_eig(weight, k2), (weight, k2))
        for k2 in range(weight % 2, weight + 1, 2)
    ]


def spectrum_closed(target: str, bound: int, n: int | None = None) -> list[SpectrumEntry]:
    """Closed-form eigenvalue families with parameter labels.

    ``sphere``: -k(k+n-2)/2 for 0 <= k <= bound (needs n >= 2).
    ``so3``:    -k(k+1)/2 for 0 <= k <= bound.
    ``so4``:    -(k1(k1+2)+k2(k2+2))/4 over same-parity pairs with
                k1+k2 <= bound; unordered labels, one entry per value.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    found: dict[Fraction, list] = {}
    if target == "sphere":
        if n is None or n < 2:
            raise ValueError("sphere spectrum needs the ambient dimension n >= 2")
        for k in range(bound + 1):
            found.setdefault(Fraction(-k * (k + n - 2), 2), []).append(k)
    elif target == "so3":
        for k in range(bound + 1):
            found.setdefault(Fraction(-k * (k + 1), 2), []).append(k)
    elif target == "so4":
        for k1 in range(bound + 1):
            for k2 in range(k1 % 2, min(k1, bound - k1) + 1, 2):
                found.setdefault(_so4_eig(k1, k2), []).append((k1, k2))
    else:
        raise ValueError(f"unknown spectrum target {target!r}")
    return [
        SpectrumEntry(eig, tuple(found[eig]))
        for eig in sorted(found, reverse=True)
    ]


def eigenvalues_exact(matrix: FlagMatrix) -> list[SpectrumEntry]:
    """Exact spectrum of a flag matrix from its diagonal blocks.

    Each block's characteristic polynomial is computed over the rationals and
    deflated against the closed-form candidate eigenvalues for its weight; a
    rational-root search is the fallback, and any surviving nonlinear factor
    is a hard inconsistency.
    """
    mode = matrix.basis.mode
    if mode.tag == "general":
        raise ValueError("eigenvalue extraction requires a proven basis (SO(3)/SO(4) only)")
    found: dict[Fraction, list] = {}
    for start, end, weight in matrix.basis.block_ranges():
        block = matrix.diagonal_block(start, end)
        remaining = _char_poly(block)
        for eig, label in _closed_candidates(mode, weight):
            while len(remaining) > 1:
                quotient, rem = _deflate(remaining, eig)
                if rem:
                    break
                remaining = quotient
                found.setdefault(eig, [])
                if label not in found[eig]:
                    found[eig].append(label)
        if len(remaining) > 1:
            for cand in _rational_roots(remaining):
                while len(remaining) > 1:
                    quotient, rem = _deflate(remaining, cand)
                    if rem:
                        break
                    remaining = quotient
                    found.setdefault(cand, [])
        if len(remaining) > 1:
            raise ArithmeticError(
                f"weight-{weight} block has a non-rational spectral factor {remaining}"
            )
    out = []
    for eig in sorted(found, reverse=True):
        multiplicity = len(eigenspace_exact(matrix, eig))
        out.append(SpectrumEntry(eig, tuple(found[eig]), multiplicity))
    return out


def eigenspace_exact(matrix: FlagMatrix, eigenvalue: Fraction) -> list[list[Fraction]]:
    """Exact basis of ker(M - eigenvalue I), primitively normalized."""
    eigenvalue = Fraction(eigenvalue)
    shifted = [
        [matrix.entries[i][j] - (eigenvalue if i == j else 0) for j in range(matrix.dim)]
        for i in range(matrix.dim)
    ]
    basis = _nullspace(shifted)
    if not basis:
        raise ArithmeticError(f"{eigenvalue} has an empty eigenspace; not an eigenvalue")
    return [_primitive(v) for v in basis]


# ---------------------------------------------------------------------------
# characters


@dataclass(frozen=True)
class Character:
    """Irreducible character as an exact eigen-polynomial of the flag matrix."""

    group: str
    label: tuple
    eigenvalue: Fraction
    poly: TracePoly
    alt: TracePoly | None = None  # SO(3): the plain trace-sum form


def character_so3(k: int) -> Character:
    """Weight-k irreducible SO(3) character, in both flag bases.

    The trace form is -(k-1)/3 p_0 + p_1 + ... + p_k; the power form expands
    the same function in powers of p_1 with double-binomial integer
    coefficients.  Both the equality of the two forms and the eigen-equation
    are verified exactly on construction.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    trace_terms: dict[Partition, object] = {EMPTY: -(k - 1)}
    for m in range(1, k + 1):
        trace_terms[Partition((m,))] = 1
    trace_form = TracePoly(trace_terms, general_at(3))
    power_terms: dict[Partition, object] = {}
    for j in range(k + 1):
        coeff = sum(
            (-1) ** (k - l) * comb(k + l, 2 * l) * comb(l, j) for l in range(j, k + 1)
        )
        power_terms[Partition((1,) * j)] = coeff
    power_form = TracePoly(power_terms, SO3)
    if trace_form.reduce(SO3) != power_form:
        raise ArithmeticError(f"character forms disagree at k={k}")
    eigenvalue = Fraction(-k * (k + 1), 2)
    if lap(power_form) != power_form * eigenvalue:
        raise ArithmeticError(f"character eigen-equation fails at k={k}")
    return Character("so3", (k,), eigenvalue, power_form, trace_form)


def _cheb2_coeff(m: int, s: int) -> Fraction:
    # coefficient of x^{m-2s} in the Chebyshev polynomial of the second kind
    return Fraction((-1) ** s * comb(m - s, s) * 2 ** (m - 2 * s))


def _sym_power_pair(a: int, b: int) -> TracePoly:
    """X^a Y^b + X^b Y^a in p_1, p_2, for X = cos((alpha+beta)/2) etc.

    Uses XY = p_1/4, X^2+Y^2 = (p_1^2-p_2+4)/8, X^2 Y^2 = p_1^2/16 and the
    Newton recurrence for the symmetric power sums of X^2, Y^2; a and b must
    have equal parity for the expression to be symmetric in the angles.
    """
    if (a - b) % 2:
        raise ValueError("exponents must share parity")
    p1 = TracePoly.power_sum(1, SO4)
    xy = p1 * Fraction(1, 4)
    e1 = (p1 * p1 - TracePoly.power_sum(2, SO4) + 4) * Fraction(1, 8)
    e2 = p1 * p1 * Fraction(1, 16)
    d = abs(a - b) // 2
    s_prev = TracePoly.constant(2, SO4)
    s_cur = e1
    if d == 0:
        power_sum = s_prev
    else:
        for _ in range(d - 1):
            s_prev, s_cur = s_cur, e1 * s_cur - e2 * s_prev
        power_sum = s_cur
    return xy ** min(a, b) * power_sum


def character_so4(j1, j2) -> Character:
    """Irreducible SO(4) character for the spin pair (j1, j2).

    Admissible pairs are nonnegative half-integers with integer sum; the
    result is the symmetric trace polynomial covering the unordered pair
    (the mirror labels (j1,j2) and (j2,j1) give one and the same function).
    The eigen-equation D chi = -(j1(j1+1)+j2(j2+1)) chi is verified exactly.
    """
    j1 = Fraction(j1)
    j2 = Fraction(j2)
    if j1 < 0 or j2 < 0 or (2 * j1).denominator != 1 or (2 * j2).denominator != 1:
        raise ValueError("spins must be nonnegative half-integers")
    if (j1 + j2).denominator != 1:
        raise ValueError(
            f"spin pair ({j1}, {j2}) is not an SO(4) label: j1 + j2 must be an integer"
        )
    ka = int(2 * j1)
    kb = int(2 * j2)
    poly = TracePoly.zero(SO4)
    for q in range(ka // 2 + 1):
        for r in range(kb // 2 + 1):
            coeff = _cheb2_coeff(ka, q) * _cheb2_coeff(kb, r)
            poly = poly + _sym_power_pair(ka - 2 * q, kb - 2 * r) * coeff
    eigenvalue = -(j1 * (j1 + 1) + j2 * (j2 + 1))
    if lap(poly) != poly * eigenvalue:
        raise ArithmeticError(f"character eigen-equation fails at ({j1}, {j2})")
    return Character("so4", (max(ka, kb), min(ka, kb)), eigenvalue, poly)


def _candidate_characters(basis: FlagBasis, eigenvalue: Fraction) -> list[Character]:
    out = []
    if basis.mode == SO3:
        for k in range(basis.k + 1):
            if Fraction(-k * (k + 1), 2) == eigenvalue:
                out.append(character_so3(k))
    else:
        for k1 in range(basis.k + 1):
            for k2 in range(k1 % 2, k1 + 1, 2):
                if _so4_eig(k1, k2) == eigenvalue:
                    out.append(character_so4(Fraction(k1, 2), Fraction(k2, 2)))
    return out


def match_characters(matrix: FlagMatrix) -> list[tuple[SpectrumEntry, Character]]:
    """Locate every independently built character inside its eigenspace.

    Returns one (entry, character) pair per matched character; entries carry
    the exact geometric multiplicity, so eigenvalues richer than their
    character count are visible to the caller.  A character missing from its
    eigenspace is an inconsistency and raises.
    """
    if matrix.basis.mode.tag == "general":
        raise ValueError("character matching requires SO(3) or SO(4)")
    out = []
    for entry in eigenvalues_exact(matrix):
        space = eigenspace_exact(matrix, entry.eigenvalue)
        for character in _candidate_characters(matrix.basis, entry.eigenvalue):
            coords = coordinates(character.poly, matrix.basis)
            if not _in_span(space, coords):
                raise ArithmeticError(
                    f"character {character.label} escaped the eigenspace of {entry.eigenvalue}"
                )
            out.append((entry, character))
    return out


# ---------------------------------------------------------------------------
# exports


def _entry_str(value) -> str:
    return str(value)


def matrix_to_json_obj(matrix: FlagMatrix) -> dict:
    basis = matrix.basis
    return {
        "mode": basis.mode.tag,
        "n": basis.mode.n,
        "basis_id": basis.basis_id,
        "k": basis.k,
        "basis": [basis.label(i) for i in range(basis.dim)],
        "block_starts": list(basis.block_starts),
        "entries": [[_entry_str(v) for v in row] for row in matrix.entries],
    }


def matrix_to_json(matrix: FlagMatrix) -> str:
    return json.dumps(matrix_to_json_obj(matrix), sort_keys=True)


def matrix_to_csv(matrix: FlagMatrix) -> str:
    basis = matrix.basis
    lines = [
        f"# mode={basis.mode.tag} n={basis.mode.n} basis={basis.basis_id} k={basis.k}",
        "# basis_order=" + "|".join(basis.label(i) for i in range(basis.dim)),
        "row,col,value,exact",
    ]
    for i, row in enumerate(matrix.entries):
        for j, value in enumerate(row):
            decimal = float(value) if isinstance(value, Fraction) else ""
            lines.append(f"{i},{j},{decimal!r},{value}")
    return "\n".join(lines) + "\n"


def _latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    value = abs(value)
    return f"{sign}\\frac{{{value.numerator}}}{{{value.denominator}}}"


def matrix_to_latex(matrix: FlagMatrix) -> str:
    """Bordered array with Delta-labelled columns, rationals as \\frac."""
    basis = matrix.basis
    labels = [basis.label(i) for i in range(basis.dim)]
    cols = "c|" + "c" * basis.dim
    lines = [f"\\begin{{array}}{{{cols}}}"]
    lines.append(" & " + " & ".join(f"\\Delta {lab}" for lab in labels) + " \\\\")
    lines.append("\\hline")
    for i, row in enumerate(matrix.entries):
        cells = [
            _latex_rational(v) if isinstance(v, Fraction) else str(v) for v in row
        ]
        lines.append(labels[i] + " & " + " & ".join(cells) + " \\\\")
    lines.append("\\end{array}")
    return "\n".join(lines) + "\n"


def matrix_to_pretty(matrix: FlagMatrix) -> str:
    basis = matrix.basis
    labels = [basis.label(i) for i in range(basis.dim)]
    header = [""] + [f"D {lab}" for lab in labels]
    rows = [header]
    for i, row in enumerate(matrix.entries):
        rows.append([labels[i]] + [str(v) for v in row])
    widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
    out = []
    for r in rows:
        out.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
    return "\n".join(out) + "\n"
