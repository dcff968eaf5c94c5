"""Floating-point oracle for the SO(N) Laplacian via ambient matrix calculus.

Everything here operates on concrete rotation matrices in double precision
and exists to cross-validate the exact symbolic results.  For a smooth
prolongation f of a function on SO(N),

    lap f(U) = 1/2 tr(Hess f) - (N-1)/2 tr(U^t grad f)
               - 1/2 tr(Lambda(U) Hess f),

where grad/Hess are the Euclidean matrix-form derivatives in column-major
vectorization order and Lambda(U) is the n^2 x n^2 block matrix whose
(i, j) block is u_j u_i^t.  The sphere analogue for the radius-R sphere is

    lap h(x) = tr(Hess h) - tr(x x^t Hess h)/R^2 - (N-1) <x, grad h> / R^2.

Derivatives of trace monomials are assembled from exact matrix-calculus
formulas (gradient of p_m is m (U^t)^{m-1}; its Hessian is
m K sum_r (U^t)^r kron U^{m-2-r} with K the commutation matrix).  Finite
differences appear only as a secondary oracle inside verification reports,
never on the evaluation path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .laplacian import lap_partition
from .partitions import Partition
from .tracepoly import TracePoly

DEFAULT_SEED = 20230

_ORTHO_TOL = 1e-12


@dataclass
class RotationSample:
    """A concrete special orthogonal matrix with its provenance."""

    n: int
    matrix: np.ndarray
    provenance: str = ""

    def __post_init__(self) -> None:
        u = np.asarray(self.matrix, dtype=float)
        if u.shape != (self.n, self.n):
            raise ValueError(f"expected {self.n}x{self.n} matrix, got {u.shape}")
        gram_err = np.max(np.abs(u.T @ u - np.eye(self.n)))
        det_err = abs(np.linalg.det(u) - 1.0)
        if gram_err > _ORTHO_TOL or det_err > _ORTHO_TOL:
            raise ValueError(
                f"not special orthogonal: |U^tU-I|={gram_err:.2e}, |det-1|={det_err:.2e}"
            )
        self.matrix = u

    @property
    def columns(self) -> np.ndarray:
        return self.matrix


@dataclass
class DerivativeBundle:
    """Value, matrix-form gradient and vectorized Hessian of a prolongation."""

    value: float
    grad: np.ndarray
    hess: np.ndarray

    def __post_init__(self) -> None:
        asym = np.max(np.abs(self.hess - self.hess.T)) if self.hess.size else 0.0
        if asym > 1e-10:
            raise ValueError(f"Hessian not symmetric: {asym:.2e}")


def random_son(n: int, seed) -> RotationSample:
    """Haar-distributed rotation, deterministic in (n, seed).

    Gaussian matrix, QR with the R-diagonal sign correction (making the
    orthogonal factor Haar on O(n)), then determinant fixed to +1 by negating
    the last column.
    """
    if n < 2:
        raise ValueError("dimension must be at least 2")
    rng = np.random.default_rng(seed)
    for _ in range(8):
        gauss = rng.standard_normal((n, n))
        q, r = np.linalg.qr(gauss)
        diag = np.diagonal(r)
        if np.any(diag == 0.0):
            continue  # measure-zero degenerate draw
        q = q * np.sign(diag)
        if np.linalg.det(q) < 0:
            q = q.copy()
            q[:, -1] = -q[:, -1]
        return RotationSample(n, q, provenance=f"haar(n={n}, seed={seed})")
    raise RuntimeError("degenerate Gaussian draws persisted")


def rotation_from_angles(n: int, angles) -> RotationSample:
    """Canonical block-diagonal rotation with prescribed rotation angles.

    n=3 takes one angle (eigenvalues 1, exp(+-i a)); n=4 takes two
    (eigenvalues exp(+-i a), exp(+-i b)).
    """
    angles = [float(a) for a in (angles if hasattr(angles, "__len__") else [angles])]
    if n == 3:
        if len(angles) != 1:
            raise ValueError("n=3 takes exactly one angle")
        (a,) = angles
        u = np.eye(3)
        u[0:2, 0:2] = [[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]]
    elif n == 4:
        if len(angles) != 2:
            raise ValueError("n=4 takes exactly two angles")
        a, b = angles
        u = np.zeros((4, 4))
        u[0:2, 0:2] = [[math.cos(a), -math.sin(a)], [math.sin(a), math.cos(a)]]
        u[2:4, 2:4] = [[math.cos(b), -math.sin(b)], [math.sin(b), math.cos(b)]]
    else:
        raise ValueError("canonical angle form implemented for n in {3, 4}")
    return RotationSample(n, u, provenance=f"angles={angles}")


def commutation_matrix(n: int) -> np.ndarray:
    """The n^2 x n^2 permutation with K vec(A) = vec(A^t), column-major."""
    k = np.zeros((n * n, n * n))
    for i in range(n):
        for j in range(n):
            k[j * n + i, i * n + j] = 1.0
    return k


def structure_matrices(sample: RotationSample) -> tuple[np.ndarray, np.ndarray]:
    """(K, Lambda(U)): commutation matrix and the column-outer block matrix."""
    n = sample.n
    u = sample.matrix
    lam = np.zeros((n * n, n * n))
    for a in range(n):
        for b in range(n):
            lam[a * n:(a + 1) * n, b * n:(b + 1) * n] = np.outer(u[:, b], u[:, a])
    return commutation_matrix(n), lam


def _vec(matrix: np.ndarray) -> np.ndarray:
    return matrix.flatten(order="F")


def _powers(u: np.ndarray, top: int) -> list[np.ndarray]:
    out = [np.eye(u.shape[0])]
    for _ in range(top):
        out.append(out[-1] @ u)
    return out


def euclid_derivatives(partition: Partition, sample: RotationSample) -> DerivativeBundle:
    """Euclidean value/gradient/Hessian of the trace monomial at the sample.

    Gradient of p_m is m (U^t)^{m-1}; the Hessian of p_m (m >= 2) is
    m K sum_{r=0}^{m-2} (U^t)^r kron U^{m-2-r}.  The monomial's derivatives
    follow from the product rule, including the rank-one cross terms
    vec(grad p_i) vec(grad p_j)^t.
    """
    value = eval_tracepoly_matrix(partition, sample.matrix)
    grad, hess = euclid_derivatives_matrix(partition, sample.matrix)
    return DerivativeBundle(value, grad, hess)


def derivative_bundle(target, sample: RotationSample) -> DerivativeBundle:
    """Bundle for a Partition or a TracePoly with numeric coefficients."""
    if isinstance(target, Partition):
        return euclid_derivatives(target, sample)
    if isinstance(target, TracePoly):
        if target.mode.symbolic:
            raise ValueError("substitute a concrete N before numeric evaluation")
        if target.mode.n != sample.n:
            raise ValueError(f"polynomial lives at N={target.mode.n}, sample has n={sample.n}")
        n = sample.n
        value = 0.0
        grad = np.zeros((n, n))
        hess = np.zeros((n * n, n * n))
        for part, coeff in target.terms.items():
            c = float(coeff)
            piece = euclid_derivatives(part, sample)
            value += c * piece.value
            grad += c * piece.grad
            hess += c * piece.hess
        return DerivativeBundle(value, grad, hess)
    raise TypeError(f"cannot build derivatives for {type(target).__name__}")


def laplace_beltrami_value(bundle: DerivativeBundle, sample: RotationSample) -> float:
    """Evaluate the group Laplacian from a prolongation's derivative bundle."""
    n = sample.n
    u = sample.matrix
    _, lam = structure_matrices(sample)
    euclid_lap = float(np.trace(bundle.hess))
    radial = float(np.sum(u * bundle.grad))  # tr(U^t grad)
    curved = float(np.einsum("ij,ji->", lam, bundle.hess))
    return 0.5 * euclid_lap - 0.5 * (n - 1) * radial - 0.5 * curved


def lap_numeric(target, sample: RotationSample) -> float:
    """Group Laplacian of a Partition, TracePoly, or prebuilt bundle at U."""
    bundle = target if isinstance(target, DerivativeBundle) else derivative_bundle(target, sample)
    return laplace_beltrami_value(bundle, sample)


def eval_tracepoly(poly: TracePoly, sample, exact: bool = False) -> float:
    """Numeric value of a trace polynomial at a rotation.

    With ``exact=True`` the computed traces are rationalized and the
    polynomial is accumulated in exact arithmetic, removing the monomial
    cancellation that otherwise dominates high-degree reduced forms.
    """
    u = sample.matrix if isinstance(sample, RotationSample) else np.asarray(sample, dtype=float)
    if poly.mode.symbolic:
        raise ValueError("substitute a concrete N before numeric evaluation")
    if poly.mode.n != u.shape[0]:
        raise ValueError(f"polynomial lives at N={poly.mode.n}, matrix is {u.shape[0]}x{u.shape[0]}")
    top = max((max(p.parts, default=0) for p in poly.terms), default=0)
    pows = _powers(u, top)
    traces = [float(np.trace(p)) for p in pows]
    if exact:
        exact_traces = [Fraction(t) for t in traces]
        total_exact = Fraction(0)
        for part, coeff in poly.terms.items():
            term = Fraction(coeff)
            for m in part:
                term *= exact_traces[m]
            total_exact += term
        return float(total_exact)
    total = 0.0
    for part, coeff in poly.terms.items():
        term = float(coeff)
        for m in part:
            term *= traces[m]
        total += term
    return total


def sphere_lap_numeric(grad: np.ndarray, hess: np.ndarray, x: np.ndarray, radius: float) -> float:
    """Sphere Laplacian of a prolongation from its derivatives at x, |x| = R."""
    x = np.asarray(x, dtype=float)
    if abs(np.linalg.norm(x) - radius) > 1e-10:
        raise ValueError("point is not on the sphere of the given radius")
    grad = np.asarray(grad, dtype=float)
    hess = np.asarray(hess, dtype=float)
    n = x.size
    euclid_lap = float(np.trace(hess))
    second = float(x @ hess @ x)
    first = float(x @ grad)
    return euclid_lap - second / radius**2 - (n - 1) * first / radius**2


def tangential_gradient(euclid_grad: np.ndarray, u: np.ndarray) -> np.ndarray:
    """Project a Euclidean matrix-form gradient onto the tangent space at U."""
    return 0.5 * (euclid_grad - u @ euclid_grad.T @ u)


def gegenbauer(k: int, alpha: float, x: float) -> tuple[float, float, float]:
    """Value and first two derivatives of the Gegenbauer polynomial C_k^(alpha).

    Three-term recurrence k C_k = 2(k+alpha-1) x C_{k-1} - (k+2alpha-2) C_{k-2}
    with its differentiated forms; stable on [-1, 1] at desk-scale k.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    v_prev, d_prev, h_prev = 1.0, 0.0, 0.0
    if k == 0:
        return v_prev, d_prev, h_prev
    v_cur, d_cur, h_cur = 2 * alpha * x, 2 * alpha, 0.0
    for j in range(2, k + 1):
        a = 2 * (j + alpha - 1)
        b = j + 2 * alpha - 2
        v_next = (a * x * v_cur - b * v_prev) / j
        d_next = (a * (v_cur + x * d_cur) - b * d_prev) / j
        h_next = (a * (2 * d_cur + x * h_cur) - b * h_prev) / j
        v_prev, d_prev, h_prev = v_cur, d_cur, h_cur
        v_cur, d_cur, h_cur = v_next, d_next, h_next
    return v_cur, d_cur, h_cur


# ---------------------------------------------------------------------------
# finite differences (secondary, report-time oracle)


def fd_gradient(value_fn, u: np.ndarray, step: float = 1e-5) -> np.ndarray:
    n = u.shape[0]
    out = np.zeros((n, n))
    for j in range(n):
        for i in range(n):
            bump = np.zeros((n, n))
            bump[i, j] = step
            out[i, j] = (value_fn(u + bump) - value_fn(u - bump)) / (2 * step)
    return out


def fd_hessian(grad_fn, u: np.ndarray, step: float = 1e-5) -> np.ndarray:
    """Central differences of the gradient, columns in column-major order."""
    n = u.shape[0]
    out = np.zeros((n * n, n * n))
    for j in range(n):
        for i in range(n):
            bump = np.zeros((n, n))
            bump[i, j] = step
            column = (grad_fn(u + bump) - grad_fn(u - bump)) / (2 * step)
            out[:, j * n + i] = _vec(column)
    return out


# ---------------------------------------------------------------------------
# verification reports


@dataclass
class VerifyReport:
    """Outcome of one seeded cross-validation family."""

    target: str
    n: int
    params: dict
    samples: int
    seed: int
    tol: float
    max_abs_err: float
    max_rel_err: float
    passed: bool

    def to_json_obj(self) -> dict:
        return {
            "target": self.target,
            "n": self.n,
            "params": self.params,
            "samples": self.samples,
            "seed": self.seed,
            "tol": self.tol,
            "max_abs_err": self.max_abs_err,
            "max_rel_err": self.max_rel_err,
            "pass": self.passed,
        }


def _sample_streams(seed: int, samples: int):
    return np.random.SeedSequence(seed).spawn(samples)


def _err_update(errs: tuple[float, float], got: float, ref: float) -> tuple[float, float]:
    abs_err = abs(got - ref)
    rel_err = abs_err / max(1.0, abs(ref))
    return max(errs[0], abs_err), max(errs[1], rel_err)


def verify_partition(
    n: int,
    partition: Partition,
    samples: int = 20,
    seed: int = DEFAULT_SEED,
    tol: float = 1e-8,
) -> VerifyReport:
    """Compare the ambient-formula Laplacian of a trace monomial against the
    evaluated closed-form symbolic result on Haar samples."""
    symbolic = lap_partition(partition).substitute_n(n)
    errs = (0.0, 0.0)
    for stream in _sample_streams(seed, samples):
        sample = random_son(n, stream)
        got = lap_numeric(partition, sample)
        ref = eval_tracepoly(symbolic, sample)
        errs = _err_update(errs, got, ref)
    return VerifyReport(
        "laplacian",
        n,
        {"partition": partition.serialize()},
        samples,
        seed,
        tol,
        errs[0],
        errs[1],
        errs[1] <= tol,
    )


def verify_gegenbauer(
    n: int,
    k: int,
    i: int,
    j: int,
    samples: int = 20,
    seed: int = DEFAULT_SEED,
    tol: float = 1e-8,
) -> VerifyReport:
    """Check that C_k^((n-2)/2) in the (i, j) entry is an eigenfunction with
    eigenvalue -k(k+n-2)/2; i, j are 1-based entry indices."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("entry indices out of range")
    if n < 3:
        raise ValueError("needs n >= 3")
    alpha = (n - 2) / 2
    eigenvalue = -k * (k + n - 2) / 2
    row, col = i - 1, j - 1
    errs = (0.0, 0.0)
    for stream in _sample_streams(seed, samples):
        sample = random_son(n, stream)
        entry = float(sample.matrix[row, col])
        value, d1, d2 = gegenbauer(k, alpha, entry)
        grad = np.zeros((n, n))
        grad[row, col] = d1
        hess = np.zeros((n * n, n * n))
        slot = col * n + row
        hess[slot, slot] = d2
        got = lap_numeric(DerivativeBundle(value, grad, hess), sample)
        ref = eigenvalue * value
        errs = _err_update(errs, got, ref)
    return VerifyReport(
        "gegenbauer",
        n,
        {"k": k, "i": i, "j": j},
        samples,
        seed,
        tol,
        errs[0],
        errs[1],
        errs[1] <= tol,
    )


def _sphere_test_h(y: np.ndarray):
    # fixed low-degree polynomial h(y) = y1 y2 + y1^3 with analytic derivatives
    value = y[0] * y[1] + y[0] ** 3
    grad = np.zeros_like(y)
    grad[0] = y[1] + 3 * y[0] ** 2
    grad[1] = y[0]
    hess = np.zeros((y.size, y.size))
    hess[0, 0] = 6 * y[0]
    hess[0, 1] = hess[1, 0] = 1.0
    return value, grad, hess


_IDENTITY_TOLS = {
    "commutation-trace": 1e-12,
    "lambda-commutation": 1e-12,
    "gradient-fd": 1e-6,
    "hessian-fd": 1e-6,
    "tangential-gradient": 1e-12,
    "gradient-inner": 1e-10,
    "sphere-restriction": 1e-9,
}

_FD_PARTITIONS = ((2,), (3,), (2, 1), (1, 1))


def verify_identities(
    n: int,
    samples: int = 20,
    seed: int = DEFAULT_SEED,
    tol: float | None = None,
) -> list[VerifyReport]:
    """Seeded checks of the structure-matrix, gradient and restriction laws.

    Families: the commutation-matrix trace identity tr(K (A kron B)) = tr(AB);
    Lambda K = U^t kron U and K Lambda = U kron U^t; analytic gradients and
    Hessians of trace monomials against central finite differences; the
    tangential-gradient closed forms for p_1^q and p_m; the pairing
    2<grad p_m, grad p_m'> = m m' (p_{m-m'} - p_{m+m'}); and agreement of the
    group Laplacian with the sphere Laplacian for functions of one column.
    """
    errs = {name: (0.0, 0.0) for name in _IDENTITY_TOLS}
    for stream in _sample_streams(seed, samples):
        rotation_stream, aux_stream = stream.spawn(2)
        sample = random_son(n, rotation_stream)
        rng = np.random.default_rng(aux_stream)
        u = sample.matrix
        k_comm, lam = structure_matrices(sample)

        a = rng.standard_normal((n, n))
        b = rng.standard_normal((n, n))
        got = float(np.trace(k_comm @ np.kron(a, b)))
        ref = float(np.trace(a @ b))
        errs["commutation-trace"] = _err_update(errs["commutation-trace"], got, ref)

        for lhs, rhs in (
            (lam @ k_comm, np.kron(u.T, u)),
            (k_comm @ lam, np.kron(u, u.T)),
        ):
            diff = float(np.max(np.abs(lhs - rhs)))
            scale = max(1.0, float(np.max(np.abs(rhs))))
            cur = errs["lambda-commutation"]
            errs["lambda-commutation"] = (max(cur[0], diff), max(cur[1], diff / scale))

        for parts in _FD_PARTITIONS:
            partition = Partition.of(*parts)
            bundle = euclid_derivatives(partition, sample)

            def value_fn(mat, _p=partition):
                return eval_tracepoly_matrix(_p, mat)

            def grad_fn(mat, _p=partition):
                return euclid_derivatives_matrix(_p, mat)[0]

            fd_g = fd_gradient(value_fn, u)
            dg = float(np.max(np.abs(bundle.grad - fd_g)))
            scale = max(1.0, float(np.max(np.abs(bundle.grad))))
            cur = errs["gradient-fd"]
            errs["gradient-fd"] = (max(cur[0], dg), max(cur[1], dg / scale))

            fd_h = fd_hessian(grad_fn, u)
            dh = float(np.max(np.abs(bundle.hess - fd_h)))
            scale = max(1.0, float(np.max(np.abs(bundle.hess))))
            cur = errs["hessian-fd"]
            errs["hessian-fd"] = (max(cur[0], dh), max(cur[1], dh / scale))

        pows = _powers(u, 10)  # gradient pairings reach p_{m+m'} with m, m' <= 5
        pows_t = [p.T for p in pows]
        traces = [float(np.trace(p)) for p in pows]
        p1 = traces[1]
        for q in range(5 + 1):
            bundle = euclid_derivatives(Partition((1,) * q), sample)
            got_m = tangential_gradient(bundle.grad, u)
            ref_m = 0.5 * q * p1 ** (q - 1) * (np.eye(n) - pows[2]) if q else np.zeros((n, n))
            diff = float(np.max(np.abs(got_m - ref_m)))
            scale = max(1.0, float(np.max(np.abs(ref_m))) if q else 1.0)
            cur = errs["tangential-gradient"]
            errs["tangential-gradient"] = (max(cur[0], diff), max(cur[1], diff / scale))
        for m in range(1, 6):
            bundle = euclid_derivatives(Partition((m,)), sample)
            got_m = tangential_gradient(bundle.grad, u)
            ref_m = 0.5 * m * (pows_t[m - 1] - pows[m + 1])
            diff = float(np.max(np.abs(got_m - ref_m)))
            scale = max(1.0, float(np.max(np.abs(ref_m))))
            cur = errs["tangential-gradient"]
            errs["tangential-gradient"] = (max(cur[0], diff), max(cur[1], diff / scale))

        for m in range(1, 6):
            gm = tangential_gradient(euclid_derivatives(Partition((m,)), sample).grad, u)
            for mp in range(1, m + 1):
                gmp = tangential_gradient(euclid_derivatives(Partition((mp,)), sample).grad, u)
                got = 2 * float(np.sum(gm * gmp))
                base = traces[m - mp] if m != mp else float(n)
                ref = m * mp * (base - traces[m + mp])
                errs["gradient-inner"] = _err_update(errs["gradient-inner"], got, ref)

        y = math.sqrt(2.0) * u[:, -1]
        h_val, h_grad, h_hess = _sphere_test_h(y)
        f_grad = np.zeros((n, n))
        f_grad[:, -1] = math.sqrt(2.0) * h_grad
        f_hess = np.zeros((n * n, n * n))
        f_hess[(n - 1) * n:, (n - 1) * n:] = 2.0 * h_hess
        got = lap_numeric(DerivativeBundle(h_val, f_grad, f_hess), sample)
        ref = sphere_lap_numeric(h_grad, h_hess, y, math.sqrt(2.0))
        errs["sphere-restriction"] = _err_update(errs["sphere-restriction"], got, ref)

    reports = []
    for name, default_tol in _IDENTITY_TOLS.items():
        use_tol = default_tol if tol is None else tol
        max_abs, max_rel = errs[name]
        reports.append(
            VerifyReport(
                "identities",
                n,
                {"identity": name},
                samples,
                seed,
                use_tol,
                max_abs,
                max_rel,
                max_rel <= use_tol,
            )
        )
    return reports


def eval_tracepoly_matrix(partition: Partition, u: np.ndarray) -> float:
    """Value of a single trace monomial at an arbitrary square matrix."""
    top = max(partition.parts, default=0)
    pows = _powers(np.asarray(u, dtype=float), top)
    out = 1.0
    for m in partition:
        out *= float(np.trace(pows[m]))
    return out


def euclid_derivatives_matrix(partition: Partition, u: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(gradient, Hessian) of a trace monomial at an arbitrary square matrix.

    Same assembly as :func:`euclid_derivatives` but without the rotation
    invariant checks, for use at finite-difference displacement points.
    """
    u = np.asarray(u, dtype=float)
    n = u.shape[0]
    parts = partition.parts
    pows = _powers(u, max(parts, default=0))
    pows_t = [p.T for p in pows]
    k_comm = commutation_matrix(n)
    values = [float(np.trace(pows[m])) for m in parts]
    grads = [m * pows_t[m - 1] for m in parts]
    hessians = []
    for m in parts:
        if m < 2:
            hessians.append(np.zeros((n * n, n * n)))
            continue
        acc = np.zeros((n * n, n * n))
        for r in range(m - 1):
            acc += np.kron(pows_t[r], pows[m - 2 - r])
        hessians.append(m * (k_comm @ acc))

    def rest_product(skip: tuple[int, ...]) -> float:
        prod = 1.0
        for idx, val in enumerate(values):
            if idx not in skip:
                prod *= val
        return prod

    grad = np.zeros((n, n))
    hess = np.zeros((n * n, n * n))
    for i in range(len(parts)):
        grad += rest_product((i,)) * grads[i]
        hess += rest_product((i,)) * hessians[i]
    for i in range(len(parts)):
        for j in range(len(parts)):
            if i != j:
                hess += rest_product((i, j)) * np.outer(_vec(grads[i]), _vec(grads[j]))
    return grad, hess
