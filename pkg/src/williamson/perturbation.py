"""The paired diagonal ``D̂(A)`` and perturbation bounds on its entries.

For any symmetric ``A`` with positive and negative parts ``A+`` and ``A-``,

    D̂(A) = Eig(|K+|) + Eig(-|K-|),   K± = A±^{1/2} J A±^{1/2},

where ``Eig`` lists eigenvalues in decreasing order.  The skew matrices
``K±`` have eigenvalues ``±iβ``, so ``|K±|`` has each ``β`` twice and the
entries of ``D̂(A)`` come in equal pairs.  On EigSpSm the pair values are the
symplectic eigenvalues; elsewhere they are only the entries of ``D̂``.

The bound checked here is

    |||D̂(A) - D̂(B)||| <= (|A+^{1/2}| + |B+^{1/2}|) ||| |A+ - B+|^{1/2} |||
                        + (|A-^{1/2}| + |B-^{1/2}|) ||| |A- - B-|^{1/2} |||

with ``|.|`` the operator norm and ``|||.|||`` an operator, Frobenius or
trace norm.
"""

import csv
import io
from dataclasses import dataclass

import numpy as np

from .decompose import skew_canonical
from .linalg import NORM_KINDS, RANK_TOL, eigh, norm, norm_kind, norm_of_singular_values, psd_sqrt, sign_groups, sym_matrix
from .symplectic import apply_j

SLACK = 1e-9
CSV_HEADER = ("epsilon", "norm_kind", "lhs", "rhs", "ratio")


@dataclass(frozen=True)
class DHat:
    """The ``2n`` diagonal entries of ``D̂(A)`` in decreasing order."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=float)
        if v.ndim != 1 or len(v) % 2:
            raise ValueError("D̂ must have an even number of entries")
        v = np.sort(v)[::-1].copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def d(self):
        """One value per equal pair, decreasing."""
        return self.values[::2]

    def pairing_residual(self):
        """Largest gap inside an adjacent pair."""
        if len(self.values) == 0:
            return 0.0
        return float(np.max(np.abs(self.values[::2] - self.values[1::2])))

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class PartRoots:
    """Positive/negative parts of a symmetric matrix and their square roots."""

    neg: np.ndarray
    pos: np.ndarray
    root_neg: np.ndarray
    root_pos: np.ndarray


def part_roots(a, rank_tol=RANK_TOL):
    """``A-``, ``A+``, ``A-^{1/2}``, ``A+^{1/2}`` from one eigendecomposition."""
    w, v = eigh(a)
    neg, _, pos = sign_groups(w, rank_tol)

    def build(mask, vals):
        x = (v[:, mask] * vals) @ v[:, mask].T
        return (x + x.T) / 2

    return PartRoots(
        neg=build(neg, -w[neg]),
        pos=build(pos, w[pos]),
        root_neg=build(neg, np.sqrt(-w[neg])),
        root_pos=build(pos, np.sqrt(w[pos])),
    )


def _abs_eig(root, rank_tol):
    """``Eig(|R J R|)`` in decreasing order, from the skew block values."""
    betas = skew_canonical(root @ apply_j(root), rank_tol).betas
    out = np.zeros(root.shape[0])
    b = np.repeat(np.sort(betas)[::-1], 2)
    out[: len(b)] = b
    return out


def d_hat(a, rank_tol=RANK_TOL):
    """``D̂(A)`` for any symmetric ``A`` of even dimension."""
    a = sym_matrix(a)
    parts = part_roots(a, rank_tol)
    plus = _abs_eig(parts.root_pos, rank_tol)
    minus = -_abs_eig(parts.root_neg, rank_tol)[::-1]
    return DHat(plus + minus)


@dataclass(frozen=True)
class PerturbationReport:
    lhs: float
    rhs: float
    kind: str
    term_pos: float
    term_neg: float
    slack: float

    def __post_init__(self):
        for name in ("lhs", "rhs", "term_pos", "term_neg", "slack"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def passed(self):
        return self.lhs <= self.rhs + self.slack

    @property
    def ratio(self):
        """Tightness ``lhs / rhs``; zero-safe at ``A = B``."""
        return self.lhs / max(self.rhs, 1e-300)


def _pair(a, b):
    a, b = sym_matrix(a), sym_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a, b


def default_slack(a, b):
    return SLACK * max(1.0, np.linalg.norm(a), np.linalg.norm(b))


def _root_norm(x, kind):
    """``||| |X|^{1/2} |||`` for symmetric ``X``."""
    s = np.abs(np.linalg.eigvalsh(x))
    return norm_of_singular_values(np.sqrt(s), kind)


def bound_main(a, b, kind="operator", rank_tol=RANK_TOL):
    """Both sides of the perturbation bound in a chosen unitarily invariant norm."""
    kind = norm_kind(kind)
    a, b = _pair(a, b)
    pa, pb = part_roots(a, rank_tol), part_roots(b, rank_tol)
    diff = d_hat(a, rank_tol).values - d_hat(b, rank_tol).values
    lhs = norm_of_singular_values(diff, kind)
    op = np.linalg.norm
    term_pos = (op(pa.root_pos, 2) + op(pb.root_pos, 2)) * _root_norm(pa.pos - pb.pos, kind)
    term_neg = (op(pa.root_neg, 2) + op(pb.root_neg, 2)) * _root_norm(pa.neg - pb.neg, kind)
    return PerturbationReport(lhs, term_pos + term_neg, kind, term_pos, term_neg, default_slack(a, b))


def bound_operator(a, b, rank_tol=RANK_TOL):
    """Operator-norm form: ``max_i |d_i(A) - d_i(B)|`` against ``|A± - B±|^{1/2}``."""
    a, b = _pair(a, b)
    pa, pb = part_roots(a, rank_tol), part_roots(b, rank_tol)
    lhs = float(np.max(np.abs(d_hat(a, rank_tol).d - d_hat(b, rank_tol).d)))
    op = lambda x: np.linalg.norm(x, 2)
    term_pos = (op(pa.root_pos) + op(pb.root_pos)) * np.sqrt(op(pa.pos - pb.pos))
    term_neg = (op(pa.root_neg) + op(pb.root_neg)) * np.sqrt(op(pa.neg - pb.neg))
    return PerturbationReport(lhs, term_pos + term_neg, "operator", term_pos, term_neg, default_slack(a, b))


def bound_frobenius(a, b, rank_tol=RANK_TOL):
    """Frobenius form: ``sqrt(2) (sum_i |d_i(A) - d_i(B)|^2)^{1/2}`` against
    ``Tr(|A± - B±|)^{1/2}``."""
    a, b = _pair(a, b)
    pa, pb = part_roots(a, rank_tol), part_roots(b, rank_tol)
    dd = d_hat(a, rank_tol).d - d_hat(b, rank_tol).d
    lhs = float(np.sqrt(2.0) * np.sqrt(np.sum(dd**2)))
    op = lambda x: np.linalg.norm(x, 2)
    tr_abs = lambda x: float(np.sum(np.abs(np.linalg.eigvalsh(x))))
    term_pos = (op(pa.root_pos) + op(pb.root_pos)) * np.sqrt(tr_abs(pa.pos - pb.pos))
    term_neg = (op(pa.root_neg) + op(pb.root_neg)) * np.sqrt(tr_abs(pa.neg - pb.neg))
    return PerturbationReport(lhs, term_pos + term_neg, "frobenius", term_pos, term_neg, default_slack(a, b))


def sqrt_lemma(a, b, kind="operator"):
    """``(|||A^{1/2} - B^{1/2}|||, ||| |A - B|^{1/2} |||)`` for psd ``A, B``."""
    a, b = sym_matrix(a, even=False), sym_matrix(b, even=False)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return norm(psd_sqrt(a) - psd_sqrt(b), kind), _root_norm(a - b, kind)


def lidskii_wielandt(x, y, kind="operator"):
    """``(|||Eig(X) - Eig(Y)|||, |||X - Y|||)`` for symmetric ``X, Y``."""
    x = sym_matrix(x, even=False)
    y = sym_matrix(y, even=False)
    diff = np.linalg.eigvalsh(x) - np.linalg.eigvalsh(y)
    return norm_of_singular_values(diff, kind), norm(x - y, kind)


@dataclass(frozen=True)
class SweepRow:
    epsilon: float
    kind: str
    lhs: float
    rhs: float
    ratio: float


@dataclass(frozen=True)
class SweepTable:
    rows: tuple

    def by_kind(self, kind):
        kind = norm_kind(kind)
        return [r for r in self.rows if r.kind == kind]

    def envelope_coefficient(self, kind):
        """``max rhs / sqrt(eps)`` over rows with ``eps > 0``."""
        c = [r.rhs / np.sqrt(r.epsilon) for r in self.by_kind(kind) if r.epsilon > 0]
        return max(c) if c else 0.0

    def within_envelope(self, kind, slack=0.0):
        """Every row satisfies ``lhs <= rhs`` and ``lhs <= C sqrt(eps)``."""
        c = self.envelope_coefficient(kind)
        return all(
            r.lhs <= r.rhs + slack and r.lhs <= c * np.sqrt(r.epsilon) + slack for r in self.by_kind(kind)
        )

    def to_csv(self):
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in self.rows:
            w.writerow([fmt(r.epsilon), r.kind, fmt(r.lhs), fmt(r.rhs), fmt(r.ratio)])
        return buf.getvalue()


def fmt(x):
    """17 significant digits, enough to round-trip any double."""
    return f"{float(x):.17g}"


def sweep(a, direction, epsilons, kinds=NORM_KINDS, rank_tol=RANK_TOL):
    """Evaluate the bound along ``B = A + eps * direction``.

    Rows are ordered by ``eps`` and then by norm kind.
    """
    a = sym_matrix(a)
    e = sym_matrix(direction)
    if a.shape != e.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {e.shape}")
    kinds = [norm_kind(k) for k in kinds]
    rows = []
    for eps in sorted(float(x) for x in epsilons):
        b = a + eps * e
        for k in kinds:
            rep = bound_main(a, b, k, rank_tol)
            rows.append(SweepRow(eps, k, rep.lhs, rep.rhs, rep.ratio))
    return SweepTable(tuple(rows))


__all__ = [
    "CSV_HEADER",
    "DHat",
    "PartRoots",
    "PerturbationReport",
    "SweepRow",
    "SweepTable",
    "bound_frobenius",
    "bound_main",
    "bound_operator",
    "d_hat",
    "default_slack",
    "fmt",
    "lidskii_wielandt",
    "part_roots",
    "sqrt_lemma",
    "sweep",
]
