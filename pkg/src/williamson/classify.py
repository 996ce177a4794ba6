"""Class membership tests and certificate verification.

Four classes are distinguished, nested as ``Pd ⊂ SpPsd ⊂ EigSpSm ⊂ SpSm``:

* ``Pd``: positive definite.
* ``SpPsd``: positive semidefinite with a symplectic kernel.
* ``EigSpSm``: the negative, zero and positive eigenspaces are pairwise
  symplectically orthogonal symplectic subspaces, each invariant under ``JA``.
* ``SpSm``: some triple of subspaces (a *certificate*) satisfies the three
  existence conditions.  Membership is only verified for a supplied
  certificate, never searched for.

Every check returns a :class:`MembershipReport` whose verdict is the
conjunction of its condition records.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

import numpy as np

from .linalg import RANK_TOL, InertiaSignature, eigh, sign_groups, sym_matrix, zero_threshold
from .symplectic import (
    ANGLE_TOL,
    SYMP_TOL,
    Subspace,
    SymplecticOrthogonalProjection,
    apply_j,
    as_subspace,
    gram,
    largest_principal_angle,
    matrix_range,
    symplectic_defect,
)

CHECK_TOL = 1e-7


class EigenspaceTriple(NamedTuple):
    """Eigenspaces of a symmetric matrix grouped by eigenvalue sign."""

    neg: Subspace
    zero: Subspace
    pos: Subspace


@dataclass(frozen=True)
class ConditionRecord:
    """One checked condition.

    ``rule`` is how ``value`` is compared with ``threshold`` (``"<="``,
    ``">"``, ``"<"``, ``">="``); ``condition`` is the existence condition the
    record belongs to (``"i"``, ``"ii"``, ``"iii"``) or ``"psd"``/``"pd"``.
    """

    name: str
    condition: str
    value: float
    threshold: float
    rule: str
    passed: bool
    message: str = ""


@dataclass(frozen=True)
class MembershipReport:
    cls: str
    verdict: bool
    conditions: tuple
    inertia: InertiaSignature
    margin: float = float("inf")

    def failed(self):
        return [c for c in self.conditions if not c.passed]

    def describe(self):
        """One-paragraph human summary naming any violated conditions."""
        lines = [f"{self.cls}: {'yes' if self.verdict else 'no'}"]
        for c in self.failed():
            lines.append(f"  condition ({c.condition}) violated: {c.message or c.name}")
        if self.cls == "EigSpSm" and not self.verdict:
            lines.append("  SpSm: undetermined without certificate")
        return "\n".join(lines)


def _compare(value, threshold, rule):
    return {
        "<=": value <= threshold,
        "<": value < threshold,
        ">": value > threshold,
        ">=": value >= threshold,
    }[rule]


def _record(name, condition, value, threshold, rule, message=""):
    value = float(value)
    passed = bool(_compare(value, threshold, rule))
    return ConditionRecord(name, condition, value, float(threshold), rule, passed, "" if passed else message)


def _report(cls, conditions, inertia, margin=float("inf")):
    conditions = tuple(conditions)
    return MembershipReport(cls, all(c.passed for c in conditions), conditions, inertia, float(margin))


_LABELS = {"neg": "E-", "zero": "E0", "pos": "E+"}
_WORDS = {
    "neg": "negative eigenspace",
    "zero": "kernel (zero eigenspace)",
    "pos": "positive eigenspace",
}


def eigenspace_split(a, rank_tol=RANK_TOL):
    w, v = eigh(a)
    neg, zero, pos = sign_groups(w, rank_tol)
    return EigenspaceTriple(Subspace(v[:, neg]), Subspace(v[:, zero]), Subspace(v[:, pos]))


def _spectrum_info(a, rank_tol):
    w, v = eigh(a)
    neg, zero, pos = sign_groups(w, rank_tol)
    thr = zero_threshold(w, rank_tol)
    margin = float(np.min(np.abs(np.abs(w) - thr))) if len(w) else float("inf")
    sig = InertiaSignature(int(neg.sum()), int(zero.sum()), int(pos.sum()))
    triple = EigenspaceTriple(Subspace(v[:, neg]), Subspace(v[:, zero]), Subspace(v[:, pos]))
    return w, thr, sig, triple, margin


def _invariance_residual(a, w, a_op):
    """``|(I - Q Q^T) J A Q|_F / (|A|_op |Q|_F)`` for orthonormal ``Q``."""
    if w.dim == 0 or a_op == 0:
        return 0.0
    q = w.orthonormal
    jaq = apply_j(a @ q)
    res = jaq - q @ (q.T @ jaq)
    return np.linalg.norm(res) / (a_op * np.linalg.norm(q))


def _subspace_conditions(a, named, symp_tol, check_tol, words):
    """Symplecticity, pairwise symplectic orthogonality and JA-invariance."""
    out = []
    for key, w in named:
        if w.dim:
            out.append(
                _record(
                    f"symplectic({_LABELS[key]})", "i", symplectic_defect(w), symp_tol, ">",
                    f"{words[key]} is not a symplectic subspace",
                )
            )
    for (k1, w1), (k2, w2) in combinations(named, 2):
        if w1.dim and w2.dim:
            val = np.linalg.norm(gram(w1.orthonormal, w2.orthonormal))
            out.append(
                _record(
                    f"symplectic_orthogonal({_LABELS[k1]},{_LABELS[k2]})", "i", val, check_tol, "<=",
                    f"{words[k1]} and {words[k2]} are not symplectically orthogonal",
                )
            )
    a_op = np.linalg.norm(a, 2)
    for key, w in named:
        if w.dim:
            out.append(
                _record(
                    f"invariant_under_JA({_LABELS[key]})", "ii", _invariance_residual(a, w, a_op),
                    check_tol, "<=", f"{words[key]} is not invariant under JA",
                )
            )
    return out


def check_pd(a, rank_tol=RANK_TOL):
    a = sym_matrix(a)
    w, thr, sig, _, margin = _spectrum_info(a, rank_tol)
    rec = _record("positive_definite", "pd", w[0], thr, ">", f"smallest eigenvalue {w[0]:.6g} is not positive")
    return _report("Pd", [rec], sig, margin)


def check_eigsps_membership(a, rank_tol=RANK_TOL, symp_tol=SYMP_TOL, check_tol=CHECK_TOL):
    """Membership of ``a`` in EigSpSm, tested on its sign-grouped eigenspaces.

    Definiteness on each eigenspace holds by construction and is recorded as
    passed.
    """
    a = sym_matrix(a)
    _, _, sig, triple, margin = _spectrum_info(a, rank_tol)
    named = list(zip(("neg", "zero", "pos"), triple))
    conds = _subspace_conditions(a, named, symp_tol, check_tol, _WORDS)
    conds.append(ConditionRecord("sign_definite(eigenspaces)", "iii", 0.0, 0.0, "<=", True, ""))
    return _report("EigSpSm", conds, sig, margin)


def check_sppsd(a, rank_tol=RANK_TOL, symp_tol=SYMP_TOL):
    """Positive semidefinite with symplectic (or trivial) kernel."""
    a = sym_matrix(a)
    w, thr, sig, triple, margin = _spectrum_info(a, rank_tol)
    conds = [
        _record("positive_semidefinite", "psd", w[0], -thr, ">=",
                f"smallest eigenvalue {w[0]:.6g} is negative")
    ]
    if triple.zero.dim:
        conds.append(
            _record("symplectic(ker A)", "i", symplectic_defect(triple.zero), symp_tol, ">",
                    "kernel is not a symplectic subspace")
        )
    return _report("SpPsd", conds, sig, margin)


def _restricted_eigs(b, w):
    q = w.orthonormal
    c = q.T @ b @ q
    return np.linalg.eigvalsh((c + c.T) / 2)


def verify_certificate(a, wneg, wzero, wpos, rank_tol=RANK_TOL, symp_tol=SYMP_TOL,
                       check_tol=CHECK_TOL, angle_tol=ANGLE_TOL):
    """Check a subspace triple against the three existence conditions.

    Condition (i): dimensions equal the inertia, each subspace symplectic,
    pairwise symplectically orthogonal.  Condition (ii): each invariant under
    ``JA``.  Condition (iii): ``A`` negative definite on ``wneg``, positive
    definite on ``wpos``, and ``ker A = wzero``.
    """
    a = sym_matrix(a)
    dim = a.shape[0]
    wneg, wzero, wpos = (as_subspace(w, dim) for w in (wneg, wzero, wpos))
    _, thr, sig, triple, margin = _spectrum_info(a, rank_tol)
    words = {"neg": "W-", "zero": "W0", "pos": "W+"}
    conds = [
        _record("dimensions_match_inertia", "i",
                abs(wneg.dim - sig.nu) + abs(wzero.dim - sig.xi) + abs(wpos.dim - sig.pi), 0, "<=",
                f"dimensions ({wneg.dim},{wzero.dim},{wpos.dim}) differ from inertia {tuple(sig)}")
    ]
    named = [("neg", wneg), ("zero", wzero), ("pos", wpos)]
    conds += _subspace_conditions(a, named, symp_tol, check_tol, words)
    if wneg.dim:
        top = _restricted_eigs(a, wneg)[-1]
        conds.append(_record("negative_definite(W-)", "iii", top, -thr, "<",
                             f"A is not negative definite on W- (largest Rayleigh value {top:.6g})"))
    if wpos.dim:
        low = _restricted_eigs(a, wpos)[0]
        conds.append(_record("positive_definite(W+)", "iii", low, thr, ">",
                             f"A is not positive definite on W+ (smallest Rayleigh value {low:.6g})"))
    conds.append(_record("kernel_equals(W0)", "iii", largest_principal_angle(triple.zero, wzero), angle_tol,
                         "<=", "W0 is not the kernel of A"))
    return _report("CertifiedSpSm", conds, sig, margin)


def _projection_matrix(p, dim):
    if p is None:
        return np.zeros((dim, dim))
    if isinstance(p, SymplecticOrthogonalProjection):
        return p.matrix
    return np.asarray(p, dtype=float)


def projection_certificate(a, pneg, pzero, ppos, rank_tol=RANK_TOL, check_tol=CHECK_TOL):
    """Check three projections against the projection form of the conditions.

    (i) ``Π-Π0 = Π-Π+ = Π0Π+ = 0`` and ``Π- + Π0 + Π+ = I`` (plus idempotence);
    (ii) ``A = Π-^T A Π- + Π+^T A Π+``; (iii) ``Π-^T A Π-`` negative definite
    on ``ran Π-`` and ``Π+^T A Π+`` positive definite on ``ran Π+``.
    """
    a = sym_matrix(a)
    dim = a.shape[0]
    mats = {k: _projection_matrix(p, dim) for k, p in (("neg", pneg), ("zero", pzero), ("pos", ppos))}
    _, thr, sig, _, margin = _spectrum_info(a, rank_tol)
    pscale = max([1.0] + [np.linalg.norm(m) for m in mats.values()])
    conds = []
    for k1, k2 in (("neg", "zero"), ("neg", "pos"), ("zero", "pos")):
        val = np.linalg.norm(mats[k1] @ mats[k2]) / pscale**2
        conds.append(_record(f"product_zero(P{_LABELS[k1][1:]},P{_LABELS[k2][1:]})", "i", val, check_tol, "<=",
                             "projections do not annihilate each other"))
    val = np.linalg.norm(sum(mats.values()) - np.eye(dim)) / pscale
    conds.append(_record("resolution_of_identity", "i", val, check_tol, "<=", "projections do not sum to I"))
    for k, m in mats.items():
        val = np.linalg.norm(m @ m - m) / pscale**2
        conds.append(_record(f"idempotent(P{_LABELS[k][1:]})", "i", val, check_tol, "<=",
                             "projection is not idempotent"))
    parts = {k: mats[k].T @ a @ mats[k] for k in ("neg", "pos")}
    ascale = max(1.0, np.linalg.norm(a)) * pscale**2
    val = np.linalg.norm(a - parts["neg"] - parts["pos"]) / ascale
    conds.append(_record("reconstruction", "ii", val, check_tol, "<=",
                         "A differs from P-^T A P- + P+^T A P+"))
    rng = matrix_range(mats["neg"], rank_tol)
    if rng.dim:
        top = _restricted_eigs(parts["neg"], rng)[-1]
        conds.append(_record("negative_definite(ran P-)", "iii", top, -thr, "<",
                             "P-^T A P- is not negative definite on ran P-"))
    rng = matrix_range(mats["pos"], rank_tol)
    if rng.dim:
        low = _restricted_eigs(parts["pos"], rng)[0]
        conds.append(_record("positive_definite(ran P+)", "iii", low, thr, ">",
                             "P+^T A P+ is not positive definite on ran P+"))
    return _report("CertifiedSpSm", conds, sig, margin)
