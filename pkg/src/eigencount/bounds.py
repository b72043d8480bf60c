"""Certified upper bounds on the number of eigenvalues outside disks.

For L = L0 + K on (C^dim, norm), the count of eigenvalues of modulus
above s (with multiplicity) is bounded through the growth of a
perturbation determinant: pick a rank-N approximant of K, bound the
determinant on an intermediate circle |lam| = t, and convert the bound
into a zero count by mapping the exterior region onto the unit disk.
Optimizing t in closed form produces the profile function phi_p built
from the Lambert W function; an elementary envelope of phi_p gives the
simpler (and weaker) power-law bound; sending N to the dimension and L0
to zero recovers the classical compact-operator count.

Every public bound here is an upper bound for the oracle count whenever
its admissibility preconditions hold; the tests enforce exactly that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .approx import ApproxSequence, Certainty, approx_numbers, koenig_constant
from .config import DEFAULT, Tolerances
from .determinants import GammaP, gamma_p_upper
from .errors import AdmissibilityError
from .numerics import NormKind, as_matrix, induced_norm, resolvent, singular_values
from .operators import OperatorModel, materialize

__all__ = [
    "ExteriorDisk",
    "Point",
    "RegionSpec",
    "BoundReport",
    "lambert_w",
    "phi_p",
    "phi_p_envelope",
    "t_star",
    "count_bound_disk",
    "count_bound_disk_simple",
    "count_bound_region",
    "koenig_count_bound",
    "moment_bound",
    "pseudospectral_epsilon",
]


# --- scalar functions -----------------------------------------------------


def lambert_w(x: float, max_iter: int = 64) -> float:
    """Principal Lambert W on [0, inf): the w >= 0 with w e^w = x.

    Halley iteration; the initial guess is x itself below e and
    log x - log log x from e upward. Residual |w e^w - x| lands well
    below 1e-13 max(1, x) on the whole domain.
    """
    if not (x >= 0.0):
        raise ValueError(f"lambert_w is defined on [0, inf), got {x}")
    if x == 0.0:
        return 0.0
    w = x if x < math.e else math.log(x) - math.log(math.log(x))
    for _ in range(max_iter):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= step
        if abs(step) <= 1e-16 * (1.0 + abs(w)):
            break
    return w


def phi_p(p: float, x: float) -> float:
    """Profile factor of the optimized disk bound.

    phi_p(x) = W((1/p) e^{1/p} x)^p / ((1/p - W((1/p) e^{1/p} x))^{p+1} x^p)
    for 0 < x < 1, continued by phi_p(0) = p e. Diverges as x -> 1.
    """
    if p <= 0:
        raise AdmissibilityError(f"p must be positive, got {p}")
    if x < 0.0 or x >= 1.0:
        raise AdmissibilityError(
            f"phi_p needs 0 <= x < 1 (strictly inside the disk), got x = {x}")
    if x == 0.0:
        return p * math.e
    w = lambert_w(math.exp(1.0 / p) / p * x)
    return (w / x) ** p / (1.0 / p - w) ** (p + 1.0)


def phi_p_envelope(p: float, x: float) -> float:
    """Elementary envelope (p+1)^{p+1} / p^p / (1-x)^{p+1} dominating phi_p."""
    if p <= 0:
        raise AdmissibilityError(f"p must be positive, got {p}")
    if x < 0.0 or x >= 1.0:
        raise AdmissibilityError(
            f"the envelope needs 0 <= x < 1, got x = {x}")
    return (p + 1.0) ** (p + 1.0) / p ** p / (1.0 - x) ** (p + 1.0)


def t_star(p: float, a: float, s: float) -> float:
    """Radius maximizing log(s/t) (t - a)^p on (a, s).

    a is the base norm plus the (N+1)-th approximation number; the
    optimizer is a / (p W((a / (p s)) e^{1/p})), with the a -> 0 limit
    s e^{-1/p}.
    """
    if p <= 0:
        raise AdmissibilityError(f"p must be positive, got {p}")
    if not (0.0 <= a < s):
        raise AdmissibilityError(
            f"need 0 <= a < s for an intermediate radius, got a = {a}, s = {s}")
    if a == 0.0:
        return s * math.exp(-1.0 / p)
    return a / (p * lambert_w(a / (p * s) * math.exp(1.0 / p)))


# --- report and region types ----------------------------------------------


@dataclass(frozen=True)
class ExteriorDisk:
    """Target region |lam| > s."""

    s: float

    def __post_init__(self):
        if not (self.s > 0.0):
            raise AdmissibilityError(f"target radius must be positive, got {self.s}")


@dataclass(frozen=True)
class Point:
    """Target set {lam0}; the bound caps the algebraic multiplicity."""

    lam0: complex


@dataclass(frozen=True)
class RegionSpec:
    """An intermediate circle radius t and a target inside the exterior region.

    t may be None, in which case the bounds optimize it themselves.
    """

    target: ExteriorDisk | Point
    t: float | None = None

    def __post_init__(self):
        if self.t is not None and not (self.t > 0.0):
            raise AdmissibilityError(f"circle radius t must be positive, got {self.t}")
        if isinstance(self.target, ExteriorDisk) and self.t is not None:
            if self.t >= self.target.s:
                raise AdmissibilityError(
                    f"need t < s so the target stays strictly outside, "
                    f"got t = {self.t}, s = {self.target.s}")
        if isinstance(self.target, Point) and self.t is not None:
            if self.t >= abs(self.target.lam0):
                raise AdmissibilityError(
                    f"need t < |lam0|, got t = {self.t}, |lam0| = {abs(self.target.lam0)}")

    @property
    def target_radius(self) -> float:
        if isinstance(self.target, ExteriorDisk):
            return self.target.s
        return abs(self.target.lam0)


@dataclass(frozen=True)
class BoundReport:
    """One computed bound with everything needed to audit it.

    bound always equals (c_p / target^p) * phi_value * alpha_sum, where
    phi_value is whichever profile factor the kind uses and alpha_sum is
    sum_{j<=N} (alpha_{N+1} + alpha_j)^p.
    """

    kind: str
    p: float
    target: complex
    n_rank: int
    t_star: float
    eps: float
    gamma_p: float
    c_p: float
    phi_value: float
    alpha_sum: float
    alpha_mode: Certainty
    bound: float
    admissible: bool = True
    certified: bool = True
    oracle_count: int | None = None

    def with_oracle(self, count: int) -> "BoundReport":
        return replace(self, oracle_count=count)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "p": self.p,
            "target": [self.target.real, self.target.imag],
            "n_rank": self.n_rank,
            "t_star": self.t_star,
            "eps": self.eps,
            "gamma_p": self.gamma_p,
            "c_p": self.c_p,
            "phi_value": self.phi_value,
            "alpha_sum": self.alpha_sum,
            "alpha_mode": self.alpha_mode.value,
            "bound": self.bound,
            "admissible": self.admissible,
            "certified": self.certified,
            "oracle_count": self.oracle_count,
        }


# --- shared plumbing -------------------------------------------------------


def _prepared(model: OperatorModel, tol: Tolerances):
    l0, k = materialize(model)
    norm_l0 = induced_norm(l0, model.norm)
    alpha = approx_numbers(k, model.norm, tol)
    return l0, k, norm_l0, alpha


def _alpha_mode(alpha: ApproxSequence) -> Certainty:
    return Certainty.EXACT if alpha.all_exact else Certainty.UPPER_BOUND


def _candidate_ranks(n_rank: int | None, dim: int):
    if n_rank is None:
        return range(0, dim + 1)
    if n_rank < 0 or n_rank > dim:
        raise AdmissibilityError(
            f"N must lie in [0, dim] = [0, {dim}], got {n_rank}")
    return [n_rank]


# --- the bounds ------------------------------------------------------------


def count_bound_disk(model: OperatorModel, p: float, s: float,
                     n_rank: int | None = None, gamma: GammaP | None = None,
                     tol: Tolerances = DEFAULT) -> BoundReport:
    """Optimized-profile bound on the eigenvalue count outside |lam| = s.

    bound = (C_p / s^p) phi_p((||L0|| + alpha_{N+1}) / s)
    sum_{j<=N} (alpha_{N+1} + alpha_j)^p. With N omitted, every
    admissible N in [0, dim] is tried and the smallest bound wins
    (N = dim is always admissible once s > ||L0||).
    """
    if p <= 0:
        raise AdmissibilityError(f"p must be positive, got {p}")
    l0, k, norm_l0, alpha = _prepared(model, tol)
    if s <= norm_l0:
        raise AdmissibilityError(
            f"need s > ||L0|| = {norm_l0:.12g}, got s = {s}; no exterior disk "
            "clears the base spectrum otherwise")
    if gamma is None:
        gamma = gamma_p_upper(p)

    best = None
    for n in _candidate_ranks(n_rank, model.dim):
        a_next = alpha.value_at(n + 1)
        if a_next >= s - norm_l0:
            if n_rank is not None:
                raise AdmissibilityError(
                    f"alpha_{n + 1} = {a_next:.12g} must stay below "
                    f"s - ||L0|| = {s - norm_l0:.12g} for N = {n}")
            continue
        phi = phi_p(p, (norm_l0 + a_next) / s)
        total = alpha.head_power_sum(p, n, offset=a_next)
        value = gamma.c_p / s ** p * phi * total
        if best is None or value < best[0]:
            best = (value, n, a_next, phi, total)
    if best is None:
        raise AdmissibilityError(
            f"no admissible N for s = {s} (this cannot happen once s > ||L0||)")

    value, n, a_next, phi, total = best
    t_opt = t_star(p, norm_l0 + a_next, s)
    return BoundReport(
        kind="disk_phi", p=p, target=complex(s), n_rank=n, t_star=t_opt,
        eps=t_opt - norm_l0, gamma_p=gamma.value, c_p=gamma.c_p, phi_value=phi,
        alpha_sum=total, alpha_mode=_alpha_mode(alpha), bound=value)


def count_bound_disk_simple(model: OperatorModel, p: float, s: float,
                            n_rank: int | None = None, gamma: GammaP | None = None,
                            tol: Tolerances = DEFAULT) -> BoundReport:
    """Power-law bound C_p (p+1)^{p+1}/p^p s / (s - ||L0|| - alpha_{N+1})^{p+1}
    times the alpha power sum; always at least count_bound_disk."""
    if p <= 0:
        raise AdmissibilityError(f"p must be positive, got {p}")
    l0, k, norm_l0, alpha = _prepared(model, tol)
    if s <= norm_l0:
        raise AdmissibilityError(
            f"need s > ||L0|| = {norm_l0:.12g}, got s = {s}")
    if gamma is None:
        gamma = gamma_p_upper(p)

    best = None
    for n in _candidate_ranks(n_rank, model.dim):
        a_next = alpha.value_at(n + 1)
        if a_next >= s - norm_l0:
            if n_rank is not None:
                raise AdmissibilityError(
                    f"alpha_{n + 1} = {a_next:.12g} must stay below "
                    f"s - ||L0|| = {s - norm_l0:.12g} for N = {n}")
            continue
        phi = phi_p_envelope(p, (norm_l0 + a_next) / s)
        total = alpha.head_power_sum(p, n, offset=a_next)
        value = gamma.c_p / s ** p * phi * total
        if best is None or value < best[0]:
            best = (value, n, a_next, phi, total)
    if best is None:
        raise AdmissibilityError(
            f"no admissible N for s = {s} (this cannot happen once s > ||L0||)")

    value, n, a_next, phi, total = best
    t_opt = t_star(p, norm_l0 + a_next, s)
    return BoundReport(
        kind="disk_simple", p=p, target=complex(s), n_rank=n, t_star=t_opt,
        eps=t_opt - norm_l0, gamma_p=gamma.value, c_p=gamma.c_p, phi_value=phi,
        alpha_sum=total, alpha_mode=_alpha_mode(alpha), bound=value)


def _golden_max(f, lo: float, hi: float, iters: int = 200) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = hi - invphi * (hi - lo)
    d = lo + invphi * (hi - lo)
    fc, fd = f(c), f(d)
    for _ in range(iters):
        if hi - lo < 1e-13 * max(1.0, abs(hi)):
            break
        if fc < fd:
            lo, c, fc = c, d, fd
            d = lo + invphi * (hi - lo)
            fd = f(d)
        else:
            hi, d, fd = d, c, fc
            c = hi - invphi * (hi - lo)
            fc = f(c)
    return c if fc >= fd else d


def count_bound_region(model: OperatorModel, p: float, region: RegionSpec,
                       n_rank: int | None = None, gamma: GammaP | None = None,
                       epsilon: float | None = None,
                       tol: Tolerances = DEFAULT) -> BoundReport:
    """Bound through an explicit intermediate circle |lam| = t.

    bound = C_p / ((eps - alpha_{N+1})^p log(1/r)) sum_{j<=N}
    (alpha_{N+1} + alpha_j)^p with r = t / target_radius and, in
    certified mode, eps = t - ||L0||. When region.t is None the product
    (eps - alpha_{N+1})^p log(1/r) is maximized over t by golden-section
    search. Passing an explicit epsilon (from sampling) marks the report
    non-certified.
    """
    if p <= 0:
        raise AdmissibilityError(f"p must be positive, got {p}")
    l0, k, norm_l0, alpha = _prepared(model, tol)
    s_target = region.target_radius
    if s_target <= norm_l0:
        raise AdmissibilityError(
            f"target radius {s_target:.12g} must exceed ||L0|| = {norm_l0:.12g}")
    if gamma is None:
        gamma = gamma_p_upper(p)

    best = None
    for n in _candidate_ranks(n_rank, model.dim):
        a_next = alpha.value_at(n + 1)
        a = norm_l0 + a_next
        if a >= s_target:
            if n_rank is not None:
                raise AdmissibilityError(
                    f"alpha_{n + 1} = {a_next:.12g} must stay below "
                    f"target - ||L0|| = {s_target - norm_l0:.12g} for N = {n}")
            continue
        if region.t is None:
            t = _golden_max(lambda t_: (t_ - a) ** p * math.log(s_target / t_),
                            a, s_target)
        else:
            t = region.t
            if t <= a:
                raise AdmissibilityError(
                    f"circle radius t = {t} must exceed ||L0|| + alpha_{n + 1} "
                    f"= {a:.12g}")
        r = t / s_target
        if not (0.0 < r < 1.0):
            raise AdmissibilityError(
                f"conformal radius r = t / target = {r:.12g} is degenerate; "
                "need 0 < r < 1")
        eps = (t - norm_l0) if epsilon is None else epsilon
        if eps <= a_next:
            raise AdmissibilityError(
                f"pseudospectral gap eps = {eps:.12g} must exceed "
                f"alpha_{n + 1} = {a_next:.12g}")
        total = alpha.head_power_sum(p, n, offset=a_next)
        profile = s_target ** p / ((eps - a_next) ** p * math.log(1.0 / r))
        value = gamma.c_p / s_target ** p * profile * total
        if best is None or value < best[0]:
            best = (value, n, t, eps, total, profile)
    if best is None:
        raise AdmissibilityError(
            f"no admissible N for target radius {s_target}")

    value, n, t, eps, total, phi = best
    target = (complex(s_target) if isinstance(region.target, ExteriorDisk)
              else complex(region.target.lam0))
    return BoundReport(
        kind="region", p=p, target=target, n_rank=n, t_star=t, eps=eps,
        gamma_p=gamma.value, c_p=gamma.c_p, phi_value=phi, alpha_sum=total,
        alpha_mode=_alpha_mode(alpha), bound=value,
        certified=epsilon is None)


def koenig_count_bound(k_matrix, p: float, s: float) -> float:
    """Classical compact bound 2 (2e)^{p/2} / s^p sum_j sigma_j^p.

    Valid for L = K (zero base operator); the eigenvalue multiset of a
    matrix does not depend on the ambient norm, so singular values may be
    used whatever norm the model carries.
    """
    if p <= 0:
        raise AdmissibilityError(f"p must be positive, got {p}")
    if s <= 0:
        raise AdmissibilityError(f"s must be positive, got {s}")
    sv = singular_values(as_matrix(k_matrix))
    return koenig_constant(p) / s ** p * float(np.sum(sv ** p))


def moment_bound(model: OperatorModel, p: float, q: float,
                 gamma: GammaP | None = None, tol: Tolerances = DEFAULT) -> float:
    """Upper bound for sum over |lambda| > ||L0|| of (|lambda| - ||L0||)^q.

    Integrates the power-law count bound: with a = (p+1)^{p+1}/p^p,
    q C_p a [ ||L0||/(q-p-1) + ||K||/(q-p) ] ||K||^{q-p-1} sum_j alpha_j^p.
    Needs q > p + 1 when L0 is nonzero; q > p suffices for L0 = 0, where
    the bound is q C_p a ||K||^{q-p}/(q-p) sum_j alpha_j^p.
    """
    if p <= 0:
        raise AdmissibilityError(f"p must be positive, got {p}")
    l0, k, norm_l0, alpha = _prepared(model, tol)
    norm_k = induced_norm(k, model.norm)
    if gamma is None:
        gamma = gamma_p_upper(p)
    envelope = (p + 1.0) ** (p + 1.0) / p ** p
    alpha_sum = alpha.head_power_sum(p, model.dim)

    if norm_l0 == 0.0:
        if q <= p:
            raise AdmissibilityError(
                f"moment exponent q = {q} must exceed p = {p} when L0 = 0")
        if norm_k == 0.0:
            return 0.0
        return q * gamma.c_p * envelope * norm_k ** (q - p) / (q - p) * alpha_sum
    if q <= p + 1.0:
        raise AdmissibilityError(
            f"moment exponent q = {q} must exceed p + 1 = {p + 1.0} when L0 != 0")
    if norm_k == 0.0:
        return 0.0
    bracket = norm_l0 / (q - p - 1.0) + norm_k / (q - p)
    return q * gamma.c_p * envelope * bracket * norm_k ** (q - p - 1.0) * alpha_sum


def pseudospectral_epsilon(l0, t: float, kind: NormKind, samples: int = 64,
                           tol: Tolerances = DEFAULT) -> float:
    """Sampled pseudospectral gap 1 / max ||(lam - L0)^{-1}|| on |lam| = t.

    The resolvent norm of the exterior region peaks on the boundary
    circle, so sampling it there estimates the certified gap from above;
    results derived from this value are therefore NOT certified and are
    flagged as such by the callers.
    """
    l0 = as_matrix(l0)
    if samples < 4:
        raise ValueError("need at least 4 boundary samples")
    worst = 0.0
    eye = np.eye(l0.shape[0], dtype=complex)
    for theta in np.linspace(0.0, 2.0 * math.pi, samples, endpoint=False):
        lam = t * complex(math.cos(theta), math.sin(theta))
        if kind is NormKind.L2:
            smallest = float(np.linalg.svd(lam * eye - l0, compute_uv=False)[-1])
            norm = math.inf if smallest == 0.0 else 1.0 / smallest
        else:
            norm = induced_norm(resolvent(l0, lam, tol), kind)
        worst = max(worst, norm)
    if worst == 0.0 or math.isinf(worst):
        raise AdmissibilityError(
            f"resolvent norm on |lam| = {t} is degenerate; the circle meets "
            "the base spectrum")
    return 1.0 / worst
