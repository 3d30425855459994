"""Leaf enumeration for the cyclic Calogero-Moser space with parameters (a, k), a != 0.

The space with parameters ``(a, k)`` is the framed cyclic quiver variety
at ``(n delta, theta)``.  After moving to a standard parameter, leaves are
indexed by the dimension vectors

    d' = Res(Core_J(lam)) + (n - n') delta,   lam in P_nu[n' ell + |nu|],

ordered by ``d'' - d'`` being a nonnegative combination of ``alpha_j``,
``j`` in ``J``.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, NamedTuple, Optional, Sequence

from .affine_weyl import (
    DimVector,
    ParamVector,
    Word,
    act_dim,
    as_params,
    decompose_dim,
    delta,
    inverse,
    is_standard,
    sigma,
    standardize,
    verify_parabolic_stabilizer,
)
from .errors import DomainError
from .partitions import Partition, enumerate_partitions, is_j_core, j_core, residue_vector


@dataclass(frozen=True)
class CMParams:
    ell: int
    n: int
    a: Fraction
    k: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "k", as_params(self.k))
        if self.ell < 1 or self.n < 0:
            raise DomainError(f"need ell >= 1 and n >= 0, got ell={self.ell}, n={self.n}")
        if len(self.k) != self.ell:
            raise DomainError(f"k must have {self.ell} entries, got {len(self.k)}")
        if sum(self.k) != 0:
            raise DomainError(f"k must sum to 0, got {sum(self.k)}")
        if self.a == 0:
            raise DomainError("a = 0 is not supported")


def theta_from_cm(p: CMParams) -> ParamVector:
    ell, k = p.ell, p.k
    return tuple(
        (-p.a if i == 0 else 0) + k[(-i) % ell] - k[(1 - i) % ell] for i in range(ell)
    )


def cm_from_theta(theta: Sequence, n: int) -> CMParams:
    """Inverse of :func:`theta_from_cm`, with ``a = -sigma(theta)``."""
    theta = as_params(theta)
    ell = len(theta)
    a = -sigma(theta)
    if a == 0:
        raise DomainError("sigma(theta) = 0 (a = 0) is not supported")
    # steps k_j - k_{j+1}
    step = [theta[0] + a] + [theta[(-j) % ell] for j in range(1, ell)]
    offsets = [Fraction(0)]
    for j in range(1, ell):
        offsets.append(offsets[-1] - step[j - 1])
    k0 = -sum(offsets) / ell
    return CMParams(ell, n, a, tuple(k0 + o for o in offsets))


# -- dimension-vector tests --------------------------------------------------------

def _residues(J: Iterable[int], ell: int) -> frozenset[int]:
    return frozenset(int(j) % ell for j in J)


def sigma_sigma_membership(d: Sequence[int], J: Iterable[int]) -> bool:
    """Is ``d`` a nonnegative integer combination of ``alpha_j``, ``j`` in ``J``?"""
    J = _residues(J, len(d))
    return all(x >= 0 if i in J else x == 0 for i, x in enumerate(d))


def _require_standard(theta: ParamVector, J: frozenset[int]) -> None:
    if not verify_parabolic_stabilizer(theta, J):
        raise DomainError(f"theta={_fmt(theta)} is not {sorted(J)}-standard")


def _fmt(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def e_theta_membership(d: Sequence[int], theta: Sequence, J: Iterable[int]) -> bool:
    """Does ``d`` carry a simple framed representation?  Needs ``theta`` ``J``-standard."""
    theta = as_params(theta)
    J = _residues(J, len(theta))
    _require_standard(theta, J)
    dec = decompose_dim(d)
    return dec.r >= 0 and is_j_core(dec.core, J, len(theta))


def canonical_decomposition(d: Sequence[int], theta: Sequence, J: Iterable[int]) -> tuple[DimVector, DimVector]:
    """Split ``d = d0 + d1`` with ``d0`` in ``E_theta`` maximal and ``d1`` in ``SigmaSigma_theta``."""
    theta = as_params(theta)
    ell = len(theta)
    J = sorted(_residues(J, ell))
    d = tuple(int(x) for x in d)
    if any(x < 0 for x in d):
        raise DomainError(f"empty variety: negative dimension vector {d}")
    _require_standard(theta, frozenset(J))
    valid = []
    for amounts in product(*(range(d[j] + 1) for j in J)):
        d1 = [0] * ell
        for j, c in zip(J, amounts):
            d1[j] = c
        d0 = tuple(x - y for x, y in zip(d, d1))
        if e_theta_membership(d0, theta, J):
            valid.append((d0, tuple(d1)))
    for d0, d1 in valid:
        if all(sigma_sigma_membership([p - q for p, q in zip(d0, e0)], J) for e0, _ in valid):
            return d0, d1
    raise DomainError(f"empty variety: no decomposition of {d}")


# -- leaves ------------------------------------------------------------------------

class Normalization(NamedTuple):
    a: Fraction
    k: tuple[Fraction, ...]
    degenerate: Optional[str]


@dataclass(frozen=True)
class Leaf:
    core: Partition
    r: int
    d_std: DimVector
    d_orig: DimVector
    normalization: Normalization
    context: tuple = field(compare=False, repr=False, default=())

    @property
    def dim(self) -> int:
        return 2 * self.r


def normalization_params(a: Fraction, k: Sequence[Fraction], d_orig: Sequence[int], r: int) -> Normalization:
    """Parameters of the Calogero-Moser space normalizing a leaf closure,
    defined up to a permutation of ``k``:
    ``a' = a`` and ``k'_i = k_i + a (d'_{1-i} - d'_{-i})``."""
    ell = len(k)
    k2 = tuple(
        Fraction(k[i]) + a * (d_orig[(1 - i) % ell] - d_orig[(-i) % ell]) for i in range(ell)
    )
    degenerate = "point" if r == 0 else "rank-one" if r == 1 else None
    return Normalization(Fraction(a), k2, degenerate)


@dataclass
class LeafPoset:
    ell: int
    n: int
    theta: ParamVector
    theta_std: ParamVector
    J: frozenset[int]
    word: Word
    core: Partition
    leaves: list[Leaf]
    params: Optional[CMParams] = None

    def leq(self, lower: Leaf, upper: Leaf) -> bool:
        return closure_leq(lower, upper, self.J)

    @property
    def open_leaf(self) -> Leaf:
        tops = [b for b in self.leaves if all(self.leq(a, b) for a in self.leaves)]
        assert len(tops) == 1
        return tops[0]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram as ``(upper, lower)`` index pairs."""
        n = len(self.leaves)
        below = {
            (u, l) for u in range(n) for l in range(n)
            if u != l and self.leq(self.leaves[l], self.leaves[u])
        }
        return sorted(
            (u, l) for u, l in below
            if not any((u, m) in below and (m, l) in below for m in range(n))
        )

    def labels(self) -> set[Partition]:
        return {leaf.core for leaf in self.leaves}


def closure_leq(lower: Leaf, upper: Leaf, J: Iterable[int]) -> bool:
    """Is ``lower`` contained in the closure of ``upper``?"""
    if lower.context != upper.context:
        raise ValueError("leaves come from different enumerations")
    return sigma_sigma_membership([u - l for u, l in zip(upper.d_std, lower.d_std)], J)


def nu_r_criterion(lower: Leaf, upper: Leaf, J: Iterable[int], ell: int) -> bool:
    """Same order, decided by the existence of ``lam`` in
    ``P_{nu_upper}[|nu_upper| + ell (r_upper - r_lower)]`` with ``Core_J(lam) = nu_lower``."""
    if lower.context != upper.context:
        raise ValueError("leaves come from different enumerations")
    if upper.r < lower.r:
        return False
    size = upper.core.size + ell * (upper.r - lower.r)
    return any(j_core(lam, J, ell) == lower.core
               for lam in enumerate_partitions(size, (upper.core, ell)))


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("CM_LEAVES_THREADS", "1")))
    except ValueError:
        return 1


def _stratum(nu: Partition, ell: int, J: frozenset[int], n: int, n_prime: int) -> set[DimVector]:
    out = set()
    for lam in enumerate_partitions(n_prime * ell + nu.size, (nu, ell)):
        res = residue_vector(j_core(lam, J, ell), ell)
        out.add(tuple(x + n - n_prime for x in res))
    return out


def leaves_of(d: Sequence[int], theta: Sequence, choose=None, threads: Optional[int] = None) -> LeafPoset:
    """Leaves of the quiver variety at ``(d, theta)``; ``d`` must carry a simple
    framed representation (it always does for ``d = n delta``)."""
    theta = as_params(theta)
    ell = len(theta)
    d = tuple(int(x) for x in d)
    std = standardize(d, theta, choose)
    J = std.J
    assert verify_parabolic_stabilizer(std.theta, J)
    nu, n, _ = decompose_dim(std.d)
    if n < 0 or not is_j_core(nu, J, ell):
        raise DomainError(f"{d} carries no simple framed representation at theta={_fmt(theta)}")
    cm = cm_from_theta(theta, n)
    context = (J, std.theta, tuple(std.word), d)

    workers = threads if threads is not None else _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            strata = list(pool.map(lambda m: _stratum(nu, ell, J, n, m), range(n + 1)))
    else:
        strata = [_stratum(nu, ell, J, n, m) for m in range(n + 1)]
    found = set().union(*strata)

    back = inverse(std.word)
    leaves = []
    for d_std in found:
        core, r, _ = decompose_dim(d_std)
        d_orig = act_dim(back, d_std)
        leaves.append(Leaf(core, r, d_std, d_orig, normalization_params(cm.a, cm.k, d_orig, r), context))
    leaves.sort(key=lambda leaf: (-leaf.r, leaf.core.size, leaf.core.parts))
    return LeafPoset(ell, n, theta, std.theta, J, list(std.word), nu, leaves)


def enumerate_leaves(p: CMParams, choose=None, threads: Optional[int] = None) -> LeafPoset:
    """Leaves of the Calogero-Moser space with parameters ``p``."""
    theta = theta_from_cm(p)
    poset = leaves_of(tuple(p.n * x for x in delta(p.ell)), theta, choose, threads)
    assert poset.n == p.n
    poset.params = p
    return poset


def fixed_point_labels(d: Sequence[int], theta: Sequence) -> list[Partition]:
    """The C^*-fixed points: distinct ``J``-cores of ``P_nu[n ell + |nu|]``
    after standardizing ``(d, theta)``."""
    theta = as_params(theta)
    ell = len(theta)
    std = standardize(d, theta)
    nu, n, _ = decompose_dim(std.d)
    if n < 0:
        return []
    cores = {j_core(lam, std.J, ell) for lam in enumerate_partitions(n * ell + nu.size, (nu, ell))}
    return sorted(cores, key=lambda p: (p.size, p.parts))


__all__ = [
    "CMParams", "Leaf", "LeafPoset", "Normalization", "canonical_decomposition", "closure_leq",
    "cm_from_theta", "e_theta_membership", "enumerate_leaves", "fixed_point_labels", "is_standard",
    "leaves_of", "normalization_params", "nu_r_criterion", "sigma_sigma_membership", "theta_from_cm",
]
