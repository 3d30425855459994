"""The affine Weyl group of type A~_{ell-1} acting on dimension vectors and
parameter vectors.

Dimension vectors are integer tuples indexed by ``Z/ell``; they double as
elements of the affine root lattice (``d <-> sum d_i alpha_i``).  Parameter
vectors are tuples of :class:`fractions.Fraction`.

A Weyl word is a list of generator indices applied left to right:
``act_dim([i1, i2], d) == reflect_dim(i2, reflect_dim(i1, d))``.

For ``ell == 2`` the two neighbours of a vertex coincide and are counted
twice (the Cartan matrix of A~_1); for ``ell == 1`` the group is trivial.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Optional, Sequence

from .errors import DomainError
from .partitions import EMPTY, Partition, _reflect_core, is_ell_core

DimVector = tuple[int, ...]
ParamVector = tuple[Fraction, ...]
Word = list[int]


def delta(ell: int) -> DimVector:
    return (1,) * ell


def simple_root(i: int, ell: int) -> DimVector:
    return tuple(int(j == i % ell) for j in range(ell))


def as_params(theta: Iterable) -> ParamVector:
    return tuple(Fraction(t) for t in theta)


def reflect_dim(j: int, d: Sequence[int]) -> DimVector:
    ell = len(d)
    d = list(d)
    if ell == 1:
        return tuple(d)
    j %= ell
    d[j] = int(j == 0) + d[(j + 1) % ell] + d[(j - 1) % ell] - d[j]
    return tuple(d)


def reflect_param(j: int, theta: Sequence) -> ParamVector:
    ell = len(theta)
    theta = list(as_params(theta))
    if ell == 1:
        return tuple(theta)
    j %= ell
    t = theta[j]
    theta[j] = -t
    theta[(j + 1) % ell] += t
    theta[(j - 1) % ell] += t
    return tuple(theta)


def act_dim(word: Iterable[int], d: Sequence[int]) -> DimVector:
    d = tuple(d)
    for j in word:
        d = reflect_dim(j, d)
    return d


def act_param(word: Iterable[int], theta: Sequence) -> ParamVector:
    theta = as_params(theta)
    for j in word:
        theta = reflect_param(j, theta)
    return theta


def inverse(word: Sequence[int]) -> Word:
    return list(reversed(word))


def act_core(word: Iterable[int], nu: Partition, ell: int) -> Partition:
    if not is_ell_core(nu, ell):
        raise DomainError(f"({nu}) is not a {ell}-core")
    for j in word:
        nu = _reflect_core(j % ell, nu, ell)
    return nu


def _check_lengths(a: Sequence, b: Sequence) -> None:
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} != {len(b)}")


def pairing(d: Sequence[int], theta: Sequence) -> Fraction:
    _check_lengths(d, theta)
    return sum((Fraction(di) * Fraction(ti) for di, ti in zip(d, theta)), Fraction(0))


def sigma(theta: Sequence) -> Fraction:
    return sum((Fraction(t) for t in theta), Fraction(0))


def bar(alpha: Sequence[int]) -> ParamVector:
    """Linear map from the affine root lattice to parameter space with
    ``bar(alpha_r)_i = 2[i=r] - [i=r+1] - [i=r-1]``; its kernel is ``Z delta``."""
    ell = len(alpha)
    return tuple(
        Fraction(2 * alpha[i] - alpha[(i + 1) % ell] - alpha[(i - 1) % ell]) for i in range(ell)
    )


def project_finite(alpha: Sequence[int]) -> DimVector:
    """Representative of ``alpha mod Z delta`` with vanishing ``alpha_0`` coefficient."""
    return tuple(a - alpha[0] for a in alpha)


def translate_param(alpha: Sequence[int], theta: Sequence) -> ParamVector:
    s = sigma(theta)
    return tuple(t + s * b for t, b in zip(as_params(theta), bar(alpha)))


def translation_word(alpha: Sequence[int]) -> Word:
    """A word for the translation ``t_alpha`` (``alpha`` taken mod ``delta``).

    The parameter action at positive level is faithful on the open
    fundamental chamber, so sorting ``t_alpha`` applied to a generic
    dominant point back into the chamber spells out ``t_alpha^{-1}``.
    """
    ell = len(alpha)
    if ell == 1:
        return []
    base = tuple(Fraction(i + 1, ell + 1) for i in range(ell))
    point = translate_param(alpha, base)
    undo: Word = []
    while True:
        neg = [i for i in range(ell) if point[i] < 0]
        if not neg:
            break
        point = reflect_param(neg[0], point)
        undo.append(neg[0])
    assert point == base
    return inverse(undo)


def translate_dim(alpha: Sequence[int], d: Sequence[int]) -> DimVector:
    return act_dim(translation_word(alpha), d)


class Decomposition(NamedTuple):
    core: Partition
    r: int
    word: Word


def decompose_dim(d: Sequence[int]) -> Decomposition:
    """Write ``d = Res(core) + r * delta`` with ``core`` an ``ell``-core.

    ``word`` sends ``d`` to ``r * delta``.  It is found by making the level-one
    weight ``Lambda_0 - d`` dominant.
    """
    d = tuple(int(x) for x in d)
    ell = len(d)
    if ell == 1:
        return Decomposition(EMPTY, d[0], [])
    word: Word = []
    while True:
        bad = [
            i for i in range(ell)
            if int(i == 0) - (2 * d[i] - d[(i + 1) % ell] - d[(i - 1) % ell]) < 0
        ]
        if not bad:
            break
        d = reflect_dim(bad[0], d)
        word.append(bad[0])
    assert len(set(d)) == 1, d
    return Decomposition(act_core(inverse(word), EMPTY, ell), d[0], word)


class Standardized(NamedTuple):
    d: DimVector
    theta: ParamVector
    word: Word
    J: frozenset[int]


def _first(candidates: list[int]) -> int:
    return candidates[0]


def standardize(
    d: Sequence[int],
    theta: Sequence,
    choose: Optional[Callable[[list[int]], int]] = None,
) -> Standardized:
    """Move ``(d, theta)`` by legal reflections until ``theta`` is standard.

    A reflection ``s_i`` is applied only where ``theta_i != 0``; the target
    has all entries of the sign of ``sigma(theta)`` (or zero).  ``choose``
    picks among the eligible indices (default: the smallest).
    """
    theta = as_params(theta)
    d = tuple(int(x) for x in d)
    _check_lengths(d, theta)
    s = sigma(theta)
    if s == 0:
        raise DomainError("sigma(theta) = 0 (a = 0) is not supported")
    choose = choose or _first
    word: Word = []
    ell = len(theta)
    while ell > 1:
        wrong = [i for i in range(ell) if theta[i] * s < 0]
        if not wrong:
            break
        i = choose(wrong)
        theta = reflect_param(i, theta)
        d = reflect_dim(i, d)
        word.append(i)
    return Standardized(d, theta, word, frozenset(i for i in range(ell) if theta[i] == 0))


def finite_roots(ell: int) -> list[DimVector]:
    """Roots of the finite system A_{ell-1} (coefficient 0 on ``alpha_0``)."""
    roots = []
    for p in range(1, ell):
        for q in range(p + 1, ell + 1):
            pos = tuple(int(p <= i < q) for i in range(ell))
            roots.append(pos)
            roots.append(tuple(-x for x in pos))
    return roots


def vanishing_roots(theta: Sequence) -> list[DimVector]:
    """Real affine roots ``beta + k delta`` orthogonal to ``theta`` (``sigma != 0``)."""
    theta = as_params(theta)
    s = sigma(theta)
    if s == 0:
        raise DomainError("sigma(theta) = 0 (a = 0) is not supported")
    out = []
    for beta in finite_roots(len(theta)):
        k = -pairing(beta, theta) / s
        if k.denominator == 1:
            out.append(tuple(b + int(k) for b in beta))
    return out


def verify_parabolic_stabilizer(theta: Sequence, J: Iterable[int]) -> bool:
    """True iff the stabilizer of ``theta`` is the parabolic subgroup ``W_J``."""
    theta = as_params(theta)
    ell = len(theta)
    J = frozenset(int(j) % ell for j in J)
    roots = vanishing_roots(theta)
    if frozenset(i for i in range(ell) if theta[i] == 0) != J:
        return False
    return all(all(c == 0 for i, c in enumerate(root) if i not in J) for root in roots)


def zero_set(theta: Sequence) -> frozenset[int]:
    return frozenset(i for i, t in enumerate(theta) if t == 0)


def is_standard(theta: Sequence) -> bool:
    return verify_parabolic_stabilizer(theta, zero_set(theta))
