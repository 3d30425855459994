"""Partitions, residues, ell-cores and J-cores.

Partitions use English notation: row ``r`` (1-based) holds ``parts[r-1]``
boxes and the box at ``(r, s)`` has content ``s - r``.  Residues are
contents reduced mod ``ell``; ``ell=None`` (or ``math.inf``) keeps the
integer content.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional, Union

from .errors import DomainError

Ell = Optional[Union[int, float]]


def _finite_ell(ell: Ell) -> Optional[int]:
    if ell is None or ell == math.inf:
        return None
    if int(ell) != ell or ell < 1:
        raise ValueError(f"ell must be a positive integer or infinity, got {ell!r}")
    return int(ell)


class Box(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row

    def residue(self, ell: Ell) -> int:
        ell = _finite_ell(ell)
        return self.content if ell is None else self.content % ell


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse ``"4,2,1"``; the empty string is the empty partition."""
        text = text.strip()
        if not text:
            return cls()
        return cls(tuple(int(t) for t in text.split(",")))

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __contains__(self, box) -> bool:
        r, s = box
        return 1 <= r <= len(self.parts) and 1 <= s <= self.parts[r - 1]

    @property
    def size(self) -> int:
        return sum(self.parts)

    def boxes(self) -> Iterator[Box]:
        for r, p in enumerate(self.parts, start=1):
            for s in range(1, p + 1):
                yield Box(r, s)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0])))

    def remove(self, box: Box) -> "Partition":
        r, s = box
        if r < 1 or r > len(self.parts) or self.parts[r - 1] != s or (
            r < len(self.parts) and self.parts[r] == s
        ):
            raise ValueError(f"{tuple(box)} is not removable from ({self})")
        parts = list(self.parts)
        parts[r - 1] -= 1
        return Partition(tuple(p for p in parts if p))

    def add(self, box: Box) -> "Partition":
        r, s = box
        row_len = self.parts[r - 1] if r <= len(self.parts) else 0
        above = self.parts[r - 2] if r >= 2 else math.inf
        if r < 1 or r > len(self.parts) + 1 or s != row_len + 1 or s > above:
            raise ValueError(f"{tuple(box)} is not addable to ({self})")
        parts = list(self.parts) + [0]
        parts[r - 1] += 1
        return Partition(tuple(p for p in parts if p))


EMPTY = Partition()


def residue_vector(lam: Partition, ell: Ell):
    """Number of boxes of each residue.

    Finite ``ell`` gives a length-``ell`` tuple indexed by ``Z/ell``.  For
    ``ell`` infinite the result is a dict ``{content: count}`` holding only
    the nonzero entries, sorted by content.
    """
    ell = _finite_ell(ell)
    if ell is None:
        counts: dict[int, int] = {}
        for b in lam.boxes():
            counts[b.content] = counts.get(b.content, 0) + 1
        return dict(sorted(counts.items()))
    counts = [0] * ell
    for b in lam.boxes():
        counts[b.content % ell] += 1
    return tuple(counts)


def removable_boxes(lam: Partition) -> list[Box]:
    p = lam.parts
    return [Box(r, p[r - 1]) for r in range(1, len(p) + 1) if r == len(p) or p[r] < p[r - 1]]


def addable_boxes(lam: Partition) -> list[Box]:
    p = lam.parts
    out = [Box(1, p[0] + 1 if p else 1)]
    out += [Box(r, p[r - 1] + 1) for r in range(2, len(p) + 1) if p[r - 2] > p[r - 1]]
    if p:
        out.append(Box(len(p) + 1, 1))
    return out


def boundary_boxes(lam: Partition, ell: Ell, mode: str, residue: Optional[int] = None) -> list[Box]:
    """Addable or removable boxes of ``lam`` in row-ascending order,
    optionally restricted to one ``ell``-residue."""
    if mode == "addable":
        boxes = addable_boxes(lam)
    elif mode == "removable":
        boxes = removable_boxes(lam)
    else:
        raise ValueError(f"mode must be 'addable' or 'removable', got {mode!r}")
    if residue is None:
        return boxes
    return [b for b in boxes if b.residue(ell) == residue]


# -- cores -----------------------------------------------------------------

def _beta_set(lam: Partition, n_beads: int) -> list[int]:
    parts = list(lam.parts) + [0] * (n_beads - len(lam))
    return [parts[i] + (n_beads - 1 - i) for i in range(n_beads)]


def _from_beta_set(beta: Iterable[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    return Partition(tuple(p for p in (beta[i] - (n - 1 - i) for i in range(n)) if p))


def ell_core(lam: Partition, ell: int) -> tuple[Partition, int]:
    """Return ``(core, r)`` with ``|lam| = |core| + r * ell``.

    Computed on the ``ell``-runner abacus: every bead is pushed as far up
    its runner as it goes.
    """
    ell = _finite_ell(ell)
    if ell is None:
        raise ValueError("ell_core needs a finite ell")
    if ell == 1:
        return EMPTY, lam.size
    beta = _beta_set(lam, len(lam))
    per_runner = [0] * ell
    for b in beta:
        per_runner[b % ell] += 1
    core = _from_beta_set(run + ell * k for run in range(ell) for k in range(per_runner[run]))
    r, rem = divmod(lam.size - core.size, ell)
    assert rem == 0
    return core, r


def is_ell_core(lam: Partition, ell: int) -> bool:
    return ell_core(lam, ell)[1] == 0


def _as_residue_set(J: Iterable[int], ell: int) -> frozenset[int]:
    return frozenset(int(j) % ell for j in J)


def j_core(lam: Partition, J: Iterable[int], ell: int) -> Partition:
    """Strip ``J``-removable boxes until none is left, leftmost box first."""
    J = _as_residue_set(J, ell)
    while True:
        for b in reversed(removable_boxes(lam)):
            if b.residue(ell) in J:
                lam = lam.remove(b)
                break
        else:
            return lam


def is_j_core(lam: Partition, J: Iterable[int], ell: int) -> bool:
    J = _as_residue_set(J, ell)
    return not any(b.residue(ell) in J for b in removable_boxes(lam))


def removed_residues(mu: Partition, lam: Partition, ell: int) -> tuple[int, ...]:
    """Sorted multiset of residues of the boxes of ``mu`` outside ``lam``."""
    return tuple(sorted(b.residue(ell) for b in mu.boxes() if b not in lam))


# -- enumeration -----------------------------------------------------------

@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(1, min(n, max_part) + 1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


@lru_cache(maxsize=None)
def _partitions_with_core(core: Partition, ell: int, weight: int) -> tuple[Partition, ...]:
    # add `weight` ell-rim hooks to the core, i.e. slide beads down their runners
    n_beads = len(core) + weight * ell
    level = {tuple(sorted(_beta_set(core, n_beads)))}
    for _ in range(weight):
        nxt = set()
        for beta in level:
            occupied = set(beta)
            for b in beta:
                if b + ell not in occupied:
                    nxt.add(tuple(sorted((occupied - {b}) | {b + ell})))
        level = nxt
    return tuple(sorted(_from_beta_set(beta) for beta in level))


def enumerate_partitions(n: int, core: Optional[tuple[Partition, int]] = None) -> list[Partition]:
    """All partitions of ``n`` in ascending lexicographic order, restricted
    to those whose ``ell``-core is ``nu`` when ``core=(nu, ell)`` is given."""
    if n < 0:
        return []
    if core is None:
        return [Partition(p) for p in _partitions(n, n)]
    nu, ell = core
    if not is_ell_core(nu, ell):
        raise DomainError(f"({nu}) is not a {ell}-core")
    weight, rem = divmod(n - nu.size, ell)
    if weight < 0 or rem:
        return []
    return list(_partitions_with_core(nu, ell, weight))


# -- affine Weyl group action on cores ----------------------------------------

def core_reflect(i: int, nu: Partition, ell: int) -> Partition:
    """Action of the simple reflection ``s_i`` on an ``ell``-core: add all
    ``i``-addable boxes, or remove all ``i``-removable ones."""
    if not is_ell_core(nu, ell):
        raise DomainError(f"({nu}) is not a {ell}-core")
    return _reflect_core(i % ell, nu, ell)


@lru_cache(maxsize=None)
def _reflect_core(i: int, nu: Partition, ell: int) -> Partition:
    if ell == 1:
        return nu
    addable = boundary_boxes(nu, ell, "addable", i)
    removable = boundary_boxes(nu, ell, "removable", i)
    assert not (addable and removable), "an ell-core cannot have both i-addable and i-removable boxes"
    if addable:
        parts = list(nu.parts) + [0]
        for b in addable:
            parts[b.row - 1] += 1
        return Partition(tuple(p for p in parts if p))
    if removable:
        parts = list(nu.parts)
        for b in removable:
            parts[b.row - 1] -= 1
        return Partition(tuple(p for p in parts if p))
    return nu


def staircase(m: int) -> Partition:
    """The 2-core ``(m, m-1, ..., 1)``."""
    return Partition(tuple(range(m, 0, -1)))
