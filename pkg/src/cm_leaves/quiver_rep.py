"""Representations of the (framed) doubled cyclic quiver over the rationals.

Conventions: at vertex ``i`` the space is ``V_i = Q^{d_i}``; ``X[i]`` maps
``V_{i+1} -> V_i`` (a ``d_i x d_{i+1}`` matrix) and ``Y[i]`` maps
``V_i -> V_{i+1}``.  A framed representation also has ``x: Q -> V_0``
(column) and ``y: V_0 -> Q`` (row).  The moment map at vertex ``i`` is
``X_i Y_i - Y_{i-1} X_{i-1} + [i = 0] x y``.

The graded (``ell = infinity``) variant stores one space per integer degree
with ``X`` lowering and ``Y`` raising the degree.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Optional, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from .affine_weyl import ParamVector, as_params, sigma
from .errors import DomainError
from .partitions import Partition, j_core, removed_residues, residue_vector


def _q(value) -> object:
    f = Fraction(value)
    return QQ(f.numerator, f.denominator)


def _zeros(rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix.zeros((rows, cols), QQ)


def _scalar_identity(n: int, value) -> DomainMatrix:
    m = _zeros(n, n).to_dense()
    for i in range(n):
        m[i, i] = _q(value)
    return m


def to_fractions(m: DomainMatrix) -> list[list[Fraction]]:
    rows, cols = m.shape
    return [[Fraction(int(e.numerator), int(e.denominator)) for e in row]
            for row in m.to_list()] if rows and cols else [[] for _ in range(rows)]


def _is_zero(m: DomainMatrix) -> bool:
    return all(e == 0 for row in m.to_list() for e in row)


@dataclass(frozen=True)
class QuiverRep:
    ell: int
    dims: tuple[int, ...]
    X: tuple[DomainMatrix, ...]
    Y: tuple[DomainMatrix, ...]
    x: Optional[DomainMatrix] = None
    y: Optional[DomainMatrix] = None

    def __post_init__(self):
        ell, d = self.ell, self.dims
        if len(d) != ell or len(self.X) != ell or len(self.Y) != ell:
            raise ValueError("need one dimension and one X, Y block per vertex")
        if any(n < 0 for n in d):
            raise ValueError(f"negative dimension in {d}")
        for i in range(ell):
            nxt = d[(i + 1) % ell]
            if self.X[i].shape != (d[i], nxt):
                raise ValueError(f"X[{i}] has shape {self.X[i].shape}, expected {(d[i], nxt)}")
            if self.Y[i].shape != (nxt, d[i]):
                raise ValueError(f"Y[{i}] has shape {self.Y[i].shape}, expected {(nxt, d[i])}")
        if (self.x is None) != (self.y is None):
            raise ValueError("framing needs both x and y")
        if self.framed:
            if self.x.shape != (d[0], 1) or self.y.shape != (1, d[0]):
                raise ValueError("framing maps must be d_0 x 1 and 1 x d_0")

    @property
    def framed(self) -> bool:
        return self.x is not None


@dataclass(frozen=True)
class GradedRep:
    dims: dict[int, int]
    X: dict[int, DomainMatrix]
    Y: dict[int, DomainMatrix]
    x: DomainMatrix
    y: DomainMatrix
    basis: dict[int, tuple] = field(default_factory=dict)

    def dim(self, j: int) -> int:
        return self.dims.get(j, 0)

    def degrees(self) -> list[int]:
        return sorted(j for j, n in self.dims.items() if n)


def moment_defect(rep: QuiverRep, theta: Sequence) -> tuple[DomainMatrix, ...]:
    """Per-vertex ``mu(rep) - theta_i Id``; all blocks vanish iff the relations hold."""
    theta = as_params(theta)
    if len(theta) != rep.ell:
        raise ValueError("theta has the wrong length")
    ell, d = rep.ell, rep.dims
    out = []
    for i in range(ell):
        m = rep.X[i] * rep.Y[i] - rep.Y[(i - 1) % ell] * rep.X[(i - 1) % ell]
        if i == 0 and rep.framed:
            m = m + rep.x * rep.y
        out.append(m - _scalar_identity(d[i], theta[i]))
    if all(n == 0 for n in d):
        return ()
    return tuple(out)


def is_moment_exact(rep: QuiverRep, theta: Sequence) -> bool:
    return all(_is_zero(m) for m in moment_defect(rep, theta))


# -- the fixed-point representations A_mu --------------------------------------

class Hook(NamedTuple):
    arm: int
    leg: int
    beta: Fraction


def _theta_at(theta: ParamVector, i: int) -> Fraction:
    return theta[i % len(theta)]


def hook_data(mu: Partition, theta: Sequence) -> list[Hook]:
    """Diagonal hooks of ``mu`` with their couplings ``beta_r``, the sum of
    ``theta`` over the contents ``-leg .. arm`` of hook ``r``."""
    theta = as_params(theta)
    conj = mu.conjugate().parts
    hooks = []
    for r in range(len(mu)):
        if mu.parts[r] <= r:
            break
        arm, leg = mu.parts[r] - r - 1, conj[r] - r - 1
        hooks.append(Hook(arm, leg, sum((_theta_at(theta, i) for i in range(-leg, arm + 1)), Fraction(0))))
    return hooks


def _hook_maps(mu: Partition, theta: ParamVector):
    """Sparse ``X``, ``Y``, ``x`` on the basis ``v_{r,j}`` (``r`` 0-based hook
    index, ``j`` content).  Returns ``(basis, X, Y, x)`` where ``X[v]`` and
    ``Y[v]`` are dicts ``{basis vector: coefficient}`` and ``x`` is the image of 1."""
    hooks = hook_data(mu, theta)
    basis = [(r, j) for r, h in enumerate(hooks) for j in range(-h.leg, h.arm + 1)]
    present = set(basis)
    X, Y = {}, {}

    def vec(terms):
        out = {}
        for v, c in terms:
            if v in present and c != 0:
                out[v] = out.get(v, 0) + c
        return out

    for r, j in basis:
        arm, leg = hooks[r].arm, hooks[r].leg
        X[(r, j)] = vec([((r, j - 1), Fraction(1))]) if j > -leg else {}
        if j < 0:
            partial = sum((_theta_at(theta, i) for i in range(-leg, j + 1)), Fraction(0))
            terms = [((r, j + 1), partial)]
            terms += [((t, j + 1), hooks[t].beta) for t in range(r + 1, len(hooks))]
        else:
            terms = [((t, j + 1), -hooks[t].beta) for t in range(r)]
            if j < arm:
                tail = sum((_theta_at(theta, i) for i in range(j + 1, arm + 1)), Fraction(0))
                terms.append(((r, j + 1), -tail))
        Y[(r, j)] = vec(terms)
    x = vec([((r, 0), h.beta) for r, h in enumerate(hooks)])
    return basis, X, Y, x


def _block(src_basis, dst_basis, images) -> DomainMatrix:
    m = _zeros(len(dst_basis), len(src_basis)).to_dense()
    row = {v: k for k, v in enumerate(dst_basis)}
    for col, v in enumerate(src_basis):
        for w, c in images[v].items():
            m[row[w], col] = _q(c)
    return m


def _framing(basis0, x_image) -> tuple[DomainMatrix, DomainMatrix]:
    x = _zeros(len(basis0), 1).to_dense()
    y = _zeros(1, len(basis0)).to_dense()
    for k, v in enumerate(basis0):
        x[k, 0] = _q(x_image.get(v, 0))
        if v[1] == 0:
            y[0, k] = QQ(1)
    return x, y


def build_graded_rep(mu: Partition, theta: Sequence) -> GradedRep:
    theta = as_params(theta)
    basis, X, Y, x_image = _hook_maps(mu, theta)
    by_degree: dict[int, list] = {}
    for v in basis:
        by_degree.setdefault(v[1], []).append(v)
    span = range(min(by_degree, default=0) - 1, max(by_degree, default=0) + 1)
    gb = {j: tuple(by_degree.get(j, ())) for j in span}
    gb.setdefault(0, ())
    gb.setdefault(1, ())
    Xg, Yg = {}, {}
    for j in gb:
        if j + 1 in gb:
            Xg[j] = _block(gb[j + 1], gb[j], X)
            Yg[j] = _block(gb[j], gb[j + 1], Y)
    x, y = _framing(gb[0], x_image)
    return GradedRep({j: len(b) for j, b in gb.items()}, Xg, Yg, x, y, gb)


def fold(rep: GradedRep, ell: int) -> QuiverRep:
    """Collapse degrees congruent mod ``ell`` into one vertex.  Within a
    vertex, basis vectors are ordered by degree, then by the graded basis order."""
    degrees = rep.degrees()
    groups = {i: [j for j in degrees if j % ell == i] for i in range(ell)}
    offset, dims = {}, []
    for i in range(ell):
        pos = 0
        for j in groups[i]:
            offset[j] = pos
            pos += rep.dim(j)
        dims.append(pos)
    X = [_zeros(dims[i], dims[(i + 1) % ell]).to_dense() for i in range(ell)]
    Y = [_zeros(dims[(i + 1) % ell], dims[i]).to_dense() for i in range(ell)]
    for j in degrees + [j - 1 for j in degrees]:
        if rep.dim(j) == 0 or rep.dim(j + 1) == 0 or j not in rep.X:
            continue
        i = j % ell
        _paste(X[i], rep.X[j], offset[j], offset[j + 1])
        _paste(Y[i], rep.Y[j], offset[j + 1], offset[j])
    x = _zeros(dims[0], 1).to_dense()
    y = _zeros(1, dims[0]).to_dense()
    if rep.dim(0):
        _paste(x, rep.x, offset[0], 0)
        _paste(y, rep.y, 0, offset[0])
    return QuiverRep(ell, tuple(dims), tuple(X), tuple(Y), x, y)


def _paste(target: DomainMatrix, block: DomainMatrix, row0: int, col0: int) -> None:
    for a, row in enumerate(block.to_list()):
        for b, e in enumerate(row):
            if e != 0:
                target[row0 + a, col0 + b] = e


def build_fixed_point_rep(mu: Partition, theta: Sequence, ell: int) -> tuple[GradedRep, QuiverRep]:
    """The graded representation ``A^inf_mu`` and its fold ``A_mu``."""
    theta = as_params(theta)
    if len(theta) != ell:
        raise ValueError("theta has the wrong length")
    if sigma(theta) == 0:
        raise DomainError("sigma(theta) = 0 (a = 0) is not supported")
    graded = build_graded_rep(mu, theta)
    return graded, fold(graded, ell)


def build_fixed_point_rep_direct(mu: Partition, theta: Sequence, ell: int) -> QuiverRep:
    """``A_mu`` assembled straight on the cyclic quiver, without the graded lift."""
    theta = as_params(theta)
    basis, X, Y, x_image = _hook_maps(mu, theta)
    vertex = {i: sorted((v for v in basis if v[1] % ell == i), key=lambda v: (v[1], v[0]))
              for i in range(ell)}
    Xs = tuple(_block(vertex[(i + 1) % ell], vertex[i], X) for i in range(ell))
    Ys = tuple(_block(vertex[i], vertex[(i + 1) % ell], Y) for i in range(ell))
    x, y = _framing(vertex[0], x_image)
    return QuiverRep(ell, tuple(len(vertex[i]) for i in range(ell)), Xs, Ys, x, y)


# -- simple unframed representations and sums ----------------------------------

def simple_bar_rep(i: int, ell: int) -> QuiverRep:
    """``L(alpha_i)``: one dimension at vertex ``i``, all maps zero."""
    dims = tuple(int(j == i % ell) for j in range(ell))
    X = tuple(_zeros(dims[j], dims[(j + 1) % ell]) for j in range(ell))
    Y = tuple(_zeros(dims[(j + 1) % ell], dims[j]) for j in range(ell))
    return QuiverRep(ell, dims, X, Y)


def _diag(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    top = a.hstack(_zeros(a.shape[0], b.shape[1])) if a.shape[0] else _zeros(0, a.shape[1] + b.shape[1])
    bottom = _zeros(b.shape[0], a.shape[1]).hstack(b) if b.shape[0] else _zeros(0, a.shape[1] + b.shape[1])
    return top.vstack(bottom)


def direct_sum(a: QuiverRep, b: QuiverRep) -> QuiverRep:
    if a.ell != b.ell:
        raise ValueError("representations of different quivers")
    if a.framed and b.framed:
        raise ValueError("cannot add two framed representations (dimension at infinity would be 2)")
    ell = a.ell
    dims = tuple(p + q for p, q in zip(a.dims, b.dims))
    X = tuple(_diag(a.X[i], b.X[i]) for i in range(ell))
    Y = tuple(_diag(a.Y[i], b.Y[i]) for i in range(ell))
    x = y = None
    framed = a if a.framed else b if b.framed else None
    if framed is not None:
        pad = _zeros(b.dims[0] if framed is a else a.dims[0], 1)
        x = framed.x.vstack(pad) if framed is a else pad.vstack(framed.x)
        y = framed.y.hstack(pad.transpose()) if framed is a else pad.transpose().hstack(framed.y)
    return QuiverRep(ell, dims, X, Y, x, y)


# -- simplicity ------------------------------------------------------------------

class Witness(NamedTuple):
    kind: str          # "sub": v spans a copy of L(alpha_i); "quotient": f kills all incoming images
    vertex: int
    vector: tuple[Fraction, ...]


class Simplicity(NamedTuple):
    simple: bool
    witness: Optional[Witness]


def _stack_rows(blocks: list[DomainMatrix], cols: int) -> DomainMatrix:
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return _zeros(0, cols)
    out = blocks[0]
    for b in blocks[1:]:
        out = out.vstack(b)
    return out


def _kernel_vector(m: DomainMatrix, cols: int) -> Optional[tuple[Fraction, ...]]:
    if cols == 0:
        return None
    if m.shape[0] == 0:
        return (Fraction(1),) + (Fraction(0),) * (cols - 1)
    null = m.to_field().nullspace()
    if null.shape[0] == 0:
        return None
    return tuple(to_fractions(null)[0])


def is_simple_framed(rep: QuiverRep, J: Iterable[int]) -> Simplicity:
    """Look for a sub or quotient isomorphic to ``L(alpha_i)``, ``i`` in ``J``.

    Only valid for representations satisfying the moment relations for a
    ``J``-standard parameter, where these are the only possible obstructions.
    """
    if not rep.framed:
        raise ValueError("is_simple_framed expects a framed representation")
    ell, d = rep.ell, rep.dims
    for i in sorted(int(j) % ell for j in set(J)):
        if d[i] == 0:
            continue
        outgoing = [rep.Y[i], rep.X[(i - 1) % ell]] + ([rep.y] if i == 0 else [])
        v = _kernel_vector(_stack_rows(outgoing, d[i]), d[i])
        if v is not None:
            return Simplicity(False, Witness("sub", i, v))
        incoming = [rep.X[i].transpose(), rep.Y[(i - 1) % ell].transpose()]
        if i == 0:
            incoming.append(rep.x.transpose())
        f = _kernel_vector(_stack_rows(incoming, d[i]), d[i])
        if f is not None:
            return Simplicity(False, Witness("quotient", i, f))
    return Simplicity(True, None)


class SemisimpleLabel(NamedTuple):
    core: Partition
    residues: tuple[int, ...]
    dim_reg: tuple[int, ...]


def semisimple_label(mu: Partition, J: Iterable[int], ell: int) -> SemisimpleLabel:
    """Label of the semisimplification ``A'_mu = A_lam + sum L(alpha_j)``
    with ``lam`` the ``J``-core of ``mu``."""
    lam = j_core(mu, J, ell)
    return SemisimpleLabel(lam, removed_residues(mu, lam, ell), residue_vector(lam, ell))


def residue_multiset(residues: Iterable[int]) -> dict[int, int]:
    return dict(sorted(Counter(residues).items()))
