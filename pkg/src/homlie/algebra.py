"""Hom-Lie algebras given by structure constants.

A Hom-Lie algebra (L, [-,-], alpha) has an anti-symmetric bracket, a
multiplicative twisting map (alpha[x,y] = [alpha x, alpha y]) and satisfies
the Hom-Jacobi identity

    [[x,y], alpha z] + [[z,x], alpha y] + [[y,z], alpha x] = 0.

alpha = Id gives an ordinary Lie algebra.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping, Sequence

from .checks import AxiomReport, check_residuals, report
from .errors import AxiomError, DimensionMismatch, NotAlphaCommuting, NotAMorphism, NotAnRMatrix
from .multilinear import (ZERO, LinearMap, Tensor, Tensor2, Tensor3, Vector, apply_map,
                          apply_slot, apply_slots, compose, kron, tensor_power_apply)
from .scalars import to_scalar


def default_names(dim: int) -> tuple[str, ...]:
    return tuple(f"e{i + 1}" for i in range(dim))


class HomLieAlgebra:
    """Structure constants c[i, j, k] = coefficient of e_k in [e_i, e_j].

    The constructor validates anti-symmetry, multiplicativity and Hom-Jacobi
    and raises AxiomError carrying the report if any fails.  Pass
    ``check=False`` to hold candidate data that is then inspected with
    :func:`algebra_report`.
    """

    __slots__ = ("dim", "basis_names", "c", "alpha", "_table")

    def __init__(self, c: Tensor3, alpha: LinearMap | None = None,
                 basis_names: Sequence[str] | None = None, *, check: bool = True):
        if not isinstance(c, Tensor3):
            c = Tensor3(c)
        n = c.dim
        alpha = LinearMap.identity(n) if alpha is None else alpha
        if (alpha.rows, alpha.cols) != (n, n):
            raise DimensionMismatch(f"alpha must be {n}x{n}")
        names = tuple(basis_names) if basis_names is not None else default_names(n)
        if len(names) != n:
            raise DimensionMismatch("one name per basis vector required")
        self.dim, self.basis_names, self.c, self.alpha = n, names, c, alpha
        self._table = [[Vector._from_flat(n, tuple(c[i, j, k] for k in range(n)))
                        for j in range(n)] for i in range(n)]
        if check:
            rep = algebra_report(self)
            if not rep:
                raise AxiomError(rep)

    @classmethod
    def from_table(cls, basis_names: Sequence[str], table: Mapping, alpha: LinearMap | None = None,
                   *, antisymmetrize: bool = True, check: bool = True) -> "HomLieAlgebra":
        """Build from {(i, j): {k: coeff}} with integer or name indices.

        With ``antisymmetrize`` each listed [e_i, e_j] also sets [e_j, e_i].
        """
        names = list(basis_names)
        n = len(names)
        idx = _indexer(names)
        terms = []
        for (i, j), value in table.items():
            i, j = idx(i), idx(j)
            for k, coeff in value.items():
                coeff = to_scalar(coeff)
                terms.append(((i, j, idx(k)), coeff))
                if antisymmetrize:
                    terms.append(((j, i, idx(k)), -coeff))
        return cls(Tensor3.from_terms(n, terms), alpha, names, check=check)

    @classmethod
    def abelian(cls, dim: int, alpha: LinearMap | None = None, basis_names=None) -> "HomLieAlgebra":
        return cls(Tensor3.zero(dim), alpha, basis_names)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self._table[i][j]

    def with_alpha(self, alpha: LinearMap, c: Tensor3 | None = None, *, check: bool = True):
        return HomLieAlgebra(self.c if c is None else c, alpha, self.basis_names, check=check)

    def basis(self) -> list[Vector]:
        return [Vector.unit(self.dim, i) for i in range(self.dim)]

    def __eq__(self, other):
        if not isinstance(other, HomLieAlgebra):
            return NotImplemented
        return self.c == other.c and self.alpha == other.alpha

    def __hash__(self):
        return hash((self.c, self.alpha))

    def __repr__(self):
        return f"HomLieAlgebra(dim={self.dim}, basis={list(self.basis_names)})"


def _indexer(names):
    pos = {name: k for k, name in enumerate(names)}

    def idx(x):
        if isinstance(x, int):
            return x
        return pos[x]
    return idx


def _check_dim(L: HomLieAlgebra, *xs: Tensor):
    for x in xs:
        if x.dim != L.dim:
            raise DimensionMismatch(f"element of dimension {x.dim} in an algebra of dimension {L.dim}")


def bracket(L: HomLieAlgebra, x: Vector, y: Vector) -> Vector:
    _check_dim(L, x, y)
    n = L.dim
    out = [ZERO] * n
    for i, xi in enumerate(x.flat):
        if not xi:
            continue
        row = L._table[i]
        for j, yj in enumerate(y.flat):
            if not yj:
                continue
            w = xi * yj
            for k, v in enumerate(row[j].flat):
                if v:
                    out[k] = out[k] + w * v
    return Vector._from_flat(n, tuple(out))


def ad_matrix(L: HomLieAlgebra, x: Vector) -> LinearMap:
    """Matrix of y -> [x, y]."""
    return LinearMap.from_columns([bracket(L, x, e).flat for e in L.basis()])


def adjoint(L: HomLieAlgebra, x: Vector, gamma: Tensor) -> Tensor:
    """ad_x(y1 (x) ... (x) yn) = sum_i alpha y1 (x) ... [x, yi] ... (x) alpha yn."""
    _check_dim(L, x, gamma)
    if gamma.order == 1:
        return bracket(L, x, gamma)
    m = ad_matrix(L, x)
    k = gamma.order
    total = None
    for s in range(k):
        term = apply_slots(gamma, [m if t == s else L.alpha for t in range(k)])
        total = term if total is None else total + term
    return total


# --- axiom residuals --------------------------------------------------------

def antisymmetry_residual(L: HomLieAlgebra) -> dict:
    n = L.dim
    return {(i, j): L._table[i][j] + L._table[j][i] for i in range(n) for j in range(i, n)}


def multiplicativity_residual(L: HomLieAlgebra, f: LinearMap | None = None,
                              target: HomLieAlgebra | None = None) -> dict:
    """f[e_i, e_j] - [f e_i, f e_j]' for all pairs (f defaults to alpha)."""
    f = L.alpha if f is None else f
    target = L if target is None else target
    imgs = f.columns()
    n = L.dim
    return {(i, j): apply_map(f, L._table[i][j]) - bracket(target, imgs[i], imgs[j])
            for i in range(n) for j in range(i + 1, n)}


def hom_jacobi_residual(L: HomLieAlgebra) -> dict:
    """Residual [[x,y],az] + [[z,x],ay] + [[y,z],ax] on basis triples."""
    n = L.dim
    al = L.alpha.columns()
    out = {}
    for i, j, k in product(range(n), repeat=3):
        t = L._table
        out[(i, j, k)] = (bracket(L, t[i][j], al[k]) + bracket(L, t[k][i], al[j])
                          + bracket(L, t[j][k], al[i]))
    return out


def algebra_report(L: HomLieAlgebra) -> AxiomReport:
    names = L.basis_names
    return report([
        check_residuals("algebra.antisymmetry", antisymmetry_residual(L), names),
        check_residuals("algebra.multiplicativity", multiplicativity_residual(L), names),
        check_residuals("algebra.hom_jacobi", hom_jacobi_residual(L), names),
    ])


def is_lie_morphism(L: HomLieAlgebra, f: LinearMap, target: HomLieAlgebra | None = None) -> AxiomReport:
    """Check f[x, y] = [f x, f y] on basis pairs (target defaults to L)."""
    if (f.rows, f.cols) != ((target or L).dim, L.dim):
        raise DimensionMismatch("morphism has the wrong shape")
    return report([check_residuals("morphism.bracket", multiplicativity_residual(L, f, target),
                                   L.basis_names)])


def yau_twist(L: HomLieAlgebra, f: LinearMap) -> HomLieAlgebra:
    """(L, f o [-,-], f) for a Lie algebra L and a Lie algebra morphism f."""
    rep = is_lie_morphism(L, f)
    if not rep:
        ch = rep.failures()[0]
        raise NotAMorphism(f"map is not a Lie algebra morphism {ch.witness_text(L.basis_names)}",
                           ch.where, ch.residual)
    return L.with_alpha(f, twisted_constants(L, f))


def twisted_constants(L: HomLieAlgebra, f: LinearMap) -> Tensor3:
    """Structure constants of f o [-,-] (slot 3 holds the output)."""
    return apply_slot(f, L.c, 2)


# --- classical Hom-Yang-Baxter ------------------------------------------------

def mixed_brackets(L: HomLieAlgebra, r: Tensor2, s: Tensor2) -> tuple[Tensor3, Tensor3, Tensor3]:
    """([r12, s13], [r12, s23], [r13, s23]) with alpha on the unbracketed slots."""
    _check_dim(L, r, s)
    n = L.dim
    rt = r.nonzero()
    st = s.nonzero()
    x12_13, x12_23, x13_23 = [], [], []
    for (i, j), rv in rt:
        for (k, l), sv in st:
            w = rv * sv
            for m, v in enumerate(L._table[i][k].flat):
                if v:
                    x12_13.append(((m, j, l), w * v))
            for m, v in enumerate(L._table[j][k].flat):
                if v:
                    x12_23.append(((i, m, l), w * v))
            for m, v in enumerate(L._table[j][l].flat):
                if v:
                    x13_23.append(((i, k, m), w * v))
    a = L.alpha
    return (apply_slots(Tensor3.from_terms(n, x12_13), [None, a, a]),
            apply_slots(Tensor3.from_terms(n, x12_23), [a, None, a]),
            apply_slots(Tensor3.from_terms(n, x13_23), [a, a, None]))


def mixed_chybe(L: HomLieAlgebra, r: Tensor2, s: Tensor2) -> Tensor3:
    """[[r, s]]^alpha = [r12, s13] + [r12, s23] + [r13, s23]."""
    p, q, t = mixed_brackets(L, r, s)
    return p + q + t


def chybe_residual(L: HomLieAlgebra, r: Tensor2) -> Tensor3:
    return mixed_chybe(L, r, r)


def twisted_solution(L: HomLieAlgebra, f: LinearMap, r: Tensor2, n: int, *, check: bool = True) -> Tensor2:
    """(f (x) f)^n (r), a CHYBE solution in the Yau twist of L along f."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if check:
        rep = is_lie_morphism(L, f)
        if not rep:
            ch = rep.failures()[0]
            raise NotAMorphism("map is not a Lie algebra morphism", ch.where, ch.residual)
        res = chybe_residual(L, r)
        if not res.is_zero():
            raise NotAnRMatrix("r does not solve the classical Yang-Baxter equation", None, res)
    for _ in range(n):
        r = tensor_power_apply(f, 2, r)
    return r


def hybe_residual(B: LinearMap, alpha: LinearMap) -> LinearMap:
    """(a (x) B)(B (x) a)(a (x) B) - (B (x) a)(a (x) B)(B (x) a) on V^{(x)3}."""
    n = alpha.rows
    if (B.rows, B.cols) != (n * n, n * n):
        raise DimensionMismatch("B must act on V (x) V")
    aa = kron(alpha, alpha)
    comm = compose(B, aa) - compose(aa, B)
    if not comm.is_zero():
        raise NotAlphaCommuting("B does not commute with alpha (x) alpha", None, comm)
    aB, Ba = kron(alpha, B), kron(B, alpha)
    return compose(aB, compose(Ba, aB)) - compose(Ba, compose(aB, Ba))


def flip_map(n: int) -> LinearMap:
    """The twist tau on V (x) V as an n^2 x n^2 matrix."""
    rows = [[0] * (n * n) for _ in range(n * n)]
    for i in range(n):
        for j in range(n):
            rows[j * n + i][i * n + j] = 1
    return LinearMap(rows)
