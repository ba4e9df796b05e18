"""Hom-Lie coalgebras and bialgebras, duality and low-degree cohomology.

A Hom-Lie coalgebra (L, Delta, alpha) has a cobracket commuting with alpha,
anti-symmetric (tau Delta = -Delta) and satisfying Hom-co-Jacobi
cyc((alpha (x) Delta) Delta) = 0.  A Hom-Lie bialgebra adds the
compatibility

    Delta[x, y] = ad_{alpha x}(Delta y) - ad_{alpha y}(Delta x),

which says that Delta is a 1-cocycle.
"""

from __future__ import annotations

from typing import Sequence

from .algebra import (HomLieAlgebra, adjoint, algebra_report, default_names,
                      multiplicativity_residual, twisted_constants)
from .checks import AxiomReport, check_residuals, report
from .errors import (AxiomError, DimensionMismatch, NotABialgebraMorphism, NotACochain,
                     NotAlphaFixed, NotInvertible)
from .multilinear import (LinearMap, Tensor2, Tensor3, Vector, apply_slot, compose, cyclic_sum, det, flip, permute,
                          tensor_power_apply)


def cobracket_images(d: Tensor3) -> list[Tensor2]:
    n = d.dim
    return [Tensor2._from_flat(n, d.flat[i * n * n:(i + 1) * n * n]) for i in range(n)]


def cobracket_from_images(images: Sequence[Tensor2]) -> Tensor3:
    n = len(images)
    flat = tuple(x for img in images for x in img.flat)
    return Tensor3._from_flat(n, flat)


class Cochain1:
    """A linear map L -> L (x) L given by d[i, j, k] = coeff of e_j (x) e_k in D(e_i)."""

    __slots__ = ("d", "_images")

    def __init__(self, d: Tensor3):
        if not isinstance(d, Tensor3):
            d = Tensor3(d)
        self.d = d
        self._images = cobracket_images(d)

    @property
    def dim(self) -> int:
        return self.d.dim

    def image(self, i: int) -> Tensor2:
        return self._images[i]

    def __call__(self, x: Vector) -> Tensor2:
        total = Tensor2.zero(self.dim)
        for i, xi in enumerate(x.flat):
            if xi:
                total = total + self._images[i] * xi
        return total

    def commutation_residual(self, alpha: LinearMap) -> dict:
        """D(alpha e_i) - (alpha (x) alpha) D(e_i)."""
        out = {}
        for i, col in enumerate(alpha.columns()):
            out[(i,)] = self(col) - tensor_power_apply(alpha, 2, self._images[i])
        return out

    def is_zero(self) -> bool:
        return self.d.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Cochain1):
            return NotImplemented
        return self.d == other.d

    def __hash__(self):
        return hash(self.d)

    def __repr__(self):
        return f"Cochain1({self.d!r})"


def apply_cobracket(D: Cochain1, x: Tensor2, slot: int) -> Tensor3:
    """Apply D to one slot of an order-2 tensor (slot 0: D (x) Id, slot 1: Id (x) D)."""
    n = x.dim
    terms = []
    for (i, j), v in x.nonzero():
        expand, keep = (i, j) if slot == 0 else (j, i)
        for (p, q), w in D.image(expand).nonzero():
            idx = (p, q, keep) if slot == 0 else (keep, p, q)
            terms.append((idx, v * w))
    return Tensor3.from_terms(n, terms)


class HomLieCoalgebra:
    """Cobracket constants d[i, j, k] with twisting map alpha."""

    __slots__ = ("dim", "basis_names", "d", "alpha", "delta")

    def __init__(self, d: Tensor3, alpha: LinearMap | None = None,
                 basis_names: Sequence[str] | None = None, *, check: bool = True):
        if not isinstance(d, Tensor3):
            d = Tensor3(d)
        n = d.dim
        alpha = LinearMap.identity(n) if alpha is None else alpha
        if (alpha.rows, alpha.cols) != (n, n):
            raise DimensionMismatch(f"alpha must be {n}x{n}")
        names = tuple(basis_names) if basis_names is not None else default_names(n)
        if len(names) != n:
            raise DimensionMismatch("one name per basis vector required")
        self.dim, self.basis_names, self.d, self.alpha = n, names, d, alpha
        self.delta = Cochain1(d)
        if check:
            rep = coalgebra_report(self)
            if not rep:
                raise AxiomError(rep)

    @classmethod
    def from_table(cls, basis_names, table, alpha=None, *, check=True) -> "HomLieCoalgebra":
        """Build from {i: {(j, k): coeff}} with integer or name indices."""
        names = list(basis_names)
        pos = {name: k for k, name in enumerate(names)}
        idx = (lambda x: x if isinstance(x, int) else pos[x])
        terms = [((idx(i), idx(j), idx(k)), coeff)
                 for i, value in table.items() for (j, k), coeff in value.items()]
        return cls(Tensor3.from_terms(len(names), terms), alpha, names, check=check)

    @classmethod
    def zero(cls, dim: int, alpha=None, basis_names=None) -> "HomLieCoalgebra":
        return cls(Tensor3.zero(dim), alpha, basis_names)

    def cobracket(self, x: Vector) -> Tensor2:
        return self.delta(x)

    def __eq__(self, other):
        if not isinstance(other, HomLieCoalgebra):
            return NotImplemented
        return self.d == other.d and self.alpha == other.alpha

    def __hash__(self):
        return hash((self.d, self.alpha))

    def __repr__(self):
        return f"HomLieCoalgebra(dim={self.dim}, basis={list(self.basis_names)})"


def co_jacobi_residual(D: Cochain1, alpha: LinearMap) -> dict:
    """cyc((alpha (x) D)(D(e_i))) for each basis vector."""
    out = {}
    for i in range(D.dim):
        t = apply_slot(alpha, apply_cobracket(D, D.image(i), 1), 0)
        out[(i,)] = cyclic_sum(t)
    return out


def coalgebra_report(C: HomLieCoalgebra) -> AxiomReport:
    D, names = C.delta, C.basis_names
    anti = {(i,): flip(D.image(i)) + D.image(i) for i in range(C.dim)}
    return report([
        check_residuals("coalgebra.antisymmetry", anti, names),
        check_residuals("coalgebra.comultiplicativity", D.commutation_residual(C.alpha), names),
        check_residuals("coalgebra.hom_co_jacobi", co_jacobi_residual(D, C.alpha), names),
    ])


def compatibility_residual(L: HomLieAlgebra, D) -> dict:
    """Delta[e_i, e_j] - ad_{alpha e_i}(Delta e_j) + ad_{alpha e_j}(Delta e_i) for i < j."""
    D = _as_cochain(D)
    if D.dim != L.dim:
        raise DimensionMismatch("algebra and cobracket dimensions differ")
    n = L.dim
    al = L.alpha.columns()
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            out[(i, j)] = (D(L.bracket_basis(i, j)) - adjoint(L, al[i], D.image(j))
                           + adjoint(L, al[j], D.image(i)))
    return out


def _as_cochain(D) -> Cochain1:
    if isinstance(D, Cochain1):
        return D
    if isinstance(D, HomLieCoalgebra):
        return D.delta
    if isinstance(D, HomLieBialgebra):
        return D.coalgebra.delta
    return Cochain1(D)


class HomLieBialgebra:
    """A Hom-Lie algebra and coalgebra on the same space with the same alpha."""

    __slots__ = ("algebra", "coalgebra")

    def __init__(self, algebra: HomLieAlgebra, coalgebra: HomLieCoalgebra, *, check: bool = True):
        if algebra.dim != coalgebra.dim:
            raise DimensionMismatch("algebra and coalgebra dimensions differ")
        self.algebra, self.coalgebra = algebra, coalgebra
        if check:
            rep = bialgebra_report(algebra, coalgebra)
            if not rep:
                raise AxiomError(rep)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def alpha(self) -> LinearMap:
        return self.algebra.alpha

    @property
    def basis_names(self):
        return self.algebra.basis_names

    @property
    def c(self) -> Tensor3:
        return self.algebra.c

    @property
    def d(self) -> Tensor3:
        return self.coalgebra.d

    @property
    def delta(self) -> Cochain1:
        return self.coalgebra.delta

    def __eq__(self, other):
        if not isinstance(other, HomLieBialgebra):
            return NotImplemented
        return self.algebra == other.algebra and self.coalgebra == other.coalgebra

    def __hash__(self):
        return hash((self.algebra, self.coalgebra))

    def __repr__(self):
        return f"HomLieBialgebra(dim={self.dim}, basis={list(self.basis_names)})"


def bialgebra_report(L: HomLieAlgebra, C: HomLieCoalgebra) -> AxiomReport:
    """Algebra axioms, coalgebra axioms, shared alpha, then compatibility."""
    rep = algebra_report(L) + coalgebra_report(C)
    same = {(): L.alpha - C.alpha} if L.dim == C.dim else {(): LinearMap.identity(1)}
    rep = rep + report([check_residuals("bialgebra.same_alpha", same)])
    if not rep:
        # the compatibility formula assumes a well-formed algebra and cobracket
        return rep
    return rep + report([check_residuals("bialgebra.compatibility",
                                         compatibility_residual(L, C.delta), L.basis_names)])


def lie_bialgebra(L: HomLieAlgebra, d: Tensor3, *, check: bool = True) -> HomLieBialgebra:
    """Bialgebra from an algebra and cobracket constants sharing its alpha."""
    return HomLieBialgebra(L, HomLieCoalgebra(d, L.alpha, L.basis_names, check=check), check=check)


# --- morphisms ----------------------------------------------------------------

def is_bialgebra_morphism(B: HomLieBialgebra, B2: HomLieBialgebra, f: LinearMap) -> AxiomReport:
    """alpha' f = f alpha, f[-,-] = [-,-]' f^{(x)2}, Delta' f = f^{(x)2} Delta."""
    if (f.rows, f.cols) != (B2.dim, B.dim):
        raise DimensionMismatch("morphism has the wrong shape")
    names = B.basis_names
    alpha_res = {(): compose(B2.alpha, f) - compose(f, B.alpha)}
    cob = {}
    for i, col in enumerate(f.columns()):
        cob[(i,)] = B2.delta(col) - tensor_power_apply(f, 2, B.delta.image(i))
    return report([
        check_residuals("morphism.alpha", alpha_res),
        check_residuals("morphism.bracket", multiplicativity_residual(B.algebra, f, B2.algebra), names),
        check_residuals("morphism.cobracket", cob, names),
    ])


def verify_isomorphism(B: HomLieBialgebra, B2: HomLieBialgebra, gamma: LinearMap) -> AxiomReport:
    """Checks that gamma is an invertible Hom-Lie bialgebra morphism B -> B2."""
    if (gamma.rows, gamma.cols) != (B2.dim, B.dim) or B.dim != B2.dim:
        raise DimensionMismatch("isomorphism must be square between equal dimensions")
    if not det(gamma):
        raise NotInvertible("gamma has zero determinant", None, gamma)
    return is_bialgebra_morphism(B, B2, gamma)


def bialgebra_twist(B: HomLieBialgebra, f: LinearMap) -> HomLieBialgebra:
    """(L, f o [-,-], Delta o f, f) for a Lie bialgebra morphism f of B."""
    rep = is_bialgebra_morphism(B, B, f)
    if not rep:
        ch = rep.failures()[0]
        raise NotABialgebraMorphism(
            f"map is not a Lie bialgebra morphism ({ch.name} {ch.witness_text(B.basis_names)})",
            ch.where, ch.residual)
    L = B.algebra.with_alpha(f, twisted_constants(B.algebra, f))
    d = cobracket_from_images([B.delta(col) for col in f.columns()])
    return HomLieBialgebra(L, HomLieCoalgebra(d, f, B.basis_names))


# --- duality ------------------------------------------------------------------

def dual_names(names: Sequence[str]) -> tuple[str, ...]:
    return tuple(n[:-1] if n.endswith("*") else n + "*" for n in names)


def dualize(B: HomLieBialgebra) -> HomLieBialgebra:
    """The dual bialgebra in the dual basis.

    <[phi, psi], x> = <phi (x) psi, Delta x>, <Delta phi, x (x) y> = <phi, [x, y]>,
    and alpha acts on the dual by the transpose.
    """
    c_star = permute(B.d, (2, 0, 1))   # c*[i, j, k] = d[k, i, j]
    d_star = permute(B.c, (1, 2, 0))   # d*[k, i, j] = c[i, j, k]
    a_star = B.alpha.transpose()
    names = dual_names(B.basis_names)
    L = HomLieAlgebra(c_star, a_star, names)
    return HomLieBialgebra(L, HomLieCoalgebra(d_star, a_star, names))


# --- cohomology in degrees 0 and 1 --------------------------------------------

def alpha_fixed_residual(alpha: LinearMap, r: Tensor2) -> Tensor2:
    return tensor_power_apply(alpha, 2, r) - r


def delta0(L: HomLieAlgebra, r: Tensor2) -> Cochain1:
    """The coboundary x -> ad_x(r) of an alpha-fixed r."""
    res = alpha_fixed_residual(L.alpha, r)
    if not res.is_zero():
        raise NotAlphaFixed("r is not fixed by alpha (x) alpha", None, res)
    return Cochain1(cobracket_from_images([adjoint(L, e, r) for e in L.basis()]))


def delta1(L: HomLieAlgebra, D) -> dict:
    """(x, y) -> D[x, y] - ad_{alpha x} D(y) + ad_{alpha y} D(x) on basis pairs."""
    D = _as_cochain(D)
    comm = D.commutation_residual(L.alpha)
    bad = [(k, v) for k, v in comm.items() if not v.is_zero()]
    if bad:
        (i,), res = bad[0]
        raise NotACochain("map does not commute with alpha", (L.basis_names[i],), res)
    return compatibility_residual(L, D)
