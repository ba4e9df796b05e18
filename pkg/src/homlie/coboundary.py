"""Coboundary, quasi-triangular and triangular Hom-Lie bialgebras.

A coboundary Hom-Lie bialgebra is a Hom-Lie bialgebra with an element r
fixed by alpha (x) alpha such that Delta(x) = ad_x(r).  It is
quasi-triangular when [[r, r]]^alpha = 0 and triangular when in addition
r is anti-symmetric.  r itself need not be anti-symmetric in general.
"""

from __future__ import annotations

from dataclasses import dataclass, fields

from .algebra import HomLieAlgebra, adjoint, bracket, chybe_residual, is_lie_morphism, mixed_brackets, mixed_chybe
from .bialgebra import (HomLieBialgebra, alpha_fixed_residual, apply_cobracket,
                        bialgebra_twist, cobracket_from_images, delta0, dualize, lie_bialgebra)
from .checks import AxiomReport, check_residuals, report
from .errors import (AxiomError, CoboundObstruction, MixedChybeObstruction, NotAlphaFixed,
                     NotAMorphism, NotAntiSymmetric, PerturbObstruction, RNotFixed)
from .multilinear import (LinearMap, Tensor2, Tensor3, apply_map, apply_slot, compose, cyclic_sum,
                          flip, tensor_power_apply, tensor_to_map)


def ad_r_residual(B: HomLieBialgebra, r: Tensor2) -> dict:
    """Delta(e_i) - ad_{e_i}(r) per basis vector."""
    L = B.algebra
    return {(i,): B.delta.image(i) - adjoint(L, e, r) for i, e in enumerate(L.basis())}


def check_coboundary(B: HomLieBialgebra, r: Tensor2) -> AxiomReport:
    names = B.basis_names
    return report([
        check_residuals("coboundary.r_alpha_fixed", {(): alpha_fixed_residual(B.alpha, r)}, names),
        check_residuals("coboundary.delta_is_ad_r", ad_r_residual(B, r), names),
    ])


def check_quasi_triangular(B: HomLieBialgebra, r: Tensor2) -> AxiomReport:
    return check_coboundary(B, r) + report([
        check_residuals("quasi_triangular.chybe", {(): chybe_residual(B.algebra, r)},
                        B.basis_names)])


class CoboundaryStructure:
    __slots__ = ("bialgebra", "r")

    def __init__(self, bialgebra: HomLieBialgebra, r: Tensor2, *, check: bool = True):
        self.bialgebra, self.r = bialgebra, r
        if check:
            rep = check_coboundary(bialgebra, r)
            if not rep:
                raise AxiomError(rep)

    @property
    def algebra(self) -> HomLieAlgebra:
        return self.bialgebra.algebra

    @property
    def alpha(self) -> LinearMap:
        return self.bialgebra.alpha

    def __eq__(self, other):
        if not isinstance(other, CoboundaryStructure):
            return NotImplemented
        return self.bialgebra == other.bialgebra and self.r == other.r

    def __hash__(self):
        return hash((self.bialgebra, self.r))

    def __repr__(self):
        return f"CoboundaryStructure({self.bialgebra!r}, r={self.r!r})"


class QuasiTriangularStructure:
    __slots__ = ("cb",)

    def __init__(self, cb: CoboundaryStructure, *, check: bool = True):
        self.cb = cb
        if check:
            res = chybe_residual(cb.algebra, cb.r)
            rep = report([check_residuals("quasi_triangular.chybe", {(): res}, cb.algebra.basis_names)])
            if not rep:
                raise AxiomError(rep)

    @property
    def bialgebra(self) -> HomLieBialgebra:
        return self.cb.bialgebra

    @property
    def r(self) -> Tensor2:
        return self.cb.r

    def __eq__(self, other):
        if not isinstance(other, QuasiTriangularStructure):
            return NotImplemented
        return self.cb == other.cb

    def __hash__(self):
        return hash(self.cb)

    def __repr__(self):
        return f"QuasiTriangularStructure({self.cb!r})"


def is_triangular(qt: QuasiTriangularStructure) -> bool:
    return (flip(qt.r) + qt.r).is_zero()


def coboundary_twist(cb, f: LinearMap):
    """Twist a coboundary Lie bialgebra along a Lie algebra morphism fixing r.

    Returns a QuasiTriangularStructure when given one, otherwise a
    CoboundaryStructure.
    """
    quasi = isinstance(cb, QuasiTriangularStructure)
    base = cb.cb if quasi else cb
    L = base.algebra
    rep = is_lie_morphism(L, f)
    if not rep:
        ch = rep.failures()[0]
        raise NotAMorphism("map is not a Lie algebra morphism", ch.where, ch.residual)
    res = alpha_fixed_residual(f, base.r)
    if not res.is_zero():
        raise RNotFixed("(f (x) f)(r) differs from r", None, res)
    B = bialgebra_twist(base.bialgebra, f)
    out = CoboundaryStructure(B, base.r)
    return QuasiTriangularStructure(out) if quasi else out


def antisymmetry_residual(t: Tensor2) -> Tensor2:
    return flip(t) + t


def _first_nonzero_entry(t: Tensor2):
    nz = t.nonzero()
    return nz[0][0] if nz else None


def cobound_residual(L: HomLieAlgebra, r: Tensor2) -> dict:
    """alpha^{(x)3}(ad_x([[r, r]]^alpha)) on each basis vector x."""
    rr = chybe_residual(L, r)
    return {(i,): tensor_power_apply(L.alpha, 3, adjoint(L, e, rr)) for i, e in enumerate(L.basis())}


def _require_admissible(L: HomLieAlgebra, t: Tensor2, what: str = "r"):
    res = alpha_fixed_residual(L.alpha, t)
    if not res.is_zero():
        raise NotAlphaFixed(f"{what} is not fixed by alpha (x) alpha", None, res)
    anti = antisymmetry_residual(t)
    idx = _first_nonzero_entry(anti)
    if idx is not None:
        where = tuple(L.basis_names[k] for k in idx)
        raise NotAntiSymmetric(f"{what} is not anti-symmetric at ({', '.join(where)})", where, anti)


def _raise_first(err, residuals: dict, L: HomLieAlgebra, message: str):
    for key, res in residuals.items():
        if not res.is_zero():
            where = tuple(L.basis_names[k] for k in key)
            raise err(f"{message} at {', '.join(where) or 'top level'}", where, res)


def build_coboundary(L: HomLieAlgebra, r: Tensor2) -> CoboundaryStructure:
    """(L, ad(r), alpha, r) for alpha-fixed anti-symmetric r with ad-invariant CHYBE residual."""
    _require_admissible(L, r)
    _raise_first(CoboundObstruction, cobound_residual(L, r), L,
                 "alpha^3(ad_x [[r,r]]) is nonzero")
    D = delta0(L, r)
    return CoboundaryStructure(lie_bialgebra(L, D.d), r)


def build_quasi_triangular(L: HomLieAlgebra, r: Tensor2) -> QuasiTriangularStructure:
    """Quasi-triangular structure from an alpha-fixed anti-symmetric CHYBE solution."""
    return QuasiTriangularStructure(build_coboundary(L, r))


# --- rho and lambda maps --------------------------------------------------------

@dataclass(frozen=True)
class RhoLambdaMaps:
    """Maps from the dual space (in the dual basis) to L."""

    rho1: LinearMap
    rho2: LinearMap
    lambda1: LinearMap
    lambda2: LinearMap


def rho_lambda(cb: CoboundaryStructure) -> RhoLambdaMaps:
    """rho1(phi) = <phi, alpha r1> r2, rho2(phi) = <phi, r1> alpha r2,
    lambda1(phi) = alpha r1 <phi, r2>, lambda2(phi) = r1 <phi, alpha r2>."""
    R = tensor_to_map(cb.r)
    A = cb.alpha
    return RhoLambdaMaps(
        rho1=compose(A, R).transpose(),
        rho2=compose(A, R.transpose()),
        lambda1=compose(A, R),
        lambda2=compose(R, A.transpose()),
    )


@dataclass(frozen=True)
class QuasiCharacterizations:
    chybe: bool
    alpha_delta: bool
    delta_alpha: bool
    rho_bracket: bool
    lambda_bracket: bool
    rho_cobracket: bool
    lambda_cobracket: bool

    def values(self) -> tuple[bool, ...]:
        return tuple(getattr(self, f.name) for f in fields(self))

    @property
    def all_equal(self) -> bool:
        return len(set(self.values())) == 1


def alpha_delta_identities(cb: CoboundaryStructure) -> tuple[Tensor3, Tensor3]:
    """Residuals of (alpha (x) Delta)(r) = [r12, r23] + [r13, r23] and
    (Delta (x) alpha)(r) = -[r12, r13] - [r12, r23]."""
    L, r, D = cb.algebra, cb.r, cb.bialgebra.delta
    x12_13, x12_23, x13_23 = mixed_brackets(L, r, r)
    a_d = apply_slot(cb.alpha, apply_cobracket(D, r, 1), 0)
    d_a = apply_slot(cb.alpha, apply_cobracket(D, r, 0), 2)
    return a_d - (x12_23 + x13_23), d_a + x12_13 + x12_23


def quasi_characterizations(cb: CoboundaryStructure) -> QuasiCharacterizations:
    """Evaluate the seven statements equivalent to [[r, r]]^alpha = 0, each on its own."""
    L, r, D = cb.algebra, cb.r, cb.bialgebra.delta
    n = L.dim
    x12_13, x12_23, x13_23 = mixed_brackets(L, r, r)
    s1 = (x12_13 + x12_23 + x13_23).is_zero()
    a_d = apply_slot(cb.alpha, apply_cobracket(D, r, 1), 0)
    s2 = a_d == -x12_13
    d_a = apply_slot(cb.alpha, apply_cobracket(D, r, 0), 2)
    s3 = d_a == x13_23

    dual = dualize(cb.bialgebra)
    m = rho_lambda(cb)
    phis = dual.algebra.basis()
    rho1 = [apply_map(m.rho1, p) for p in phis]
    lam2 = [apply_map(m.lambda2, p) for p in phis]
    s4 = s5 = s6 = s7 = True
    for i in range(n):
        for j in range(n):
            db = dual.algebra.bracket_basis(i, j)
            if apply_map(m.rho2, db) != bracket(L, rho1[i], rho1[j]):
                s4 = False
            if apply_map(m.lambda1, db) != -bracket(L, lam2[i], lam2[j]):
                s5 = False
    for i in range(n):
        dd = dual.delta.image(i)
        if tensor_power_apply(m.rho2, 2, dd) != -D(rho1[i]):
            s6 = False
        if tensor_power_apply(m.lambda1, 2, dd) != D(lam2[i]):
            s7 = False
    return QuasiCharacterizations(s1, s2, s3, s4, s5, s6, s7)


# --- perturbation ---------------------------------------------------------------

def alpha_delta_cyclic(B: HomLieBialgebra, t: Tensor2) -> Tensor3:
    """cyc((alpha (x) Delta)(t))."""
    return cyclic_sum(apply_slot(B.alpha, apply_cobracket(B.delta, t, 1), 0))


def perturb_residual(B: HomLieBialgebra, t: Tensor2) -> dict:
    """alpha^{(x)3}(ad_x([[t, t]]^alpha + cyc((alpha (x) Delta)(t)))) per basis x."""
    L = B.algebra
    inner = chybe_residual(L, t) + alpha_delta_cyclic(B, t)
    return {(i,): tensor_power_apply(L.alpha, 3, adjoint(L, e, inner)) for i, e in enumerate(L.basis())}


def perturbed_cobracket(B: HomLieBialgebra, t: Tensor2) -> Tensor3:
    L = B.algebra
    return cobracket_from_images([B.delta.image(i) + adjoint(L, e, t) for i, e in enumerate(L.basis())])


def perturb(B: HomLieBialgebra, t: Tensor2) -> HomLieBialgebra:
    """(L, [-,-], Delta + ad(t), alpha) under the perturbed co-Jacobi hypothesis."""
    L = B.algebra
    _require_admissible(L, t, "t")
    _raise_first(PerturbObstruction, perturb_residual(B, t), L,
                 "alpha^3 ad_x([[t,t]] + cyc((alpha (x) Delta)(t))) is nonzero")
    return lie_bialgebra(L, perturbed_cobracket(B, t))


def perturb_quasi(qt: QuasiTriangularStructure, t: Tensor2) -> QuasiTriangularStructure:
    """(L, [-,-], ad(r + t), alpha, r + t) for admissible t."""
    B, r = qt.bialgebra, qt.r
    L = B.algebra
    _require_admissible(L, t, "t")
    strong = chybe_residual(L, t) + alpha_delta_cyclic(B, t)
    if not strong.is_zero():
        raise PerturbObstruction("[[t,t]] + cyc((alpha (x) Delta)(t)) is nonzero", None, strong)
    mixed = mixed_chybe(L, r, t) + mixed_chybe(L, t, r) + mixed_chybe(L, t, t)
    if not mixed.is_zero():
        raise MixedChybeObstruction("[[r,t]] + [[t,r]] + [[t,t]] is nonzero", None, mixed)
    Bt = perturb(B, t)
    return QuasiTriangularStructure(CoboundaryStructure(Bt, r + t))


def trivial_quasi_triangular(L: HomLieAlgebra) -> QuasiTriangularStructure:
    """The zero cobracket with r = 0 on a Hom-Lie algebra."""
    zero = Tensor2.zero(L.dim)
    return QuasiTriangularStructure(CoboundaryStructure(lie_bialgebra(L, Tensor3.zero(L.dim)), zero))
