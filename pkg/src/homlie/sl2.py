"""The sl(2) catalog.

Basis order is (H, X+, X-) with [X+, X-] = H and [H, X+-] = +-2 X+-.  The
standard r-matrix is r = X+ (x) X- + 1/4 H (x) H and the cobracket it induces
is Delta(H) = 0, Delta(X+-) = 1/2 (X+- (x) H - H (x) X+-).

Maps are stored column-wise: column j of a matrix is the image of e_j.

The endomorphism families
-------------------------
Every non-zero Lie algebra endomorphism of sl(2) lies in one of three
families.  The matrices below were solved from the morphism equations and
cross-checked against the one-step recursions of the twisted r-matrices:

* family 1 (b != 0, ac = 0)::

      H  -> H - 2ab X+ - 2c/b X-
      X+ -> c H + b X+ - c^2/b X-
      X- -> a H - a^2 b X+ + 1/b X-

* family 2 (b != 0, ac = 0): omega o alpha1(-a, b, -c), where omega swaps
  X+ and X- and negates H.
* family 3 (ab != 0, c != +-1): a one-parameter-richer family whose H
  image is c H + b X+ + (1 - c^2)/b X-.

``closed_form_twisted_r`` assembles (alpha (x) alpha)^n (r) from coefficient
recursions.  By default the recursions and displays are used verbatim;
``corrected=True`` switches to versions re-derived by direct
expansion.  Only family 1 and the c = 0 branch of family 2 differ.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import HomLieAlgebra
from .bialgebra import HomLieBialgebra, HomLieCoalgebra, dual_names
from .errors import ConstraintViolation
from .multilinear import LinearMap, Tensor2, tensor_power_apply
from .scalars import Scalar, is_zero, parse_scalar, symbols, to_scalar

NAMES = ("H", "X+", "X-")
H, XP, XM = 0, 1, 2
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


# --- the Lie bialgebra sl(2) --------------------------------------------------

def _bracket_table(b=1):
    b = to_scalar(b)
    return {(H, XP): {XP: 2 * b}, (H, XM): {XM: -2 / b}, (XP, XM): {H: 1}}


def _cobracket_table(b=1):
    b = to_scalar(b)
    return {XP: {(XP, H): b / 2, (H, XP): -b / 2},
            XM: {(XM, H): 1 / (2 * b), (H, XM): -1 / (2 * b)}}


def _diag(b) -> LinearMap:
    b = to_scalar(b)
    return LinearMap.diagonal([1, b, 1 / b])


def make_sl2(alpha: LinearMap | None = None, *, check: bool = True) -> HomLieAlgebra:
    """sl(2) with twisting map ``alpha`` (identity by default)."""
    return HomLieAlgebra.from_table(NAMES, _bracket_table(), alpha, check=check)


def standard_r() -> Tensor2:
    return Tensor2.from_terms(3, [((XP, XM), 1), ((H, H), QUARTER)])


def sl2_cobracket() -> HomLieCoalgebra:
    return HomLieCoalgebra.from_table(NAMES, _cobracket_table())


def sl2_bialgebra() -> HomLieBialgebra:
    return HomLieBialgebra(make_sl2(), sl2_cobracket())


def absolute(i: int, j: int, coeff=1) -> Tensor2:
    """coeff * |e_i (x) e_j| = coeff * (e_i (x) e_j - e_j (x) e_i)."""
    coeff = to_scalar(coeff)
    return Tensor2.from_terms(3, [((i, j), coeff), ((j, i), -coeff)])


def omega() -> LinearMap:
    """The involution H -> -H, X+ <-> X-."""
    return LinearMap([[-1, 0, 0], [0, 0, 1], [0, 1, 0]])


def diagonal_morphism(b) -> LinearMap:
    """H -> H, X+- -> b^(+-1) X+-."""
    if is_zero(to_scalar(b)):
        raise ConstraintViolation("b must be non-zero")
    return _diag(b)


# --- endomorphism families ----------------------------------------------------

@dataclass(frozen=True)
class Sl2Endo:
    family: int
    a: Scalar
    b: Scalar
    c: Scalar
    matrix: LinearMap
    branch: str


def _alpha1(a, b, c) -> LinearMap:
    return LinearMap([
        [1, c, a],
        [-2 * a * b, b, -a * a * b],
        [-2 * c / b, -c * c / b, 1 / b],
    ])


def _alpha2(a, b, c) -> LinearMap:
    return LinearMap([
        [-1, c, a],
        [2 * c / b, -c * c / b, 1 / b],
        [2 * a * b, b, -a * a * b],
    ])


def _alpha3(a, b, c) -> LinearMap:
    return LinearMap([
        [c, a, (1 - c * c) / (4 * a)],
        [b, a * b / (c - 1), b * (1 - c) / (4 * a)],
        [(1 - c * c) / b, a * (1 - c) / b, (c + 1) * (c * c - 1) / (4 * a * b)],
    ])


_MATRICES: dict[int, Callable] = {1: _alpha1, 2: _alpha2, 3: _alpha3}


def _branch(family: int, a, b, c) -> str:
    if family not in _MATRICES:
        raise ConstraintViolation(f"family must be 1, 2 or 3, got {family!r}")
    if family == 3:
        if is_zero(a * b):
            raise ConstraintViolation("family 3 needs ab != 0")
        if is_zero(c - 1) or is_zero(c + 1):
            raise ConstraintViolation("family 3 needs c != 1 and c != -1")
        return "generic"
    if is_zero(b):
        raise ConstraintViolation(f"family {family} needs b != 0")
    if not is_zero(a * c):
        raise ConstraintViolation(f"family {family} needs ac = 0")
    if is_zero(a) and is_zero(c):
        return "a=c=0"
    return "a=0" if is_zero(a) else "c=0"


def endo(family: int, a=0, b=1, c=0) -> Sl2Endo:
    a, b, c = to_scalar(a), to_scalar(b), to_scalar(c)
    branch = _branch(family, a, b, c)
    return Sl2Endo(family, a, b, c, _MATRICES[family](a, b, c), branch)


def branch_params(family: int, branch: str) -> tuple[Scalar, Scalar, Scalar]:
    """Symbolic (a, b, c) for a family branch, e.g. (0, b, c) for "a=0"."""
    a, b, c = symbols()
    table = {
        "a=0": (0, b, c), "c=0": (a, b, 0), "a=c=0": (0, b, 0), "generic": (a, b, c),
    }
    if branch not in table:
        raise ConstraintViolation(f"unknown branch {branch!r}")
    params = tuple(to_scalar(x) for x in table[branch])
    _branch(family, *params)
    return params


BRANCHES = {1: ("a=0", "c=0", "a=c=0"), 2: ("a=0", "c=0", "a=c=0"), 3: ("generic",)}


# --- twisted r-matrices -------------------------------------------------------

@dataclass(frozen=True)
class RecursionState:
    """Coefficient sequences indexed 0..n; ``state["d"]`` is the value at n."""

    family: int
    sequences: dict

    @property
    def n(self) -> int:
        return len(next(iter(self.sequences.values()))) - 1

    def __getitem__(self, name: str) -> Scalar:
        return self.sequences[name][-1]

    def at(self, name: str, m: int) -> Scalar:
        return self.sequences[name][m]


def _geometric(x, n: int) -> Scalar:
    """sum_{i=0}^{n-1} x^i."""
    total, term = to_scalar(0), to_scalar(1)
    for _ in range(n):
        total, term = total + term, term * x
    return total


def _step1(a, b, c, n, state):
    d, e = state
    return b * b * d + _geometric(b, n), e / (b * b) + _geometric(1 / b, n)


def _step2(a, b, c, n, state, corrected):
    j, k, l = state
    if corrected:
        return (-1 - j + 2 * c * k - 2 * a * l,
                (c / 2 + c * j - c * c * k - l) / b,
                -b * (a / 2 + a * j + k + a * a * l))
    if is_zero(a):
        k_next = (c / 2 + c * j - c * c * k - l) / b
    elif is_zero(c):
        k_next = l / b
    else:
        raise ConstraintViolation("family 2 recursion needs a = 0 or c = 0")
    return (-1 - j + 2 * (a + c) * k, k_next, -b * (a / 2 + a * j + k - a * a * l))


def _step3(a, b, c, n, state):
    p, q, s = state
    return ((c - 1) / 2 + c * p + 2 * a * q + (c * c - 1) / (2 * a) * s,
            b / 4 * (1 + 2 * p + 4 * a / (c - 1) * q + (c - 1) / a * s),
            (c * c - 1) / (4 * b) * (1 + 2 * p + 4 * a / (c + 1) * q + (c + 1) / a * s))


_SEQ_NAMES = {1: ("d", "e"), 2: ("j", "k", "l"), 3: ("p", "q", "s")}


def recursion_coeffs(family: int, a, b, c, n: int, *, corrected: bool = False) -> RecursionState:
    """Coefficients of the closed form after n steps.

    Family 1 starts from d_0 = e_0 = 0, which reproduces d_1 = e_1 = 0.
    With ``corrected`` the family-1 sequences vanish identically (the
    X+ (x) X+ and X- (x) X- terms cancel) and family 2 uses a single formula
    valid on both branches.
    """
    if n < 0:
        raise ConstraintViolation("n must be non-negative")
    a, b, c = to_scalar(a), to_scalar(b), to_scalar(c)
    _branch(family, a, b, c)
    names = _SEQ_NAMES[family]
    zero = to_scalar(0)
    state = (zero,) * len(names)
    history = [state]
    for m in range(n):
        if family == 1:
            state = (zero, zero) if corrected else _step1(a, b, c, m, state)
        elif family == 2:
            state = _step2(a, b, c, m, state, corrected)
        else:
            state = _step3(a, b, c, m, state)
        history.append(state)
    return RecursionState(family, {name: tuple(h[i] for h in history) for i, name in enumerate(names)})


def closed_form_twisted_r(family: int, a, b, c, n: int, *, corrected: bool = False) -> Tensor2:
    """(alpha (x) alpha)^n (r) assembled from the coefficient recursions."""
    a, b, c = to_scalar(a), to_scalar(b), to_scalar(c)
    st = recursion_coeffs(family, a, b, c, n, corrected=corrected)
    r = standard_r()
    if family == 1:
        # verbatim: 1/2 X+ (x) H - 2 H (x) X+; direct expansion gives -1/2
        m = HALF if corrected else Fraction(2)
        plus = Tensor2.from_terms(3, [((XP, H), HALF), ((H, XP), -m)])
        minus = Tensor2.from_terms(3, [((H, XM), HALF), ((XM, H), -m)])
        sq_plus = Tensor2.unit(3, XP, XP)
        sq_minus = Tensor2.unit(3, XM, XM)
        upper = plus * _geometric(b, n) + sq_plus * (3 * a * b * b * st["d"])
        lower = minus * _geometric(1 / b, n) + sq_minus * (3 * c * st["e"] / (b * b))
        return r + upper * (a * b) + lower * (c / b)
    x, y, z = (st[name] for name in _SEQ_NAMES[family])
    return r + absolute(XP, XM, x) + absolute(H, XP, y) + absolute(H, XM, z)


def direct_twisted_r(alpha: LinearMap, n: int) -> Tensor2:
    """(alpha (x) alpha)^n (r) by repeated application."""
    x = standard_r()
    for _ in range(n):
        x = tensor_power_apply(alpha, 2, x)
    return x


# --- sl(2)_alpha and its dual ------------------------------------------------

def _nonzero_b(b) -> Scalar:
    b = to_scalar(b)
    if is_zero(b):
        raise ConstraintViolation("b must be non-zero")
    return b


def sl2_alpha_bialgebra(b) -> HomLieBialgebra:
    """The twist of sl(2) along H -> H, X+- -> b^(+-1) X+-, from its table."""
    b = _nonzero_b(b)
    alpha = _diag(b)
    L = HomLieAlgebra.from_table(NAMES, _bracket_table(b), alpha)
    C = HomLieCoalgebra.from_table(NAMES, _cobracket_table(b), alpha)
    return HomLieBialgebra(L, C)


def sl2_alpha_dual(b) -> HomLieBialgebra:
    """The dual of sl2_alpha_bialgebra(b) in the dual basis (phi, psi+, psi-)."""
    b = _nonzero_b(b)
    alpha = _diag(b)
    names = dual_names(NAMES)
    L = HomLieAlgebra.from_table(names, {(XP, H): {XP: b / 2}, (XM, H): {XM: 1 / (2 * b)}}, alpha)
    C = HomLieCoalgebra.from_table(names, {
        H: {(XP, XM): 1, (XM, XP): -1},
        XP: {(H, XP): 2 * b, (XP, H): -2 * b},
        XM: {(H, XM): -2 / b, (XM, H): 2 / b},
    }, alpha)
    return HomLieBialgebra(L, C)


def sl2_iso_classifier(b, b2) -> bool:
    """Whether sl2_alpha_bialgebra(b) and sl2_alpha_bialgebra(b2) are isomorphic."""
    return is_zero(to_scalar(b) - to_scalar(b2))


# --- catalog names ------------------------------------------------------------

CATALOG = ("sl2", "sl2.r", "sl2.alpha1(a,b,c)", "sl2.alpha2(a,b,c)", "sl2.alpha3(a,b,c)",
           "sl2.bialg(b)", "sl2.dual(b)")

_ENTRY = re.compile(r"^\s*(sl2(?:\.(\w+))?)\s*(?:\((.*)\))?\s*$")


def _split_args(text: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        depth += (ch in "([") - (ch in ")]")
        cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_catalog_name(name: str) -> tuple[str, list[Scalar]]:
    """Split "sl2.alpha1(1, b, 0)" into ("alpha1", [1, b, 0]); "sl2" gives ("", [])."""
    m = _ENTRY.match(name)
    if not m:
        raise ConstraintViolation(f"unknown catalog entry {name!r}")
    kind, argtext = m.group(2) or "", m.group(3)
    args = [parse_scalar(t) for t in _split_args(argtext)] if argtext not in (None, "") else []
    arity = {"": 0, "r": 0, "alpha1": 3, "alpha2": 3, "alpha3": 3, "bialg": 1, "dual": 1}
    if kind not in arity:
        raise ConstraintViolation(f"unknown catalog entry {name!r}")
    if len(args) != arity[kind]:
        raise ConstraintViolation(f"{name!r} takes {arity[kind]} argument(s)")
    return kind, args


def catalog(name: str):
    """Resolve a catalog name to a bialgebra, tensor or Sl2Endo."""
    kind, args = parse_catalog_name(name)
    if kind == "":
        return sl2_bialgebra()
    if kind == "r":
        return standard_r()
    if kind.startswith("alpha"):
        return endo(int(kind[-1]), *args)
    if kind == "bialg":
        return sl2_alpha_bialgebra(*args)
    return sl2_alpha_dual(*args)
