"""Dense linear maps and tensors of order 1-3 over exact scalars.

Coefficient convention: a tensor of order k over a space with basis
e_0..e_{n-1} stores the coefficient of e_i (x) e_j (x) ... at index (i, j, ...),
slot 1 leftmost.  A LinearMap stores in column j the image of e_j, so
entry (i, j) is the coefficient of e_i in f(e_j).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import DimensionMismatch, DivisionByZero
from .scalars import Scalar, format_scalar, to_scalar

ZERO = Fraction(0)
ONE = Fraction(1)


def ssum(values: Iterable) -> Scalar:
    total = ZERO
    for v in values:
        if v:
            total = total + v
    return total


def dot(xs, ys) -> Scalar:
    total = ZERO
    for x, y in zip(xs, ys):
        if x and y:
            total = total + x * y
    return total


class LinearMap:
    """Immutable rows x cols matrix of scalars."""

    __slots__ = ("rows", "cols", "_m", "_hash")

    def __init__(self, entries: Sequence[Sequence]):
        m = tuple(tuple(to_scalar(x) for x in row) for row in entries)
        if not m or any(len(row) != len(m[0]) for row in m):
            raise DimensionMismatch("matrix rows must be nonempty and of equal length")
        self.rows, self.cols, self._m, self._hash = len(m), len(m[0]), m, None

    @classmethod
    def _raw(cls, m):
        obj = cls.__new__(cls)
        obj.rows, obj.cols, obj._m, obj._hash = len(m), len(m[0]), m, None
        return obj

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int | None = None) -> "LinearMap":
        cols = rows if cols is None else cols
        return cls._raw(tuple((ZERO,) * cols for _ in range(rows)))

    @classmethod
    def diagonal(cls, values) -> "LinearMap":
        vals = [to_scalar(v) for v in values]
        n = len(vals)
        return cls._raw(tuple(tuple(vals[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, columns) -> "LinearMap":
        cols = [tuple(to_scalar(x) for x in col) for col in columns]
        return cls._raw(tuple(tuple(col[i] for col in cols) for i in range(len(cols[0]))))

    @property
    def entries(self):
        return self._m

    def __getitem__(self, ij):
        i, j = ij
        return self._m[i][j]

    def column(self, j: int) -> "Vector":
        return Vector._from_flat(self.rows, tuple(row[j] for row in self._m))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "LinearMap":
        return LinearMap._raw(tuple(zip(*self._m)))

    def __matmul__(self, other):
        if isinstance(other, LinearMap):
            return compose(self, other)
        if isinstance(other, Vector):
            return apply_map(self, other)
        return NotImplemented

    def __add__(self, other):
        _same_shape(self, other)
        return LinearMap._raw(tuple(tuple(x + y for x, y in zip(r1, r2))
                                    for r1, r2 in zip(self._m, other._m)))

    def __sub__(self, other):
        _same_shape(self, other)
        return LinearMap._raw(tuple(tuple(x - y for x, y in zip(r1, r2))
                                    for r1, r2 in zip(self._m, other._m)))

    def __neg__(self):
        return LinearMap._raw(tuple(tuple(-x for x in row) for row in self._m))

    def __mul__(self, s):
        if isinstance(s, (LinearMap, Tensor)):
            return NotImplemented
        s = to_scalar(s)
        return LinearMap._raw(tuple(tuple(x * s for x in row) for row in self._m))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return inverse(self) ** (-n)
        result = LinearMap.identity(self.rows)
        for _ in range(n):
            result = compose(self, result)
        return result

    def map_entries(self, fn) -> "LinearMap":
        return LinearMap._raw(tuple(tuple(fn(x) for x in row) for row in self._m))

    def is_zero(self) -> bool:
        return not any(x for row in self._m for x in row)

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self._m == other._m

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._m)
        return self._hash

    def __repr__(self):
        rows = "; ".join(", ".join(format_scalar(x) for x in row) for row in self._m)
        return f"LinearMap([{rows}])"


def _same_shape(f: LinearMap, g: LinearMap):
    if (f.rows, f.cols) != (g.rows, g.cols):
        raise DimensionMismatch(f"shapes {f.rows}x{f.cols} and {g.rows}x{g.cols} differ")


class Tensor:
    """Immutable element of V^{(x)k} for k = 1, 2, 3, stored densely."""

    __slots__ = ("dim", "order", "_c", "_hash")
    ORDER: int | None = None

    def __init__(self, coeffs, dim: int | None = None):
        order = self.ORDER
        flat = []

        def walk(x, depth):
            if depth == order:
                flat.append(to_scalar(x))
                return
            if dim is not None and len(x) != dim:
                raise DimensionMismatch(f"expected {dim} entries, got {len(x)}")
            for y in x:
                walk(y, depth + 1)

        walk(coeffs, 0)
        n = len(coeffs)
        if len(flat) != n ** order:
            raise DimensionMismatch("tensor coefficients are not a full cube")
        self.dim, self.order, self._c, self._hash = n, order, tuple(flat), None

    @classmethod
    def _from_flat(cls, dim: int, flat: tuple):
        obj = cls.__new__(cls)
        obj.dim, obj.order, obj._c, obj._hash = dim, cls.ORDER, flat, None
        return obj

    @classmethod
    def zero(cls, dim: int):
        return cls._from_flat(dim, (ZERO,) * dim ** cls.ORDER)

    @classmethod
    def unit(cls, dim: int, *idx: int, coeff=ONE):
        """coeff times e_{idx[0]} (x) e_{idx[1]} (x) ..."""
        if len(idx) != cls.ORDER:
            raise DimensionMismatch("wrong number of indices")
        flat = [ZERO] * dim ** cls.ORDER
        flat[_flat_index(dim, idx)] = to_scalar(coeff)
        return cls._from_flat(dim, tuple(flat))

    @classmethod
    def from_terms(cls, dim: int, terms):
        """Build from (index-tuple, coefficient) pairs; repeated indices add."""
        flat = [ZERO] * dim ** cls.ORDER
        for idx, coeff in terms:
            k = _flat_index(dim, idx)
            flat[k] = flat[k] + to_scalar(coeff)
        return cls._from_flat(dim, tuple(flat))

    @property
    def flat(self) -> tuple:
        return self._c

    def __getitem__(self, idx):
        if isinstance(idx, int):
            idx = (idx,)
        return self._c[_flat_index(self.dim, idx)]

    def indices(self):
        return product(range(self.dim), repeat=self.order)

    def items(self):
        return zip(self.indices(), self._c)

    def nonzero(self):
        return [(idx, c) for idx, c in self.items() if c]

    def is_zero(self) -> bool:
        return not any(self._c)

    def nested(self):
        """Coefficients as nested lists."""
        def build(prefix):
            if len(prefix) == self.order:
                return self[prefix]
            return [build(prefix + (i,)) for i in range(self.dim)]
        return build(())

    def _check(self, other):
        if type(other) is not type(self) or other.dim != self.dim:
            raise DimensionMismatch("tensors of different shape")

    def __add__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        self._check(other)
        return type(self)._from_flat(self.dim, tuple(
            x + y if y else x for x, y in zip(self._c, other._c)))

    def __sub__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        self._check(other)
        return type(self)._from_flat(self.dim, tuple(
            x - y if y else x for x, y in zip(self._c, other._c)))

    def __neg__(self):
        return type(self)._from_flat(self.dim, tuple(-x for x in self._c))

    def __mul__(self, s):
        if isinstance(s, (Tensor, LinearMap)):
            return NotImplemented
        s = to_scalar(s)
        return type(self)._from_flat(self.dim, tuple(x * s if x else x for x in self._c))

    __rmul__ = __mul__

    def map_coeffs(self, fn):
        return type(self)._from_flat(self.dim, tuple(fn(x) for x in self._c))

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return type(self) is type(other) and self.dim == other.dim and self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.dim, self._c))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{idx}: {format_scalar(c)}" for idx, c in self.nonzero())
        return f"{type(self).__name__}(dim={self.dim}, {{{body}}})"


class Vector(Tensor):
    ORDER = 1

    def __iter__(self):
        return iter(self._c)

    def __len__(self):
        return self.dim


class Tensor2(Tensor):
    ORDER = 2


class Tensor3(Tensor):
    ORDER = 3


_BY_ORDER = {1: Vector, 2: Tensor2, 3: Tensor3}


def tensor_class(order: int):
    try:
        return _BY_ORDER[order]
    except KeyError:
        raise DimensionMismatch(f"tensors of order {order} are not supported") from None


def _flat_index(dim: int, idx) -> int:
    k = 0
    for i in idx:
        if not 0 <= i < dim:
            raise IndexError(f"basis index {i} out of range")
        k = k * dim + i
    return k


def basis_vector(dim: int, i: int) -> Vector:
    return Vector.unit(dim, i)


def vector(values) -> Vector:
    return Vector(list(values))


def tensor(*factors: Tensor) -> Tensor:
    """Tensor product of tensors over the same space."""
    dim = factors[0].dim
    order = sum(f.order for f in factors)
    flat = [ONE]
    for f in factors:
        if f.dim != dim:
            raise DimensionMismatch("tensor factors over different spaces")
        flat = [x * y if x and y else ZERO for x in flat for y in f.flat]
    return tensor_class(order)._from_flat(dim, tuple(flat))


# --- maps acting on tensors -------------------------------------------------

def apply_map(f: LinearMap, x: Vector) -> Vector:
    if f.cols != x.dim:
        raise DimensionMismatch(f"map with {f.cols} columns applied to a vector of dimension {x.dim}")
    return Vector._from_flat(f.rows, tuple(dot(row, x.flat) for row in f.entries))


def apply_slot(f: LinearMap, x: Tensor, slot: int) -> Tensor:
    """Apply f to one tensor slot (0-based), identity elsewhere."""
    if not f.is_square() or f.cols != x.dim:
        raise DimensionMismatch("map and tensor dimensions disagree")
    n, k = x.dim, x.order
    stride = n ** (k - 1 - slot)
    src = x.flat
    out = [ZERO] * len(src)
    m = f.entries
    for pos, v in enumerate(src):
        if not v:
            continue
        j = (pos // stride) % n
        base = pos - j * stride
        for i in range(n):
            a = m[i][j]
            if a:
                t = base + i * stride
                out[t] = out[t] + a * v
    return type(x)._from_flat(n, tuple(out))


def tensor_power_apply(f: LinearMap, k: int, x: Tensor) -> Tensor:
    """f^{(x)k} applied to a tensor of order k."""
    if x.order != k:
        raise DimensionMismatch(f"order-{x.order} tensor given where order {k} expected")
    for s in range(k):
        x = apply_slot(f, x, s)
    return x


def apply_slots(x: Tensor, maps: Sequence[LinearMap | None]) -> Tensor:
    """Apply maps[s] to slot s; None means identity."""
    if len(maps) != x.order:
        raise DimensionMismatch("one map per slot required")
    for s, f in enumerate(maps):
        if f is not None:
            x = apply_slot(f, x, s)
    return x


def permute(x: Tensor, perm: Sequence[int]) -> Tensor:
    """Move the factor in slot s to slot perm[s]."""
    n, k = x.dim, x.order
    out = [ZERO] * len(x.flat)
    for idx, v in x.items():
        if v:
            new = [0] * k
            for s in range(k):
                new[perm[s]] = idx[s]
            out[_flat_index(n, new)] = v
    return type(x)._from_flat(n, tuple(out))


def flip(x: Tensor2) -> Tensor2:
    """tau(x (x) y) = y (x) x."""
    if x.order != 2:
        raise DimensionMismatch("flip acts on order-2 tensors")
    return permute(x, (1, 0))


def cyclic(x: Tensor3) -> Tensor3:
    """sigma(x (x) y (x) z) = z (x) x (x) y."""
    if x.order != 3:
        raise DimensionMismatch("cyclic acts on order-3 tensors")
    return permute(x, (1, 2, 0))


def cyclic_sum(x: Tensor3) -> Tensor3:
    s = cyclic(x)
    return x + s + cyclic(s)


# --- matrices ---------------------------------------------------------------

def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """f o g."""
    if f.cols != g.rows:
        raise DimensionMismatch(f"cannot compose {f.rows}x{f.cols} with {g.rows}x{g.cols}")
    gt = list(zip(*g.entries))
    return LinearMap._raw(tuple(tuple(dot(row, col) for col in gt) for row in f.entries))


def kron(f: LinearMap, g: LinearMap) -> LinearMap:
    """Matrix of f (x) g in the basis e_i (x) e_j ordered slot-major."""
    rows = []
    for r1 in f.entries:
        for r2 in g.entries:
            rows.append(tuple(x * y if x and y else ZERO for x in r1 for y in r2))
    return LinearMap._raw(tuple(rows))


def identity(n: int) -> LinearMap:
    return LinearMap.identity(n)


def _eliminate(f: LinearMap, rhs: list[list] | None):
    """Gaussian elimination; returns (determinant, reduced rhs or None)."""
    n = f.rows
    if not f.is_square():
        raise DimensionMismatch("square matrix required")
    m = [list(row) for row in f.entries]
    det = ONE
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return ZERO, None
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            if rhs is not None:
                rhs[col], rhs[piv] = rhs[piv], rhs[col]
            det = -det
        p = m[col][col]
        det = det * p
        inv = 1 / p
        m[col] = [x * inv for x in m[col]]
        if rhs is not None:
            rhs[col] = [x * inv for x in rhs[col]]
        for r in range(n):
            if r != col and m[r][col]:
                fac = m[r][col]
                m[r] = [x - fac * y for x, y in zip(m[r], m[col])]
                if rhs is not None:
                    rhs[r] = [x - fac * y for x, y in zip(rhs[r], rhs[col])]
    return det, rhs


def det(f: LinearMap) -> Scalar:
    return _eliminate(f, None)[0]


def inverse(f: LinearMap) -> LinearMap:
    n = f.rows
    d, rhs = _eliminate(f, [list(row) for row in LinearMap.identity(n).entries])
    if not d:
        raise DivisionByZero("matrix is singular")
    return LinearMap._raw(tuple(tuple(row) for row in rhs))


def tensor_to_map(x: Tensor2) -> LinearMap:
    return LinearMap._raw(tuple(tuple(x[i, j] for j in range(x.dim)) for i in range(x.dim)))


def map_to_tensor(f: LinearMap) -> Tensor2:
    return Tensor2([list(row) for row in f.entries])


# --- rendering --------------------------------------------------------------

def render_term(coeff, labels: Sequence[str]) -> str:
    s = format_scalar(coeff)
    word = "⊗".join(labels)
    if s == "1":
        return f"+{word}"
    if s == "-1":
        return f"-{word}"
    if any(ch in s[1:] for ch in "+- ") or "(" in s:
        return f"+({s}) {word}"
    return f"{s} {word}" if s.startswith("-") else f"+{s} {word}"


def render(x: Tensor, names: Sequence[str]) -> str:
    """Basis-name rendering such as ``+3 X+⊗H -12 H⊗X+``."""
    terms = [render_term(c, [names[i] for i in idx]) for idx, c in x.nonzero()]
    return " ".join(terms) if terms else "0"
