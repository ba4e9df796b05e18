"""A line-oriented text format for structures given by constants.

Example::

    schema_version 1
    basis H X+ X-
    param b = 2
    bracket H X+ -> X+ = 2*b
    bracket X+ H -> X+ = -2*b
    alpha X+ -> X+ = b            # alpha(X+) has X+ coefficient b
    cobracket X+ -> X+ H = b/2    # Delta(X+) contains b/2 X+ (x) H
    r X+ X- = 1
    t X+ X- = -1

Every bracket entry needs its anti-symmetric mirror.  ``alpha`` defaults to
the identity when no alpha line is present; otherwise unlisted entries are
zero.  Scalars follow the scalar grammar (no decimals), may mention the
parameters a, b, c and are kept symbolic until ``resolve`` binds them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .algebra import HomLieAlgebra
from .bialgebra import HomLieBialgebra, HomLieCoalgebra
from .errors import DenominatorVanishes, ParseError, ValidationError
from .multilinear import LinearMap, Tensor2, Tensor3
from .scalars import VARS, format_scalar, is_zero, parse_scalar, substitute, variables_of

SCHEMA_VERSION = 1
_NAME = re.compile(r"[A-Za-z_][\w+\-*']*")
_WORD = re.compile(r"\S+")


@dataclass
class AlgebraFile:
    """Raw contents of a structure file; tensors are keyed by basis names."""

    basis: tuple[str, ...]
    bracket: dict = field(default_factory=dict)      # (i, j) -> {k: coeff}
    alpha: dict | None = None                         # (row, col) -> coeff
    cobracket: dict | None = None                     # i -> {(j, k): coeff}
    r: dict | None = None                             # (i, j) -> coeff
    t: dict | None = None
    params: dict = field(default_factory=dict)        # name -> scalar
    schema_version: int = SCHEMA_VERSION

    @property
    def dim(self) -> int:
        return len(self.basis)

    def bindings(self, extra: dict | None = None) -> dict:
        out = dict(self.params)
        out.update(extra or {})
        return out

    def resolve(self, extra: dict | None = None) -> "Resolved":
        """Substitute parameters and build the structures (unchecked)."""
        binds = self.bindings(extra)
        pos = {name: k for k, name in enumerate(self.basis)}
        n = self.dim

        def sub(x):
            try:
                return substitute(x, binds) if binds else x
            except DenominatorVanishes as exc:
                raise ValidationError(str(exc)) from None

        c = Tensor3.from_terms(n, [((pos[i], pos[j], pos[k]), sub(v))
                                   for (i, j), out in self.bracket.items() for k, v in out.items()])
        if self.alpha is None:
            alpha = LinearMap.identity(n)
        else:
            rows = [[0] * n for _ in range(n)]
            for (i, j), v in self.alpha.items():
                rows[pos[i]][pos[j]] = sub(v)
            alpha = LinearMap(rows)
        L = HomLieAlgebra(c, alpha, self.basis, check=False)
        C = None
        if self.cobracket is not None:
            d = Tensor3.from_terms(n, [((pos[i], pos[j], pos[k]), sub(v))
                                       for i, out in self.cobracket.items() for (j, k), v in out.items()])
            C = HomLieCoalgebra(d, alpha, self.basis, check=False)

        def two(data):
            if data is None:
                return None
            return Tensor2.from_terms(n, [((pos[i], pos[j]), sub(v)) for (i, j), v in data.items()])
        return Resolved(L, C, two(self.r), two(self.t))


@dataclass
class Resolved:
    algebra: HomLieAlgebra
    coalgebra: HomLieCoalgebra | None
    r: Tensor2 | None
    t: Tensor2 | None

    def bialgebra(self, *, check: bool = False) -> HomLieBialgebra:
        if self.coalgebra is None:
            raise ValidationError("structure has no cobracket")
        return HomLieBialgebra(self.algebra, self.coalgebra, check=check)


# --- parsing ------------------------------------------------------------------

class _Line:
    def __init__(self, text: str, lineno: int):
        self.text, self.lineno = text, lineno
        self.words = [(m.group(), m.start() + 1) for m in _WORD.finditer(text)]

    def error(self, message: str, column: int | None = None) -> ParseError:
        return ParseError(message, self.lineno, column)

    def invalid(self, message: str) -> ValidationError:
        return ValidationError(f"line {self.lineno}: {message}")

    def scalar(self, start: int):
        """Parse everything from 1-based column ``start`` as a scalar."""
        text = self.text[start - 1:]
        try:
            return parse_scalar(text)
        except ParseError as exc:
            col = None if exc.column is None else exc.column + start - 1
            raise ParseError(exc.message, self.lineno, col) from None


def _strip_comment(text: str) -> str:
    k = text.find("#")
    return text if k < 0 else text[:k]


def _split_eq(line: _Line):
    """(names before '=' other than the keyword and '->', scalar after it)."""
    eq = line.text.find("=")
    if eq < 0:
        raise line.error("expected '='", len(line.text.rstrip()) + 1)
    names = [(w, col) for w, col in line.words[1:] if col - 1 < eq and w != "->"]
    if not line.text[eq + 1:].strip():
        raise line.error("missing scalar after '='", eq + 2)
    return names, line.scalar(eq + 2)


_SHAPES = {"bracket": (2, 1), "alpha": (1, 1), "cobracket": (1, 2), "r": (2, 0), "t": (2, 0)}


def parse_algebra_file(text: str) -> AlgebraFile:
    """Parse the text format; zero coefficients are dropped, sections kept."""
    version = None
    basis: tuple[str, ...] | None = None
    params: dict = {}
    sections: dict = {"bracket": {}, "alpha": None, "cobracket": None, "r": None, "t": None}
    seen: set = set()

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _Line(_strip_comment(raw), lineno)
        if not line.words:
            continue
        kw, kcol = line.words[0]
        if kw == "schema_version":
            if len(line.words) != 2 or not line.words[1][0].isdigit():
                raise line.error("expected 'schema_version <integer>'", kcol)
            version = int(line.words[1][0])
            if version != SCHEMA_VERSION:
                raise line.invalid(f"unsupported schema_version {version}")
            continue
        if version is None:
            raise line.error("file must start with 'schema_version'", kcol)
        if kw == "basis":
            if basis is not None:
                raise line.invalid("duplicate basis line")
            if len(line.words) == 1:
                raise line.error("empty basis", kcol)
            for w, col in line.words[1:]:
                if not _NAME.fullmatch(w):
                    raise line.error(f"invalid basis name {w!r}", col)
            names = [w for w, _ in line.words[1:]]
            if len(set(names)) != len(names):
                raise line.invalid("basis names must be distinct")
            basis = tuple(names)
        elif kw == "param":
            names, value = _split_eq(line)
            if len(names) != 1 or names[0][0] not in VARS:
                raise line.error(f"expected 'param <{'|'.join(VARS)}> = <scalar>'", kcol)
            if variables_of(value):
                raise line.invalid("parameter values must be constants")
            if names[0][0] in params:
                raise line.invalid(f"duplicate parameter {names[0][0]}")
            params[names[0][0]] = value
        elif kw in _SHAPES:
            if basis is None:
                raise line.error("'basis' must come before structure lines", kcol)
            before, after = _SHAPES[kw]
            arrows = [col for w, col in line.words if w == "->"]
            if after and (len(arrows) != 1 or line.words[before + 1][0] != "->"):
                raise line.error(f"expected '{kw}' with {before} name(s) before '->' and {after} after", kcol)
            if not after and arrows:
                raise line.error("unexpected '->'", arrows[0])
            names, value = _split_eq(line)
            if len(names) != before + after:
                raise line.error(f"'{kw}' needs {before + after} basis names", kcol)
            for w, col in names:
                if w not in basis:
                    raise line.invalid(f"unknown basis element {w!r}")
            names = tuple(w for w, _ in names)
            if kw == "alpha":
                # 'alpha X -> Y = v': alpha(X) has Y-coefficient v, i.e. entry (Y, X)
                names = (names[1], names[0])
            if sections[kw] is None:
                sections[kw] = {}
            _store(line, sections[kw], seen, kw, names, value)
        else:
            raise line.error(f"unknown keyword {kw!r}", kcol)

    if version is None:
        raise ParseError("missing 'schema_version'", 1, 1)
    if basis is None:
        raise ValidationError("missing 'basis' line")
    _check_mirrors(sections["bracket"])
    return AlgebraFile(basis, sections["bracket"], sections["alpha"], sections["cobracket"],
                       sections["r"], sections["t"], params, version)


def _store(line: _Line, store: dict, seen: set, kw: str, names: tuple, value):
    if (kw, names) in seen:
        raise line.invalid(f"duplicate {kw} entry {' '.join(names)}")
    seen.add((kw, names))
    if is_zero(value):
        return
    if kw == "bracket":
        store.setdefault(names[:2], {})[names[2]] = value
    elif kw == "cobracket":
        store.setdefault(names[0], {})[names[1:]] = value
    else:
        store[names] = value


def _check_mirrors(bracket: dict):
    for (i, j), out in bracket.items():
        if i == j:
            if any(not is_zero(v) for v in out.values()):
                raise ValidationError(f"bracket [{i}, {i}] must vanish")
            continue
        mirror = bracket.get((j, i), {})
        for k in set(out) | set(mirror):
            if not is_zero(out.get(k, 0) + mirror.get(k, 0)):
                raise ValidationError(
                    f"bracket pair ({i}, {j}) lacks its anti-symmetric mirror ({j}, {i}) at {k}")


# --- emitting -----------------------------------------------------------------

def emit_algebra_file(af: AlgebraFile) -> str:
    order = {name: k for k, name in enumerate(af.basis)}

    def key(names):
        return tuple(order[x] for x in names)

    out = [f"schema_version {af.schema_version}", "basis " + " ".join(af.basis)]
    for name in sorted(af.params, key=VARS.index):
        out.append(f"param {name} = {format_scalar(af.params[name])}")
    for (i, j) in sorted(af.bracket, key=key):
        for k in sorted(af.bracket[(i, j)], key=order.get):
            out.append(f"bracket {i} {j} -> {k} = {format_scalar(af.bracket[(i, j)][k])}")
    # a present but zero section is written as one explicit zero entry
    e = af.basis[0]
    if af.alpha is not None:
        for (row, col) in sorted(af.alpha, key=lambda rc: key((rc[1], rc[0]))):
            out.append(f"alpha {col} -> {row} = {format_scalar(af.alpha[(row, col)])}")
        if not af.alpha:
            out.append(f"alpha {e} -> {e} = 0")
    if af.cobracket is not None:
        for i in sorted(af.cobracket, key=order.get):
            for (j, k) in sorted(af.cobracket[i], key=key):
                out.append(f"cobracket {i} -> {j} {k} = {format_scalar(af.cobracket[i][(j, k)])}")
        if not af.cobracket:
            out.append(f"cobracket {e} -> {e} {e} = 0")
    for kw in ("r", "t"):
        data = getattr(af, kw)
        if data is not None:
            for (i, j) in sorted(data, key=key):
                out.append(f"{kw} {i} {j} = {format_scalar(data[(i, j)])}")
            if not data:
                out.append(f"{kw} {e} {e} = 0")
    return "\n".join(out) + "\n"


def from_structures(algebra: HomLieAlgebra, coalgebra: HomLieCoalgebra | None = None,
                    r: Tensor2 | None = None, t: Tensor2 | None = None) -> AlgebraFile:
    """The file describing given structures; zero coefficients are omitted."""
    names = algebra.basis_names
    bracket: dict = {}
    for (i, j, k), v in algebra.c.nonzero():
        bracket.setdefault((names[i], names[j]), {})[names[k]] = v
    alpha = None
    if algebra.alpha != LinearMap.identity(algebra.dim):
        alpha = {(names[i], names[j]): algebra.alpha[i, j]
                 for i in range(algebra.dim) for j in range(algebra.dim)
                 if not is_zero(algebra.alpha[i, j])}
    cobracket = None
    if coalgebra is not None:
        cobracket = {}
        for (i, j, k), v in coalgebra.d.nonzero():
            cobracket.setdefault(names[i], {})[(names[j], names[k])] = v

    def two(x):
        if x is None:
            return None
        return {(names[i], names[j]): v for (i, j), v in x.nonzero()}
    return AlgebraFile(tuple(names), bracket, alpha, cobracket, two(r), two(t))
