"""Exact group algebras over canonical element forms, and dense matrices over them.

Two ambient groups are supported:

* :class:`WeldedAmbient` -- WB_m, an element is keyed by its Artin automorphism
  of F_m (the Artin action is faithful).
* :class:`SemidirectAmbient` -- F_n x| PW_n inside PW_{n+1}, an element is a
  pair (reduced free word w, automorphism a) standing for ``w * p`` where
  ``p x p^-1 = a(x)``.

Witness words ride along for printing only and never take part in equality.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .laurent import ONE, ZERO, LaurentPoly, T, parse_poly
from .presentations import expand_xi, xi_auto
from .words import (
    FreeAutomorphism,
    FreeWord,
    GenSymbol,
    Word,
    format_word,
    freex,
    invert_free,
    invert_word,
    parse_word,
    reduce_free,
    word_to_auto,
)


class AmbientMismatch(ValueError):
    pass


def _cancel(w: Word) -> Word:
    out: list = []
    for g in w:
        if out and out[-1] == g.inverse():
            out.pop()
        else:
            out.append(g)
    return tuple(out)


# canonical elements ---------------------------------------------------------

class CanonElement:
    __slots__ = ("witness",)

    @property
    def key(self):
        raise NotImplementedError

    def __eq__(self, other) -> bool:
        return isinstance(other, CanonElement) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        return format_word(self.witness) or "1"

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self}>"


class WeldedElement(CanonElement):
    __slots__ = ("rank", "auto", "auto_inv")

    def __init__(self, rank: int, auto: FreeAutomorphism, auto_inv: FreeAutomorphism, witness: Word = ()):
        self.rank = rank
        self.auto = auto
        self.auto_inv = auto_inv
        self.witness = tuple(witness)

    @property
    def key(self):
        return ("W", self.rank, self.auto.images)

    @property
    def ambient(self) -> "WeldedAmbient":
        return WeldedAmbient(self.rank)

    def is_identity(self) -> bool:
        return self.auto.is_identity()

    def __mul__(self, other: "WeldedElement") -> "WeldedElement":
        if not isinstance(other, WeldedElement) or other.rank != self.rank:
            raise AmbientMismatch(f"cannot multiply {self!r} by {other!r}")
        return WeldedElement(
            self.rank,
            self.auto.then(other.auto),
            other.auto_inv.then(self.auto_inv),
            _cancel(self.witness + other.witness),
        )

    def inverse(self) -> "WeldedElement":
        return WeldedElement(self.rank, self.auto_inv, self.auto, invert_word(self.witness))


class SemidirectElement(CanonElement):
    __slots__ = ("rank", "free", "auto", "auto_inv")

    def __init__(self, rank: int, free: FreeWord, auto: FreeAutomorphism, auto_inv: FreeAutomorphism, witness: Word = ()):
        self.rank = rank
        self.free = tuple(free)
        self.auto = auto
        self.auto_inv = auto_inv
        self.witness = tuple(witness)

    @property
    def key(self):
        return ("S", self.rank, self.free, self.auto.images)

    @property
    def ambient(self) -> "SemidirectAmbient":
        return SemidirectAmbient(self.rank)

    def is_identity(self) -> bool:
        return not self.free and self.auto.is_identity()

    def __mul__(self, other: "SemidirectElement") -> "SemidirectElement":
        if not isinstance(other, SemidirectElement) or other.rank != self.rank:
            raise AmbientMismatch(f"cannot multiply {self!r} by {other!r}")
        return SemidirectElement(
            self.rank,
            reduce_free(self.free + self.auto(other.free)),
            other.auto.then(self.auto),
            self.auto_inv.then(other.auto_inv),
            _cancel(self.witness + other.witness),
        )

    def inverse(self) -> "SemidirectElement":
        return SemidirectElement(
            self.rank,
            self.auto_inv(invert_free(self.free)),
            self.auto_inv,
            self.auto,
            invert_word(self.witness),
        )


# ambients -------------------------------------------------------------------

class WeldedAmbient:
    """WB_m.  Accepts s/t letters, q_{i,j} letters and x_k = xi_{m,k}."""

    kind = "welded"

    def __init__(self, rank: int):
        if rank < 2:
            raise ValueError(f"welded ambient needs rank >= 2, got {rank}")
        self.rank = rank

    def __eq__(self, other):
        return isinstance(other, WeldedAmbient) and other.rank == self.rank

    def __hash__(self):
        return hash(("welded", self.rank))

    def __repr__(self):
        return f"WeldedAmbient({self.rank})"

    def identity(self) -> WeldedElement:
        e = FreeAutomorphism.identity(self.rank)
        return WeldedElement(self.rank, e, e, ())

    def letter(self, g: GenSymbol) -> WeldedElement:
        return _welded_letter(self.rank, g)

    def element(self, w: Union[str, Sequence[GenSymbol]]) -> WeldedElement:
        if isinstance(w, str):
            w = parse_word(w)
        out = self.identity()
        for g in w:
            out = out * self.letter(g)
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "rank": self.rank}


@lru_cache(maxsize=None)
def _welded_letter(m: int, g: GenSymbol) -> WeldedElement:
    pos = g._replace(sign=1)
    w = expand_xi((pos,), m)
    a = word_to_auto(w, m)
    ainv = word_to_auto(invert_word(w), m)
    if g.sign < 0:
        a, ainv = ainv, a
    return WeldedElement(m, a, ainv, (g,))


class SemidirectAmbient:
    """F_n x| PW_n.  Accepts q_{i,j} (i, j <= n) and x_k letters; q_{n+1,k} means x_k."""

    kind = "semidirect"

    def __init__(self, rank: int):
        if rank < 1:
            raise ValueError(f"semidirect ambient needs rank >= 1, got {rank}")
        self.rank = rank

    def __eq__(self, other):
        return isinstance(other, SemidirectAmbient) and other.rank == self.rank

    def __hash__(self):
        return hash(("semidirect", self.rank))

    def __repr__(self):
        return f"SemidirectAmbient({self.rank})"

    def identity(self) -> SemidirectElement:
        e = FreeAutomorphism.identity(self.rank)
        return SemidirectElement(self.rank, (), e, e, ())

    def free(self, w: Sequence[int], witness: Optional[Word] = None) -> SemidirectElement:
        e = FreeAutomorphism.identity(self.rank)
        w = reduce_free(w)
        if witness is None:
            witness = tuple(freex(abs(a), 1 if a > 0 else -1) for a in w)
        return SemidirectElement(self.rank, w, e, e, witness)

    def letter(self, g: GenSymbol) -> SemidirectElement:
        return _semidirect_letter(self.rank, g)

    def element(self, w: Union[str, Sequence[GenSymbol]]) -> SemidirectElement:
        if isinstance(w, str):
            w = parse_word(w)
        out = self.identity()
        for g in w:
            out = out * self.letter(g)
        return out

    def to_json(self) -> dict:
        return {"kind": self.kind, "rank": self.rank}


@lru_cache(maxsize=None)
def _semidirect_letter(n: int, g: GenSymbol) -> SemidirectElement:
    e = FreeAutomorphism.identity(n)
    if g.kind == "q" and g.i == n + 1:
        g2 = freex(g.j, g.sign)
        return SemidirectElement(n, (g.j * g.sign,), e, e, (g2,))
    if g.kind == "x":
        if not 1 <= g.i <= n:
            raise ValueError(f"free generator x{g.i} out of range for rank {n}")
        return SemidirectElement(n, (g.i * g.sign,), e, e, (g,))
    if g.kind != "q":
        raise ValueError(f"letter {g} does not belong to F_{n} x| PW_{n}")
    right = xi_auto(g.i, g.j, n)  # p^-1 x p
    left = left_conjugation_by_xi(g.i, g.j, n)  # p x p^-1
    if g.sign < 0:
        left, right = right, left
    return SemidirectElement(n, (), left, right, (g,))


def left_conjugation_by_xi(i: int, j: int, n: int) -> FreeAutomorphism:
    """Left conjugation by xi_{i,j}: x_i -> x_j^-1 x_i x_j."""
    im = [(k,) for k in range(1, n + 1)]
    im[i - 1] = (-j, i, j)
    return FreeAutomorphism(n, tuple(im))


Ambient = Union[WeldedAmbient, SemidirectAmbient]


def ambient_from_json(obj: dict) -> Ambient:
    if obj["kind"] == "welded":
        return WeldedAmbient(int(obj["rank"]))
    if obj["kind"] == "semidirect":
        return SemidirectAmbient(int(obj["rank"]))
    raise ValueError(f"unknown ambient {obj!r}")


# algebra elements -------------------------------------------------------------

class AlgebraElement:
    """Finite formal sum of group elements with Laurent-polynomial coefficients.

    Coefficients are central scalars.
    """

    __slots__ = ("ambient", "_terms")

    def __init__(self, ambient: Ambient, terms: Union[Dict[CanonElement, LaurentPoly], Iterable] = ()):
        self.ambient = ambient
        d: Dict[CanonElement, LaurentPoly] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for g, c in items:
            c = LaurentPoly.coerce(c)
            # an existing key object (and its witness) is kept on update
            d[g] = d[g] + c if g in d else c
        self._terms = {g: c for g, c in d.items() if not c.is_zero()}

    @classmethod
    def zero(cls, ambient: Ambient) -> "AlgebraElement":
        return cls(ambient)

    @classmethod
    def one(cls, ambient: Ambient) -> "AlgebraElement":
        return cls(ambient, [(ambient.identity(), ONE)])

    @classmethod
    def of(cls, g: CanonElement, coeff=ONE) -> "AlgebraElement":
        return cls(g.ambient, [(g, coeff)])

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "AlgebraElement"):
        if other.ambient != self.ambient:
            raise AmbientMismatch(f"{self.ambient} vs {other.ambient}")

    def _coerce(self, other) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        if isinstance(other, (int, LaurentPoly)):
            return AlgebraElement(self.ambient, [(self.ambient.identity(), other)])
        if isinstance(other, CanonElement):
            return AlgebraElement.of(other)
        raise TypeError(f"cannot combine AlgebraElement with {type(other).__name__}")

    def __add__(self, other) -> "AlgebraElement":
        other = self._coerce(other)
        d = dict(self._terms)
        for g, c in other._terms.items():
            d[g] = d[g] + c if g in d else c
        return AlgebraElement(self.ambient, d)

    __radd__ = __add__

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.ambient, {g: -c for g, c in self._terms.items()})

    def __sub__(self, other) -> "AlgebraElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "AlgebraElement":
        return self._coerce(other) - self

    def __mul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, LaurentPoly)):
            return AlgebraElement(self.ambient, {g: c * other for g, c in self._terms.items()})
        other = self._coerce(other)
        d: Dict[CanonElement, LaurentPoly] = {}
        for g1, c1 in self._terms.items():
            for g2, c2 in other._terms.items():
                g = g1 * g2
                c = c1 * c2
                d[g] = d[g] + c if g in d else c
        return AlgebraElement(self.ambient, d)

    def __rmul__(self, other) -> "AlgebraElement":
        if isinstance(other, (int, LaurentPoly)):
            return self * other
        return self._coerce(other) * self

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.ambient == other.ambient and self._terms == other._terms

    def __hash__(self):
        return hash((self.ambient, frozenset(self._terms.items())))

    def is_unit_term(self) -> bool:
        if len(self._terms) != 1:
            return False
        ((_, c),) = self._terms.items()
        return c.is_unit()

    def inverse(self) -> "AlgebraElement":
        if not self.is_unit_term():
            raise ValueError(f"{self} is not a monomial unit")
        ((g, c),) = self._terms.items()
        return AlgebraElement(self.ambient, [(g.inverse(), c.inverse())])

    def substitute(self, bindings) -> "AlgebraElement":
        return AlgebraElement(self.ambient, [(g, c.substitute(bindings)) for g, c in self._terms.items()])

    def sorted_terms(self):
        return sorted(self._terms.items(), key=lambda gc: (not gc[0].is_identity(), str(gc[0]), str(gc[1])))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for g, c in self.sorted_terms():
            gs = str(g)
            cs = str(c)
            if g.is_identity():
                body = cs
            elif c.is_one():
                body = gs
            elif c == LaurentPoly.const(-1):
                body = "-" + gs
            elif len(c.items()) == 1:
                body = f"{cs}*{gs}"
            else:
                body = f"({cs})*{gs}"
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"AlgebraElement({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": c.to_json(), "group": format_word(g.witness)} for g, c in self.sorted_terms()
            ]
        }

    @classmethod
    def from_json(cls, ambient: Ambient, obj: dict) -> "AlgebraElement":
        return cls(
            ambient,
            [(ambient.element(term["group"]), LaurentPoly.from_json(term["coeff"])) for term in obj["terms"]],
        )


def alg_add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x + y


def alg_mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def alg_equal(x: AlgebraElement, y: AlgebraElement) -> bool:
    if x.ambient != y.ambient:
        raise AmbientMismatch(f"{x.ambient} vs {y.ambient}")
    return x == y


def element(ambient: Ambient, w, coeff=ONE) -> AlgebraElement:
    """Algebra element ``coeff * g`` for the group word ``w``."""
    return AlgebraElement.of(ambient.element(w), coeff)


# augmentation ------------------------------------------------------------------

HTILDE = "htilde"
AMAP = "a"


def augment(x: AlgebraElement, mode: str, level: int = 1) -> LaurentPoly:
    """Ring homomorphism to the Laurent ring.

    ``htilde`` sends every group element to 1.  ``a`` (semidirect ambient only)
    sends x_k to t_k (level ``level``) and the PW_n part to 1.
    """
    out = ZERO
    if mode == HTILDE:
        for _, c in x.items():
            out = out + c
        return out
    if mode != AMAP:
        raise ValueError(f"unknown augmentation mode {mode!r}")
    if not isinstance(x.ambient, SemidirectAmbient):
        raise AmbientMismatch("the a-map is defined on the semidirect ambient")
    for g, c in x.items():
        mono = ONE
        for a in g.free:
            mono = mono * LaurentPoly.var(T(level, abs(a)), 1 if a > 0 else -1)
        out = out + c * mono
    return out


# matrices ----------------------------------------------------------------------

Entry = Union[AlgebraElement, LaurentPoly]


class RepMatrix:
    """Dense square matrix over the Laurent ring (``ambient is None``) or a group algebra."""

    __slots__ = ("entries", "basis", "ambient")

    def __init__(self, entries: Sequence[Sequence[Entry]], basis: str, ambient: Optional[Ambient] = None):
        rows = tuple(tuple(r) for r in entries)
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise ValueError("RepMatrix must be square")
        self.entries = rows
        self.basis = basis
        self.ambient = ambient

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def evaluated(self) -> bool:
        return self.ambient is None

    def zero_entry(self) -> Entry:
        return ZERO if self.ambient is None else AlgebraElement.zero(self.ambient)

    def one_entry(self) -> Entry:
        return ONE if self.ambient is None else AlgebraElement.one(self.ambient)

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    def row(self, r: int):
        return self.entries[r]

    def _check(self, other: "RepMatrix"):
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} vs {other.size}")
        if self.basis != other.basis:
            raise ValueError(f"basis mismatch: {self.basis} vs {other.basis}")
        if self.ambient != other.ambient:
            raise AmbientMismatch(f"{self.ambient} vs {other.ambient}")

    def __matmul__(self, other: "RepMatrix") -> "RepMatrix":
        self._check(other)
        m = self.size
        zero = self.zero_entry()
        cols = [[other.entries[k][c] for k in range(m)] for c in range(m)]
        out = []
        for r in range(m):
            row = self.entries[r]
            new_row = []
            for c in range(m):
                acc = zero
                col = cols[c]
                for k in range(m):
                    a, b = row[k], col[k]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                new_row.append(acc)
            out.append(new_row)
        return RepMatrix(out, self.basis, self.ambient)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        self._check(other)
        return self.entries == other.entries

    def __hash__(self):
        return hash((self.basis, self.entries))

    def first_difference(self, other: "RepMatrix") -> Optional[Tuple[int, int]]:
        self._check(other)
        for r in range(self.size):
            for c in range(self.size):
                if self.entries[r][c] != other.entries[r][c]:
                    return (r, c)
        return None

    def map(self, f: Callable[[Entry], Entry], ambient="same", basis: Optional[str] = None) -> "RepMatrix":
        amb = self.ambient if ambient == "same" else ambient
        return RepMatrix([[f(e) for e in row] for row in self.entries], basis or self.basis, amb)

    def substitute(self, bindings) -> "RepMatrix":
        if not bindings:
            return self
        return self.map(lambda e: e.substitute(bindings))

    def augment(self, mode: str, level: int = 1) -> "RepMatrix":
        if self.ambient is None:
            raise ValueError("matrix is already evaluated")
        return self.map(lambda e: augment(e, mode, level), ambient=None)

    def is_identity(self) -> bool:
        return self == identity(self.size, self.basis, self.ambient)

    def determinant(self) -> LaurentPoly:
        if self.ambient is not None:
            raise ValueError("determinants are only defined over the (commutative) Laurent ring")
        return berkowitz_det([list(r) for r in self.entries])

    # rendering -------------------------------------------------------------
    def render(self) -> str:
        cells = [[str(e) for e in row] for row in self.entries]
        widths = [max(len(cells[r][c]) for r in range(self.size)) for c in range(self.size)]
        return "\n".join(
            "[ " + "  ".join(cells[r][c].ljust(widths[c]) for c in range(self.size)) + " ]"
            for r in range(self.size)
        )

    def __str__(self) -> str:
        return self.render()

    def __repr__(self):
        return f"RepMatrix(size={self.size}, basis={self.basis!r}, ambient={self.ambient!r})"

    def to_json(self) -> dict:
        if self.ambient is None:
            entries = [[{"poly": e.to_json()} for e in row] for row in self.entries]
        else:
            entries = [[e.to_json() for e in row] for row in self.entries]
        return {
            "size": self.size,
            "basis": self.basis,
            "ambient": None if self.ambient is None else self.ambient.to_json(),
            "entries": entries,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RepMatrix":
        amb = None if obj.get("ambient") is None else ambient_from_json(obj["ambient"])
        if amb is None:
            entries = [[LaurentPoly.from_json(e["poly"]) for e in row] for row in obj["entries"]]
        else:
            entries = [[AlgebraElement.from_json(amb, e) for e in row] for row in obj["entries"]]
        m = cls(entries, obj["basis"], amb)
        if m.size != obj["size"]:
            raise ValueError("size field disagrees with entries")
        return m


def identity(m: int, basis: str, ambient: Optional[Ambient] = None) -> RepMatrix:
    zero = ZERO if ambient is None else AlgebraElement.zero(ambient)
    one = ONE if ambient is None else AlgebraElement.one(ambient)
    return RepMatrix([[one if r == c else zero for c in range(m)] for r in range(m)], basis, ambient)


def mat_mul(a: RepMatrix, b: RepMatrix) -> RepMatrix:
    return a @ b


def mat_equal(a: RepMatrix, b: RepMatrix) -> bool:
    return a == b


def laurent_matrix(rows: Sequence[Sequence[Union[int, str, LaurentPoly]]], basis: str) -> RepMatrix:
    """Build an evaluated matrix from ints, polynomials or their text rendering."""
    def conv(e):
        if isinstance(e, str):
            return parse_poly(e)
        return LaurentPoly.coerce(e)

    return RepMatrix([[conv(e) for e in row] for row in rows], basis)


def kron(a: RepMatrix, b: RepMatrix, basis: Optional[str] = None) -> RepMatrix:
    """Kronecker product, left factor varying slowest."""
    if a.ambient is not None or b.ambient is not None:
        raise ValueError("kron is defined for evaluated matrices")
    p, q = a.size, b.size
    out = [[a.entries[r // q][c // q] * b.entries[r % q][c % q] for c in range(p * q)] for r in range(p * q)]
    return RepMatrix(out, basis or f"{a.basis}(x){b.basis}")


def delete_rows_cols(a: RepMatrix, indices: Iterable[int]) -> RepMatrix:
    """Principal submatrix with the given 1-based rows and columns removed."""
    drop = set(indices)
    for k in drop:
        if not 1 <= k <= a.size:
            raise IndexError(f"index {k} out of range 1..{a.size}")
    keep = [k for k in range(a.size) if k + 1 not in drop]
    return RepMatrix([[a.entries[r][c] for c in keep] for r in keep], a.basis, a.ambient)


def berkowitz_det(m: List[List[LaurentPoly]]) -> LaurentPoly:
    """Division-free determinant (Berkowitz) over a commutative ring."""
    n = len(m)
    p = [ONE]  # characteristic polynomial of the empty trailing block
    for k in range(n - 1, -1, -1):
        size = n - 1 - k
        a = m[k][k]
        row = m[k][k + 1:]
        col = [m[r][k] for r in range(k + 1, n)]
        block = [r[k + 1:] for r in m[k + 1:]]
        c = [ONE, -a]
        v = col
        for _ in range(size):
            c.append(-sum((row[i] * v[i] for i in range(size)), ZERO))
            v = [sum((block[r][s] * v[s] for s in range(size)), ZERO) for r in range(size)]
        p = [sum((c[i - j] * p[j] for j in range(min(i, size) + 1)), ZERO) for i in range(size + 2)]
    return p[n] if n % 2 == 0 else -p[n]
