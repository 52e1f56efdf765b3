"""Words in braid-type generators, free reduction, and free-group automorphisms.

Letters are :class:`GenSymbol` tuples.  Free-group words (the ``x`` letters,
``x_k`` standing for the free generator xi_{n+1,k}) are also handled in a
compact signed-integer form: ``k`` for ``x_k`` and ``-k`` for its inverse.

Automorphisms act on the right: ``word_to_auto(u + v)`` is "first ``u``, then
``v``", so ``word_to_auto(u + v)(w) == word_to_auto(v)(word_to_auto(u)(w))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence, Tuple

FreeWord = Tuple[int, ...]


class GenSymbol(NamedTuple):
    kind: str  # 's' sigma, 't' tau, 'q' xi_{i,j}, 'x' free generator
    i: int
    j: int = 0
    sign: int = 1

    def inverse(self) -> "GenSymbol":
        return self._replace(sign=-self.sign)

    def __str__(self) -> str:
        name = self.kind.upper() if self.sign < 0 else self.kind
        if self.kind == "q":
            return f"{name}{self.i}.{self.j}"
        return f"{name}{self.i}"


Word = Tuple[GenSymbol, ...]


def sigma(i: int, sign: int = 1) -> GenSymbol:
    return GenSymbol("s", i, 0, sign)


def tau(i: int, sign: int = 1) -> GenSymbol:
    return GenSymbol("t", i, 0, sign)


def xi(i: int, j: int, sign: int = 1) -> GenSymbol:
    return GenSymbol("q", i, j, sign)


def freex(k: int, sign: int = 1) -> GenSymbol:
    return GenSymbol("x", k, 0, sign)


_TOKEN = re.compile(r"^([sStTxX])(\d+)$|^([qQ])(\d+)\.(\d+)$")


def parse_word(text: str) -> Word:
    """Parse the whitespace-separated word grammar (``s1 T2 q1.3 X4``)."""
    letters = []
    for tok in text.split():
        m = _TOKEN.match(tok)
        if not m:
            raise ValueError(f"bad word token {tok!r}")
        if m.group(1):
            ch, i = m.group(1), int(m.group(2))
            letters.append(GenSymbol(ch.lower(), i, 0, 1 if ch.islower() else -1))
        else:
            ch = m.group(3)
            letters.append(GenSymbol("q", int(m.group(4)), int(m.group(5)), 1 if ch == "q" else -1))
        if letters[-1].i < 1 or (letters[-1].kind == "q" and letters[-1].j < 1):
            raise ValueError(f"generator indices are 1-based, got {tok!r}")
    return tuple(letters)


def format_word(w: Iterable[GenSymbol]) -> str:
    return " ".join(str(g) for g in w)


def invert_word(w: Sequence[GenSymbol]) -> Word:
    return tuple(g.inverse() for g in reversed(w))


# free words ---------------------------------------------------------------

def to_free(w: Iterable[GenSymbol]) -> FreeWord:
    out = []
    for g in w:
        if g.kind != "x":
            raise ValueError(f"{g} is not a free generator")
        out.append(g.i * g.sign)
    return tuple(out)


def from_free(w: Iterable[int]) -> Word:
    return tuple(freex(abs(a), 1 if a > 0 else -1) for a in w)


def reduce_free(w: Iterable[int]) -> FreeWord:
    out: list = []
    for a in w:
        if out and out[-1] == -a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def reduce(w: Sequence[GenSymbol]) -> Word:
    """Freely reduce a word over the ``x`` letters."""
    return from_free(reduce_free(to_free(w)))


def invert_free(w: Sequence[int]) -> FreeWord:
    return tuple(-a for a in reversed(w))


# automorphisms --------------------------------------------------------------

@dataclass(frozen=True)
class FreeAutomorphism:
    """Endomorphism of F_rank given by the images of x_1..x_rank."""

    rank: int
    images: Tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != self.rank:
            raise ValueError(f"need {self.rank} generator images, got {len(self.images)}")

    @classmethod
    def identity(cls, rank: int) -> "FreeAutomorphism":
        return cls(rank, tuple((k,) for k in range(1, rank + 1)))

    def __call__(self, w: Sequence[int]) -> FreeWord:
        out = []
        for a in w:
            if a > 0:
                out.extend(self.images[a - 1])
            else:
                out.extend(invert_free(self.images[-a - 1]))
        return reduce_free(out)

    def then(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        """Act by ``self`` first, then by ``other`` (i.e. ``other o self``)."""
        if other.rank != self.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return FreeAutomorphism(self.rank, tuple(other(img) for img in self.images))

    def compose(self, other: "FreeAutomorphism") -> "FreeAutomorphism":
        """Function composition ``self o other``."""
        return other.then(self)

    def is_identity(self) -> bool:
        return all(img == (k,) for k, img in enumerate(self.images, 1))

    def __str__(self) -> str:
        return ", ".join(
            f"x{k} -> {format_word(from_free(img)) or '1'}" for k, img in enumerate(self.images, 1)
        )


def compose(a: FreeAutomorphism, b: FreeAutomorphism) -> FreeAutomorphism:
    """Right-action product: ``a`` then ``b``."""
    return a.then(b)


def apply(a: FreeAutomorphism, w: Sequence[GenSymbol]) -> Word:
    return from_free(a(to_free(w)))


def auto_equal(a: FreeAutomorphism, b: FreeAutomorphism) -> bool:
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    return a.images == b.images


def artin_auto(g: GenSymbol, n: int) -> FreeAutomorphism:
    """rho_i for sigma_i (its inverse for sigma_i^-1) and theta_i for tau_i^+-1."""
    if g.kind not in ("s", "t"):
        raise ValueError(f"artin_auto takes sigma/tau letters, got {g}")
    i = g.i
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for rank {n}")
    im = [(k,) for k in range(1, n + 1)]
    if g.kind == "t":
        im[i - 1], im[i] = (i + 1,), (i,)
    elif g.sign > 0:
        im[i - 1], im[i] = (i, i + 1, -i), (i,)
    else:
        im[i - 1], im[i] = (i + 1,), (-(i + 1), i, i + 1)
    return FreeAutomorphism(n, tuple(im))


def word_to_auto(w: Sequence[GenSymbol], n: int) -> FreeAutomorphism:
    a = FreeAutomorphism.identity(n)
    for g in w:
        a = a.then(artin_auto(g, n))
    return a


# permutations ---------------------------------------------------------------

@dataclass(frozen=True)
class Permutation:
    """Bijection of {1..n}; ``images[k-1]`` is the image of ``k``."""

    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation")

    @property
    def size(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        im = list(range(1, n + 1))
        im[a - 1], im[b - 1] = b, a
        return cls(tuple(im))

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(other(self(k)) for k in range(1, self.size + 1)))

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.size + 1))

    def cycles(self):
        seen, out = set(), []
        for k in range(1, self.size + 1):
            if k in seen or self(k) == k:
                continue
            cyc, c = [], k
            while c not in seen:
                seen.add(c)
                cyc.append(c)
                c = self(c)
            out.append(tuple(cyc))
        return out
