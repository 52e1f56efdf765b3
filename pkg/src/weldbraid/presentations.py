"""Generator/relator catalogs for the braid-type groups and the xi_{i,j} words."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import List, Sequence

from .words import (
    FreeAutomorphism,
    GenSymbol,
    Permutation,
    Word,
    format_word,
    invert_word,
    sigma,
    tau,
    xi,
)


class Family(enum.Enum):
    BRAID = "braid"
    SYMMETRIC = "sym"
    VIRTUAL = "vb"
    WELDED = "wb"
    TWIN_WELDED = "twb"
    PURE_WELDED = "pwb"

    @property
    def pure(self) -> bool:
        return self is Family.PURE_WELDED


@dataclass(frozen=True)
class GroupFamily:
    tag: Family
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank must be at least 2, got {self.n}")


@dataclass(frozen=True)
class Relator:
    lhs: Word
    rhs: Word
    label: str

    def to_json(self) -> dict:
        return {"label": self.label, "lhs": format_word(self.lhs), "rhs": format_word(self.rhs)}

    def __str__(self) -> str:
        return f"{self.label}: {format_word(self.lhs) or '1'} = {format_word(self.rhs) or '1'}"


def _braid_relators(n: int, gen) -> List[Relator]:
    return [
        Relator((gen(i), gen(i + 1), gen(i)), (gen(i + 1), gen(i), gen(i + 1)), f"{i}")
        for i in range(1, n - 1)
    ]


def _far_commutation(n: int, g, h, symmetric: bool):
    out = []
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) < 2 or (symmetric and j < i):
                continue
            out.append(Relator((g(i), h(j)), (h(j), g(i)), f"{i},{j}"))
    return out


def _label(prefix: str, rels: Sequence[Relator]) -> List[Relator]:
    return [Relator(r.lhs, r.rhs, f"{prefix}[{r.label}]") for r in rels]


def forbidden_relator(i: int, n: int) -> Relator:
    _check_range(i, n)
    return Relator(
        (tau(i), sigma(i + 1), sigma(i)), (sigma(i + 1), sigma(i), tau(i + 1)), f"Forbidden[{i}]"
    )


def twin_relator(i: int, n: int) -> Relator:
    _check_range(i, n)
    return Relator(
        (tau(i + 1), sigma(i), sigma(i + 1)), (tau(i), sigma(i + 1), sigma(i)), f"Twin[{i}]"
    )


def twin_iso_relator(i: int, n: int) -> Relator:
    """Preimage of the forbidden relation under sigma_i -> sigma_i^-1, tau_i -> tau_i.

    ``twin_relator`` as printed is not carried to a relation of WB_n by that
    map; this one is (after inverting both sides).
    """
    _check_range(i, n)
    return Relator(
        (sigma(i), sigma(i + 1), tau(i)), (tau(i + 1), sigma(i), sigma(i + 1)), f"TwinIso[{i}]"
    )


def mirror_relator(i: int, n: int) -> Relator:
    """The reversed form of V7; a consequence of VB_n, kept out of the defining list."""
    _check_range(i, n)
    return Relator(
        (tau(i), tau(i + 1), sigma(i)), (sigma(i + 1), tau(i), tau(i + 1)), f"Mirror[{i}]"
    )


def _check_range(i: int, n: int) -> None:
    if not 1 <= i <= n - 2:
        raise ValueError(f"index {i} out of range 1..{n - 2} for rank {n}")


def _virtual(n: int) -> List[Relator]:
    rels = _label("V1", _braid_relators(n, sigma))
    rels += _label("V2", _far_commutation(n, sigma, sigma, True))
    rels += [Relator((tau(i), tau(i)), (), f"V3[{i}]") for i in range(1, n)]
    rels += _label("V4", _braid_relators(n, tau))
    rels += _label("V5", _far_commutation(n, tau, tau, True))
    rels += _label("V6", _far_commutation(n, sigma, tau, False))
    rels += [
        Relator((sigma(i), tau(i + 1), tau(i)), (tau(i + 1), tau(i), sigma(i + 1)), f"V7[{i}]")
        for i in range(1, n - 1)
    ]
    return rels


def mccool_relators(n: int) -> List[Relator]:
    """McCool relations written as ``ab = ba``.

    The first family is read as ``[xi_ij, xi_st] = 1`` for disjoint pairs.
    """
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    rels = []
    for (i, j), (s, t) in combinations(pairs, 2):
        if {i, j} & {s, t}:
            continue
        rels.append(Relator((xi(i, j), xi(s, t)), (xi(s, t), xi(i, j)), f"McCool1[{i},{j},{s},{t}]"))
    for j in range(1, n + 1):
        for i, k in combinations([a for a in range(1, n + 1) if a != j], 2):
            rels.append(Relator((xi(i, j), xi(k, j)), (xi(k, j), xi(i, j)), f"McCool2[{i},{j},{k}]"))
    for i, j, k in permutations(range(1, n + 1), 3):
        a = (xi(i, j), xi(k, j))
        rels.append(Relator(a + (xi(i, k),), (xi(i, k),) + a, f"McCool3[{i},{j},{k}]"))
    return rels


def relators(family, n: int = None) -> List[Relator]:
    """Defining relators of ``family`` at rank ``n``, in a fixed order."""
    if isinstance(family, GroupFamily):
        fam, n = family.tag, family.n
    else:
        fam = Family(family)
        GroupFamily(fam, n)
    if fam is Family.BRAID:
        return _label("V1", _braid_relators(n, sigma)) + _label("V2", _far_commutation(n, sigma, sigma, True))
    if fam is Family.SYMMETRIC:
        return (
            [Relator((tau(i), tau(i)), (), f"V3[{i}]") for i in range(1, n)]
            + _label("V4", _braid_relators(n, tau))
            + _label("V5", _far_commutation(n, tau, tau, True))
        )
    if fam is Family.VIRTUAL:
        return _virtual(n)
    if fam is Family.WELDED:
        return _virtual(n) + [forbidden_relator(i, n) for i in range(1, n - 1)]
    if fam is Family.TWIN_WELDED:
        return _virtual(n) + [twin_relator(i, n) for i in range(1, n - 1)]
    return mccool_relators(n)


# xi words -------------------------------------------------------------------

def xi_word(i: int, j: int, n: int) -> Word:
    """A sigma/tau word for xi_{i,j} in WB_n.

    Under the right Artin action the word sends x_i to x_j x_i x_j^-1 and
    fixes every other generator.
    """
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"invalid xi indices ({i}, {j}) for rank {n}")
    if i < j:
        # tau_i..tau_{j-2} sigma_{j-1} tau_{j-1} tau_{j-2}..tau_i
        return (
            tuple(tau(k) for k in range(i, j - 1))
            + (sigma(j - 1), tau(j - 1))
            + tuple(tau(k) for k in range(j - 2, i - 1, -1))
        )
    # tau_{i-1}..tau_{j+1} tau_j sigma_j tau_{j+1}..tau_{i-1}
    return (
        tuple(tau(k) for k in range(i - 1, j, -1))
        + (tau(j), sigma(j))
        + tuple(tau(k) for k in range(j + 1, i))
    )


def xi_auto(i: int, j: int, n: int) -> FreeAutomorphism:
    """Right conjugation action of xi_{i,j} on F_n: x_i -> x_j x_i x_j^-1."""
    if not (1 <= i <= n and 1 <= j <= n) or i == j:
        raise ValueError(f"invalid xi indices ({i}, {j}) for rank {n}")
    im = [(k,) for k in range(1, n + 1)]
    im[i - 1] = (j, i, -j)
    return FreeAutomorphism(n, tuple(im))


def expand_xi(w: Sequence[GenSymbol], n: int) -> Word:
    """Rewrite ``q`` letters and ``x_k = xi_{n,k}`` letters as sigma/tau words in WB_n."""
    out: list = []
    for g in w:
        if g.kind in ("s", "t"):
            out.append(g)
            continue
        if g.kind == "q":
            sub = xi_word(g.i, g.j, n)
        elif g.kind == "x":
            sub = xi_word(n, g.i, n)
        else:
            raise ValueError(f"unknown letter {g}")
        out.extend(sub if g.sign > 0 else invert_word(sub))
    return tuple(out)


def twin_to_welded(w: Sequence[GenSymbol]) -> Word:
    """The isomorphism sigma_i -> sigma_i^-1, tau_i -> tau_i, applied letterwise."""
    out = []
    for g in w:
        if g.kind not in ("s", "t"):
            raise ValueError(f"twin_to_welded takes sigma/tau words, got {g}")
        out.append(g.inverse() if g.kind == "s" else g)
    return tuple(out)


def permutation_of(w: Sequence[GenSymbol], n: int) -> Permutation:
    """Image in S_n (sigma_i, tau_i -> (i i+1)), letters applied left to right.

    Matches the Artin action: the word sends x_k to a conjugate of x_{p(k)}.
    """
    p = Permutation.identity(n)
    for g in expand_xi(w, n):
        if not 1 <= g.i <= n - 1:
            raise ValueError(f"generator index {g.i} out of range for rank {n}")
        p = p.then(Permutation.transposition(n, g.i, g.i + 1))
    return p
