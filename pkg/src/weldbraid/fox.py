"""Fox free differential calculus on F_n and the induced action on the
relative augmentation ideal of F_n in Z[F_n x| PW_n]."""

from __future__ import annotations

from typing import Sequence, Union

from .galgebra import AlgebraElement, RepMatrix, SemidirectAmbient
from .laurent import ONE
from .words import GenSymbol, parse_word, reduce_free, to_free

AUG = "aug"


def _as_free(w, n: int):
    if isinstance(w, str):
        w = parse_word(w)
    w = tuple(w)
    if w and isinstance(w[0], GenSymbol):
        w = to_free(w)
    for a in w:
        if not 1 <= abs(a) <= n:
            raise ValueError(f"free generator x{abs(a)} out of range for rank {n}")
    return reduce_free(w)


def _derive(w, k: int, amb: SemidirectAmbient) -> AlgebraElement:
    # d(g v) = d(g) + g d(v)
    if not w:
        return AlgebraElement.zero(amb)
    head, rest = w[0], w[1:]
    if head == k:
        d_head = AlgebraElement.one(amb)
    elif head == -k:
        d_head = AlgebraElement.of(amb.free((-k,)), -ONE)
    else:
        d_head = AlgebraElement.zero(amb)
    d_rest = _derive(rest, k, amb)
    if d_rest.is_zero():
        return d_head
    return d_head + AlgebraElement.of(amb.free((head,))) * d_rest


def fox_derivative(w, k: int, n: int) -> AlgebraElement:
    """d w / d x_k as an element of Z[F_n] (inside the semidirect ambient)."""
    if not 1 <= k <= n:
        raise ValueError(f"derivative index {k} out of range 1..{n}")
    return _derive(_as_free(w, n), k, SemidirectAmbient(n))


def fundamental_check(w, n: int) -> bool:
    """Sum_k (dw/dx_k)(x_k - 1) == w - 1."""
    amb = SemidirectAmbient(n)
    w = _as_free(w, n)
    lhs = AlgebraElement.zero(amb)
    for k in range(1, n + 1):
        xk_minus_1 = AlgebraElement.of(amb.free((k,))) - AlgebraElement.one(amb)
        lhs = lhs + fox_derivative(w, k, n) * xk_minus_1
    return lhs == AlgebraElement.of(amb.free(w)) - AlgebraElement.one(amb)


def conjugated_generator(g, l: int, n: int):
    """The free word g^-1 x_l g, computed in F_n x| PW_n."""
    amb = SemidirectAmbient(n)
    x_l = amb.free((l,))
    c = g.inverse() * x_l * g
    if not c.auto.is_identity():
        raise ValueError(f"{g} does not normalize F_{n}")
    return c.free


def fox_action_matrix(g: Union[str, Sequence[GenSymbol]], n: int) -> RepMatrix:
    """Matrix of right multiplication by g on the basis (x_k - 1) of the ideal.

    Row l holds the coefficients of (x_l - 1) g = g (g^-1 x_l g - 1).
    """
    amb = SemidirectAmbient(n)
    elem = amb.element(g)
    g_alg = AlgebraElement.of(elem)
    rows = []
    for l in range(1, n + 1):
        image = conjugated_generator(elem, l, n)
        rows.append([g_alg * fox_derivative(image, k, n) for k in range(1, n + 1)])
    return RepMatrix(rows, AUG, amb)
