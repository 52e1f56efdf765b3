from hypothesis import HealthCheck, settings, strategies as st

from weldbraid.laurent import ALPHA, BETA, LaurentPoly, T
from weldbraid.words import sigma, tau

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

PARAMS = [ALPHA, BETA, T(1, 1), T(1, 2), T(2, 1)]


def free_words(n, max_len=30):
    """Unreduced free words over x_1..x_n as signed integers."""
    letters = st.sampled_from([k for k in range(1, n + 1)] + [-k for k in range(1, n + 1)])
    return st.lists(letters, max_size=max_len).map(tuple)


def st_words(n, max_len=8):
    """Words in sigma/tau letters of VB_n."""
    letter = st.builds(
        lambda kind, i, sign: (sigma if kind == "s" else tau)(i, sign),
        st.sampled_from("st"),
        st.integers(1, n - 1),
        st.sampled_from([1, -1]),
    )
    return st.lists(letter, max_size=max_len).map(tuple)


@st.composite
def laurent_polys(draw, max_terms=3):
    d = {}
    for _ in range(draw(st.integers(0, max_terms))):
        exps = draw(st.dictionaries(st.sampled_from(PARAMS), st.integers(-2, 2), max_size=2))
        mono = tuple(sorted((p, e) for p, e in exps.items() if e))
        d[mono] = d.get(mono, 0) + draw(st.integers(-3, 3))
    return LaurentPoly(d)
