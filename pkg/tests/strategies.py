"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from twistforge.coeff import ONE, QRatFunc, qpow


@st.composite
def laurent_polys(draw, max_terms=4, max_exp=4):
    out = QRatFunc(0)
    for _ in range(draw(st.integers(1, max_terms))):
        c = draw(st.integers(-5, 5))
        out = out + QRatFunc(c) * qpow(draw(st.integers(-max_exp, max_exp)))
    return out


@st.composite
def ratfuncs(draw, regular=False):
    num = draw(laurent_polys())
    den = draw(laurent_polys().filter(lambda d: not d.is_zero()))
    f = num / den
    if regular:
        # multiply by powers of (q - 1) until the pole at q = 1 is gone
        while True:
            try:
                f.value_at_one()
                break
            except Exception:
                f = f * (qpow(1) - ONE)
    return f
