from hypothesis import strategies as st

from hecke import Partition


@st.composite
def partitions(draw, max_size=14):
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        p = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(p)
        n -= p
    return Partition(parts)


small_l = st.integers(1, 9)
l_at_least_2 = st.integers(2, 9)
