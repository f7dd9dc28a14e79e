"""Hypothesis strategies shared by the test suites."""

from collections import Counter

from hypothesis import strategies as st

from tableau_forge.core.shapes import Partition, SkewShape, subpartitions


@st.composite
def partition_strategy(draw, max_n=10, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n == 0:
        return Partition()
    k = draw(st.integers(min_value=1, max_value=n))

    # Assign each cell to a random row and read off the row lengths
    bin_assignments = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    counts = Counter(bin_assignments)
    return Partition(tuple(sorted(counts.values(), reverse=True)))


@st.composite
def skew_shape_strategy(draw, max_n=7):
    outer = draw(partition_strategy(max_n=max_n))
    inner = draw(st.sampled_from(list(subpartitions(outer))))
    return SkewShape(outer, inner)
