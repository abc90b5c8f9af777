from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from flatfold.vertex import random_kawasaki_vertex  # noqa: E402


def kawasaki_vertices(max_half_degree: int = 5):
    """Random vertices satisfying the alternating-sum condition, ties included."""
    return st.builds(
        random_kawasaki_vertex,
        st.integers(min_value=1, max_value=max_half_degree),
        st.integers(min_value=0, max_value=10**6),
    )
