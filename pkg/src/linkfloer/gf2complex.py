"""Graded chain complexes over the two-element field.

These arise from a free F2[U]-complex by setting U = 0 (hat flavor, bigraded)
or U = 1 (collapsed, single grading M - 2A).  Only dimensions of homology are
needed downstream, plus cycle membership tests for invariant classes.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Optional

from . import gf2


class GradedF2Complex:
    """Generators with a primary grading (and optional secondary), entries in F2.

    gradings[i] = (primary, secondary-or-None).  The differential drops the
    primary grading by one and preserves the secondary one.
    """

    def __init__(self, ids: list[str],
                 gradings: list[tuple[Fraction, Optional[Fraction]]],
                 entries: Iterable[tuple[int, int]]):
        self.ids = list(ids)
        self.gradings = list(gradings)
        self.entries = set(entries)
        self.index = {gid: i for i, gid in enumerate(self.ids)}

    def homology_dimensions(self) -> dict[tuple, int]:
        """Dimension of homology in each grading, as {grading_key: dim}."""
        by_grading: dict[tuple, list[int]] = defaultdict(list)
        for i, g in enumerate(self.gradings):
            by_grading[g].append(i)
        # boundary columns grouped by source grading
        cols_by_grading: dict[tuple, list[int]] = defaultdict(list)
        for i, g in enumerate(self.gradings):
            col = 0
            for (t, s) in self.entries:
                if s == i:
                    col |= 1 << t
            cols_by_grading[g].append(col)
        # rank of d restricted to each grading level
        rank_from: dict[tuple, int] = {}
        for g, cols in cols_by_grading.items():
            rank_from[g] = gf2.rank(cols)
        dims: dict[tuple, int] = {}
        for g, gens in by_grading.items():
            above = (g[0] + 1, g[1])
            dims[g] = len(gens) - rank_from.get(g, 0) - rank_from.get(above, 0)
        return {g: d for g, d in dims.items() if d}

    def total_dimension(self) -> int:
        return sum(self.homology_dimensions().values())

    def class_is_nonzero(self, chain: dict[str, int]) -> bool:
        """Is the homology class of the given cycle (id -> coefficient) nonzero?"""
        v = 0
        for gid, c in chain.items():
            if c % 2:
                v ^= 1 << self.index[gid]
        if v == 0:
            return False
        # check cycle
        dv = 0
        for (t, s) in self.entries:
            if v >> s & 1:
                dv ^= 1 << t
        if dv != 0:
            raise ValueError("chain is not a cycle")
        # reduce against the image of d
        cols = []
        for s in range(len(self.ids)):
            col = 0
            for (t, ss) in self.entries:
                if ss == s:
                    col |= 1 << t
            if col:
                cols.append(col)
        return gf2.solve(cols, v) is None
