"""Small dense linear algebra over F2 with columns packed into Python ints.

A vector over F2 indexed by 0..n-1 is an int whose bit i is the coefficient
of index i; addition is ^.  This is fast enough for the few-thousand
dimensional problems that come out of the reduction pipelines.
"""

from __future__ import annotations


def rank(cols: list[int]) -> int:
    """Rank of the matrix whose columns are the given bitmasks."""
    basis: list[int] = []
    r = 0
    for c in cols:
        for b in basis:
            low = b & -b
            if c & low:
                c ^= b
        if c:
            basis.append(c)
            r += 1
    return r


class Echelon:
    """Incremental column echelon basis with expression tracking.

    add(v) reduces v against the current basis; if a nonzero residue is left
    it joins the basis.  Each basis vector remembers its expression in terms
    of the vectors that were added (also as a bitmask over insertion indices),
    so membership certificates can be extracted.
    """

    def __init__(self) -> None:
        self.cols: list[int] = []    # echelon columns, distinct pivot bits
        self.expr: list[int] = []    # expression over added-vector indices
        self.pivots: list[int] = []  # pivot bit of each column
        self.count = 0

    def reduce(self, v: int) -> tuple[int, int]:
        """Return (residue, expression) of v against the basis."""
        e = 0
        for i, c in enumerate(self.cols):
            if v & self.pivots[i]:
                v ^= c
                e ^= self.expr[i]
        return v, e

    def add(self, v: int) -> bool:
        """Insert v; True if it enlarged the span."""
        idx = self.count
        self.count += 1
        res, e = self.reduce(v)
        if res == 0:
            return False
        self.cols.append(res)
        self.expr.append(e ^ (1 << idx))
        self.pivots.append(res & -res)
        return True

    def contains(self, v: int) -> bool:
        return self.reduce(v)[0] == 0

    @property
    def dim(self) -> int:
        return len(self.cols)


def kernel_basis(cols: list[int]) -> list[int]:
    """Kernel of the matrix with the given columns, as bitmasks over columns."""
    ech = Echelon()
    out = []
    for j, c in enumerate(cols):
        res, e = ech.reduce(c)
        if res == 0:
            out.append(e ^ (1 << j))
        else:
            ech.cols.append(res)
            ech.expr.append(e ^ (1 << j))
            ech.pivots.append(res & -res)
            ech.count += 1
    # fix insertion counting: Echelon.add not used, emulate
    return out


def solve(cols: list[int], target: int) -> int | None:
    """One solution x (bitmask over columns) of cols * x = target, or None."""
    ech = Echelon()
    for c in cols:
        ech.add(c)
    res, e = ech.reduce(target)
    return None if res else e


def bits(v: int):
    """Iterate set bit positions of v."""
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low
