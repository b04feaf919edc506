"""Grid moves: commutation, stabilization, Legendrian stabilization,
connected sum and disjoint union.

Stabilization bookkeeping: stabilizing at the X in row r, column c replaces
that cell by a 2x2 block (row r splits into rows r/r+1, column c into
c/c+1).  The kind names the block corner receiving the new O; the two new
X's occupy the block cells adjacent to it, and the displaced old markings of
row r and column c move to the block-free row resp. column.  The four kinds
realize, in the Legendrian front picture, two planar isotopies and the two
Legendrian stabilizations; which kind is the positive/negative stabilization
is frozen in LEGENDRIAN_STAB_KIND (calibrated once against the tb/rot deltas
and the U-action on the invariant class).

Connected sums splice at a chosen component pair after torus translations
park an X of the first factor at its top-right corner and an O of the second
factor at its bottom-left; swapping the two adjacent column O's then joins
the strands without creating any new crossing, so tb adds plus one.
"""

from __future__ import annotations

from .grid import GridDiagram, GridError

# kind of X-stabilization realizing the Legendrian +/- stabilization
LEGENDRIAN_STAB_KIND = {"plus": "SE", "minus": "NW"}


def commute_columns(G: GridDiagram, c: int) -> GridDiagram:
    """Exchange columns c and c+1 (mod N); legal when the vertical spans are
    nested or disjoint (non-interleaving)."""
    N = G.N
    c2 = (c + 1) % N
    col_O = {col: r for r, col in enumerate(G.O)}
    col_X = {col: r for r, col in enumerate(G.X)}
    a = sorted((col_O[c], col_X[c]))
    b = sorted((col_O[c2], col_X[c2]))
    inside = lambda x, iv: iv[0] < x < iv[1]
    if inside(a[0], b) != inside(a[1], b):
        raise GridError("interleaving columns cannot be commuted")
    swap = {c: c2, c2: c}
    return GridDiagram(tuple(swap.get(v, v) for v in G.O),
                       tuple(swap.get(v, v) for v in G.X))


def commute_rows(G: GridDiagram, r: int) -> GridDiagram:
    """Exchange rows r and r+1 (mod N) under the same non-interleaving rule."""
    N = G.N
    r2 = (r + 1) % N
    a = sorted((G.O[r], G.X[r]))
    b = sorted((G.O[r2], G.X[r2]))
    inside = lambda x, iv: iv[0] < x < iv[1]
    if inside(a[0], b) != inside(a[1], b):
        raise GridError("interleaving rows cannot be commuted")
    O = list(G.O)
    X = list(G.X)
    O[r], O[r2] = O[r2], O[r]
    X[r], X[r2] = X[r2], X[r]
    return GridDiagram(tuple(O), tuple(X))


def stabilize(G: GridDiagram, row: int, kind: str, marking: str = "X") -> GridDiagram:
    """Stabilize at the marking in the given row; kind in NW/NE/SW/SE."""
    if kind not in ("NW", "NE", "SW", "SE"):
        raise GridError("unknown stabilization kind %r" % kind)
    if marking == "O":
        # an O-stabilization is the X-stabilization of the swapped diagram
        return GridDiagram(
            stabilize(GridDiagram(G.X, G.O), row, kind, "X").X,
            stabilize(GridDiagram(G.X, G.O), row, kind, "X").O)
    r, c = row, G.X[row]
    N = G.N
    up = lambda v, cut: v + 1 if v > cut else v

    new_O = [None] * (N + 1)
    new_X = [None] * (N + 1)
    for rr in range(N):
        if rr == r:
            continue
        new_O[up(rr, r)] = up(G.O[rr], c)
        new_X[up(rr, r)] = up(G.X[rr], c)
    # block rows r (bottom half) and r+1 (top half); columns c, c+1
    o_row = r + 1 if kind in ("NW", "NE") else r
    o_col = c + 1 if kind in ("NE", "SE") else c
    x_row_other = r if o_row == r + 1 else r + 1
    x_col_other = c if o_col == c + 1 else c + 1
    # new O at the kind corner, new X's adjacent to it in its row and column
    new_O[o_row] = o_col
    new_X[o_row] = x_col_other
    new_X[x_row_other] = o_col
    # displaced old markings: row r's O to the block-free row, column c's O to
    # the block-free column
    new_O[x_row_other] = up(G.O[r], c)
    col_O_row = next(rr for rr in range(N) if G.O[rr] == c)
    new_O[up(col_O_row, r)] = x_col_other
    return GridDiagram(tuple(new_O), tuple(new_X))


def destabilize_candidates(G: GridDiagram) -> list[int]:
    """Rows whose X sits in a 2x2 block that a destabilization removes."""
    out = []
    for r in range(G.N):
        c = G.X[r]
        for dr in (-1, 1):
            for dc in (-1, 1):
                r2, c2 = (r + dr) % G.N, (c + dc) % G.N
                if G.X[r2] == c2 and (G.O[r] == c2 or G.O[r2] == c):
                    out.append(r)
    return sorted(set(out))


def legendrian_stabilize(G: GridDiagram, sign: str, component: int = 0) -> GridDiagram:
    """Legendrian +/- stabilization of the chosen component."""
    if sign not in ("plus", "minus"):
        raise GridError("sign must be 'plus' or 'minus'")
    comp = G.components()[component]
    return stabilize(G, comp[0], LEGENDRIAN_STAB_KIND[sign], "X")


def _x_of_component(G: GridDiagram, comp_index: int) -> int:
    return G.components()[comp_index][0]


def connected_sum(G1: GridDiagram, G2: GridDiagram,
                  c1: int = 0, c2: int = 0) -> GridDiagram:
    """Legendrian connected sum joining component c1 of G1 to c2 of G2."""
    if not (0 <= c1 < G1.n_components and 0 <= c2 < G2.n_components):
        raise GridError("component index out of range")
    # park an X of component c1 at the top-right corner of G1
    r1 = _x_of_component(G1, c1)
    A = G1.rotate_rows(G1.N - 1 - r1)
    A = A.rotate_cols(A.N - 1 - A.X[A.N - 1])
    # park the O sharing a column with an X of component c2 at bottom-left of G2
    r2 = _x_of_component(G2, c2)
    col = G2.X[r2]
    o_row = next(r for r in range(G2.N) if G2.O[r] == col)
    B = G2.rotate_rows(G2.N - o_row)
    B = B.rotate_cols(B.N - B.O[0])
    n1, n2 = A.N, B.N
    O = list(A.O) + [c + n1 for c in B.O]
    X = list(A.X) + [c + n1 for c in B.X]
    # splice: swap the O entries of columns n1-1 and n1 (rows found by search)
    rowu = next(r for r in range(n1 + n2) if O[r] == n1 - 1)
    rowv = next(r for r in range(n1 + n2) if O[r] == n1)
    O[rowu], O[rowv] = n1, n1 - 1
    return GridDiagram(tuple(O), tuple(X))


def disjoint_union(G1: GridDiagram, G2: GridDiagram) -> GridDiagram:
    """Block sum presenting the split union of the two links."""
    n1 = G1.N
    return GridDiagram(tuple(G1.O) + tuple(c + n1 for c in G2.O),
                       tuple(G1.X) + tuple(c + n1 for c in G2.X))
