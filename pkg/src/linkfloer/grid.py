"""Toroidal grid diagrams and their collapsed link Floer complexes.

A grid of size N has one O and one X in each row and column, stored as the
column index of the marking in each row, with row 0 at the bottom.  Generators
of the complex are permutations (one lattice point per row and column, the
point in column i sitting at row sigma[i]); the differential counts empty
rectangles that avoid the X markings, weighted by U^(#O inside), with all O
variables collapsed to the single U.

Planar grading conventions (the grid drawn in [0,N)^2, not wrapped):

    I(P, Q) = #{(p, q) : q strictly north-east of p},  J = (I(P,Q)+I(Q,P))/2
    M(x)    = J(x,x) - 2 J(x,O) + J(O,O) + 1
    A(x)    = (M_O(x) - M_X(x))/2 - (N - n)/2

The raw homology of the grid complex is the link invariant tensored with
(N - n) copies of the two-dimensional piece W spanned in bigradings (0,0) and
(-1,-1); `link_decomposition` divides those off.

The Legendrian conventions (which X-corner generator is the distinguished
invariant cycle, how fronts are read off for tb/rot, crossing signs) are
frozen in `CONVENTIONS` below; they were fixed once by requiring the grading
identities A = (tb - rot + n)/2 and M = tb - rot + 1 to hold on every grid
together with the standard-unknot and positive-Hopf anchor values.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .bigraded import Bigrading, FreeBigradedComplex, GradedGenerator
from .homology import Homology, ModuleDecomposition, ClassPosition
from .upoly import UPoly


class GridError(ValueError):
    pass


# Frozen convention record; see module docstring.  invariant_corner: corner of
# the X cells used for the plus-invariant ('SW' or 'NE').  cusp bookkeeping comes
# from rotating the grid 45 degrees clockwise to a front.
CONVENTIONS = {
    "rows_oriented": "X_to_O",     # horizontal segments run from the X to the O
    "cols_oriented": "O_to_X",     # vertical segments run from the O to the X
    "front_rotation": "cw",        # grid -> front by a clockwise 45 deg turn
    "invariant_corner": {"plus": "NE", "minus": "SW"},
    "crossing_sign_flip": False,
    "rot_sign_flip": False,
}


def _perm_ok(t, N):
    return sorted(t) == list(range(N))


@dataclass(frozen=True)
class GridDiagram:
    """O and X placements: column index of the marking in each row."""

    O: tuple[int, ...]
    X: tuple[int, ...]

    def __post_init__(self):
        N = len(self.O)
        if len(self.X) != N or N < 1:
            raise GridError("O and X must have the same positive length")
        if not _perm_ok(list(self.O), N) or not _perm_ok(list(self.X), N):
            raise GridError("placements must be permutations of 0..N-1")
        if any(o == x for o, x in zip(self.O, self.X)) and N > 1:
            raise GridError("O and X may not share a cell")

    @property
    def N(self) -> int:
        return len(self.O)

    # -- components ------------------------------------------------------

    def components(self) -> list[list[int]]:
        """Link components as lists of rows, traced X->O along rows and
        O->X along columns."""
        col_X = {c: r for r, c in enumerate(self.X)}
        seen = set()
        comps = []
        for r0 in range(self.N):
            if r0 in seen:
                continue
            comp = []
            r = r0
            while r not in seen:
                seen.add(r)
                comp.append(r)
                r = col_X[self.O[r]]  # row theO's column's X lives in
            comps.append(comp)
        return comps

    @property
    def n_components(self) -> int:
        return len(self.components())

    def component_of_row(self) -> dict[int, int]:
        out = {}
        for i, comp in enumerate(self.components()):
            for r in comp:
                out[r] = i
        return out

    # -- symmetries and file format -----------------------------------------

    def mirror(self) -> "GridDiagram":
        """Reflect columns; presents the mirror link."""
        N = self.N
        return GridDiagram(tuple(N - 1 - c for c in self.O),
                           tuple(N - 1 - c for c in self.X))

    def rotate_rows(self, k: int) -> "GridDiagram":
        """Cyclic permutation moving row 0 to row k (torus translation)."""
        N = self.N
        k %= N
        O = [0] * N
        X = [0] * N
        for r in range(N):
            O[(r + k) % N] = self.O[r]
            X[(r + k) % N] = self.X[r]
        return GridDiagram(tuple(O), tuple(X))

    def rotate_cols(self, k: int) -> "GridDiagram":
        N = self.N
        k %= N
        return GridDiagram(tuple((c + k) % N for c in self.O),
                           tuple((c + k) % N for c in self.X))

    def to_text(self) -> str:
        return "N %d\nO: %s\nX: %s\n" % (
            self.N, " ".join(map(str, self.O)), " ".join(map(str, self.X)))

    @staticmethod
    def from_text(text: str) -> "GridDiagram":
        lines = [ln.strip() for ln in text.splitlines()
                 if ln.strip() and not ln.strip().startswith("#")]
        if len(lines) < 3 or not lines[0].startswith("N "):
            raise GridError("expected 'N <int>' then 'O:' and 'X:' lines")
        try:
            n = int(lines[0].split()[1])
            O = tuple(int(v) for v in lines[1].split(":", 1)[1].split())
            X = tuple(int(v) for v in lines[2].split(":", 1)[1].split())
        except (IndexError, ValueError) as e:
            raise GridError("malformed grid file: %s" % e) from None
        if not lines[1].startswith("O:") or not lines[2].startswith("X:"):
            raise GridError("expected 'O:' line then 'X:' line")
        if len(O) != n or len(X) != n:
            raise GridError("placement length does not match N")
        return GridDiagram(O, X)

    @staticmethod
    def from_file(path) -> "GridDiagram":
        with open(path) as fh:
            return GridDiagram.from_text(fh.read())


# -- gradings ----------------------------------------------------------------


def _I(P, Q):
    return sum(1 for p in P for q in Q if q[0] > p[0] and q[1] > p[1])


def _M_of(points, markings):
    # doubled coordinates: points at even, markings at odd
    x = [(2 * c, 2 * r) for c, r in points]
    m = [(2 * c + 1, 2 * r + 1) for c, r in markings]
    JxO = Fraction(_I(x, m) + _I(m, x), 2)
    return _I(x, x) - 2 * JxO + _I(m, m) + 1


def gradings(G: GridDiagram, perm) -> Bigrading:
    """Absolute (Maslov, Alexander) bigrading of a generator."""
    pts = [(i, perm[i]) for i in range(G.N)]
    Os = [(c, r) for r, c in enumerate(G.O)]
    Xs = [(c, r) for r, c in enumerate(G.X)]
    mo = _M_of(pts, Os)
    mx = _M_of(pts, Xs)
    a = Fraction(mo - mx, 2) - Fraction(G.N - G.n_components, 2)
    return Bigrading(mo, a)


# -- rectangles and the differential ----------------------------------------


def _cyclic_range(a, b, N):
    """Indices in the half-open cyclic interval [a, b)."""
    out = []
    i = a
    while i != b:
        out.append(i)
        i = (i + 1) % N
    return out


def _rect_counts(G: GridDiagram, perm, i, j, a, b):
    """For the rectangle with corner columns [i,j) and rows [a,b): number of
    interior generator points, X markings, O markings."""
    N = G.N
    cols = _cyclic_range(i, j, N)
    rows = _cyclic_range(a, b, N)
    colset = set(cols)
    rowset = set(rows)
    inner_cols = colset - {i}
    inner_rows = rowset - {a}
    pts = sum(1 for c in inner_cols if c != j and perm[c] in inner_rows
              and perm[c] != b)
    xs = sum(1 for r in rowset if G.X[r] in colset)
    os = sum(1 for r in rowset if G.O[r] in colset)
    return pts, xs, os


def empty_rectangles(G: GridDiagram, perm):
    """Yield (target_perm, u_power) for every empty X-avoiding rectangle
    leaving the given generator."""
    N = G.N
    for i in range(N):
        for j in range(i + 1, N):
            a, b = perm[i], perm[j]
            y = list(perm)
            y[i], y[j] = b, a
            y = tuple(y)
            for (ci, cj, ra, rb) in ((i, j, a, b), (j, i, b, a)):
                pts, xs, os = _rect_counts(G, perm, ci, cj, ra, rb)
                if pts == 0 and xs == 0:
                    yield y, os


def perm_id(perm) -> str:
    return "g" + "-".join(map(str, perm))


def grid_complex(G: GridDiagram, max_size: int = 50000) -> FreeBigradedComplex:
    """The collapsed grid complex as an explicit FreeBigradedComplex.

    Direct enumeration; meant for N <= 7.  Larger grids go through the
    stratified reduction in gridfast.
    """
    import math
    if math.factorial(G.N) > max_size:
        raise GridError("grid too large for the direct complex; "
                        "use gridfast.grid_homology")
    perms = list(itertools.permutations(range(G.N)))
    pos = {p: k for k, p in enumerate(perms)}
    gens = [GradedGenerator(perm_id(p), gradings(G, p)) for p in perms]
    diff: dict[tuple[int, int], UPoly] = {}
    for p in perms:
        s = pos[p]
        for y, os in empty_rectangles(G, p):
            t = pos[y]
            key = (t, s)
            acc = diff.get(key, UPoly.zero()) + UPoly.monomial(os)
            if acc.is_zero():
                diff.pop(key, None)
            else:
                diff[key] = acc
    return FreeBigradedComplex(gens, diff)


# -- the invariant generators -------------------------------------------------


def invariant_generator(G: GridDiagram, sign: str = "plus") -> tuple[int, ...]:
    """The generator at the chosen corners of all X cells.

    With corner 'NE' the point for the X in cell (c, r) is the lattice point
    (c+1, r+1) mod N; with 'SW' it is (c, r).
    """
    corner = CONVENTIONS["invariant_corner"][sign]
    N = G.N
    perm = [0] * N
    for r, c in enumerate(G.X):
        if corner == "NE":
            perm[(c + 1) % N] = (r + 1) % N
        else:
            perm[c] = r
    return tuple(perm)


# -- W-peeling ----------------------------------------------------------------


def divide_by_W(dec: ModuleDecomposition, times: int) -> ModuleDecomposition:
    """Divide off `times` factors of W = F(0,0) + F(-1,-1).

    The raw grid homology is (link invariant) tensor W^(N-n); division is by
    greedy peeling from the top of the (M, A) order, which is well defined
    because shifting by (-1,-1) strictly lowers the order."""
    for _ in range(times):
        items = Counter()
        for g in dec.free:
            items[("f", g.maslov, g.alexander, 0)] += 1
        for g, k in dec.torsion:
            items[("t", g.maslov, g.alexander, k)] += 1
        free, torsion = [], []
        for key in sorted(items, key=lambda k: (-k[1], -k[2])):
            while items[key] > 0:
                kind, m, a, k = key
                partner = (kind, m - 1, a - 1, k)
                if items.get(partner, 0) <= 0:
                    raise GridError("homology is not divisible by W; "
                                    "convention inconsistency")
                items[key] -= 1
                items[partner] -= 1
                if kind == "f":
                    free.append(Bigrading(m, a))
                else:
                    torsion.append((Bigrading(m, a), k))
        dec = ModuleDecomposition.make(free, torsion)
    return dec


# -- classical invariants -----------------------------------------------------


@dataclass(frozen=True)
class LegendrianGridData:
    """Classical invariants read from the front associated to the grid."""

    tb_per_component: tuple[int, ...]     # tb(L_i) of the bare components
    rot_per_component: tuple[int, ...]
    linking: tuple[tuple[Fraction, ...], ...]

    @property
    def n(self) -> int:
        return len(self.tb_per_component)

    def tb_i(self, i: int) -> int:
        """tb_i(L) = tb(L_i) + lk(L_i, L - L_i)."""
        val = self.tb_per_component[i] + sum(
            self.linking[i][j] for j in range(self.n) if j != i)
        assert val.denominator == 1 if isinstance(val, Fraction) else True
        return int(val)

    @property
    def tb(self) -> int:
        return sum(self.tb_i(i) for i in range(self.n))

    @property
    def rot(self) -> int:
        return sum(self.rot_per_component)

    @property
    def self_linking(self) -> int:
        return self.tb - self.rot


def _segments(G: GridDiagram):
    """Oriented segments of the planar grid diagram.

    Returns (horizontals, verticals): horizontals[r] = (x_from, x_to) column
    endpoints in traversal order; verticals[c] = (y_from, y_to) rows.
    """
    col_O = {c: r for r, c in enumerate(G.O)}
    col_X = {c: r for r, c in enumerate(G.X)}
    horiz = {}
    vert = {}
    for r in range(G.N):
        if CONVENTIONS["rows_oriented"] == "X_to_O":
            horiz[r] = (G.X[r], G.O[r])
        else:
            horiz[r] = (G.O[r], G.X[r])
    for c in range(G.N):
        if CONVENTIONS["cols_oriented"] == "O_to_X":
            vert[c] = (col_O[c], col_X[c])
        else:
            vert[c] = (col_X[c], col_O[c])
    return horiz, vert


def _crossings(G: GridDiagram):
    """Yield (row, col, sign) for each crossing; verticals cross over."""
    horiz, vert = _segments(G)
    flip = -1 if CONVENTIONS["crossing_sign_flip"] else 1
    for r, (x0, x1) in horiz.items():
        for c, (y0, y1) in vert.items():
            if min(x0, x1) < c < max(x0, x1) and min(y0, y1) < r < max(y0, y1):
                hdir = 1 if x1 > x0 else -1   # under strand, +x or -x
                vdir = 1 if y1 > y0 else -1   # over strand, +y or -y
                # det [over, under]: over=(0,vdir), under=(hdir,0)
                sign = -vdir * hdir * flip
                yield r, c, sign


def _corner_data(G: GridDiagram):
    """Per marking: (component, cusp?, cusp_updown) after the 45 deg turn."""
    comp_of_row = G.component_of_row()
    horiz, vert = _segments(G)
    col_of = {}
    out = []
    markings = [("X", G.X[r], r) for r in range(G.N)] + \
               [("O", G.O[r], r) for r in range(G.N)]
    cw = CONVENTIONS["front_rotation"] == "cw"
    for kind, c, r in markings:
        x0, x1 = horiz[r]
        y0, y1 = vert[c]
        # traversal directions at the corner: incoming and outgoing unit steps
        if x0 == c:   # horizontal segment starts here: outgoing horizontal
            h_io, hdir = "out", (1 if x1 > x0 else -1)
        else:
            h_io, hdir = "in", (1 if x1 > x0 else -1)
        if y0 == r:
            v_io, vdir = "out", (1 if y1 > y0 else -1)
        else:
            v_io, vdir = "in", (1 if y1 > y0 else -1)
        assert {h_io, v_io} == {"in", "out"}, "marking must be a corner"
        inc = (hdir, 0) if h_io == "in" else (0, vdir)
        outg = (0, vdir) if h_io == "in" else (hdir, 0)
        # rotate 45 deg: cw sends (x,y) -> (x+y, y-x); ccw -> (x-y, x+y)
        if cw:
            rot = lambda d: (d[0] + d[1], d[1] - d[0])
        else:
            rot = lambda d: (d[0] - d[1], d[0] + d[1])
        rin, rout = rot(inc), rot(outg)
        cusp = (rin[0] > 0) != (rout[0] > 0)
        updown = None
        if cusp:
            assert (rin[1] > 0) == (rout[1] > 0)
            updown = "up" if rin[1] > 0 else "down"
        out.append((comp_of_row[r], cusp, updown))
    return out


def classical_invariants(G: GridDiagram) -> LegendrianGridData:
    """tb and rot per component plus the linking matrix.

    tb(L_i) is the self-writhe minus half the cusps of component i; rot(L_i)
    is half of (down cusps - up cusps); lk is half the signed count of
    inter-component crossings.
    """
    comp_of_row = G.component_of_row()
    n = G.n_components
    self_writhe = [0] * n
    lk = [[Fraction(0)] * n for _ in range(n)]
    col_comp = {}
    col_X = {c: r for r, c in enumerate(G.X)}
    for c in range(G.N):
        col_comp[c] = comp_of_row[col_X[c]]
    for r, c, sign in _crossings(G):
        ch, cv = comp_of_row[r], col_comp[c]
        if ch == cv:
            self_writhe[ch] += sign
        else:
            lk[ch][cv] += Fraction(sign, 2)
            lk[cv][ch] += Fraction(sign, 2)
    cusps = [0] * n
    downs = [0] * n
    ups = [0] * n
    for comp, cusp, updown in _corner_data(G):
        if cusp:
            cusps[comp] += 1
            if updown == "down":
                downs[comp] += 1
            else:
                ups[comp] += 1
    rsign = -1 if CONVENTIONS["rot_sign_flip"] else 1
    tb = tuple(self_writhe[i] - cusps[i] // 2 for i in range(n))
    rot = tuple(rsign * (downs[i] - ups[i]) // 2 for i in range(n))
    return LegendrianGridData(tb, rot, tuple(tuple(row) for row in lk))


# -- homology frontend ---------------------------------------------------------


@dataclass
class GridHomologyResult:
    grid: GridDiagram
    raw: ModuleDecomposition
    link: ModuleDecomposition              # after dividing by W^(N-n)
    invariant_plus: ClassPosition
    invariant_minus: ClassPosition
    u1_class_nonzero: bool = False
    u1_class_grading: Fraction | None = None


def grid_homology(G: GridDiagram) -> GridHomologyResult:
    """Full homology of a small grid through the direct complex."""
    C = grid_complex(G)
    h = Homology(C)
    raw = h.decomposition()
    link = divide_by_W(raw, G.N - G.n_components)
    pos = {}
    for sign in ("plus", "minus"):
        x = invariant_generator(G, sign)
        pos[sign] = h.class_position({perm_id(x): UPoly.one()})
    u1 = C.specialize_u("one")
    xp = invariant_generator(G, "plus")
    nonzero = u1.class_is_nonzero({perm_id(xp): 1})
    g = pos["plus"].grading
    u1g = g.delta if g is not None else None
    return GridHomologyResult(G, raw, link, pos["plus"], pos["minus"],
                              nonzero, u1g)
