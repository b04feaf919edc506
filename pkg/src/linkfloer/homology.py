"""Invariant-factor homology of free bigraded complexes over F2[U].

The grading delta = M - 2A is preserved by U and dropped by one by the
differential, so each Spin-c block of a complex is a chain complex of free
graded F2[U]-modules indexed by delta.  Homogeneity pins every matrix entry
to the monomial U^(A(row) - A(col)); a homogeneous matrix is therefore an F2
incidence matrix together with grading labels for its rows and columns, and
row/column operations are bitmask xors.  Minimal-exponent pivoting keeps all
multipliers inside F2[U] (no negative powers), so the echelon and Smith steps
below are exact over the ring.

Output: the canonical invariant-factor decomposition

    H  =  (+) F2[U]   (towers)   (+)  F2[U]/U^k   (torsion)

with the bigrading of each summand generator, plus basis data that locates
the class of any homogeneous cycle inside the decomposition.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from .bigraded import Bigrading, ComplexError, FreeBigradedComplex
from .gf2 import bits
from .upoly import UPoly

INFINITE = math.inf


@dataclass(frozen=True)
class ClassPosition:
    """Position of a cycle's class: U^depth times a generator of a summand of
    the given tower height (math.inf for a free tower).  Nonzero iff
    depth < tower_height; U^k kills the class exactly for
    k >= tower_height - depth.  The zero class is reported as (0, 0)."""

    tower_height: object  # int or math.inf
    depth: int
    grading: Optional[Bigrading]
    is_zero: bool

    @property
    def annihilator_power(self):
        """Minimal k with U^k * [cycle] = 0."""
        if self.is_zero:
            return 0
        if self.tower_height is INFINITE:
            return INFINITE
        return self.tower_height - self.depth


@dataclass(frozen=True)
class ModuleDecomposition:
    """Invariant-factor form, canonically sorted by (alexander, maslov[, k])."""

    free: tuple[Bigrading, ...]
    torsion: tuple[tuple[Bigrading, int], ...]

    @staticmethod
    def make(free, torsion) -> "ModuleDecomposition":
        return ModuleDecomposition(
            tuple(sorted(free, key=lambda g: (g.alexander, g.maslov))),
            tuple(sorted(torsion, key=lambda gk: (gk[0].alexander, gk[0].maslov, gk[1]))))

    def __str__(self) -> str:
        parts = ["F[U]%s" % (g,) for g in self.free]
        parts += ["(F[U]/U^%d)%s" % (k, g) for g, k in self.torsion]
        return " + ".join(parts) if parts else "0"

    def tensor(self, other: "ModuleDecomposition") -> "ModuleDecomposition":
        """Kunneth decomposition of H(C1 (x) C2) from the two factors.

        F[U]g (x) F[U]h = F[U](g+h); free (x) torsion keeps the torsion order;
        torsion orders a and b contribute F/U^min at g+h together with a Tor
        summand F/U^min whose generator sits at (g+h).u_shift(max) + (1, 0).
        """
        free = [g + h for g in self.free for h in other.free]
        torsion = []
        for g in self.free:
            torsion += [(g + h, k) for h, k in other.torsion]
        for h in other.free:
            torsion += [(g + h, k) for g, k in self.torsion]
        for g, a in self.torsion:
            for h, b in other.torsion:
                lo, hi = min(a, b), max(a, b)
                torsion.append((g + h, lo))
                t = (g + h).u_shift(hi)
                torsion.append((Bigrading(t.maslov + 1, t.alexander), lo))
        return ModuleDecomposition.make(free, torsion)

    def shift(self, dm, da) -> "ModuleDecomposition":
        s = Bigrading(dm, da)
        return ModuleDecomposition.make([g + s for g in self.free],
                                        [(g + s, k) for g, k in self.torsion])

    def hat_dimensions(self) -> dict[Bigrading, int]:
        """Bigraded dimensions after setting U = 0 (universal coefficients)."""
        out: dict[Bigrading, int] = defaultdict(int)
        for g in self.free:
            out[g] += 1
        for g, k in self.torsion:
            out[g] += 1
            out[Bigrading(g.maslov - 2 * k + 1, g.alexander - k)] += 1
        return dict(out)

    def u1_dimension(self) -> int:
        """Total dimension after setting U = 1: torsion dies, towers survive."""
        return len(self.free)


# ---------------------------------------------------------------------------


def _graded_column_echelon(cols: list[int], colA: list[Fraction],
                           rowA: list[Fraction]):
    """Column echelon over F2[U] with minimal-exponent pivoting.

    Returns (reduced, Q, pivot_row): Q[j] expresses reduced column j over the
    original columns.  Zero reduced columns are a free basis of the kernel;
    the nonzero ones freely span the image, and each pivot row ends up in
    exactly one column (reduced form).
    """
    n = len(cols)
    work = list(cols)
    Q = [1 << j for j in range(n)]
    pivot_row: list[Optional[int]] = [None] * n
    remaining = {j for j in range(n) if work[j]}
    while remaining:
        best = None
        for j in remaining:
            aj = colA[j]
            for r in bits(work[j]):
                e = rowA[r] - aj
                if best is None or e < best[0]:
                    best = (e, r, j)
        _, pr, pj = best
        bit = 1 << pr
        for j in range(n):
            if j != pj and work[j] & bit:
                work[j] ^= work[pj]
                Q[j] ^= Q[pj]
        pivot_row[pj] = pr
        remaining.discard(pj)
        remaining = {j for j in remaining if work[j]}
    return work, Q, pivot_row


class _KernelSolver:
    """Reduced echelon copy of a kernel basis, for coordinate extraction."""

    def __init__(self, masks: list[int], A: list[Fraction], rowA: list[Fraction]):
        work, Q, pivot_row = _graded_column_echelon(masks, A, rowA)
        self.ech = [(pivot_row[j], work[j], Q[j])
                    for j in range(len(masks)) if work[j]]

    def coordinates(self, v: int) -> Optional[int]:
        """Bitmask of basis elements with nonzero coordinate on v, or None."""
        out = 0
        for pr, col, expr in self.ech:
            if v >> pr & 1:
                v ^= col
                out ^= expr
        return None if v else out


@dataclass
class _Summand:
    spinc: str
    grading: Bigrading
    order: Optional[int]  # None = free tower, k >= 1 = F[U]/U^k


class _Level:
    """Per (spin-c, delta) basis data needed to locate classes."""

    def __init__(self, gens, pos):
        self.gens = gens
        self.pos = pos
        self.kmasks: list[int] = []
        self.kA: list[Fraction] = []
        self.kM: list[Fraction] = []
        self.orders: list[Optional[int]] = []
        self.solver: Optional[_KernelSolver] = None


class Homology:
    """Homology of a validated FreeBigradedComplex, with class location."""

    def __init__(self, complex_: FreeBigradedComplex):
        complex_.assert_valid()
        self.complex = complex_
        self.summands: list[_Summand] = []
        self._levels: dict[tuple[str, Fraction], _Level] = {}
        for tag in complex_.spinc_tags():
            self._run_block(tag)

    def decomposition(self, spinc: Optional[str] = None) -> ModuleDecomposition:
        free, torsion = [], []
        for s in self.summands:
            if spinc is not None and s.spinc != spinc:
                continue
            if s.order is None:
                free.append(s.grading)
            elif s.order >= 1:
                torsion.append((s.grading, s.order))
        return ModuleDecomposition.make(free, torsion)

    # -- block computation ---------------------------------------------------

    def _run_block(self, tag: str) -> None:
        C = self.complex
        by_delta: dict[Fraction, list[int]] = defaultdict(list)
        for i, g in enumerate(C.generators):
            if g.spinc == tag:
                by_delta[g.grading.delta].append(i)
        levels: dict[Fraction, _Level] = {}
        for d, gens in by_delta.items():
            levels[d] = _Level(gens, {g: i for i, g in enumerate(gens)})

        kernels: dict[Fraction, tuple[list[int], list[Fraction], list[Fraction]]] = {}
        images: dict[Fraction, list[tuple[int, Fraction]]] = defaultdict(list)
        for d, lv in levels.items():
            below = levels.get(d - 1)
            rowA = ([C.generators[g].grading.alexander for g in below.gens]
                    if below else [])
            colA = [C.generators[g].grading.alexander for g in lv.gens]
            colM = [C.generators[g].grading.maslov for g in lv.gens]
            cols = []
            for g in lv.gens:
                m = 0
                for t in C._cols.get(g, {}):
                    if below is not None and t in below.pos:
                        m |= 1 << below.pos[t]
                cols.append(m)
            work, Q, _ = _graded_column_echelon(cols, colA, rowA)
            kmasks, kA, kM = [], [], []
            for j in range(len(cols)):
                if work[j] == 0:
                    kmasks.append(Q[j])
                    kA.append(colA[j])
                    kM.append(colM[j])
                else:
                    images[d - 1].append((work[j], colA[j]))
            kernels[d] = (kmasks, kA, kM)

        for d, lv in levels.items():
            kmasks, kA, kM = kernels[d]
            rowA = [C.generators[g].grading.alexander for g in lv.gens]
            img = images.get(d, [])
            orders: list[Optional[int]] = [None] * len(kmasks)
            if img:
                solver = _KernelSolver(kmasks, kA, rowA)
                X = []
                colA_X = []
                for bmask, bA in img:
                    coords = solver.coordinates(bmask)
                    if coords is None:
                        raise AssertionError("image not inside kernel span")
                    X.append(coords)
                    colA_X.append(bA)
                self._graded_smith_with_row_tracking(X, colA_X, kmasks, kA, orders)
            lv.kmasks, lv.kA, lv.kM, lv.orders = kmasks, kA, kM, orders
            lv.solver = _KernelSolver(kmasks, kA, rowA) if kmasks else None
            self._levels[(tag, d)] = lv
            for i in range(len(kmasks)):
                o = orders[i]
                if o == 0:
                    continue  # unit invariant factor: no summand
                self.summands.append(_Summand(tag, Bigrading(kM[i], kA[i]), o))

    @staticmethod
    def _graded_smith_with_row_tracking(X: list[int], colA_X: list[Fraction],
                                        kmasks: list[int], kA: list[Fraction],
                                        orders: list[Optional[int]]) -> None:
        """Smith form of X (columns over kernel rows); row operations are
        mirrored onto the kernel basis so that span(kernel) is presented in
        summand-adapted coordinates.  orders[r] is set to the diagonal
        exponent for every pivot row r."""
        remaining = {j for j in range(len(X)) if X[j]}
        while remaining:
            best = None
            for j in remaining:
                aj = colA_X[j]
                for r in bits(X[j]):
                    e = kA[r] - aj
                    if best is None or e < best[0]:
                        best = (e, r, j)
            e, pr, pj = best
            bit = 1 << pr
            # clear the pivot row from the other columns (column ops, untracked)
            for j in remaining:
                if j != pj and X[j] & bit:
                    X[j] ^= X[pj]
            # clear the pivot column: row_i += U^(kA[i]-kA[pr]) * row_pr, which
            # on the kernel basis is k_pr += U^(same) * k_i
            for i in list(bits(X[pj] ^ bit)):
                X[pj] ^= 1 << i
                kmasks[pr] ^= kmasks[i]
            assert e == int(e) and e >= 0
            orders[pr] = int(e)
            remaining.discard(pj)
            remaining = {j for j in remaining if X[j]}

    # -- class location -----------------------------------------------------

    def class_grading(self, chain: Mapping[str, UPoly]) -> Optional[Bigrading]:
        """Common bigrading of a homogeneous chain (None for the zero chain)."""
        grading = None
        for gid, p in chain.items():
            if p.is_zero():
                continue
            g = self.complex.generators[self.complex.index[gid]]
            for exp in p.exps:
                h = g.grading.u_shift(exp)
                if grading is None:
                    grading = h
                elif grading != h:
                    raise ComplexError("chain is not homogeneous")
        return grading

    def class_position(self, chain: Mapping[str, UPoly]) -> ClassPosition:
        """Locate the homology class of a homogeneous cycle."""
        C = self.complex
        bdry = C.boundary_of(chain)
        if any(not p.is_zero() for p in bdry.values()):
            raise ComplexError("chain is not a cycle")
        grading = self.class_grading(chain)
        if grading is None:
            return ClassPosition(0, 0, None, True)
        tags = {C.generators[C.index[gid]].spinc
                for gid, p in chain.items() if not p.is_zero()}
        assert len(tags) == 1
        lv = self._levels[(tags.pop(), grading.delta)]
        mask = 0
        for gid, p in chain.items():
            if p.is_zero():
                continue
            i = C.index[gid]
            expected = C.generators[i].grading.alexander - grading.alexander
            if p != UPoly.monomial(int(expected)):
                raise ComplexError("chain is not homogeneous")
            mask |= 1 << lv.pos[i]
        coords = lv.solver.coordinates(mask) if lv.solver else None
        if coords is None:
            raise AssertionError("cycle not in kernel span")
        depth = None
        ann = 0
        for i in bits(coords):
            v = int(lv.kA[i] - grading.alexander)
            o = lv.orders[i]
            if o is not None and v >= o:
                continue  # coordinate vanishes in this summand
            depth = v if depth is None else min(depth, v)
            ann = INFINITE if o is None else max(ann, o - v)
        if depth is None:
            return ClassPosition(0, 0, grading, True)
        height = INFINITE if ann is INFINITE else depth + ann
        return ClassPosition(height, depth, grading, False)


def homology(C: FreeBigradedComplex) -> ModuleDecomposition:
    """Invariant-factor decomposition of H(C), all Spin-c blocks combined."""
    return Homology(C).decomposition()
