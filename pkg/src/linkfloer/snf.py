"""Smith normal form over F2[U].

F2[U] is a Euclidean domain, so the classical algorithm applies: pick a
nonzero entry of minimal degree, clear its row and column by division with
remainder (a nonzero remainder has smaller degree and becomes the new pivot),
then enforce that the pivot divides the remaining submatrix.  Row and column
operations are accumulated in P and Q together with their inverses, so the
result carries an exactly checkable certificate P*mat*Q = D.

When the matrix comes from a homogeneous complex all entries are monomials;
minimal-degree pivoting then never needs the remainder loop and the chain
condition holds automatically, but nothing here assumes that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .upoly import UPoly

Matrix = list[list[UPoly]]


def _identity(n: int) -> Matrix:
    return [[UPoly.one() if i == j else UPoly.zero() for j in range(n)] for i in range(n)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    out = [[UPoly.zero() for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for t in range(k):
            a = A[i][t]
            if a.is_zero():
                continue
            for j in range(m):
                b = B[t][j]
                if not b.is_zero():
                    out[i][j] = out[i][j] + a * b
    return out


@dataclass
class SNFResult:
    D: Matrix
    P: Matrix
    Q: Matrix
    Pinv: Matrix
    Qinv: Matrix

    def diagonal(self) -> list[UPoly]:
        r = min(len(self.D), len(self.D[0]) if self.D else 0)
        return [self.D[i][i] for i in range(r)]

    def verify(self, mat: Matrix) -> bool:
        """Exact certificate: P*mat*Q == D, P,Q invertible, divisibility chain."""
        if mat_mul(mat_mul(self.P, mat), self.Q) != self.D:
            return False
        n, m = len(self.P), len(self.Q)
        if mat_mul(self.P, self.Pinv) != _identity(n):
            return False
        if mat_mul(self.Q, self.Qinv) != _identity(m):
            return False
        for i, row in enumerate(self.D):
            for j, v in enumerate(row):
                if i != j and not v.is_zero():
                    return False
        diag = self.diagonal()
        for a, b in zip(diag, diag[1:]):
            if a.is_zero() and not b.is_zero():
                return False
            if not a.is_zero() and not b.is_zero() and not a.divides(b):
                return False
        return True


def smith_normal_form(mat: Matrix) -> SNFResult:
    n = len(mat)
    m = len(mat[0]) if n else 0
    D = [[v for v in row] for row in mat]
    P, Pinv = _identity(n), _identity(n)
    Q, Qinv = _identity(m), _identity(m)

    def swap_rows(i, j):
        if i == j:
            return
        D[i], D[j] = D[j], D[i]
        P[i], P[j] = P[j], P[i]
        for r in Pinv:
            r[i], r[j] = r[j], r[i]

    def swap_cols(i, j):
        if i == j:
            return
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in Q:
            r[i], r[j] = r[j], r[i]
        Qinv[i], Qinv[j] = Qinv[j], Qinv[i]

    def add_row(dst, src, c: UPoly):
        # row_dst += c * row_src
        if c.is_zero():
            return
        D[dst] = [a + c * b for a, b in zip(D[dst], D[src])]
        P[dst] = [a + c * b for a, b in zip(P[dst], P[src])]
        # inverse op on Pinv: col_src += c * col_dst
        for r in Pinv:
            r[src] = r[src] + c * r[dst]

    def add_col(dst, src, c: UPoly):
        if c.is_zero():
            return
        for r in D:
            r[dst] = r[dst] + c * r[src]
        for r in Q:
            r[dst] = r[dst] + c * r[src]
        Qinv[src] = [a + c * b for a, b in zip(Qinv[src], Qinv[dst])]

    def min_entry(t):
        best = None
        for i in range(t, n):
            for j in range(t, m):
                v = D[i][j]
                if not v.is_zero() and (best is None or v.degree() < best[0]):
                    best = (v.degree(), i, j)
        return best

    t = 0
    while t < min(n, m):
        found = min_entry(t)
        if found is None:
            break
        _, pi, pj = found
        swap_rows(t, pi)
        swap_cols(t, pj)
        # clear row and column t; remainders restart the loop with a smaller pivot
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, n):
                if D[i][t].is_zero():
                    continue
                q, r = D[i][t].divmod(D[t][t])
                add_row(i, t, q)
                if not r.is_zero():
                    swap_rows(t, i)
                    dirty = True
            for j in range(t + 1, m):
                if D[t][j].is_zero():
                    continue
                q, r = D[t][j].divmod(D[t][t])
                add_col(j, t, q)
                if not r.is_zero():
                    swap_cols(t, j)
                    dirty = True
        # pivot must divide the rest of the submatrix
        offender = None
        for i in range(t + 1, n):
            for j in range(t + 1, m):
                if not D[t][t].divides(D[i][j]):
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, UPoly.one())
            continue  # redo this pivot
        t += 1
    return SNFResult(D, P, Q, Pinv, Qinv)
