import random

from linkfloer.snf import smith_normal_form, mat_mul
from linkfloer.upoly import UPoly


def M(rows):
    """Build a matrix of UPolys from lists of exponent tuples (None = 0)."""
    return [[UPoly(e if e is not None else ()) for e in row] for row in rows]


def test_identity():
    mat = M([[(0,), ()], [(), (0,)]])
    res = smith_normal_form(mat)
    assert res.verify(mat)
    assert res.diagonal() == [UPoly.one(), UPoly.one()]


def test_divisibility_reordering():
    # diag(U^2, U) must come out as diag(U, U^2)
    mat = M([[(2,), ()], [(), (1,)]])
    res = smith_normal_form(mat)
    assert res.verify(mat)
    assert [sorted(p.exps) for p in res.diagonal()] == [[1], [2]]


def test_polynomial_entries():
    # entries that are genuine polynomials exercise the remainder loop
    mat = M([[(0, 1), (1,)], [(2,), (0,)]])
    res = smith_normal_form(mat)
    assert res.verify(mat)


def test_rectangular():
    mat = M([[(1,), (2,), ()], [(), (0, 1), (3,)]])
    res = smith_normal_form(mat)
    assert res.verify(mat)


def test_random_monomial_matrices_remultiply():
    rng = random.Random(20240811)
    for _ in range(60):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        mat = [[UPoly([rng.randint(0, 4)]) if rng.random() < 0.6 else UPoly.zero()
                for _ in range(m)] for _ in range(n)]
        res = smith_normal_form(mat)
        assert res.verify(mat)


def test_random_polynomial_matrices_remultiply():
    rng = random.Random(7)
    for _ in range(40):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        mat = [[UPoly([e for e in range(5) if rng.random() < 0.3])
                for _ in range(m)] for _ in range(n)]
        res = smith_normal_form(mat)
        assert res.verify(mat)
