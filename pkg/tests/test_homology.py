import math
import random
from fractions import Fraction

import pytest

from linkfloer.bigraded import (Bigrading, ComplexError, FreeBigradedComplex,
                                GradedGenerator, single_generator_complex)
from linkfloer.homology import Homology, ModuleDecomposition, homology
from linkfloer.upoly import UPoly


def gen(gid, m, a, tag="s0"):
    return GradedGenerator(gid, Bigrading(m, a), tag)


def free_summand(m, a):
    return Bigrading(m, a)


def pair_complex(k, m=0, a=0, tag="s0", suffix=""):
    """Two generators with d(y) = U^k x; homology F[U]/U^k at (m, a)."""
    x = gen("x" + suffix, m, a, tag)
    y = gen("y" + suffix, m - 2 * k + 1, a - k, tag)
    return FreeBigradedComplex([x, y], {(0, 1): UPoly.monomial(k)})


def direct_sum(*cs):
    gens = []
    diff = {}
    off = 0
    for idx, c in enumerate(cs):
        for g in c.generators:
            gens.append(GradedGenerator("c%d.%s" % (idx, g.id), g.grading, g.spinc))
        for (t, s), p in c.differential.items():
            diff[(t + off, s + off)] = p
        off += len(c.generators)
    return FreeBigradedComplex(gens, diff)


def test_validate_zero_differential():
    C = FreeBigradedComplex([gen("a", 0, 0), gen("b", 3, 1)], {})
    assert C.validate() == []


def test_validate_simple_entry():
    # x -> y with coefficient 1 needs M(x) = M(y) + 1 and equal A
    C = FreeBigradedComplex([gen("y", 0, 0), gen("x", 1, 0)], {(0, 1): UPoly.one()})
    assert C.validate() == []


def test_validate_flags_alexander_mismatch():
    C = FreeBigradedComplex([gen("y", 0, 0), gen("x", 1, 1)], {(0, 1): UPoly.one()})
    kinds = {v.kind for v in C.validate()}
    assert "homogeneity" in kinds


def test_validate_flags_square():
    gens = [gen("z", -1, 0), gen("y", 0, 0), gen("x", 1, 0)]
    C = FreeBigradedComplex(gens, {(1, 2): UPoly.one(), (0, 1): UPoly.one()})
    kinds = {v.kind for v in C.validate()}
    assert "square" in kinds


def test_homology_single_free_generator():
    C = single_generator_complex("e", 0, 0)
    assert homology(C) == ModuleDecomposition.make([free_summand(0, 0)], [])


def test_homology_torsion_pair():
    assert homology(pair_complex(3)) == ModuleDecomposition.make(
        [], [(Bigrading(0, 0), 3)])


def test_homology_unit_pair_is_acyclic():
    assert homology(pair_complex(0)) == ModuleDecomposition.make([], [])


def test_homology_mixed_sum():
    C = direct_sum(single_generator_complex("e", -1, 0), pair_complex(1),
                   pair_complex(0))
    assert homology(C) == ModuleDecomposition.make(
        [free_summand(-1, 0)], [(Bigrading(0, 0), 1)])


def test_spinc_blocks_are_independent():
    C = direct_sum(single_generator_complex("e", 0, 0, "t1"),
                   single_generator_complex("f", 2, 1, "t2"))
    h = Homology(C)
    assert h.decomposition("t1") == ModuleDecomposition.make([free_summand(0, 0)], [])
    assert h.decomposition("t2") == ModuleDecomposition.make([free_summand(2, 1)], [])


def test_tensor_unit():
    C = pair_complex(2)
    unit = single_generator_complex("e", 0, 0)
    assert homology(C.tensor(unit)) == homology(C)


def test_class_position_boundary_is_zero():
    C = pair_complex(1)
    h = Homology(C)
    pos = h.class_position({"x": UPoly.monomial(1)})  # U x = d(y)
    assert pos.is_zero


def test_class_position_torsion_generator():
    C = pair_complex(1)
    h = Homology(C)
    pos = h.class_position({"x": UPoly.one()})
    assert not pos.is_zero
    assert pos.tower_height == 1 and pos.depth == 0
    assert pos.annihilator_power == 1


def test_class_position_free_tower_depth():
    C = single_generator_complex("e", 0, 0)
    h = Homology(C)
    pos = h.class_position({"e": UPoly.monomial(2)})
    assert pos.tower_height is math.inf and pos.depth == 2
    assert pos.grading == Bigrading(-4, -2)


def test_class_position_depth_height_laws():
    # U^j * (torsion generator of order 3): depth j, annihilator 3 - j
    C = pair_complex(3)
    h = Homology(C)
    for j in range(3):
        pos = h.class_position({"x": UPoly.monomial(j)})
        assert (pos.tower_height, pos.depth) == (3, j)
    assert h.class_position({"x": UPoly.monomial(3)}).is_zero


def test_class_position_rejects_non_cycles():
    C = pair_complex(1)
    h = Homology(C)
    with pytest.raises(ComplexError):
        h.class_position({"y": UPoly.one()})


def _random_elementary_sum(rng, tag="s0"):
    pieces = []
    for i in range(rng.randint(1, 3)):
        kind = rng.random()
        m, a = rng.randint(-3, 3), rng.randint(-2, 2)
        if kind < 0.4:
            pieces.append(single_generator_complex("e%d" % i, m, a, tag))
        else:
            k = rng.randint(0, 2)
            c = pair_complex(k, m, a, tag, suffix=str(i))
            pieces.append(c)
    return direct_sum(*pieces)


def test_kunneth_against_direct_tensor():
    rng = random.Random(99)
    for _ in range(25):
        C1 = _random_elementary_sum(rng)
        C2 = _random_elementary_sum(rng)
        direct = homology(C1.tensor(C2))
        predicted = homology(C1).tensor(homology(C2))
        assert direct == predicted


def test_unlink_square_kunneth_by_hand():
    # two free towers at (-1,0) and (0,0), tensored with itself:
    # F(-2,0) + 2 F(-1,0) + F(0,0), hand-checkable over a PID
    unlink = direct_sum(single_generator_complex("a", -1, 0),
                        single_generator_complex("b", 0, 0))
    got = homology(unlink.tensor(unlink))
    assert got == ModuleDecomposition.make(
        [free_summand(-2, 0), free_summand(-1, 0), free_summand(-1, 0),
         free_summand(0, 0)], [])


def test_hat_dimension_count():
    # r + 2 * (#torsion) after U = 0
    C = direct_sum(single_generator_complex("e", 0, 0), pair_complex(2))
    dec = homology(C)
    assert sum(dec.hat_dimensions().values()) == 1 + 2 * 1
    hat = C.specialize_u("zero")
    assert hat.total_dimension() == 3


def test_hat_dimensions_match_direct_u0_homology():
    rng = random.Random(4)
    for _ in range(20):
        C = _random_elementary_sum(rng).tensor(_random_elementary_sum(rng))
        dec = homology(C)
        direct = C.specialize_u("zero").homology_dimensions()
        expected = {(g.maslov, g.alexander): d
                    for g, d in dec.hat_dimensions().items()}
        assert expected == direct


def test_u1_dimension_counts_towers():
    C = direct_sum(single_generator_complex("e", 0, 0), pair_complex(2))
    assert homology(C).u1_dimension() == 1
    u1 = C.specialize_u("one")
    assert u1.total_dimension() == 1


def test_u1_grading_collapse():
    # a class at (d, s) = (1, 1) has U=1 grading d - 2s = -1
    C = single_generator_complex("e", 1, 1)
    u1 = C.specialize_u("one")
    assert list(u1.homology_dimensions().keys()) == [(Fraction(-1), None)]


def test_serialization_round_trip():
    C = direct_sum(pair_complex(2), single_generator_complex("e", 1, Fraction(1, 2), "t"))
    text = C.to_text()
    D = FreeBigradedComplex.from_text(text)
    assert D.to_text() == text
    assert homology(D) == homology(C)
