"""Finitely generated free bigraded chain complexes over F2[U].

Conventions.  A generator carries a bigrading (maslov, alexander); the formal
variable U has bidegree (-2, -1), i.e. M(Ux) = M(x) - 2 and A(Ux) = A(x) - 1.
The differential preserves the Alexander grading of elements and drops the
Maslov grading by one, which forces every matrix entry from a source x to a
target y to be a monomial U^k with

    k = A(y) - A(x)   and   M(y) - 2k = M(x) - 1.

Entries are stored sparsely, indexed (target, source).  Gradings are
Fractions with denominator dividing 2; complexes coming from links in S^3 are
integrally graded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .upoly import UPoly

Rat = Union[int, Fraction]


def _as_halfint(x: Rat, what: str) -> Fraction:
    f = Fraction(x)
    if f.denominator not in (1, 2):
        raise ValueError("%s must have denominator 1 or 2, got %s" % (what, f))
    return f


@dataclass(frozen=True, order=True)
class Bigrading:
    """(Maslov, Alexander) bigrading; both rational with denominator <= 2."""

    maslov: Fraction
    alexander: Fraction

    def __init__(self, maslov: Rat, alexander: Rat):
        object.__setattr__(self, "maslov", _as_halfint(maslov, "maslov"))
        object.__setattr__(self, "alexander", _as_halfint(alexander, "alexander"))

    def u_shift(self, k: int) -> "Bigrading":
        """Grading of U^k times an element with this grading."""
        return Bigrading(self.maslov - 2 * k, self.alexander - k)

    def __add__(self, other: "Bigrading") -> "Bigrading":
        return Bigrading(self.maslov + other.maslov, self.alexander + other.alexander)

    @property
    def delta(self) -> Fraction:
        """M - 2A; constant on U-orbits, so it grades the F[U]-module structure."""
        return self.maslov - 2 * self.alexander

    def __str__(self) -> str:
        return "(%s,%s)" % (self.maslov, self.alexander)


@dataclass(frozen=True)
class GradedGenerator:
    id: str
    grading: Bigrading
    spinc: str = "s0"


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str  # 'square' | 'homogeneity' | 'exponent'
    detail: str


class FreeBigradedComplex:
    """A free F2[U]-complex with homogeneous differential.

    The differential is a dict mapping (target_index, source_index) to a
    nonzero UPoly.  Values are immutable after construction.
    """

    def __init__(self, generators: Iterable[GradedGenerator],
                 differential: Mapping[tuple[int, int], UPoly]):
        self.generators: tuple[GradedGenerator, ...] = tuple(generators)
        ids = [g.id for g in self.generators]
        if len(set(ids)) != len(ids):
            raise ComplexError("generator ids must be unique")
        self.index: dict[str, int] = {g.id: i for i, g in enumerate(self.generators)}
        diff = {}
        n = len(self.generators)
        for (t, s), p in differential.items():
            if not (0 <= t < n and 0 <= s < n):
                raise ComplexError("entry (%d,%d) out of range" % (t, s))
            if not p.is_zero():
                diff[(t, s)] = p
        self.differential: dict[tuple[int, int], UPoly] = diff
        # columns of the differential, source -> {target: poly}
        self._cols: dict[int, dict[int, UPoly]] = {}
        for (t, s), p in diff.items():
            self._cols.setdefault(s, {})[t] = p

    # -- basic access ----------------------------------------------------

    def __len__(self) -> int:
        return len(self.generators)

    def entry(self, target: int, source: int) -> UPoly:
        return self.differential.get((target, source), UPoly.zero())

    def boundary_of(self, chain: Mapping[str, UPoly]) -> dict[str, UPoly]:
        """Apply the differential to a formal F2[U]-combination of generators."""
        out: dict[int, UPoly] = {}
        for gid, coeff in chain.items():
            s = self.index[gid]
            for t, p in self._cols.get(s, {}).items():
                acc = out.get(t, UPoly.zero()) + coeff * p
                if acc.is_zero():
                    out.pop(t, None)
                else:
                    out[t] = acc
        return {self.generators[t].id: p for t, p in out.items()}

    def spinc_tags(self) -> tuple[str, ...]:
        return tuple(sorted({g.spinc for g in self.generators}))

    def restrict_spinc(self, tag: str) -> "FreeBigradedComplex":
        keep = [i for i, g in enumerate(self.generators) if g.spinc == tag]
        remap = {old: new for new, old in enumerate(keep)}
        gens = [self.generators[i] for i in keep]
        diff = {(remap[t], remap[s]): p for (t, s), p in self.differential.items()
                if t in remap and s in remap}
        return FreeBigradedComplex(gens, diff)

    # -- validation --------------------------------------------------------

    def validate(self) -> list[Violation]:
        """Check homogeneity and d^2 = 0; returns all violations found."""
        out: list[Violation] = []
        for (t, s), p in sorted(self.differential.items()):
            gt, gs = self.generators[t], self.generators[s]
            if gt.spinc != gs.spinc:
                out.append(Violation("homogeneity",
                                     "entry %s<-%s crosses spin-c tags" % (gt.id, gs.id)))
                continue
            k = gt.grading.alexander - gs.grading.alexander
            if k.denominator != 1 or k < 0:
                out.append(Violation("homogeneity",
                                     "entry %s<-%s needs exponent %s" % (gt.id, gs.id, k)))
                continue
            if p != UPoly.monomial(int(k)):
                out.append(Violation("homogeneity",
                                     "entry %s<-%s is %s, expected U^%s" % (gt.id, gs.id, p, k)))
                continue
            if gt.grading.maslov - 2 * k != gs.grading.maslov - 1:
                out.append(Violation("homogeneity",
                                     "entry %s<-%s breaks the Maslov convention" % (gt.id, gs.id)))
        # d^2 = 0 over F2[U], column by column
        for s, col in self._cols.items():
            acc: dict[int, UPoly] = {}
            for mid, p in col.items():
                for t, q in self._cols.get(mid, {}).items():
                    r = acc.get(t, UPoly.zero()) + p * q
                    if r.is_zero():
                        acc.pop(t, None)
                    else:
                        acc[t] = r
            for t, r in sorted(acc.items()):
                out.append(Violation("square", "d^2(%s) has %s on %s" %
                                     (self.generators[s].id, r, self.generators[t].id)))
        return out

    def assert_valid(self) -> None:
        bad = self.validate()
        if bad:
            raise ComplexError("; ".join(v.detail for v in bad[:5]) +
                               (" (+%d more)" % (len(bad) - 5) if len(bad) > 5 else ""))

    # -- constructions -------------------------------------------------------

    def tensor(self, other: "FreeBigradedComplex") -> "FreeBigradedComplex":
        """Tensor product over F2[U]; gradings add, Leibniz differential."""
        gens = []
        pos = {}
        for i, g in enumerate(self.generators):
            for j, h in enumerate(other.generators):
                pos[(i, j)] = len(gens)
                gens.append(GradedGenerator("%s|%s" % (g.id, h.id),
                                            g.grading + h.grading,
                                            "%s|%s" % (g.spinc, h.spinc)))
        diff: dict[tuple[int, int], UPoly] = {}
        for (t, s), p in self.differential.items():
            for j in range(len(other.generators)):
                diff[(pos[(t, j)], pos[(s, j)])] = p
        for (t, s), p in other.differential.items():
            for i in range(len(self.generators)):
                key = (pos[(i, t)], pos[(i, s)])
                acc = diff.get(key, UPoly.zero()) + p
                if acc.is_zero():
                    diff.pop(key, None)
                else:
                    diff[key] = acc
        return FreeBigradedComplex(gens, diff)

    def specialize_u(self, mode: str):
        """Set U = 0 (hat flavor, bigrading kept) or U = 1 (single grading M - 2A).

        Returns a GradedF2Complex.
        """
        from .gf2complex import GradedF2Complex
        if mode == "zero":
            gradings = [(g.grading.maslov, g.grading.alexander) for g in self.generators]
            entries = {(t, s) for (t, s), p in self.differential.items() if 0 in p.exps}
        elif mode == "one":
            gradings = [(g.grading.delta, None) for g in self.generators]
            entries = {(t, s) for (t, s), p in self.differential.items()
                       if len(p.exps) % 2 == 1}
        else:
            raise ValueError("mode must be 'zero' or 'one'")
        ids = [g.id for g in self.generators]
        return GradedF2Complex(ids, gradings, entries)

    # -- serialization ---------------------------------------------------------

    def to_text(self) -> str:
        """Line-oriented exact format; see docs/formats.md for the grammar."""
        lines = ["generators %d" % len(self.generators)]
        for g in self.generators:
            lines.append("%s %s %s %s" % (g.id, g.grading.maslov, g.grading.alexander, g.spinc))
        for (t, s) in sorted(self.differential):
            p = self.differential[(t, s)]
            for e in sorted(p.exps):
                lines.append("entry %s %s %d" % (self.generators[t].id,
                                                 self.generators[s].id, e))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "FreeBigradedComplex":
        lines = [ln for ln in (raw.strip() for raw in text.splitlines())
                 if ln and not ln.startswith("#")]
        if not lines or not lines[0].startswith("generators "):
            raise ComplexError("expected 'generators N' header")
        n = int(lines[0].split()[1])
        gens = []
        for ln in lines[1:1 + n]:
            parts = ln.split()
            if len(parts) != 4:
                raise ComplexError("bad generator line: %r" % ln)
            gid, m, a, tag = parts
            gens.append(GradedGenerator(gid, Bigrading(Fraction(m), Fraction(a)), tag))
        index = {g.id: i for i, g in enumerate(gens)}
        diff: dict[tuple[int, int], UPoly] = {}
        for ln in lines[1 + n:]:
            parts = ln.split()
            if parts[0] != "entry" or len(parts) != 4:
                raise ComplexError("bad entry line: %r" % ln)
            t, s, e = index[parts[1]], index[parts[2]], int(parts[3])
            key = (t, s)
            acc = diff.get(key, UPoly.zero()) + UPoly.monomial(e)
            if acc.is_zero():
                diff.pop(key, None)
            else:
                diff[key] = acc
        return FreeBigradedComplex(gens, diff)


def single_generator_complex(gid: str = "e", maslov: Rat = 0, alexander: Rat = 0,
                             spinc: str = "s0") -> FreeBigradedComplex:
    """The unit for the tensor product: one free generator, zero differential."""
    return FreeBigradedComplex([GradedGenerator(gid, Bigrading(maslov, alexander), spinc)], {})
