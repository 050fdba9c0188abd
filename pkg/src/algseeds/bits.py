"""Binary expansions of unit-interval set elements as bit streams.

A stream of length L is certified by refining the isolating interval of
the number until it sits inside a single dyadic cell [j/2^L, (j+1)/2^L);
the bits are then the L binary digits of j.  Irrationality guarantees the
refinement terminates: the number is never a cell boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebraic import AlgebraicNumber, same_number
from .families import SetInstance, SetSpec


class NotInUnitInterval(ValueError):
    pass


@dataclass(frozen=True)
class BitStream:
    source: AlgebraicNumber
    bits: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.bits)

    def as_text(self) -> str:
        return "".join(str(b) for b in self.bits)

    def as_hex(self) -> str:
        """Nibble-packed, most significant bit first, zero-padded on the right."""
        padded = self.bits + (0,) * (-len(self.bits) % 4)
        return "".join(format(int("".join(map(str, padded[i:i + 4])), 2), "x")
                       for i in range(0, len(padded), 4)) if padded else ""

    def fraction(self) -> Fraction:
        """The dyadic approximation j / 2^L; within 2^-L of the source."""
        j = 0
        for b in self.bits:
            j = (j << 1) | b
        return Fraction(j, 1 << len(self.bits))

    def complemented(self) -> tuple[int, ...]:
        return tuple(1 - b for b in self.bits)

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "length": self.length,
                "bits": self.as_text(), "hex": self.as_hex()}


def binary_expansion(a: AlgebraicNumber, length: int) -> BitStream:
    if length < 1:
        raise ValueError("length must be positive")
    if not a.is_real:
        raise NotInUnitInterval("bit streams need a real number")
    if a.cmp_rational(Fraction(0)) < 0 or a.cmp_rational(Fraction(1)) > 0:
        raise NotInUnitInterval(f"{a.minpoly} root is outside (0,1)")
    scale = 1 << length
    bits = length + 2
    while True:
        lo, hi = a.enclosure(bits)
        j_lo = (lo.numerator * scale) // lo.denominator
        j_hi = (hi.numerator * scale) // hi.denominator
        if hi.denominator == 1 or (hi.numerator * scale) % hi.denominator == 0:
            j_hi -= 1  # the number is strictly below an exact cell boundary
        if j_lo == j_hi:
            j = j_lo
            break
        bits *= 2
    assert 0 <= j < scale
    return BitStream(a, tuple((j >> (length - 1 - i)) & 1 for i in range(length)))


@dataclass(frozen=True)
class RunStats:
    ones: int
    zeros: int
    longest_run: int
    runs_count: int

    def to_json(self) -> dict:
        return {"ones": self.ones, "zeros": self.zeros,
                "longest_run": self.longest_run, "runs_count": self.runs_count}


def bit_stats(stream: BitStream) -> RunStats:
    bits = stream.bits
    ones = sum(bits)
    longest = run = runs = 0
    prev = None
    for b in bits:
        if b == prev:
            run += 1
        else:
            runs += 1
            run = 1
            prev = b
        longest = max(longest, run)
    return RunStats(ones, len(bits) - ones, longest, runs)


@dataclass(frozen=True)
class ComplementReport:
    spec: SetSpec
    size: int
    violations: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"spec": self.spec.to_json(), "size": self.size,
                "violations": list(self.violations), "ok": self.ok}


def complement_check(inst: SetInstance) -> ComplementReport:
    """Membership excludes the mirror: alpha in the instance forces 1 - alpha
    out of it.  Checked exactly by comparing each element's reflected minimal
    polynomial against every element of the same instance."""
    if inst.spec.family == "2i":
        raise ValueError("complement check needs a real family")
    violations = []
    for e in inst.elements:
        refl_poly = e.number.minpoly.reflected()
        refl_num = e.number.reflected()
        for f in inst.elements:
            if f.number.minpoly == refl_poly and same_number(f.number, refl_num):
                violations.append({"free_coeff": e.free_coeff,
                                   "mirror_of": f.free_coeff})
    return ComplementReport(inst.spec, len(inst.elements), tuple(violations))
