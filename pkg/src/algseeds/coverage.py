"""Tiling of the quadratic integers, common-index and generator searches,
and the quadratic layer of the totally real cubic families.

The real quadratic tiling is decided by integers alone: for v in (0,1)
with minimal polynomial x^2 + B'x + C', the trace classification leaves
only B' >= 1 (a set member) or B' <= -3 (the reflection is a member);
B' in {0,-1,-2} would force C' into an empty integer range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from .algebraic import AlgebraicNumber, irrational_real_roots, same_number
from .families import SetInstance, SetSpec, bc_root, build_set, quadratic_exception
from .fields import FieldExpression, express_in, squarefree_kernel
from .polynomials import MonicIntPoly, is_perfect_square


class NotQuadratic(ValueError):
    pass


class WrongSignature(ValueError):
    pass


class InvalidTarget(ValueError):
    pass


@dataclass(frozen=True)
class TileIndex:
    eps: int
    n: int
    family_union: str  # S2r | S2i-hat

    def to_json(self) -> dict:
        return {"eps": self.eps, "n": self.n, "family_union": self.family_union}


def _real_tile(a: AlgebraicNumber) -> tuple[TileIndex, MonicIntPoly]:
    """Tile of a real quadratic integer plus the minimal polynomial of the
    set element representing it."""
    k = a.floor()
    frac = a.minpoly.map_root(1, -k)
    bp, cp = frac.coeffs
    assert bp not in (0, -1, -2), "impossible trace for a unit-interval quadratic"
    if bp >= 1:
        assert -bp <= cp <= -1
        return TileIndex(1, k, "S2r"), frac
    refl = frac.reflected()
    bq, cq = refl.coeffs
    assert bq >= 1 and -bq <= cq <= -1
    return TileIndex(-1, k + 1, "S2r"), refl


def _imaginary_tile_coords(b: int, c: int, sign: int) -> tuple[TileIndex, int, int]:
    """Tile of (b,c)_sign with c > b^2/4; returns (tile, b0, c0) where
    (b0, c0) are the unshifted coordinates inside eps*S-hat."""
    if sign > 0:
        n = -b // 2 if b % 2 == 0 else (-b - 1) // 2
        b0 = b + 2 * n
        assert b0 in (0, -1)
    else:
        n = -b // 2 if b % 2 == 0 else (1 - b) // 2
        b0 = b + 2 * n
        assert b0 in (0, 1)
    c0 = c - n * n + b0 * n
    assert c0 >= 1
    return TileIndex(1 if sign > 0 else -1, n, "S2i-hat"), b0, c0


def tile_locate(a: AlgebraicNumber) -> TileIndex:
    """The unique (eps, n) with a in eps*S + n; S = S^{2,r} for real input,
    S-hat^{2,i} for imaginary."""
    if a.minpoly.degree != 2:
        raise NotQuadratic(f"{a.minpoly} has degree {a.minpoly.degree}")
    if a.minpoly.discriminant() > 0:
        return _real_tile(a)[0]
    b, c = a.minpoly.coeffs
    sign = 1 if a.half_plane > 0 else -1
    return _imaginary_tile_coords(b, c, sign)[0]


@dataclass(frozen=True)
class TilingReport:
    domain: str
    bound: int
    checked: int
    violations: tuple[dict, ...]
    qi_excluded: int  # Q(sqrt(-1)) elements, relevant to the unhatted domain
    ok: bool

    def to_json(self) -> dict:
        return {"domain": self.domain, "bound": self.bound, "checked": self.checked,
                "violations": list(self.violations), "qi_excluded": self.qi_excluded,
                "ok": self.ok}


@lru_cache(maxsize=None)
def _cached_instance(family: str, n: int) -> SetInstance:
    return build_set(SetSpec(family, (n,)))


def _real_member_check(a: AlgebraicNumber, tile: TileIndex, elem_poly: MonicIntPoly) -> bool:
    """Rebuild the tile's set instance and confirm the located fractional
    representative is one of its elements."""
    v = a.plus_int(-tile.n) if tile.eps == 1 else a.negated().plus_int(tile.n)
    inst = _cached_instance("2r", elem_poly.coeffs[0])
    return any(e.number.minpoly == elem_poly and same_number(e.number, v)
               for e in inst.elements)


def _real_membership_scan(a: AlgebraicNumber, bound: int) -> list[TileIndex]:
    """Brute force: every (eps, n) with |n| <= bound+1 whose tile contains a."""
    hits = []
    for eps in (1, -1):
        for n in range(-bound - 1, bound + 2):
            q = a.minpoly.map_root(eps, -eps * n)
            b2, c2 = q.coeffs
            if c2 >= 0 or 1 + b2 + c2 <= 0 or b2 < 1:
                continue  # no set element among the roots of q
            # q has exactly one root in (0,1); is it eps*(a-n)?
            img = a
            inside = None
            bits = 32
            while inside is None:
                lo, hi = img.enclosure(bits)
                s_lo, s_hi = (eps * (lo - n), eps * (hi - n)) if eps == 1 else (eps * (hi - n), eps * (lo - n))
                if 0 < s_lo and s_hi < 1:
                    inside = True
                elif s_hi < 0 or 1 < s_lo:
                    inside = False
                bits *= 2
            if inside:
                hits.append(TileIndex(eps, n, "S2r"))
    return hits


def verify_tiling(bound: int, domain: str = "real") -> TilingReport:
    if bound < 1:
        raise ValueError("bound must be positive")
    if domain == "real":
        return _verify_real(bound)
    if domain in ("imaginary", "imaginary-except-qi"):
        return _verify_imaginary(bound, hatted=(domain == "imaginary"))
    raise ValueError(f"unknown domain {domain!r}")


def _verify_real(bound: int) -> TilingReport:
    checked = 0
    violations = []
    for b in range(-bound, bound + 1):
        for c in range(-bound, bound + 1):
            p = MonicIntPoly.quadratic(b, c)
            disc = p.discriminant()
            if disc <= 0 or is_perfect_square(disc):
                continue
            for sign in (1, -1):
                a = bc_root(b, c, sign)
                checked += 1
                tile, elem_poly = _real_tile(a)
                # cross-check one: the element reconstructs inside its instance
                member = _real_member_check(a, tile, elem_poly)
                # cross-check two: the brute scan finds exactly this tile
                hits = _real_membership_scan(a, bound)
                if not member or hits != [tile]:
                    violations.append({"b": b, "c": c, "sign": sign,
                                       "tile": tile.to_json(),
                                       "scan": [h.to_json() for h in hits],
                                       "member": member})
    return TilingReport("real", bound, checked, tuple(violations), 0, not violations)


def _s2i_instance_index(b0: int, c0: int) -> int | None:
    """Index n with the upper root of x^2 + b0 x + c0 in I_n^{2,i}, or None.

    Odd instances carry b0 = -1 and cover every c0 >= 1; even instances
    carry b0 = 0 and cover exactly the non-square c0 >= 1.
    """
    if b0 == -1:
        k = isqrt(c0 - 1)
        return 2 * k + 1
    if is_perfect_square(c0):
        return None
    return 2 * isqrt(c0)


def _s2i_member_check(b0: int, c0: int) -> bool:
    n = _s2i_instance_index(b0, c0)
    if n is None:
        return False
    inst = _cached_instance("2i", n)
    want = MonicIntPoly.quadratic(b0, c0)
    return any(e.free_coeff == c0 and e.number.minpoly == want for e in inst.elements)


def _verify_imaginary(bound: int, hatted: bool) -> TilingReport:
    checked = 0
    violations = []
    qi = 0
    for b in range(-bound, bound + 1):
        c_min = b * b // 4 + 1
        for c in range(c_min, bound + 1):
            for sign in (1, -1):
                checked += 1
                tile, b0, c0 = _imaginary_tile_coords(b, c, sign)
                in_qi = b % 2 == 0 and is_perfect_square(c - b * b // 4)
                if in_qi:
                    qi += 1
                # uniqueness scan: any other shift with admissible coordinates?
                hits = []
                for n in range(-bound - 1, bound + 2):
                    bb = b + 2 * n
                    admissible = (0, -1) if sign > 0 else (0, 1)
                    if bb in admissible and c - n * n + bb * n >= 1:
                        hits.append(n)
                unique = hits == [tile.n]
                if hatted:
                    if not unique:
                        violations.append({"b": b, "c": c, "sign": sign, "hits": hits})
                    continue
                # unhatted: the unshifted coordinates must name an actual set
                # element, except exactly for the Gaussian rationals Q(sqrt -1)
                b_inst = b0 if sign > 0 else -b0
                covered = unique and _s2i_member_check(b_inst, c0)
                if covered == in_qi:  # qi elements must be the exact misses
                    violations.append({"b": b, "c": c, "sign": sign,
                                       "covered": covered, "qi": in_qi})
    domain = "imaginary" if hatted else "imaginary-except-qi"
    return TilingReport(domain, bound, checked, tuple(violations), qi, not violations)


# ---------------------------------------------------------------------------
# Common index: the least n >= 1 with n^2 < m^2 j < (n+1)^2 solvable for
# every requested square-free j.


@dataclass(frozen=True)
class CommonIndexResult:
    targets: tuple[int, ...]
    n: int
    certificate: tuple[tuple[int, int, int], ...]  # (j, m, c = m^2 j)
    domain: str

    def to_json(self) -> dict:
        return {"targets": list(self.targets), "n": self.n, "domain": self.domain,
                "certificate": [{"j": j, "m": m, "c": c} for j, m, c in self.certificate],
                "instance": {"family": "2r" if self.domain == "real" else "2i",
                             "params": [2 * self.n]}}


def _index_witness(n: int, j: int) -> tuple[int, int] | None:
    m = isqrt(n * n // j)
    while m * m * j <= n * n:
        m += 1
    c = m * m * j
    return (m, c) if c < (n + 1) * (n + 1) else None


def find_common_index(targets, domain: str = "real") -> CommonIndexResult:
    targets = tuple(targets)
    if not targets:
        raise InvalidTarget("no target fields given")
    if len(set(targets)) != len(targets):
        raise InvalidTarget("targets must be pairwise distinct")
    for j in targets:
        if j < 2 or squarefree_kernel(j) != j:
            raise InvalidTarget(f"{j} is not a square-free integer >= 2")
    if domain not in ("real", "imaginary"):
        raise ValueError(f"unknown domain {domain!r}")
    n = 1
    while True:
        cert = []
        for j in targets:
            w = _index_witness(n, j)
            if w is None:
                break
            cert.append((j, w[0], w[1]))
        if len(cert) == len(targets):
            return CommonIndexResult(targets, n, tuple(cert), domain)
        n += 1


def common_index_witnesses(res: CommonIndexResult) -> list[AlgebraicNumber]:
    """The certified set elements: -n + sqrt(c) in I_{2n}^{2,r} for the real
    domain, sqrt(-c) in I_{2n}^{2,i} for the imaginary one."""
    out = []
    n = res.n
    for _, _, c in res.certificate:
        if res.domain == "real":
            out.append(bc_root(2 * n, n * n - c, 1))
        else:
            out.append(AlgebraicNumber.complex_root(MonicIntPoly.quadratic(0, c), upper=True))
    return out


# ---------------------------------------------------------------------------
# Generator search over Z-combinations of powers of the target root.


@dataclass(frozen=True)
class GeneratorWitness:
    coords: tuple[int, int, int]
    minpoly: MonicIntPoly
    spec: SetSpec
    free_coeff: int
    element: AlgebraicNumber
    certificate: FieldExpression

    def to_json(self) -> dict:
        return {"coords": list(self.coords), "minpoly": self.minpoly.to_json(),
                "spec": self.spec.to_json(), "free_coeff": self.free_coeff,
                "element": self.element.to_json(),
                "certificate": self.certificate.to_json()}


@dataclass(frozen=True)
class SearchResult:
    found: bool
    witness: GeneratorWitness | None
    coord_bound: int

    def to_json(self) -> dict:
        return {"found": self.found, "coord_bound": self.coord_bound,
                "witness": self.witness.to_json() if self.witness else None}


def _char_poly_coords(target: MonicIntPoly, a0: int, a1: int, a2: int) -> MonicIntPoly:
    """Characteristic polynomial of a0 + a1*theta + a2*theta^2 acting on the
    power basis of the target field: exact integer 3x3 determinant data."""
    bt, ct, dt = target.coeffs
    # columns of multiplication by theta reduce via theta^3 = -bt th^2 - ct th - dt
    # M = a0 I + a1 C + a2 C^2 with C the companion matrix
    c_mat = ((0, 0, -dt), (1, 0, -ct), (0, 1, -bt))
    c2 = tuple(tuple(sum(c_mat[i][k] * c_mat[k][j] for k in range(3)) for j in range(3))
               for i in range(3))
    m = tuple(tuple(a0 * (1 if i == j else 0) + a1 * c_mat[i][j] + a2 * c2[i][j]
                    for j in range(3)) for i in range(3))
    tr = m[0][0] + m[1][1] + m[2][2]
    s2 = (m[0][0] * m[1][1] - m[0][1] * m[1][0]
          + m[0][0] * m[2][2] - m[0][2] * m[2][0]
          + m[1][1] * m[2][2] - m[1][2] * m[2][1])
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return MonicIntPoly.cubic(-tr, s2, -det)


def _value_in_unit_interval(theta: AlgebraicNumber, coords) -> bool | None:
    bits = 64
    while True:
        lo, hi = theta.enclosure(bits)
        acc_lo, acc_hi = Fraction(0), Fraction(0)
        for c in reversed(coords):
            cands = (acc_lo * lo, acc_lo * hi, acc_hi * lo, acc_hi * hi)
            acc_lo, acc_hi = min(cands) + c, max(cands) + c
        if 0 < acc_lo and acc_hi < 1:
            return True
        if acc_hi < 0 or 1 < acc_lo:
            return False
        bits *= 2


def _family_coeff_ok(family: str, c: int, d: int) -> bool:
    if family == "3ntr":
        return c >= 1 and -c <= d <= -1
    return c <= -3 and 1 <= d <= -c - 2


def find_generator(target: MonicIntPoly, family: str, coord_bound: int = 50) -> SearchResult:
    """First element of S_0^{family} (shells by max coordinate, then
    lexicographic) that generates the field of the target polynomial."""
    if target.degree != 3 or not target.is_irreducible():
        raise InvalidTarget(f"{target} is not an irreducible cubic")
    if family not in ("3ntr", "3tr"):
        raise ValueError(f"unknown family {family!r}")
    disc = target.discriminant()
    if (disc < 0) != (family == "3ntr"):
        raise WrongSignature(f"disc({target}) = {disc} does not fit {family}")
    theta = irrational_real_roots(target)[0]
    for shell in range(1, coord_bound + 1):
        rng = range(-shell, shell + 1)
        for a0 in rng:
            for a1 in rng:
                for a2 in rng:
                    if max(abs(a0), abs(a1), abs(a2)) != shell:
                        continue
                    if a1 == 0 and a2 == 0:
                        continue
                    coords = (a0, a1, a2)
                    char = _char_poly_coords(target, *coords)
                    if char.coeffs[0] != 0:
                        continue  # family polynomials have zero trace
                    _, c, d = char.coeffs
                    if not _family_coeff_ok(family, c, d):
                        continue
                    if not char.is_irreducible():
                        continue
                    if not _value_in_unit_interval(theta, coords):
                        continue
                    spec = SetSpec(family, (0, c))
                    elem = AlgebraicNumber.real_root(char, 0, 1)
                    cert = FieldExpression(theta, tuple(Fraction(x) for x in coords))
                    assert cert.verify_root_of(char)
                    return SearchResult(True, GeneratorWitness(
                        coords, char, spec, d, elem, cert), coord_bound)
    return SearchResult(False, None, coord_bound)


# ---------------------------------------------------------------------------
# The quadratic layer of S_m^{3,tr}: exception index bookkeeping.

EXCLUDED_INDICES = {0: (-2, -1, 0, 1), -1: (-2, -1, 0), -2: (-2, -1, 0), -3: (-3, -2, -1, 0)}

# the only single-element instances: I_1 = {(-1+sqrt5)/2}, I_-3 = {(3-sqrt5)/2};
# the layer of S_0 misses the first and the layer of S_-3 misses the second
GOLDEN_PLUS = MonicIntPoly.quadratic(1, -1)
GOLDEN_REFL = MonicIntPoly.quadratic(-3, 1)


@dataclass(frozen=True)
class QuadLayerReport:
    m: int
    c_bound: int
    exceptions: tuple[tuple[int, int, int], ...]  # (c, index n, quad const)
    indices_seen: tuple[int, ...]
    violations: tuple[dict, ...]
    golden_plus_seen: bool
    golden_refl_seen: bool

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"m": self.m, "c_bound": self.c_bound,
                "exceptions": [{"c": c, "index": n, "quad_const": q}
                               for c, n, q in self.exceptions],
                "indices_seen": list(self.indices_seen),
                "violations": list(self.violations),
                "golden_plus_seen": self.golden_plus_seen,
                "golden_refl_seen": self.golden_refl_seen, "ok": self.ok}


def quad_layer_report(m: int, c_bound: int) -> QuadLayerReport:
    """Scan the quadratic exceptions of S_m^{3,tr} for instance parameters
    down to -c_bound and audit them against the layer identity: every
    exception lies in I_n^{2,r} for an index n outside EXCLUDED_INDICES[m]."""
    if m not in EXCLUDED_INDICES:
        raise ValueError("layer identity needs m in {0,-1,-2,-3}")
    if c_bound < 3:
        raise ValueError("c_bound must be at least 3")
    excluded = set(EXCLUDED_INDICES[m])
    exceptions = []
    violations = []
    g_plus = g_refl = False
    for c in range(-m - 3, -c_bound - 1, -1):
        q = quadratic_exception(m, c)
        if q is None:
            continue
        n_idx, quad_const = q.minpoly.coeffs
        exceptions.append((c, n_idx, quad_const))
        if n_idx in excluded:
            violations.append({"c": c, "index": n_idx, "reason": "excluded index"})
        in_range = (-n_idx <= quad_const <= -1) if n_idx >= 1 else (1 <= quad_const <= -n_idx - 2)
        if not in_range:
            violations.append({"c": c, "index": n_idx, "reason": "outside instance range"})
        g_plus = g_plus or q.minpoly == GOLDEN_PLUS
        g_refl = g_refl or q.minpoly == GOLDEN_REFL
    indices = tuple(sorted({n for _, n, _ in exceptions}))
    return QuadLayerReport(m, c_bound, tuple(exceptions), indices,
                           tuple(violations), g_plus, g_refl)


# ---------------------------------------------------------------------------
# Trace obstruction: I_{-1,c}^{3,ntr} elements all have trace 1, while the
# algebraic integers of Q(cbrt 2) = Q[x]/(x^3-2) all have trace 0 mod 3.


@dataclass(frozen=True)
class ObstructionReport:
    c_max: int
    elements_checked: int
    hits: tuple[dict, ...]

    @property
    def ok(self) -> bool:
        return not self.hits

    def to_json(self) -> dict:
        return {"c_max": self.c_max, "elements_checked": self.elements_checked,
                "hits": list(self.hits), "ok": self.ok,
                "note": "trace of every checked element is 1; Z[cbrt2] traces are 0 mod 3"}


def trace_obstruction_demo(c_max: int = 60) -> ObstructionReport:
    target = MonicIntPoly.cubic(0, 0, -2)
    theta = irrational_real_roots(target)[0]
    checked = 0
    hits = []
    for c in range(2, c_max + 1):
        inst = build_set(SetSpec("3ntr", (-1, c)))
        for e in inst.elements:
            checked += 1
            assert e.number.minpoly.coeffs[0] == -1  # trace 1
            if express_in(e.number, theta) is not None:
                hits.append({"c": c, "free_coeff": e.free_coeff})
    return ObstructionReport(c_max, checked, tuple(hits))
