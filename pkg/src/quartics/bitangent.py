"""Enumeration and numeric certification of the 28 bitangents.

A line is a bitangent of the quartic ``f`` exactly when the restriction of
``f`` to the line is the square of a binary quadratic.  Working in an affine
chart of the dual plane (one line coefficient normalized to 1), comparing
coefficients of ``f(x, y, -a*x - b*y) = (l0*x^2 + l1*x*y + l2*y^2)^2`` gives
five polynomial conditions; their eliminations split into the per-family
components embedded in :mod:`quartics.components`.

The enumeration solves those components in closed form (quadratics,
biquadratics and one quartic resolvent), polishes the roots, then *certifies*
every candidate line independently: the restricted quartic must fit a
perfect square to ``tol`` and, for the general-position component of the
three-parameter family, all ten ideal generators must vanish.  Candidates
from all charts are deduplicated projectively and the final count must be
exactly 28 (a smooth plane quartic has exactly 28 bitangents).
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import components as comp
from . import numroots
from .errors import DegeneracyError, DomainError, EnumerationError
from .polyring import (Polynomial, VarTable, convert, eval_exact,
                       substitute_linear)
from .symfam import FAMILY_PARAMS, QuarticForm, make_family

DEFAULT_CERT_TOL = 1e-9
DEFAULT_DEDUPE_TOL = 1e-8


@dataclass(frozen=True)
class AffineChart:
    """One affine chart of the dual plane: the named coordinate's line
    coefficient is normalized to 1 and the coordinate is eliminated."""

    id: str
    normalized: str
    pair: tuple[str, str]
    unknowns: tuple[str, str]


CHARTS = {
    "XY": AffineChart("XY", "z", ("x", "y"), ("a", "b")),
    "YZ": AffineChart("YZ", "x", ("y", "z"), ("b", "c")),
    "ZX": AffineChart("ZX", "y", ("x", "z"), ("a", "c")),
}

#: Chart of a line whose coefficient in the given slot is normalized to 1.
_SLOT_CHART = {2: "XY", 0: "YZ", 1: "ZX"}

#: Coefficient slots read off as the chart unknowns, in unknown order.
_CHART_SLOTS = {"XY": (0, 1), "YZ": (1, 2), "ZX": (0, 2)}


@dataclass(frozen=True)
class ProjLine:
    """A projective line with deterministically normalized complex coefficients.

    The coefficient of largest modulus (first such slot on ties) is scaled
    to exactly 1.
    """

    coefficients: tuple[complex, complex, complex]

    @classmethod
    def from_coefficients(cls, coeffs) -> "ProjLine":
        c = [complex(v) for v in coeffs]
        mags = [abs(v) for v in c]
        top = max(mags)
        if top == 0.0:
            raise DomainError("all line coefficients are zero")
        k = mags.index(top)
        pivot = c[k]
        out = tuple(v / pivot for v in c)
        # exact unit in the pivot slot
        out = out[:k] + (1.0 + 0.0j,) + out[k + 1:]
        return cls(out)

    @property
    def pivot(self) -> int:
        mags = [abs(v) for v in self.coefficients]
        return mags.index(max(mags))

    @property
    def chart(self) -> str:
        return _SLOT_CHART[self.pivot]

    def sort_key(self):
        return tuple(
            (round(v.real, 9), round(v.imag, 9)) for v in self.coefficients
        )


def proj_distance(p, q) -> float:
    """Projective distance of two coefficient triples: the largest normalized 2x2 minor."""
    p = [complex(v) for v in p]
    q = [complex(v) for v in q]
    np_ = max(abs(v) for v in p)
    nq = max(abs(v) for v in q)
    if np_ == 0.0 or nq == 0.0:
        raise DomainError("zero line in projective comparison")
    best = 0.0
    for i in range(3):
        for j in range(i + 1, 3):
            best = max(best, abs(p[i] * q[j] - p[j] * q[i]) / (np_ * nq))
    return best


def dedupe_lines(lines, tol: float = DEFAULT_DEDUPE_TOL):
    """Collapse projectively equal lines; representatives in deterministic order."""
    reps: list[ProjLine] = []
    for line in lines:
        if not isinstance(line, ProjLine):
            line = ProjLine.from_coefficients(line)
        if all(proj_distance(line.coefficients, r.coefficients) >= tol for r in reps):
            reps.append(line)
    return sorted(reps, key=lambda l: l.sort_key())


@dataclass(frozen=True)
class BitangentCert:
    """A certified bitangent: the line, its perfect-square fit and residuals."""

    line: ProjLine
    lam: tuple[complex, complex, complex]
    residual: float
    source: str
    chart: str


# -- the tangency system ------------------------------------------------------


def _chart_table(table: VarTable, chart: str) -> VarTable:
    unknowns = CHARTS[chart].unknowns
    extra = tuple(n for n in unknowns + ("l0", "l1", "l2") if n not in table.names)
    return VarTable(table.geometric, table.parameters + extra)


def restriction_coefficients(f, chart: str) -> list[Polynomial]:
    """The five coefficients of ``f`` restricted to the chart's general line.

    Returned in the order ``v1^4, v1^3 v2, v1^2 v2^2, v1 v2^3, v2^4`` where
    ``(v1, v2)`` is the chart's binary pair; entries are polynomials in the
    chart unknowns and the family parameters.
    """
    poly = f.poly if isinstance(f, QuarticForm) else f
    return _restriction_coefficients_cached(poly, chart)


@lru_cache(maxsize=64)
def _restriction_coefficients_cached(poly: Polynomial, chart: str) -> list[Polynomial]:
    spec = CHARTS[chart]
    subst, pair, unknowns = spec.normalized, spec.pair, spec.unknowns
    table = _chart_table(poly.table, chart)
    fe = convert(poly, table)
    line = -(Polynomial.variable(table, unknowns[0]) * Polynomial.variable(table, pair[0])
             + Polynomial.variable(table, unknowns[1]) * Polynomial.variable(table, pair[1]))
    restricted = substitute_linear(fe, subst, line)
    groups = restricted.geometric_coefficients()
    i1, i2 = table.index(pair[0]), table.index(pair[1])
    out = []
    for k in range(5):
        want = [0] * table.n_geometric
        want[i1] = 4 - k
        want[i2] = k
        out.append(groups.get(tuple(want), Polynomial.zero(table)))
    return out


def build_tangency_system(f, chart: str = "XY") -> list[Polynomial]:
    """The five coefficient-comparison generators of the bitangent ideal.

    Generator k is (coefficient k of the restricted quartic) minus
    (coefficient k of ``(l0 v1^2 + l1 v1 v2 + l2 v2^2)^2``).
    """
    coeffs = restriction_coefficients(f, chart)
    table = coeffs[0].table
    l0 = Polynomial.variable(table, "l0")
    l1 = Polynomial.variable(table, "l1")
    l2 = Polynomial.variable(table, "l2")
    squares = [l0 * l0, 2 * l0 * l1, l1 * l1 + 2 * l0 * l2, 2 * l1 * l2, l2 * l2]
    return [c - sq for c, sq in zip(coeffs, squares)]


def perfect_square_fit(coeffs, tol: float = DEFAULT_CERT_TOL):
    """Fit ``(l0, l1, l2)`` with ``sum coeffs[k] monomials == (l0 x^2 + l1 xy + l2 y^2)^2``.

    ``coeffs`` are the five binary-quartic coefficients ``c40..c04``.  Tries
    the three well-conditioned anchors (leading, trailing, middle) and keeps
    the branch with the smallest residual, the maximum coefficient mismatch
    normalized by ``max |c|``.  Returns ``(lam, residual)`` or ``None`` when
    no branch fits below *tol*.
    """
    c = [complex(v) for v in coeffs]
    top = max(abs(v) for v in c)
    if top == 0.0:
        return None
    candidates = []
    c40, c31, c22, c13, c04 = c
    # every strategy with a usable anchor competes; the residual decides
    if abs(c40) > 1e-18 * top:
        l0 = cmath.sqrt(c40)
        l1 = c31 / (2 * l0)
        candidates.append((l0, l1, (c22 - l1 * l1) / (2 * l0)))
        for sign in (1, -1):
            candidates.append((l0, l1, sign * cmath.sqrt(c04)))
    if abs(c04) > 1e-18 * top:
        l2 = cmath.sqrt(c04)
        l1 = c13 / (2 * l2)
        candidates.append(((c22 - l1 * l1) / (2 * l2), l1, l2))
    if abs(c22) > 1e-18 * top:
        l1 = cmath.sqrt(c22)
        candidates.append((c31 / (2 * l1), l1, c13 / (2 * l1)))
    best = None
    for lam in candidates:
        l0, l1, l2 = lam
        fit = (l0 * l0, 2 * l0 * l1, l1 * l1 + 2 * l0 * l2, 2 * l1 * l2, l2 * l2)
        residual = max(abs(x - y) for x, y in zip(c, fit)) / top
        if best is None or residual < best[1]:
            best = (lam, residual)
    if best is None or best[1] >= tol:
        return None
    return best


# -- numeric evaluation helpers ------------------------------------------------


def eval_scaled(poly: Polynomial, point) -> tuple[complex, float]:
    """Evaluate and report the largest summand modulus (a cancellation scale)."""
    names = poly.table.names
    total = 0j
    scale = 0.0
    for exps, coeff in poly.sorted_terms():
        term = complex(float(coeff))
        for i, e in enumerate(exps):
            if e:
                term *= complex(point[names[i]]) ** e
        total += term
        scale = max(scale, abs(term))
    return total, scale


def generator_residual(poly: Polynomial, point) -> float:
    value, scale = eval_scaled(poly, point)
    return abs(value) / max(scale, 1.0)


# -- per-family component solving ----------------------------------------------


def _coeff_values(coeff_polys, params: dict) -> list[Fraction]:
    out = []
    for c in coeff_polys:
        if isinstance(c, Polynomial):
            out.append(eval_exact(c, params))
        else:
            out.append(Fraction(c))
    return out


def _biq_roots(coeff_polys, params) -> list[complex]:
    """Roots from ascending even-power coefficients (c0, c2, c4, ...)."""
    even = _coeff_values(coeff_polys, params)
    full = [0j] * (2 * len(even) - 1)
    for k, c in enumerate(even):
        full[2 * k] = complex(c)
    return numroots.biquadratic_roots(full)


def _quad_b2_roots(coeff_polys, params) -> list[complex]:
    """Roots b of c0 + c1 b^2 = 0 (both square roots of the single b^2)."""
    c0, c1 = _coeff_values(coeff_polys, params)
    if c1 == 0:
        raise EnumerationError("component quadratic degenerates: leading coefficient 0")
    root = cmath.sqrt(complex(-c0 / c1))
    return [root, -root]


def _solve_x4_chart(r, s, u):
    """Chart solutions (a, b, tag) of the three-parameter family."""
    params = {"r": r, "s": s, "u": u}
    out = []
    for b in _biq_roots(comp.X4_J2_BIQUADRATIC, params):
        out.append((0j, b, "J2"))
    for a in _biq_roots(comp.X4_J3_BIQUADRATIC, params):
        out.append((a, 0j, "J3"))

    quartic = [complex(v) for v in _coeff_values(comp.X4_J1_QUARTIC_B, params)]
    eliminant = [0j] * 9
    for k, c in enumerate(quartic):
        eliminant[2 * k] = c
    for big in numroots.roots(quartic):
        for b in (cmath.sqrt(big), -cmath.sqrt(big)):
            b = numroots.newton_polish(eliminant, b)
            point = {"b": b, **{k: complex(float(v)) for k, v in params.items()}}
            best = None
            for coeff, rest in comp.X4_J1_A2_SPLITS:
                cval, _ = eval_scaled(coeff, point)
                rval, _ = eval_scaled(rest, point)
                if best is None or abs(cval) > abs(best[0]):
                    best = (cval, rval)
            cval, rval = best
            if abs(cval) < 1e-12:
                continue
            a2 = -rval / cval
            a = cmath.sqrt(a2)
            out.append((a, b, "J1"))
            out.append((-a, b, "J1"))
    return out


def _solve_x16_chart(r, s):
    params = {"r": r, "s": s}
    out = []
    for b in _biq_roots(comp.X16_J1_BIQUADRATIC, params):
        out.append((0j, b, "J1"))
    for a in _biq_roots(comp.X16_J2_BIQUADRATIC, params):
        out.append((a, 0j, "J2"))
    for b in _biq_roots(comp.X16_J56_BIQUADRATIC, params):
        out.append((-b, b, "J5"))
        out.append((b, b, "J6"))
    for b in _biq_roots(comp.X16_J7_BIQUADRATIC, params):
        a = cmath.sqrt(-complex(float(s)) - b * b)
        out.append((a, b, "J7"))
        out.append((-a, b, "J7"))
    return out


def _solve_x24_chart(r):
    params = {"r": r}
    out = []
    for b in _biq_roots(comp.X24_J2_BIQUADRATIC, params):
        out.append((0j, b, "J2"))
    for a in _biq_roots(comp.X24_J2_BIQUADRATIC, params):
        out.append((a, 0j, "J3"))
    for tag, a, b in comp.X24_RATIONAL_POINTS:
        out.append((complex(a), complex(b), tag))
    for b in _quad_b2_roots(comp.X24_J69_QUADRATIC, params):
        out.append((-b, b, "J6"))
        out.append((b, b, "J9"))
    for b in _quad_b2_roots(comp.X24_J10_13_QUADRATIC, params):
        out.append((-1 + 0j, b, "J10"))
        out.append((1 + 0j, b, "J11"))
        out.append((b, -1 + 0j, "J12"))
        out.append((b, 1 + 0j, "J13"))
    return out


_EIGHTH_ROOTS = tuple(cmath.exp(1j * cmath.pi * k / 4) for k in range(8))


def _x96_candidates():
    out = []
    for za in _EIGHTH_ROOTS:
        for zb in _EIGHTH_ROOTS:
            out.append(((za, zb, 1.0 + 0j), "X96.full"))
    for w in _EIGHTH_ROOTS:
        for pattern in ((0, 1, w), (0, w, 1), (1, 0, w), (w, 0, 1), (1, w, 0), (w, 1, 0)):
            out.append((tuple(complex(v) for v in pattern), "X96.axis"))
    return out


# -- degeneracy --------------------------------------------------------------


def singular_locus_check(family: str, params: tuple[Fraction, ...]):
    """Raise :class:`DegeneracyError` when the family member is singular.

    The smooth locus is cut out exactly by: no parameter equal to +-2 (a
    coordinate-section of the curve becomes a perfect square, degenerating
    the coordinate bitangents; +-2 everywhere gives a double conic) and, for
    the three-parameter family, ``r^2+s^2+u^2 - r*s*u - 4 != 0`` (the locus
    where the curve acquires a singular point with all coordinates nonzero).
    """
    lookup = dict(zip(FAMILY_PARAMS[family], params))
    for name, value in lookup.items():
        if value == 2 or value == -2:
            raise DegeneracyError(
                f"{family} with {name} = {value}: degenerate locus |{name}| = 2 "
                "(a coordinate line becomes a bitangent of a non-generic configuration; "
                "at all parameters +-2 the quartic is a double conic)"
            )
    if family == "X4":
        r, s, u = (lookup[n] for n in ("r", "s", "u"))
        det = r * r + s * s + u * u - r * s * u - 4
    elif family == "X16":
        r, s = lookup["r"], lookup["s"]
        det = (r - 2) * (r + 2 - s * s)
    elif family == "X24":
        r = lookup["r"]
        det = -(r + 1) * (r - 2) ** 2
    else:
        return
    if det == 0:
        raise DegeneracyError(
            f"{family}{tuple(str(v) for v in params)}: singular curve "
            "(locus r^2+s^2+u^2-rsu-4 = 0 under the family's parameter identification)"
        )


# -- enumeration ---------------------------------------------------------------


def _rotation_plans(family: str, params: dict):
    """Chart plans: (chart id, rotated parameter tuple, line embedding)."""
    if family == "X4":
        r, s, u = params["r"], params["s"], params["u"]
        return [
            ("XY", (r, s, u), lambda a, b: (a, b, 1 + 0j)),
            ("YZ", (s, u, r), lambda a, b: (1 + 0j, a, b)),
            ("ZX", (u, r, s), lambda a, b: (b, 1 + 0j, a)),
        ]
    if family == "X24":
        r = (params["r"],)
        return [
            ("XY", r, lambda a, b: (a, b, 1 + 0j)),
            ("YZ", r, lambda a, b: (1 + 0j, a, b)),
            ("ZX", r, lambda a, b: (b, 1 + 0j, a)),
        ]
    raise DomainError(family)


def _certify(fpoly: Polynomial, coeffs, tol: float):
    """Perfect-square certification of a candidate line against ``fpoly``."""
    line = ProjLine.from_coefficients(coeffs)
    chart = line.chart
    unknowns = CHARTS[chart].unknowns
    slots = _CHART_SLOTS[chart]
    point = {unknowns[0]: line.coefficients[slots[0]],
             unknowns[1]: line.coefficients[slots[1]]}
    values = [eval_scaled(c, point)[0] for c in restriction_coefficients(fpoly, chart)]
    fit = perfect_square_fit(values, tol)
    if fit is None:
        return None
    lam, residual = fit
    return BitangentCert(line, lam, residual, "", chart)


def enumerate_bitangents(family: str, params=(), tol: float = DEFAULT_CERT_TOL,
                         dedupe_tol: float = DEFAULT_DEDUPE_TOL) -> list[BitangentCert]:
    """All 28 bitangents of a family member at exact rational parameters.

    Raises :class:`DegeneracyError` on the excluded parameter loci and
    :class:`EnumerationError` (with per-component diagnostics) if
    certification and projective deduplication do not end at exactly 28
    distinct lines.
    """
    if family not in FAMILY_PARAMS:
        raise DomainError(f"unknown family {family!r}")
    params = tuple(Fraction(p) for p in params)
    if len(params) != len(FAMILY_PARAMS[family]):
        raise DomainError(
            f"{family} takes {len(FAMILY_PARAMS[family])} parameter(s), got {len(params)}"
        )
    singular_locus_check(family, params)
    form = make_family(family, params)
    lookup = dict(zip(FAMILY_PARAMS[family], params))

    candidates: list[tuple[tuple[complex, complex, complex], str]] = []
    if family == "X96":
        candidates = _x96_candidates()
    elif family == "X16":
        for a, b, tag in _solve_x16_chart(lookup["r"], lookup["s"]):
            candidates.append(((a, b, 1 + 0j), f"X16.{tag}"))
        for b in _biq_roots(comp.X16_XY_BIQUADRATIC, lookup):
            candidates.append(((1 + 0j, b, 0j), "X16.J1''"))
    else:
        solver = _solve_x4_chart if family == "X4" else _solve_x24_chart
        for chart, rparams, embed in _rotation_plans(family, lookup):
            for a, b, tag in solver(*rparams):
                candidates.append((embed(a, b), f"{family}.{tag}"))

    # The specialized families embed in the three-parameter one, whose
    # resultant-based general component is solved in all three charts; use it
    # as a supplementary candidate source.  On thin parameter loci a
    # specialized two-generator component description can pick up points with
    # no perfect-square lift (its variety is only an upper bound for the
    # projected ideal there), and certification would then leave holes that
    # these candidates fill.  Family components come first, so deduplication
    # keeps their tags for lines found both ways.
    if family in ("X16", "X24"):
        x4_lookup = {"r": lookup["r"], "s": lookup.get("s", lookup["r"]),
                     "u": lookup.get("s", lookup["r"])}
        for chart, rparams, embed in _rotation_plans("X4", x4_lookup):
            for a, b, tag in _solve_x4_chart(*rparams):
                candidates.append((embed(a, b), f"X4.{tag}"))

    certified: list[BitangentCert] = []
    failures: dict[str, int] = {}
    for coeffs, source in candidates:
        cert = _certify(form.poly, coeffs, tol)
        if cert is None:
            failures[source] = failures.get(source, 0) + 1
            continue
        certified.append(BitangentCert(cert.line, cert.lam, cert.residual, source, cert.chart))

    # general-position candidates of X4 must also kill all ten ideal generators
    if family == "X4":
        kept = []
        cparams = {k: complex(float(v)) for k, v in lookup.items()}
        for cert in certified:
            if cert.source == "X4.J1":
                a, b, _ = _chart_ab(cert)
                point = {"a": a, "b": b, **cparams}
                worst = max(generator_residual(g, point) for g in comp.X4_J1_GENERATORS)
                if worst >= tol:
                    failures["X4.J1(generators)"] = failures.get("X4.J1(generators)", 0) + 1
                    continue
            kept.append(cert)
        certified = kept

    # projective dedupe, keeping the first certificate of each class
    reps: list[BitangentCert] = []
    for cert in certified:
        match = None
        for known in reps:
            if proj_distance(cert.line.coefficients, known.line.coefficients) < dedupe_tol:
                match = known
                break
        if match is None:
            reps.append(cert)
    reps.sort(key=lambda c: c.line.sort_key())

    if len(reps) != 28:
        counts: dict[str, int] = {}
        for c in reps:
            counts[c.source] = counts.get(c.source, 0) + 1
        raise EnumerationError(
            f"{family}{tuple(str(v) for v in params)}: {len(reps)} distinct certified "
            f"lines instead of 28 (by component: {counts}; rejected: {failures})"
        )
    return reps


def _chart_ab(cert: BitangentCert) -> tuple[complex, complex, complex]:
    """The X4 chart-XY unknowns (a, b) of a certified line with nonzero z slot.

    Falls back to the raw coefficients when the z slot vanishes (the ten J1
    generators are only consulted for general-position lines, which have a
    nonzero z coefficient).
    """
    c0, c1, c2 = cert.line.coefficients
    if abs(c2) > 1e-12:
        return c0 / c2, c1 / c2, 1 + 0j
    return c0, c1, c2


def coordinate_type_count(certs) -> tuple[int, int]:
    """Split a certified line list into (coordinate-type, general) counts.

    Coordinate-type bitangents have a vanishing coefficient; the general
    lines of the three-parameter family have full support.
    """
    coord = sum(
        1 for c in certs if any(abs(v) < 1e-7 for v in c.line.coefficients)
    )
    return coord, len(certs) - coord
