"""Bitangent condition ideals for the symmetric quartic families, as data.

For a line ``a*x + b*y + z = 0`` the bitangent condition on ``(a, b)`` is an
ideal in ``K[a, b]`` (parameters adjoined).  Its primary decomposition for
each family was computed once with a Groebner engine and is embedded here
as exact polynomials; the enumeration code solves the components and then
*certifies* every candidate line numerically, so these tables are inputs to
be checked, not trusted blindly.

All polynomials live over tables whose geometric slots are the line
coefficients ``(a, b)`` and whose parameters are the family parameters.
"""

from __future__ import annotations

from .polyring import Polynomial, VarTable

TABLE_X4 = VarTable(("a", "b"), ("r", "s", "u"))
TABLE_X16 = VarTable(("a", "b"), ("r", "s"))
TABLE_X24 = VarTable(("a", "b"), ("r",))


def _vars(table: VarTable):
    return [Polynomial.variable(table, n) for n in table.names]


# -- X4: three components in the (a, b) chart --------------------------------

_a, _b, _r, _s, _u = _vars(TABLE_X4)

#: The ten generators of the general-position component J1.
X4_J1_GENERATORS: tuple[Polynomial, ...] = (
    _s**2 * _a**4 - _u**2 * _b**4 + _s**2 * _u * _a**2 - _s * _u**2 * _b**2
    - 4 * _a**4 + 4 * _b**4 - 4 * _u * _a**2 + 4 * _s * _b**2 + _s**2 - _u**2,

    _r * _u**2 * _a**2 * _b**2 - _r**2 * _a**4 + _u**2 * _a**4 + _u**2 * _b**4
    - _r**2 * _u * _a**2 - 4 * _r * _a**2 * _b**2 - 4 * _b**4 + 4 * _u * _a**2
    - _r**2 + 4,

    _r * _s**2 * _a**2 * _b**2 - _r**2 * _b**4 + _s**2 * _b**4 + _u**2 * _b**4
    - _s**2 * _u * _a**2 - _r**2 * _s * _b**2 + _s * _u**2 * _b**2
    - 4 * _r * _a**2 * _b**2 - 4 * _b**4 + 4 * _u * _a**2 - _r**2 - _s**2
    + _u**2 + 4,

    _s * _u * _a**2 * _b**4 + _u**2 * _b**6 + _s * _u**2 * _b**4
    - 2 * _r * _a**2 * _b**4 - 2 * _r * _s * _a**2 * _b**2 - _r * _u * _b**4
    - 4 * _b**6 - _r * _s * _u * _b**2 + 4 * _u * _a**2 * _b**2
    - 2 * _s * _b**4 + _s * _u * _a**2 + _u**2 * _b**2 - 2 * _r * _a**2
    - _r * _u + 4 * _b**2 + 2 * _s,

    _s**2 * _a**2 * _b**4 + _s * _u * _b**6 + _s**2 * _u * _b**4
    - 2 * _r * _b**6 - 3 * _r * _s * _b**4 - 4 * _a**2 * _b**4
    - _r * _s**2 * _b**2 + 2 * _u * _b**4 - _s**2 * _a**2
    + 3 * _s * _u * _b**2 - 2 * _r * _b**2 - _r * _s + 4 * _a**2 + 2 * _u,

    _r * _s * _a**2 * _b**4 - _r * _u * _b**6 - _r * _s * _u * _b**4
    - 2 * _u * _a**2 * _b**4 + 2 * _s * _b**6 - 2 * _s * _u * _a**2 * _b**2
    + _r**2 * _b**4 + _r**2 * _s * _b**2 + 4 * _r * _a**2 * _b**2
    + _r * _s * _a**2 - _r * _u * _b**2 + 4 * _b**4 - 2 * _u * _a**2
    - 2 * _s * _b**2 + _r**2 - 4,

    _s * _u * _a**4 * _b**2 + _u**2 * _a**2 * _b**4 + _s * _u**2 * _a**2 * _b**2
    - 2 * _r * _a**4 * _b**2 - _r * _s * _a**4 - 2 * _r * _u * _a**2 * _b**2
    - 4 * _a**2 * _b**4 - _r * _s * _u * _a**2 + 2 * _u * _a**4 + _u**2 * _a**2
    + _s * _u * _b**2 - 2 * _r * _b**2 - _r * _s + 4 * _a**2 + 2 * _u,

    _r * _s * _a**4 * _b**2 - _r * _u * _a**2 * _b**4 - 2 * _u * _a**4 * _b**2
    + 2 * _s * _a**2 * _b**4 - _s * _u * _a**4 + _s * _u * _b**4
    + 2 * _r * _a**4 - 2 * _r * _b**4 + _r * _u * _a**2 - _r * _s * _b**2
    - 2 * _s * _a**2 + 2 * _u * _b**2,

    _s * _u * _a**6 + _u**2 * _a**4 * _b**2 + _s * _u**2 * _a**4
    - 2 * _r * _a**6 - 3 * _r * _u * _a**4 - 4 * _a**4 * _b**2
    - _r * _u**2 * _a**2 + 2 * _s * _a**4 + 3 * _s * _u * _a**2
    - _u**2 * _b**2 - 2 * _r * _a**2 - _r * _u + 4 * _b**2 + 2 * _s,

    _r * _s * _a**6 - _r * _u * _a**4 * _b**2 + _r * _s * _u * _a**4
    - 2 * _u * _a**6 + 2 * _s * _a**4 * _b**2 - _r**2 * _a**4
    + 2 * _s * _u * _a**2 * _b**2 - _r**2 * _u * _a**2
    - 4 * _r * _a**2 * _b**2 + _r * _s * _a**2 - 4 * _a**4 - _r * _u * _b**2
    + 2 * _u * _a**2 + 2 * _s * _b**2 - _r**2 + 4,
)

#: Quartic resolvent of J1 in B = b^2 (ascending coefficients, palindromic).
X4_J1_QUARTIC_B: tuple[Polynomial, ...] = (
    -_u**2 + _r * _s * _u - _s**2 - _r**2 + 4,
    -2 * _s * _u**2 + _r * _s**2 * _u + 4 * _r * _u - 2 * _r**2 * _s,
    -_s**2 * _u**2 - 2 * _u**2 + 6 * _r * _s * _u - _r**2 * _s**2
    + 2 * _s**2 - 2 * _r**2 - 8,
    -2 * _s * _u**2 + _r * _s**2 * _u + 4 * _r * _u - 2 * _r**2 * _s,
    -_u**2 + _r * _s * _u - _s**2 - _r**2 + 4,
)

#: Coordinate-type components: a biquadratic in one coefficient, the other 0.
#: Ascending coefficients of (b^0, b^2, b^4).
X4_J2_BIQUADRATIC = (_r**2 - 4, 2 * _r * _u - 4 * _s, _u**2 - 4)   # a = 0
X4_J3_BIQUADRATIC = (_r**2 - 4, 2 * _r * _s - 4 * _u, _s**2 - 4)   # b = 0


def x4_j1_a_squared_splits():
    """Generators of J1 that are linear in a^2, split as (coeff of a^2, rest).

    Used to recover ``a`` for each root ``b`` of the resolvent; the solver
    picks whichever split has the best-conditioned leading value.
    """
    splits = []
    a2 = {"a": 2}
    for gen in (X4_J1_GENERATORS[2], X4_J1_GENERATORS[3], X4_J1_GENERATORS[4]):
        coeff = Polynomial.zero(TABLE_X4)
        rest = Polynomial.zero(TABLE_X4)
        ia = TABLE_X4.index("a")
        for exps, c in gen.terms.items():
            if exps[ia] == 2:
                stripped = list(exps)
                stripped[ia] = 0
                coeff = coeff + Polynomial(TABLE_X4, {tuple(stripped): c})
            elif exps[ia] == 0:
                rest = rest + Polynomial(TABLE_X4, {exps: c})
            else:
                raise AssertionError("generator not linear in a^2")
        splits.append((coeff, rest))
    return splits


X4_J1_A2_SPLITS = x4_j1_a_squared_splits()


# -- X16 ----------------------------------------------------------------------

_a, _b, _r, _s = _vars(TABLE_X16)

#: (component tag, kind, data) for the (a, b) chart; see bitangent._solve_x16.
X16_J1_BIQUADRATIC = (_r**2 - 4, 2 * _r * _s - 4 * _s, _s**2 - 4)       # a = 0
X16_J2_BIQUADRATIC = (_r**2 - 4, 2 * _r * _s - 4 * _s, _s**2 - 4)       # b = 0
X16_J56_BIQUADRATIC = (2 - _r, 2 * _s - _r * _s, _s**2 - _r - 2)        # a = -b / a = b
X16_J7_BIQUADRATIC = (_r + 2 - _s**2, _r * _s - 2 * _s, _r - 2)         # a^2 = -s - b^2
#: Lines with zero z-coefficient (x + b*y = 0), seen from the x-normalized
#: chart; the u = s specialization of X4's analogous component.
X16_XY_BIQUADRATIC = (_s**2 - 4, 2 * _s**2 - 4 * _r, _s**2 - 4)


# -- X24 ----------------------------------------------------------------------

_a, _b, _r = _vars(TABLE_X24)

X24_J2_BIQUADRATIC = (_r + 2, 2 * _r, _r + 2)      # a = 0, and also the x+b*y lines
X24_RATIONAL_POINTS = (                            # (tag, a, b)
    ("J4", 1, -1),
    ("J5", -1, 1),
    ("J7", -1, -1),
    ("J8", 1, 1),
)
X24_J69_QUADRATIC = (1, _r + 1)                    # (r+1) b^2 + 1, a = -/+ b
X24_J10_13_QUADRATIC = (_r + 1, 1)                 # b^2 + r + 1 with a = -/+ 1
