"""The Dixmier invariant pipeline for ternary quartics.

The construction restricts a quartic ``f(x, y, z)`` to the pencil of lines
``z = -u*x - v*y``, takes the two classical invariants of the resulting
binary quartic (``Sigma``, the apolar invariant, and ``Psi``, the
catalecticant), and homogenizes them into the contravariants ``sigma``
(degree 4) and ``psi`` (degree 6).  Pairing back against ``f`` produces the
quadratic covariants ``rho`` and ``tau``, and the six invariants

    I3  = D_sigma(f)
    I6  = D_psi(det H(f)) - I3^2 / 2592
    I9  = J11(tau, rho)          I12 = J03(rho)
    I15 = J30(tau)               I18 = J22(tau, rho)

Conventions are pinned by exact reference values: the Hessian carries bare
second partials (scale 1), and the ``1/2592 = 8/144^2`` correction inside
``I6`` is the unique constant reproducing the reference tables of all four
symmetric families, anchored at ``I6 = 13822`` for the Fermat quartic.

All six invariants are polynomials in the curve parameters with no
geometric content; everything here is exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import diffcalc
from .diffcalc import diff_pair, hessian, j_bracket, transvectant
from .errors import DegreeError
from .polyring import Polynomial, VarTable, convert, homogenize, substitute_linear

# Hessian convention: bare second partials.  The alternative 1/2 scale fails
# the Fermat anchor I6 = 13822 by a wide margin; see tests/test_dixmier.py.
HESSIAN_SCALE = Fraction(1)

# Coefficient of the I3^2 correction inside I6, equal to 8/144^2.  Fixed by
# requiring I6 to match the reference tables exactly (it is the only rational
# constant that does, across all four families simultaneously).
I6_CORRECTION = Fraction(8, 144 ** 2)


def _as_poly(f) -> Polynomial:
    return f.poly if hasattr(f, "poly") else f


@dataclass(frozen=True)
class BinaryQuartic:
    """Coefficients ``a0..a4`` of ``a0*x^4 + a1*x^3*y + ... + a4*y^4``.

    Coefficients may themselves be polynomials (e.g. in line parameters), so
    they are stored as :class:`Polynomial` values over a common table.
    """

    coefficients: tuple[Polynomial, Polynomial, Polynomial, Polynomial, Polynomial]
    pair: tuple[str, str]

    def __post_init__(self):
        if len(self.coefficients) != 5:
            raise ValueError("a binary quartic has exactly 5 coefficient slots")

    @property
    def table(self) -> VarTable:
        return self.coefficients[0].table

    @classmethod
    def from_polynomial(cls, p: Polynomial, pair: tuple[str, str] | None = None) -> "BinaryQuartic":
        if pair is None:
            pair = p.table.geometric[:2]
        x, y = pair
        if p.geometric_degree() > 4:
            raise DegreeError("not a binary quartic: geometric degree exceeds 4")
        coeffs = []
        slots = set()
        groups = p.geometric_coefficients()
        ix, iy = p.table.index(x), p.table.index(y)
        ng = p.table.n_geometric
        for i in range(5):
            want = [0] * ng
            want[ix] = 4 - i
            want[iy] = i
            slots.add(tuple(want))
            coeffs.append(groups.get(tuple(want), Polynomial.zero(p.table)))
        bad = set(groups) - slots
        if bad:
            raise DegreeError(f"form has geometric monomials outside ({x},{y}) degree 4: {sorted(bad)}")
        return cls(tuple(coeffs), (x, y))

    def to_polynomial(self) -> Polynomial:
        x, y = self.pair
        table = self.table
        total = Polynomial.zero(table)
        for i, c in enumerate(self.coefficients):
            total = total + c * Polynomial.monomial(table, {x: 4 - i, y: i})
        return total


def _binary_input(P) -> tuple[Polynomial, tuple[str, str]]:
    if isinstance(P, BinaryQuartic):
        return P.to_polynomial(), P.pair
    p = _as_poly(P)
    return p, p.table.geometric[:2]


def sigma_binary(P) -> Polynomial:
    """Apolar invariant ``Sigma(P) = 1/2 (P,P)^4`` of a binary quartic."""
    p, pair = _binary_input(P)
    return transvectant(p, p, 4, pair) * Fraction(1, 2)


def psi_binary(P) -> Polynomial:
    """Catalecticant ``Psi(P) = 1/6 (P, (P,P)^2)^4`` of a binary quartic.

    ``(P,P)^2`` is the classical quartic covariant of ``P``; pairing it back
    against ``P`` gives the degree-3 invariant, normalized so that
    ``Sigma^3 - 27 Psi^2`` is the discriminant.
    """
    p, pair = _binary_input(P)
    q = transvectant(p, p, 2, pair)
    return transvectant(p, q, 4, pair) * Fraction(1, 6)


def delta_binary(P) -> Polynomial:
    """Discriminant ``Delta(P) = Sigma(P)^3 - 27 Psi(P)^2`` (zero iff P has a repeated root)."""
    s = sigma_binary(P)
    t = psi_binary(P)
    return s ** 3 - t ** 2 * 27


@dataclass(frozen=True)
class InvariantSet:
    """The six quartic invariants as exact polynomials in the curve parameters."""

    I3: Polynomial
    I6: Polynomial
    I9: Polynomial
    I12: Polynomial
    I15: Polynomial
    I18: Polynomial

    def as_dict(self) -> dict[int, Polynomial]:
        return {3: self.I3, 6: self.I6, 9: self.I9, 12: self.I12, 15: self.I15, 18: self.I18}

    WEIGHTS = (3, 6, 9, 12, 15, 18)


def _dual_names(table: VarTable) -> tuple[str, str]:
    taken = set(table.names)
    u, v = "du", "dv"
    while u in taken or v in taken:
        u, v = u + "_", v + "_"
    return u, v


def contravariants(f) -> tuple[Polynomial, Polynomial]:
    """The contravariants ``sigma`` (quartic) and ``psi`` (sextic) of a ternary quartic.

    Build ``g(x,y) = f(x, y, -u*x - v*y)`` over fresh dual parameters
    ``(u, v)``, take ``Sigma(g)`` and ``Psi(g)``, promote ``(u, v)`` to the
    first two geometric coordinates, homogenize with the third to degrees 4
    and 6, and return both forms in the table of ``f``.
    """
    p = _as_poly(f)
    table = p.table
    if table.n_geometric != 3:
        raise DegreeError("contravariants need a ternary form")
    if p.geometric_degree() != 4 or not p.is_geometric_homogeneous():
        raise DegreeError("contravariants need a homogeneous quartic")
    x, y, z = table.geometric
    du, dv = _dual_names(table)
    work = VarTable(table.geometric, table.parameters + (du, dv))
    g = convert(p, work)
    line = -(Polynomial.variable(work, du) * Polynomial.variable(work, x)
             + Polynomial.variable(work, dv) * Polynomial.variable(work, y))
    g = substitute_linear(g, z, line)

    sig = transvectant(g, g, 4, (x, y)) * Fraction(1, 2)
    q = transvectant(g, g, 2, (x, y))
    psi = transvectant(g, q, 4, (x, y)) * Fraction(1, 6)

    def promote(expr: Polynomial, degree: int) -> Polynomial:
        dual = convert(expr, work, {du: x, dv: y})
        dual = homogenize(dual, z, degree)
        return convert(dual, table)

    return promote(sig, 4), promote(psi, 6)


def covariants(f, psi: Polynomial | None = None) -> tuple[Polynomial, Polynomial, Polynomial]:
    """The quadratic covariants ``rho = D_f(psi)``, ``tau = D_rho(f)`` and
    the Hessian determinant ``det H(f)`` (a sextic)."""
    p = _as_poly(f)
    if psi is None:
        _, psi = contravariants(p)
    rho = diff_pair(p, psi)
    tau = diff_pair(rho, p)
    hdet = diffcalc.det(hessian(p, HESSIAN_SCALE))
    return rho, tau, hdet


def dixmier_invariants(f) -> InvariantSet:
    """All six invariants of a ternary quartic, exactly.

    Accepts a :class:`~quartics.symfam.QuarticForm` or a plain quartic
    :class:`Polynomial`; parameter-valued coefficients are fine, in which
    case the invariants are polynomials in those parameters.
    """
    p = _as_poly(f)
    sigma, psi = contravariants(p)
    rho, tau, hdet = covariants(p, psi)

    i3 = diff_pair(sigma, p)
    i6 = diff_pair(psi, hdet) - i3 * i3 * I6_CORRECTION
    i9 = j_bracket("J11", tau, rho, HESSIAN_SCALE)
    i12 = j_bracket("J03", rho, rho, HESSIAN_SCALE)
    i15 = j_bracket("J30", tau, tau, HESSIAN_SCALE)
    i18 = j_bracket("J22", tau, rho, HESSIAN_SCALE)

    inv = InvariantSet(i3, i6, i9, i12, i15, i18)
    for k, value in inv.as_dict().items():
        if value.geometric_degree() != 0:
            raise DegreeError(f"I{k} kept geometric content; input was not a quartic form")
    return inv
