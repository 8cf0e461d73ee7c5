"""Differential pairings, Hessian machinery and binary transvectants.

These are the computational primitives behind the quartic invariants:

* ``diff_pair(f, g)`` applies the differential operator determined by ``f``
  to ``g``: each term ``c * x1^i1 ... xn^in`` of ``f`` contributes
  ``c * d^(i1+...+in) g / dx1^i1 ... dxn^in``.  Only geometric variables
  differentiate; parameter content of ``f`` multiplies through.
* ``hessian(f)`` builds the matrix of second partials, scaled by a
  convention constant (see :data:`quartics.dixmier.HESSIAN_SCALE`).
* ``transvectant(F, G, k)`` is the classical bilinear pairing of two binary
  forms, computed by direct binomial expansion of the Cayley operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeError, DomainError, TableMismatchError
from .polyring import Polynomial, multi_partial, partial


def diff_pair(f: Polynomial, g: Polynomial) -> Polynomial:
    """Apply the differential operator of ``f`` to ``g`` (exact).

    If the geometric degree of ``f`` exceeds that of ``g`` the result is 0;
    over-differentiation vanishes term by term, so no precondition is needed.
    """
    if f.table != g.table:
        raise TableMismatchError("diff_pair operands use different variable tables")
    table = f.table
    ng = table.n_geometric
    gnames = table.geometric
    result = Polynomial.zero(table)
    cache: dict[tuple, Polynomial] = {}
    for exps, coeff in f.terms.items():
        geo = exps[:ng]
        if geo not in cache:
            cache[geo] = multi_partial(g, {n: e for n, e in zip(gnames, geo) if e})
        diff = cache[geo]
        if diff.is_zero():
            continue
        par_monomial = Polynomial(table, {(0,) * ng + exps[ng:]: coeff})
        result = result + par_monomial * diff
    return result


@dataclass(frozen=True)
class PolyMatrix:
    """A square matrix of polynomials; entries of a symmetric matrix must match exactly."""

    entries: tuple[tuple[Polynomial, ...], ...]
    symmetric: bool = False

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix is not square")
        if self.symmetric:
            for i in range(n):
                for j in range(i):
                    if self.entries[i][j] != self.entries[j][i]:
                        raise ValueError(f"symmetric flag set but entries ({i},{j}) differ")

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def matrix_from_rows(rows, symmetric: bool = False) -> PolyMatrix:
    return PolyMatrix(tuple(tuple(row) for row in rows), symmetric=symmetric)


def hessian(f: Polynomial, scale: Fraction = Fraction(1)) -> PolyMatrix:
    """Matrix of second partials of ``f`` in its 3 geometric variables, times *scale*."""
    table = f.table
    if table.n_geometric != 3:
        raise DegreeError(f"hessian needs 3 geometric variables, table has {table.n_geometric}")
    x, y, z = table.geometric
    rows = []
    for a in (x, y, z):
        row = []
        for b in (x, y, z):
            entry = partial(partial(f, a), b)
            if scale != 1:
                entry = entry * scale
            row.append(entry)
        rows.append(tuple(row))
    return PolyMatrix(tuple(rows), symmetric=True)


def det(m: PolyMatrix) -> Polynomial:
    """Exact determinant by cofactor expansion (sizes up to 4 in practice)."""
    return _det_rows([list(row) for row in m.entries])


def _det_rows(rows) -> Polynomial:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    table = rows[0][0].table
    total = Polynomial.zero(table)
    for j in range(n):
        entry = rows[0][j]
        if entry.is_zero():
            continue
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        cofactor = _det_rows(minor)
        term = entry * cofactor
        total = total + (term if j % 2 == 0 else -term)
    return total


def adjugate(m: PolyMatrix) -> PolyMatrix:
    """Classical adjugate (transpose of cofactors) of a 3x3 matrix.

    Satisfies ``m * adj(m) = det(m) * Id`` exactly.
    """
    if m.size != 3:
        raise DegreeError("adjugate implemented for 3x3 matrices")
    e = m.entries
    def cof(i, j):
        rows = [r for r in range(3) if r != i]
        cols = [c for c in range(3) if c != j]
        minor = e[rows[0]][cols[0]] * e[rows[1]][cols[1]] - e[rows[0]][cols[1]] * e[rows[1]][cols[0]]
        return minor if (i + j) % 2 == 0 else -minor
    # adjugate[i][j] = cofactor(j, i)
    rows = tuple(tuple(cof(j, i) for j in range(3)) for i in range(3))
    return PolyMatrix(rows, symmetric=m.symmetric)


def dot(a: PolyMatrix, b: PolyMatrix) -> Polynomial:
    """Matrix dot product ``sum_ij a[i][j] * b[j][i]`` (exact)."""
    if a.size != b.size:
        raise DegreeError(f"dot of {a.size}x{a.size} with {b.size}x{b.size}")
    table = a.entries[0][0].table
    total = Polynomial.zero(table)
    for i in range(a.size):
        for j in range(a.size):
            total = total + a.entries[i][j] * b.entries[j][i]
    return total


_J_KINDS = ("J11", "J22", "J30", "J03")


def j_bracket(kind: str, f: Polynomial, g: Polynomial,
              scale: Fraction = Fraction(1)) -> Polynomial:
    """The four J-brackets of two quadratic ternary forms.

    ``J11 = <H(f), H(g)>``, ``J22 = <H*(f), H*(g)>``, ``J30 = det H(f)``,
    ``J03 = det H(g)``.  The Hessians of quadratics have constant entries.
    Degenerate inputs of geometric degree below 2 are allowed (their second
    partials simply vanish); degree above 2 is an error.
    """
    if kind not in _J_KINDS:
        raise DomainError(f"unknown J bracket {kind!r}; expected one of {_J_KINDS}")
    for p in (f, g):
        if p.geometric_degree() > 2:
            raise DegreeError("J brackets are defined for quadratic forms")
    if kind == "J11":
        return dot(hessian(f, scale), hessian(g, scale))
    if kind == "J22":
        return dot(adjugate(hessian(f, scale)), adjugate(hessian(g, scale)))
    if kind == "J30":
        return det(hessian(f, scale))
    return det(hessian(g, scale))


def _binary_checks(F: Polynomial, G: Polynomial, pair: tuple[str, str]):
    x, y = pair
    for p, label in ((F, "F"), (G, "G")):
        extra = {n for n in p.support_names() if p.table.is_geometric(n)} - {x, y}
        if extra:
            raise DegreeError(f"{label} is not a binary form in ({x},{y}): uses {sorted(extra)}")
        if not p.is_geometric_homogeneous():
            raise DegreeError(f"{label} is not homogeneous in ({x},{y})")


def transvectant(F: Polynomial, G: Polynomial, k: int,
                 pair: tuple[str, str] | None = None) -> Polynomial:
    """The k-th transvectant of two binary forms.

    With ``r = deg F`` and ``s = deg G``::

        (F,G)^k = (r-k)!(s-k)!/(r!s!) *
                  sum_m C(k,m) (-1)^m  dx^(k-m) dy^m F  *  dx^m dy^(k-m) G

    which is the binomial expansion of the Cayley operator power.  Requires
    ``k <= min(r, s)``.
    """
    if F.table != G.table:
        raise TableMismatchError("transvectant operands use different variable tables")
    if pair is None:
        pair = F.table.geometric[:2]
        if len(pair) < 2:
            raise DegreeError("table has fewer than two geometric variables")
    x, y = pair
    if F.is_zero() or G.is_zero():
        return Polynomial.zero(F.table)
    _binary_checks(F, G, pair)
    r = F.geometric_degree()
    s = G.geometric_degree()
    if k < 0 or k > min(r, s):
        raise DomainError(f"transvectant order {k} exceeds min(deg F, deg G) = {min(r, s)}")
    table = F.table
    total = Polynomial.zero(table)
    for m in range(k + 1):
        dF = multi_partial(F, {x: k - m, y: m})
        dG = multi_partial(G, {x: m, y: k - m})
        term = dF * dG * Fraction((-1) ** m * math.comb(k, m))
        total = total + term
    scale = Fraction(
        math.factorial(r - k) * math.factorial(s - k),
        math.factorial(r) * math.factorial(s),
    )
    return total * scale
