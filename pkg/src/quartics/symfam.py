"""Constructors for the four symmetric quartic families and the monomial
symmetric basis used to present their invariants.

The families, labeled by the order of their automorphism group:

    X4(r,s,u)   x^4 + y^4 + z^4 + r x^2 y^2 + s y^2 z^2 + u z^2 x^2
    X16(r,s)    x^4 + y^4 + z^4 + r x^2 y^2 + s (y^2 z^2 + z^2 x^2)
    X24(r)      x^4 + y^4 + z^4 + r (x^2 y^2 + y^2 z^2 + z^2 x^2)
    X96         x^4 + y^4 + z^4

X4's invariants are symmetric in (r,s,u), so they decompose over the basis
``S[i1,i2,i3]``: the monomial symmetric polynomial whose leading term is
``r^i1 s^i2 u^i3``.  Reference invariant tables for all four families ship
as data files (see ``data/golden``); :func:`golden_compare` checks a
computed :class:`~quartics.dixmier.InvariantSet` against them, reporting the
per-invariant constant ratio or the first mismatch.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Sequence

from .dixmier import InvariantSet, dixmier_invariants
from .errors import DomainError
from .polyring import Polynomial, VarTable

FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "X4": ("r", "s", "u"),
    "X16": ("r", "s"),
    "X24": ("r",),
    "X96": (),
}

GEOMETRIC = ("x", "y", "z")

# Exponent triples (i, j, k) of x^i y^j z^k for each family parameter slot.
_FAMILY_MONOMIALS: dict[str, tuple[tuple[tuple[int, int, int], ...], ...]] = {
    "X4": (((2, 2, 0),), ((0, 2, 2),), ((2, 0, 2),)),
    "X16": (((2, 2, 0),), ((0, 2, 2), (2, 0, 2))),
    "X24": (((2, 2, 0), (0, 2, 2), (2, 0, 2)),),
    "X96": (),
}


@dataclass(frozen=True)
class QuarticForm:
    """A ternary quartic with family metadata.

    ``params`` holds the parameter bindings: variable names for a symbolic
    form, exact rationals for a numeric one.
    """

    poly: Polynomial
    family: str
    params: tuple

    def __post_init__(self):
        if self.poly.geometric_degree() != 4 or not self.poly.is_geometric_homogeneous():
            raise DomainError("a QuarticForm must be homogeneous of geometric degree 4")

    @property
    def symbolic(self) -> bool:
        return any(isinstance(p, str) for p in self.params)


def family_table(family: str, symbolic: bool) -> VarTable:
    params = FAMILY_PARAMS[family] if symbolic else ()
    return VarTable(GEOMETRIC, params)


def make_family(family: str, params: Sequence[Fraction | int | str] | None = None) -> QuarticForm:
    """Build one of the four family quartics.

    ``params=None`` gives the symbolic form (parameters stay variables);
    otherwise exactly the family's arity of exact rationals is required.
    """
    if family not in FAMILY_PARAMS:
        raise DomainError(f"unknown family {family!r}; expected one of {sorted(FAMILY_PARAMS)}")
    names = FAMILY_PARAMS[family]
    symbolic = params is None
    if symbolic:
        values: tuple = names
    else:
        if len(params) != len(names):
            raise DomainError(f"{family} takes {len(names)} parameter(s), got {len(params)}")
        values = tuple(Fraction(p) for p in params)
    table = family_table(family, symbolic)
    poly = Polynomial.zero(table)
    for v in GEOMETRIC:
        poly = poly + Polynomial.monomial(table, {v: 4})
    for slot, monomials in enumerate(_FAMILY_MONOMIALS[family]):
        if symbolic:
            coeff = Polynomial.variable(table, names[slot])
        else:
            coeff = Polynomial.constant(table, values[slot])
        for (i, j, k) in monomials:
            poly = poly + coeff * Polynomial.monomial(table, {"x": i, "y": j, "z": k})
    return QuarticForm(poly, family, values)


# Graded-lex order of the 15 quartic monomials x^i y^j z^k, used by the CLI
# to accept generic coefficient lists.
GENERIC_MONOMIALS = tuple(
    sorted(
        ((i, j, 4 - i - j) for i in range(5) for j in range(5 - i)),
        reverse=True,
    )
)


def make_generic(coeffs: Sequence[Fraction | int]) -> QuarticForm:
    """A generic numeric quartic from its 15 coefficients in graded-lex monomial order."""
    if len(coeffs) != 15:
        raise DomainError(f"a generic quartic takes 15 coefficients, got {len(coeffs)}")
    table = VarTable(GEOMETRIC)
    poly = Polynomial.zero(table)
    for (i, j, k), c in zip(GENERIC_MONOMIALS, coeffs):
        poly = poly + Polynomial.monomial(table, {"x": i, "y": j, "z": k}, Fraction(c))
    return QuarticForm(poly, "GENERIC", tuple(Fraction(c) for c in coeffs))


# -- monomial symmetric basis ------------------------------------------------


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of at most 3 positive integers."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) > 3 or any(p < 1 for p in parts):
            raise DomainError(f"invalid partition {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing: {parts}")

    def padded(self) -> tuple[int, int, int]:
        return tuple(list(self.parts) + [0] * (3 - len(self.parts)))

    def __str__(self):
        return "[" + ",".join(str(p) for p in self.parts) + "]"


def s_basis(partition: Partition | Sequence[int], table: VarTable | None = None,
            names: tuple[str, str, str] = ("r", "s", "u")) -> Polynomial:
    """The monomial symmetric polynomial with leading term ``r^i1 s^i2 u^i3``.

    The orbit of the leading monomial under all six permutations, each
    distinct monomial once (orbit sizes are 1, 3 or 6).
    """
    if not isinstance(partition, Partition):
        partition = Partition(tuple(partition))
    if table is None:
        table = VarTable(GEOMETRIC, names)
    exps = partition.padded()
    poly = Polynomial.zero(table)
    for perm in sorted(set(itertools.permutations(exps))):
        poly = poly + Polynomial.monomial(table, dict(zip(names, perm)))
    return poly


@dataclass(frozen=True)
class SymmetricDecomposition:
    """An expansion ``constant + sum coeff * S[partition]``."""

    constant: Fraction
    terms: tuple[tuple[Partition, Fraction], ...]

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return {p.parts: c for p, c in self.terms}


def is_symmetric(p: Polynomial, names: tuple[str, str, str] = ("r", "s", "u")) -> bool:
    idx = [p.table.index(n) for n in names]
    for perm in itertools.permutations(range(3)):
        table = {}
        for exps, coeff in p.terms.items():
            new = list(exps)
            for a, b in zip(idx, perm):
                new[a] = exps[idx[b]]
            table[tuple(new)] = coeff
        if table != dict(p.terms):
            return False
    return True


def decompose_symmetric(p: Polynomial, names: tuple[str, str, str] = ("r", "s", "u")) -> SymmetricDecomposition:
    """Expand a symmetric polynomial in *names* over the monomial symmetric basis.

    Greedy peel: repeatedly subtract ``coeff * S[partition]`` for the
    graded-lex leading monomial until only the constant remains.  Raises
    :class:`DomainError` if the input is not symmetric or involves other
    variables.
    """
    extra = p.support_names() - set(names)
    if extra:
        raise DomainError(f"polynomial involves non-basis variables {sorted(extra)}")
    if not is_symmetric(p, names):
        raise DomainError("polynomial is not symmetric in the parameters")
    idx = [p.table.index(n) for n in names]
    remainder = p
    collected: list[tuple[Partition, Fraction]] = []
    while True:
        lead = None
        for exps, coeff in remainder.terms.items():
            key = (sum(exps), exps)
            if sum(exps) and (lead is None or key > lead[0]):
                lead = (key, exps, coeff)
        if lead is None:
            break
        _, exps, coeff = lead
        parts = tuple(sorted((exps[i] for i in idx if exps[i]), reverse=True))
        part = Partition(parts)
        collected.append((part, coeff))
        remainder = remainder - s_basis(part, p.table, names) * coeff
    constant = remainder.constant_value()
    collected.sort(key=lambda pc: (sum(pc[0].parts), pc[0].padded()), reverse=True)
    return SymmetricDecomposition(constant, tuple(collected))


def reconstruct(dec: SymmetricDecomposition, table: VarTable | None = None,
                names: tuple[str, str, str] = ("r", "s", "u")) -> Polynomial:
    if table is None:
        table = VarTable(GEOMETRIC, names)
    total = Polynomial.constant(table, dec.constant)
    for part, coeff in dec.terms:
        total = total + s_basis(part, table, names) * coeff
    return total


# -- reference ("golden") tables ---------------------------------------------


@dataclass(frozen=True)
class GoldenEntry:
    prefactor: Fraction
    coefficients: tuple[tuple[tuple[int, ...], Fraction], ...]


def load_golden(family: str) -> dict[int, GoldenEntry]:
    """Parse a family's reference invariant table from the data directory.

    Format, one entry per line: ``I<k> prefactor <rational>`` or
    ``I<k> <key> <rational>`` where ``<key>`` is ``const`` or a bracketed
    exponent list ``[i1,i2,...]`` (a partition for X4's symmetric basis,
    plain monomial exponents otherwise).
    """
    text = (
        resources.files("quartics")
        .joinpath(f"data/golden/{family}.txt")
        .read_text(encoding="utf-8")
    )
    pre: dict[int, Fraction] = {}
    rows: dict[int, list[tuple[tuple[int, ...], Fraction]]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        label, key, value = line.split()
        k = int(label[1:])
        coeff = Fraction(value)
        if key == "prefactor":
            pre[k] = coeff
            continue
        exps = () if key == "const" else tuple(int(t) for t in key.strip("[]").split(",") if t)
        rows.setdefault(k, []).append((exps, coeff))
    out = {}
    for k in (3, 6, 9, 12, 15, 18):
        out[k] = GoldenEntry(pre.get(k, Fraction(1)), tuple(rows.get(k, [])))
    return out


def golden_polynomial(family: str, k: int, table: VarTable) -> Polynomial:
    """The reference table entry for I_k as a polynomial over *table*."""
    entry = load_golden(family)[k]
    names = FAMILY_PARAMS[family]
    total = Polynomial.zero(table)
    for exps, coeff in entry.coefficients:
        if family == "X4":
            basis = (
                s_basis(Partition(exps), table, names)
                if exps
                else Polynomial.constant(table, 1)
            )
        else:
            basis = Polynomial.monomial(table, dict(zip(names, exps)))
        total = total + basis * coeff
    return total * entry.prefactor


@dataclass(frozen=True)
class GoldenReport:
    """Per-invariant comparison against a family's reference table.

    ``gamma[k]`` is the constant ratio computed/table when both sides are
    nonzero, ``None`` when both vanish (ratio undetermined).  Mismatches go
    to ``failures`` with the first differing monomial.
    """

    family: str
    gamma: dict[int, Fraction | None]
    failures: dict[int, str]

    @property
    def ok(self) -> bool:
        return not self.failures


def golden_compare(inv: InvariantSet, family: str) -> GoldenReport:
    """Test ``computed I_k == gamma_k * table I_k`` for a single rational gamma_k."""
    if family not in FAMILY_PARAMS:
        raise DomainError(f"unknown family {family!r}")
    gamma: dict[int, Fraction | None] = {}
    failures: dict[int, str] = {}
    computed = inv.as_dict()
    for k, ours in computed.items():
        table_poly = golden_polynomial(family, k, ours.table)
        if table_poly.is_zero() and ours.is_zero():
            gamma[k] = None
            continue
        if table_poly.is_zero() or ours.is_zero():
            failures[k] = "one side identically zero, the other not"
            gamma[k] = None
            continue
        lead_exps, lead_coeff = table_poly.sorted_terms()[0]
        ratio = ours.terms.get(lead_exps, Fraction(0)) / lead_coeff
        diff = ours - table_poly * ratio
        if diff.is_zero():
            gamma[k] = ratio
        else:
            exps, coeff = diff.sorted_terms()[0]
            failures[k] = f"first differing monomial {exps}: residue {coeff}"
            gamma[k] = None
    return GoldenReport(family, gamma, failures)


def family_invariants(family: str, params=None) -> InvariantSet:
    """Convenience: build the family and run the invariant pipeline."""
    return dixmier_invariants(make_family(family, params))
