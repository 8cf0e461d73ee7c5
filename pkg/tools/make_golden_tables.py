"""Generate the reference invariant tables under src/quartics/data/golden/.

The factored expressions below are transcribed from the published tables for
the four symmetric quartic families.  They are expanded with sympy (kept
deliberately independent of the package's own polynomial arithmetic, so the
golden files act as a true second route) and written in the line format
documented in quartics.symfam.load_golden.

Run from the repository root:  python tools/make_golden_tables.py

The script also cross-checks the tables against each other under parameter
specialization and prints the prefactor anomalies of the three-parameter
family's table relative to the others.
"""

from __future__ import annotations

import pathlib

import sympy as sp

r, s, u = sp.symbols("r s u")

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "quartics" / "data" / "golden"


# -- transcribed tables ------------------------------------------------------

# Three-parameter family: coefficients over the monomial symmetric basis
# S[i1,i2,i3]; stored as (prefactor, {partition or (): coefficient}).
X4_TABLE = {
    3: (sp.Integer(2), {(2,): 3, (1, 1, 1): 1, (): 36}),
    6: (sp.Integer(1), {
        (4,): 62199, (3, 1, 1): -622086, (2, 2, 2): 228095, (2, 2): 124398,
        (2,): 1492776, (1, 1, 1): 24385464, (): 8956656}),
    9: (sp.Integer(1), {
        (6,): 81, (5, 1, 1): -33, (4, 2, 2): 15, (4, 2): 99, (4,): -5832,
        (3, 3, 3): 1, (3, 3, 1): 270, (3, 1, 1): 9936, (2, 2, 2): 4590,
        (2, 2): 40176, (2,): 104976, (1, 1, 1): 244944}),
    12: (sp.Rational(-64, 729), {
        (7, 1, 1): 2025, (6, 2, 2): 45, (6, 2): 9720, (5, 3, 3): -21,
        (5, 3, 1): -2997, (5, 1, 1): 61236, (4, 4, 4): -1, (4, 4, 2): -558,
        (4, 4): -22032, (4, 2, 2): -47952, (4, 2): -139968, (3, 3, 3): -7398,
        (3, 3, 1): -359640, (3, 1, 1): -3884112, (2, 2, 2): -2787696,
        (2, 2): -7558272, (1, 1, 1): -34012224}),
    15: (sp.Rational(-4096, 729), {
        (9, 1, 1): 243, (8, 2): 6561, (7, 3, 3): -90, (7, 3, 1): -1215,
        (7, 1, 1): 255879, (6, 4, 4): -24, (6, 4, 2): -2781, (6, 4): -15309,
        (6, 2, 2): -105462, (6, 2): 1023516, (5, 5, 5): -1, (5, 5, 3): -621,
        (5, 5, 1): -14580, (5, 3, 3): -106110, (5, 3, 1): -1454355,
        (5, 1, 1): 2598156, (4, 4, 4): -18198, (4, 4, 2): -817938,
        (4, 4): -4251528, (4, 2, 2): -21983724, (4, 2): -31177872,
        (3, 3, 3): -8341218, (3, 3, 1): -85817880, (3, 1, 1): -410981040,
        (2, 2, 2): -463574016, (2, 2): -510183360, (1, 1, 1): -918330048}),
    18: (sp.Rational(4096, 2187), {
        (11, 1, 1): 7290, (10, 2, 2): -2079, (10, 2): 115911, (9, 3, 3): -1296,
        (9, 3, 1): -63342, (9, 1, 1): 1889568, (8, 4, 4): 150, (8, 4, 2): -12150,
        (8, 4): -527796, (8, 2, 2): -1471365, (8, 2): -1889568, (7, 5, 5): 30,
        (7, 5, 3): 7704, (7, 5, 1): 128628, (7, 3, 3): 233604,
        (7, 3, 1): -8386416, (7, 1, 1): -124711488, (6, 6, 6): 1,
        (6, 6, 4): 999, (6, 6, 2): 90882, (6, 6): 952074, (6, 4, 4): 286686,
        (6, 4, 2): 7813422, (6, 4): 11967264, (6, 2, 2): 32087664,
        (6, 2): -289103904, (5, 5, 5): 32508, (5, 5, 3): 3163860,
        (5, 5, 1): 38327904, (5, 3, 3): 140796144, (5, 3, 1): 799077312,
        (5, 1, 1): 272097792, (4, 4, 4): 38750724, (4, 4, 2): 742250304,
        (4, 4): 1522991808, (4, 2, 2): 8600683680, (4, 2): 6530347008,
        (3, 3, 3): 4828476096, (3, 3, 1): 22810864896, (3, 1, 1): 51426482688,
        (2, 2, 2): 85710804480, (2, 2): 33059881728}),
}

# Two-parameter family in (r, s): (prefactor, inner polynomial expression).
X16_TABLE = {
    3: (sp.Integer(2), r * s**2 + 6 * s**2 + 3 * r**2 + 36),
    6: (sp.Rational(1, 648),
        228095 * r**2 * s**4 - 1244172 * r * s**4 + 248796 * s**4
        - 622086 * r**3 * s**2 + 248796 * r**2 * s**2 + 24385464 * r * s**2
        + 2985552 * s**2 + 62199 * r**4 + 1492776 * r**2 + 8956656),
    9: (sp.Rational(64, 27),
        r**3 * s**6 + 30 * r**2 * s**6 + 204 * r * s**6 + 360 * s**6
        + 15 * r**4 * s**4 + 540 * r**3 * s**4 + 4788 * r**2 * s**4
        + 19872 * r * s**4 + 28512 * s**4 - 33 * r**5 * s**2 + 198 * r**4 * s**2
        + 9936 * r**3 * s**2 + 80352 * r**2 * s**2 + 244944 * r * s**2
        + 209952 * s**2 + 81 * r**6 - 5832 * r**4 + 104976 * r**2),
    12: (sp.Rational(64, 729),
         s**2 * (r * s**2 + 6 * s**2 + 15 * r**2 + 72 * r + 324)**2
         * (r**2 * s**2 + 30 * r * s**2 + 72 * s**2 - 9 * r**3 + 324 * r)),
    15: (sp.Rational(4096, 729),
         (r + 3)**2 * (r + 18)**2 * s**2 * (s**2 + 3 * r + 18)**2
         * (r * s**4 + 6 * s**4 + 18 * r**2 * s**2 + 162 * r * s**2
            + 540 * s**2 - 27 * r**3 + 972 * r)),
    18: (sp.Rational(4096, 2187),
         (r + 3) * (r + 18) * s**2 * (s**2 + 3 * r + 18)
         * (r * s**2 + 6 * s**2 + 15 * r**2 + 72 * r + 324)
         * (r**3 * s**6 + 33 * r**2 * s**6 + 228 * r * s**6 + 396 * s**6
            + 12 * r**4 * s**4 + 594 * r**3 * s**4 + 5904 * r**2 * s**4
            + 24840 * r * s**4 + 33696 * s**4 - 111 * r**5 * s**2
            - 1035 * r**4 * s**2 + 4968 * r**3 * s**2 + 81000 * r**2 * s**2
            + 244944 * r * s**2 + 104976 * s**2 + 162 * r**6 - 11664 * r**4
            + 209952 * r**2)),
}

# One-parameter family in r.
X24_TABLE = {
    3: (sp.Integer(2), r**3 + 9 * r**2 + 36),
    6: (sp.Rational(1, 648),
        228095 * r**6 - 1866258 * r**5 + 559791 * r**4 + 24385464 * r**3
        + 4478328 * r**2 + 8956656),
    9: (sp.Rational(64, 27), r**2 * (r + 3) * (r + 18)**2 * (r**2 + 3 * r + 18)**2),
    12: (sp.Rational(64, 729), r**3 * (r + 18)**3 * (r**2 + 3 * r + 18)**3),
    15: (sp.Rational(4096, 729),
         r**3 * (r + 3)**3 * (r + 18)**3 * (r**2 + 3 * r + 18)**3),
    18: (sp.Rational(4096, 2187),
         r**4 * (r + 3)**2 * (r + 18)**4 * (r**2 + 3 * r + 18)**4),
}

X96_TABLE = {3: 72, 6: 13822, 9: 0, 12: 0, 15: 0, 18: 0}


def s_basis_sympy(partition):
    from itertools import permutations
    padded = tuple(partition) + (0,) * (3 - len(partition))
    return sum(
        r**a * s**b * u**c for a, b, c in sorted(set(permutations(padded)))
    )


def x4_value(k, subs=None):
    pre, coeffs = X4_TABLE[k]
    total = sum(
        (s_basis_sympy(p) if p else 1) * c for p, c in coeffs.items()
    )
    expr = pre * total
    return expr.subs(subs) if subs else expr


def fmt(q) -> str:
    q = sp.Rational(q)
    return str(q.p) if q.q == 1 else f"{q.p}/{q.q}"


def write_table(name, lines):
    path = OUT / f"{name}.txt"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {path} ({len(lines)} lines)")


def poly_lines(k, prefactor, expr, symbols):
    lines = [f"I{k} prefactor {fmt(prefactor)}"]
    poly = sp.Poly(sp.expand(expr), *symbols) if symbols else None
    if symbols:
        for monom, coeff in sorted(poly.terms(), reverse=True):
            key = "const" if not any(monom) else "[" + ",".join(map(str, monom)) + "]"
            lines.append(f"I{k} {key} {fmt(coeff)}")
    else:
        if expr:
            lines.append(f"I{k} const {fmt(expr)}")
    return lines


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    lines = ["# Reference invariant table, three-parameter family (symmetric basis keys)"]
    for k, (pre, coeffs) in X4_TABLE.items():
        lines.append(f"I{k} prefactor {fmt(pre)}")
        for part, c in sorted(coeffs.items(), key=lambda pc: (sum(pc[0]), pc[0]), reverse=True):
            key = "const" if not part else "[" + ",".join(map(str, part)) + "]"
            lines.append(f"I{k} {key} {fmt(c)}")
    write_table("X4", lines)

    lines = ["# Reference invariant table, two-parameter family (monomial keys in r, s)"]
    for k, (pre, expr) in X16_TABLE.items():
        lines.extend(poly_lines(k, pre, expr, (r, s)))
    write_table("X16", lines)

    lines = ["# Reference invariant table, one-parameter family (monomial keys in r)"]
    for k, (pre, expr) in X24_TABLE.items():
        lines.extend(poly_lines(k, pre, expr, (r,)))
    write_table("X24", lines)

    lines = ["# Reference invariant table, parameter-free family"]
    for k, value in X96_TABLE.items():
        lines.extend(poly_lines(k, 1, sp.Integer(value), ()))
    write_table("X96", lines)

    # -- cross checks -------------------------------------------------------
    print("\nspecialization checks:")
    for k in X16_TABLE:
        pre16, e16 = X16_TABLE[k]
        pre24, e24 = X24_TABLE[k]
        diff = sp.expand(pre16 * e16.subs(s, r) - pre24 * e24)
        print(f"  I{k}: X16(r,r) == X24(r): {'OK' if diff == 0 else f'FAIL {diff}'}")
    for k in X24_TABLE:
        pre24, e24 = X24_TABLE[k]
        v = (pre24 * e24).subs(r, 0)
        print(f"  I{k}: X24(0) == X96: {'OK' if v == X96_TABLE[k] else f'FAIL {v}'}")

    print("\nthree-parameter table anomalies (X4 table / X16 table at u=s):")
    for k in X4_TABLE:
        x4 = sp.expand(x4_value(k, {u: s}))
        pre16, e16 = X16_TABLE[k]
        x16 = sp.expand(pre16 * e16)
        ratio = sp.cancel(x4 / x16) if x16 != 0 else None
        print(f"  I{k}: ratio {ratio}")


if __name__ == "__main__":
    main()
