"""Independent oracle routes used to cross-check the library.

Root systems are realized as explicit vectors in an ambient rational space
and fundamental-weight coordinates are recomputed with sympy from the
defining pairing equations. None of this shares code with the package
(different arithmetic stack, no matrix inversion of the package's Cartan
data), so agreement is a genuine two-route check.
"""

from fractions import Fraction

import sympy

from coterie import rootsys


def _unit(m, k):
    v = [sympy.Integer(0)] * m
    v[k] = sympy.Integer(1)
    return sympy.Matrix(v)


def realization(stype):
    """(root vectors, form scale) for the package's node numbering.

    Returns a list of sympy column vectors and a scalar s such that the
    W-invariant form with short roots of squared length 2 is s * dot.
    """
    stype = rootsys.parse_type(stype)
    n = stype.rank
    f = stype.family
    if f == "A":
        roots = [_unit(n + 1, i) - _unit(n + 1, i + 1) for i in range(n)]
        return roots, sympy.Integer(1)
    if f == "B":
        roots = [_unit(n, i) - _unit(n, i + 1) for i in range(n - 1)] + [_unit(n, n - 1)]
        return roots, sympy.Integer(2)
    if f == "C":
        roots = [_unit(n, i) - _unit(n, i + 1) for i in range(n - 1)] + [2 * _unit(n, n - 1)]
        return roots, sympy.Integer(1)
    if f == "D":
        roots = [_unit(n, i) - _unit(n, i + 1) for i in range(n - 1)]
        roots.append(_unit(n, n - 2) + _unit(n, n - 1))
        return roots, sympy.Integer(1)
    if f == "E":
        half = sympy.Rational(1, 2)
        b1 = sympy.Matrix([half, -half, -half, -half, -half, -half, -half, half])
        b2 = _unit(8, 0) + _unit(8, 1)
        bourbaki = [b1, b2] + [_unit(8, k - 2) - _unit(8, k - 3) for k in range(3, 9)]
        order = {6: [1, 3, 4, 5, 6, 2], 7: [7, 6, 5, 4, 3, 1, 2], 8: [8, 7, 6, 5, 4, 3, 1, 2]}[n]
        return [bourbaki[k - 1] for k in order], sympy.Integer(1)
    if f == "F":
        half = sympy.Rational(1, 2)
        b = [
            _unit(4, 1) - _unit(4, 2),
            _unit(4, 2) - _unit(4, 3),
            _unit(4, 3),
            sympy.Matrix([half, -half, -half, -half]),
        ]
        return [b[3], b[2], b[1], b[0]], sympy.Integer(2)
    roots = [
        _unit(3, 0) - _unit(3, 1),
        -2 * _unit(3, 0) + _unit(3, 1) + _unit(3, 2),
    ]
    return roots, sympy.Integer(1)  # G2


def _to_fraction(x):
    x = sympy.nsimplify(x)
    return Fraction(int(sympy.numer(x)), int(sympy.denom(x)))


def form_matrix(stype):
    """The bilinear form on simple roots, from the realization."""
    roots, scale = realization(stype)
    n = len(roots)
    return [[_to_fraction(scale * roots[i].dot(roots[j])) for j in range(n)] for i in range(n)]


def cartan_matrix(stype):
    """2 (a_i, a_j) / (a_j, a_j) from the realization."""
    b = form_matrix(stype)
    n = len(b)
    return [[Fraction(2) * b[i][j] / b[j][j] for j in range(n)] for i in range(n)]


def weight_columns(stype):
    """Fundamental weights in root coordinates, solved from the pairing
    equations with sympy (column alpha satisfies <w, beta^v> = delta)."""
    roots, scale = realization(stype)
    n = len(roots)
    norm = [scale * r.dot(r) for r in roots]
    cols = []
    for alpha in range(n):
        xs = sympy.symbols(f"x0:{n}")
        w = sum((xs[k] * roots[k] for k in range(n)), sympy.zeros(roots[0].rows, 1))
        eqs = []
        for beta in range(n):
            pairing = 2 * scale * w.dot(roots[beta]) / norm[beta]
            eqs.append(sympy.Eq(pairing, 1 if beta == alpha else 0))
        sol = sympy.solve(eqs, xs, dict=True)
        assert len(sol) == 1
        cols.append([_to_fraction(sol[0][x]) for x in xs])
    return cols
