"""Superderivations: the defining rule, the solution space, inner maps.

A homogeneous map D of parity s is a superderivation when for all
homogeneous a, b

    lie kind:      D([a,b]) = [D(a),b] + (-1)^(s|a|) [a,D(b)]
    leibniz kind:  D([a,b]) = (-1)^(s|b|) [D(a),b] + [a,D(b)]

derivation_space solves the rule as a linear system over the matrix
entries of D; inner_space spans the multiplication operators (left for
the lie kind, right for the leibniz kind); innerness_report compares the
two per parity.
"""

from fractions import Fraction

from .linalg import Matrix, nullspace, row_space_basis, span_contains
from .core import EVEN, ODD, LIE, bracket, multiplication_matrix


class SuperDerivation:
    """A homogeneous linear map, stored as its matrix on the combined basis."""

    def __init__(self, parity, matrix):
        if parity not in (EVEN, ODD):
            raise ValueError("parity must be 0 or 1")
        self.parity = parity
        self.matrix = matrix

    def apply(self, A, el):
        return A.element_from_coords(self.matrix.apply(A.coords(el)))

    def __eq__(self, other):
        return (isinstance(other, SuperDerivation)
                and self.parity == other.parity
                and self.matrix == other.matrix)

    def __repr__(self):
        return "SuperDerivation(parity=%d, dim=%d)" % (self.parity, self.matrix.rows)


class DerivationSpace:
    """A basis of superderivations sharing one parity."""

    def __init__(self, parity, basis):
        self.parity = parity
        self.basis = list(basis)

    @property
    def dim(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __repr__(self):
        return "DerivationSpace(parity=%d, dim=%d)" % (self.parity, self.dim)


def _check_parity_blocks(A, parity, M):
    n = A.dim
    if not (M.rows == n and M.cols == n):
        raise ValueError("matrix must be %dx%d" % (n, n))
    ne = A.dim_even
    for i in range(n):
        for j in range(n):
            if not M.entries[i][j]:
                continue
            source = EVEN if j < ne else ODD
            target = EVEN if i < ne else ODD
            if target != (source + parity) % 2:
                raise ValueError("entry (%d, %d) breaks the parity-%d block structure"
                                 % (i, j, parity))


def is_superderivation(A, D):
    """Check the rule on all ordered basis pairs.

    Returns (ok, violations) where each violation is (left label, right
    label, residual) with residual = rule right side minus left side.
    """
    _check_parity_blocks(A, D.parity, D.matrix)
    s = D.parity
    violations = []
    for a in A.combined_basis:
        pa = A.parity(a)
        ea = A.basis_element(a)
        Da = D.apply(A, ea)
        for b in A.combined_basis:
            pb = A.parity(b)
            eb = A.basis_element(b)
            lhs = D.apply(A, A.basis_bracket(a, b))
            if A.kind == LIE:
                rhs = (bracket(A, Da, eb)
                       + ((-1) ** (s * pa)) * bracket(A, ea, D.apply(A, eb)))
            else:
                rhs = (((-1) ** (s * pb)) * bracket(A, Da, eb)
                       + bracket(A, ea, D.apply(A, eb)))
            residual = rhs - lhs
            if not residual.is_zero():
                violations.append((a, b, residual))
    return (not violations), violations


def _unknown_positions(A, parity):
    """Matrix positions (target row, source column) an unknown may occupy.

    Even parity lists the even-to-even block then the odd-to-odd block;
    odd parity lists the even-source block (odd rows) then the odd-source
    block, each row-major.
    """
    ne, n = A.dim_even, A.dim
    evens = range(ne)
    odds = range(ne, n)
    positions = []
    if parity == EVEN:
        for k in evens:
            for l in evens:
                positions.append((k, l))
        for k in odds:
            for l in odds:
                positions.append((k, l))
    else:
        for k in odds:
            for l in evens:
                positions.append((k, l))
        for k in evens:
            for l in odds:
                positions.append((k, l))
    return positions


def derivation_space(A, parity):
    """All superderivations of the given parity, as a canonical basis.

    One linear equation per basis triple (i, j, k): coordinate k of the
    rule applied to the pair (e_i, e_j).  Duplicate equations are dropped
    keeping first-seen order; the canonical nullspace of the system is
    reshaped into matrices.
    """
    n = A.dim
    basis = A.combined_basis
    C = [[{lab: v for lab, v in A.basis_bracket(basis[i], basis[j]).items()}
          for j in range(n)] for i in range(n)]
    idx = A.index
    C = [[{idx(lab): v for lab, v in cell.items()} for cell in row] for row in C]

    positions = _unknown_positions(A, parity)
    pos_index = {pos: t for t, pos in enumerate(positions)}
    width = len(positions)

    rows = []
    seen = set()
    zero_row = (Fraction(0),) * width
    for i in range(n):
        pi = A.parity(basis[i])
        for j in range(n):
            pj = A.parity(basis[j])
            if A.kind == LIE:
                s1 = Fraction(1)
                s2 = Fraction((-1) ** (parity * pi))
            else:
                s1 = Fraction((-1) ** (parity * pj))
                s2 = Fraction(1)
            for k in range(n):
                row = [Fraction(0)] * width
                for l, c in C[i][j].items():
                    t = pos_index.get((k, l))
                    if t is not None:
                        row[t] += c
                for l in range(n):
                    c = C[l][j].get(k)
                    if c:
                        t = pos_index.get((l, i))
                        if t is not None:
                            row[t] -= s1 * c
                    c = C[i][l].get(k)
                    if c:
                        t = pos_index.get((l, j))
                        if t is not None:
                            row[t] -= s2 * c
                tup = tuple(row)
                if tup == zero_row or tup in seen:
                    continue
                seen.add(tup)
                rows.append(tup)

    if rows:
        solutions = nullspace(Matrix(rows))
    else:
        solutions = [tuple(Fraction(1) if t == u else Fraction(0) for u in range(width))
                     for t in range(width)]
    out = []
    for vec in solutions:
        entries = [[Fraction(0)] * n for _ in range(n)]
        for t, (k, l) in enumerate(positions):
            entries[k][l] = vec[t]
        out.append(SuperDerivation(parity, Matrix(entries)))
    return DerivationSpace(parity, out)


def inner_space(A, parity):
    """Span of the multiplication operators of the given parity.

    Left multiplications for the lie kind, right multiplications for the
    leibniz kind; the basis is canonicalized by row reduction of the
    flattened matrices.
    """
    side = "left" if A.kind == LIE else "right"
    n = A.dim
    flats = []
    for label in A.combined_basis:
        if A.parity(label) != parity:
            continue
        M = multiplication_matrix(A, A.basis_element(label), side)
        flats.append(M.flatten())
    reduced = row_space_basis(flats, n * n)
    out = []
    for vec in reduced:
        entries = [list(vec[i * n:(i + 1) * n]) for i in range(n)]
        out.append(SuperDerivation(parity, Matrix(entries)))
    return DerivationSpace(parity, out)


def super_commutator(D1, D2):
    """D1 D2 - (-1)^(s1 s2) D2 D1, a superderivation of parity s1 + s2."""
    sign = Fraction((-1) ** (D1.parity * D2.parity))
    M = D1.matrix * D2.matrix - (D2.matrix * D1.matrix).scale(sign)
    return SuperDerivation((D1.parity + D2.parity) % 2, M)


def innerness_report(A):
    """Dimensions and innerness of the derivation spaces, per parity.

    expressions holds, for each derivation basis element, its coefficient
    tuple over the canonical inner basis, or None when it is outer.
    """
    report = {"expressions": {}}
    all_inner = True
    for parity, tag in ((EVEN, "even"), (ODD, "odd")):
        der = derivation_space(A, parity)
        inner = inner_space(A, parity)
        inner_flat = tuple(D.matrix.flatten() for D in inner.basis)
        exprs = []
        outer = 0
        for D in der.basis:
            ok, coeffs = span_contains(inner_flat, D.matrix.flatten())
            if ok:
                exprs.append(coeffs)
            else:
                exprs.append(None)
                outer += 1
        report["dim_der_%s" % tag] = der.dim
        report["dim_inner_%s" % tag] = inner.dim
        report["outer_%s" % tag] = outer
        report["expressions"][tag] = exprs
        if outer:
            all_inner = False
    report["all_inner"] = all_inner
    return report
