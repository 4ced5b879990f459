"""Exact rational cone computations.

Membership in the dominance cone of a fixed partition, non-negative rational
decompositions over the block-constant generators, and the explicit uniform
exponent bound built from fractional lattice points of simplicial pieces.
All arithmetic is exact (integers and Fractions).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import floor

from .errors import InvalidPartition, NoDecomposition, UnsupportedLength
from .partitions import Partition, diagram_distance, dominates, lcm_upto
from .reports import ConeCertificate
from .subdivisions import Subdivision, all_subdivisions, cone_generator


def cone_membership(b: Partition, a: Partition, l: int) -> ConeCertificate:
    """Is b below some integer multiple of a in dominance order?

    Membership needs |a| to divide |b| and b to be dominated by (|b|/|a|)*a.
    """
    if len(a) > l or len(b) > l:
        raise InvalidPartition(f"lengths of {a}, {b} must be at most {l}")
    wa, wb = a.weight, b.weight
    if wa == 0:
        if wb == 0:
            return ConeCertificate(member=True, n=0)
        return ConeCertificate(member=False, reason=f"weight {wb} not reachable from the empty partition")
    if wb % wa:
        return ConeCertificate(member=False, reason=f"weight {wa} does not divide {wb}")
    n = wb // wa
    if not dominates(a.scaled(n), b):
        return ConeCertificate(member=False, reason=f"{b} is not dominated by {n}*{a}")
    return ConeCertificate(member=True, n=n)


def _solve_columns(
    cols: list[tuple[int, ...]], target: tuple[int, ...]
) -> list[Fraction] | None:
    """Unique exact solution of sum(k_j * cols[j]) = target, or None.

    None is returned both for inconsistent systems and for linearly dependent
    column sets; by the conic Caratheodory property, skipping dependent sets
    never loses a decomposable target.
    """
    rows = len(target)
    s = len(cols)
    m = [[Fraction(cols[j][i]) for j in range(s)] + [Fraction(target[i])] for i in range(rows)]
    for c in range(s):
        piv = next((i for i in range(c, rows) if m[i][c] != 0), None)
        if piv is None:
            return None
        m[c], m[piv] = m[piv], m[c]
        pv = m[c][c]
        m[c] = [x / pv for x in m[c]]
        for i in range(rows):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    for i in range(s, rows):
        if m[i][s] != 0:
            return None
    return [m[j][s] for j in range(s)]


def cone_generator_decomposition(b: Partition, a: Partition, l: int) -> ConeCertificate:
    """Non-negative rational combination of the generators equal to b.

    Searches generator subsets of size at most l in a fixed order (subset
    size, then generator index) and solves each candidate system exactly.
    NoDecomposition would falsify the cone-generation claim at this instance
    and is raised with the full instance spelled out.
    """
    cert = cone_membership(b, a, l)
    if not cert.member:
        raise ValueError(f"{b} is not in the cone of {a} at length {l}: {cert.reason}")
    subs = list(all_subdivisions(l))
    gens = [cone_generator(a, j).padded(l) for j in subs]
    target = b.padded(l)
    if not any(target):
        return ConeCertificate(member=True, n=cert.n, decomposition=[])
    for size in range(1, min(l, len(gens)) + 1):
        for idx in combinations(range(len(gens)), size):
            sol = _solve_columns([gens[i] for i in idx], target)
            if sol is None or any(q < 0 for q in sol):
                continue
            deco = [(subs[i], q) for i, q in zip(idx, sol) if q != 0]
            _check_decomposition(deco, a, target, l)
            return ConeCertificate(member=True, n=cert.n, decomposition=deco)
    raise NoDecomposition(
        f"{b} lies in the cone of {a} (l={l}) but is not a non-negative "
        f"rational combination of the {len(gens)} generators; this "
        f"contradicts the cone-generation claim"
    )


def _check_decomposition(
    deco: list[tuple[Subdivision, Fraction]], a: Partition, target: tuple[int, ...], l: int
) -> None:
    acc = [Fraction(0)] * l
    for j, q in deco:
        g = cone_generator(a, j).padded(l)
        for i in range(l):
            acc[i] += q * g[i]
    if tuple(acc) != tuple(Fraction(t) for t in target):
        raise NoDecomposition(f"residual is not zero for {list(target)}")


def _pivot_rows(cols: list[tuple[int, ...]], l: int) -> list[int] | None:
    """Row indices making the column set square and nonsingular, else None."""
    s = len(cols)
    m = [[Fraction(cols[j][i]) for j in range(s)] for i in range(l)]
    chosen: list[int] = []
    used = [False] * l
    for c in range(s):
        piv = None
        for i in range(l):
            if not used[i] and m[i][c] != 0:
                piv = i
                break
        if piv is None:
            return None
        used[piv] = True
        chosen.append(piv)
        pv = m[piv][c]
        for i in range(l):
            if i != piv and m[i][c] != 0:
                f = m[i][c] / pv
                m[i] = [x - f * y for x, y in zip(m[i], m[piv])]
    return chosen


def _invert(mat: list[list[int]]) -> list[list[Fraction]]:
    s = len(mat)
    aug = [[Fraction(mat[i][j]) for j in range(s)] + [Fraction(int(i == j)) for j in range(s)] for i in range(s)]
    for c in range(s):
        piv = next(i for i in range(c, s) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(s):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[s:] for row in aug]


def _hnf_diagonal(mat: list[list[int]]) -> list[int]:
    """Diagonal of a triangular column form of a nonsingular integer matrix.

    Column operations only, so the columns keep spanning the same lattice;
    the diagonal entries multiply to |det| and bound the coset boxes.
    """
    s = len(mat)
    m = [list(row) for row in mat]

    def swap(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]

    def addmul(dst, src, q):
        for row in m:
            row[dst] -= q * row[src]

    for i in range(s):
        while True:
            nz = [j for j in range(i + 1, s) if m[i][j] != 0]
            if m[i][i] == 0:
                if not nz:
                    raise ValueError("singular matrix")
                swap(i, nz[0])
                continue
            if not nz:
                break
            j = nz[0]
            if abs(m[i][i]) <= abs(m[i][j]):
                addmul(j, i, m[i][j] // m[i][i])
            else:
                swap(i, j)
        if m[i][i] < 0:
            for row in m:
                row[i] = -row[i]
    return [m[i][i] for i in range(s)]


def _fractional_points(cols: list[tuple[int, ...]], l: int) -> set[tuple[int, ...]]:
    """Integer vectors inside the half-open box spanned by the columns.

    The columns must be linearly independent (callers filter). Every such
    vector projects, on a nonsingular row set, to one coset of the column
    lattice, so walking coset representatives enumerates them all.
    """
    s = len(cols)
    rows = _pivot_rows(cols, l)
    if rows is None:
        return set()
    sq = [[cols[j][i] for j in range(s)] for i in rows]
    diag = _hnf_diagonal(sq)
    inv = _invert(sq)
    out: set[tuple[int, ...]] = set()
    for t in product(*[range(d) for d in diag]):
        lam = []
        for i in range(s):
            v = sum(inv[i][j] * t[j] for j in range(s))
            lam.append(v - floor(v))
        point = []
        ok = True
        for i in range(l):
            v = sum(lam[j] * cols[j][i] for j in range(s))
            if v.denominator != 1:
                ok = False
                break
            point.append(int(v))
        if ok:
            out.add(tuple(point))
    return out


def theorem_bound(a: Partition, l: int) -> int:
    """Explicit uniform exponent bound L(l) * (#subdivisions) * M.

    M maximizes (k+1)*n over the fractional lattice points P of the
    simplicial pieces of the generator cone, with n = |P|/|a| and k the
    diagram distance between P and n*a. Points whose weight is not a
    multiple of |a| cannot occur as fractional parts of integral cone
    members and are skipped. Clamped to at least 1.
    """
    if l > 3:
        raise UnsupportedLength(f"bound computation is desk-scale only (l <= 3), got {l}")
    if len(a) > l:
        raise InvalidPartition(f"{a} does not fit length {l}")
    big_l = lcm_upto(l)
    subs = list(all_subdivisions(l))
    if a.weight == 0:
        return 1
    gens = [cone_generator(a, j).padded(l) for j in subs]
    points: set[tuple[int, ...]] = {(0,) * l}
    for size in range(1, l + 1):
        for idx in combinations(range(len(gens)), size):
            points |= _fractional_points([gens[i] for i in idx], l)
    best = 0
    for pt in sorted(points):
        w = sum(pt)
        if w == 0 or w % a.weight:
            continue
        n = w // a.weight
        p = Partition(pt)
        k = diagram_distance(p, a.scaled(n))
        best = max(best, (k + 1) * n)
    return max(1, big_l * len(subs) * best)
