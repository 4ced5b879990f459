"""Products in the partition ring.

Two independent algorithms are kept side by side on purpose:

* the fast path multiplies by one column at a time (vertical-strip step) and
  removes the lower-order cross terms through the unitriangular system that
  relates a partition to the product of its columns;
* the oracle counts column-strict skew fillings whose reverse reading word is
  a lattice word, one coefficient at a time.

The test suite demands that both agree. Memo tables are filled with
immutable values only, so concurrent readers are safe; a racing insert just
recomputes the same value.
"""

from __future__ import annotations

import os

from .elements import LRElement
from .errors import BudgetExceeded, InternalCheckError
from .partitions import Partition, partitions_of

DEFAULT_TERM_BUDGET = 5_000_000
BUDGET_ENV_VAR = "LRLAB_BUDGET"

_pieri_memo: dict = {}
_mul_memo: dict = {}
_power_memo: dict = {}


def term_budget(explicit: int | None = None) -> int:
    """Effective term budget: explicit argument, else environment, else default."""
    if explicit is not None:
        return explicit
    env = os.environ.get(BUDGET_ENV_VAR)
    if env is not None:
        return int(env)
    return DEFAULT_TERM_BUDGET


def clear_caches() -> None:
    _pieri_memo.clear()
    _mul_memo.clear()
    _power_memo.clear()


def _pieri(parts: tuple[int, ...], r: int, cap: int | None) -> tuple[tuple[int, ...], ...]:
    """Support of (partition x one column of height r); multiplicity-free."""
    key = (parts, r, cap)
    hit = _pieri_memo.get(key)
    if hit is not None:
        return hit
    if r == 0:
        out = (parts,) if cap is None or len(parts) <= cap else ()
    elif not parts:
        out = ((1,) * r,) if cap is None or r <= cap else ()
    else:
        head, tail = parts[0], parts[1:]
        res = []
        for u in _pieri(tail, r - 1, cap):
            v = (head + 1,) + u
            if cap is None or len(v) <= cap:
                res.append(v)
        for u in _pieri(tail, r, cap):
            if not u or head >= u[0]:
                v = (head,) + u
                if cap is None or len(v) <= cap:
                    res.append(v)
        out = tuple(res)
    _pieri_memo[key] = out
    return out


def _column_chain(
    start: dict[tuple[int, ...], int],
    cols: tuple[int, ...],
    cap: int | None,
    budget: int,
) -> dict[tuple[int, ...], int]:
    acc = start
    for r in cols:
        nxt: dict[tuple[int, ...], int] = {}
        for t, m in acc.items():
            for u in _pieri(t, r, cap):
                nxt[u] = nxt.get(u, 0) + m
        if len(nxt) > budget:
            raise BudgetExceeded(f"{len(nxt)} terms exceed budget {budget}")
        acc = nxt
    return acc if acc is not start else dict(acc)


def _mul_parts(
    a: tuple[int, ...], b: tuple[int, ...], cap: int | None, budget: int
) -> dict[tuple[int, ...], int]:
    if cap is not None and (len(a) > cap or len(b) > cap):
        return {}
    if not b:
        return {a: 1}
    if not a:
        return {b: 1}
    key = (a, b, cap)
    hit = _mul_memo.get(key)
    if hit is not None:
        return hit
    # column heights of b, tallest first
    cols = []
    for j in range(b[0]):
        cols.append(sum(1 for p in b if p > j))
    cols_t = tuple(cols)
    out = _column_chain({a: 1}, cols_t, cap, budget)
    if len(cols_t) > 1:
        cross = _column_chain({(): 1}, cols_t, cap, budget)
        if cross.get(b, 0) != 1:
            raise InternalCheckError(f"column product of {b} is not unitriangular")
        # strip the lower-order terms the column product introduced; descending
        # lexicographic order refines dominance, so this elimination is stable
        for c in sorted(cross, reverse=True):
            if c == b:
                continue
            coef = cross[c]
            for t, m in _mul_parts(a, c, cap, budget).items():
                nm = out.get(t, 0) - coef * m
                if nm:
                    out[t] = nm
                else:
                    out.pop(t, None)
    for m in out.values():
        if m < 0:
            raise InternalCheckError(f"negative multiplicity in {a} x {b}")
    _mul_memo[key] = out
    return out


def mul(a: Partition, b: Partition, cap: int | None = None, budget: int | None = None) -> LRElement:
    """Product of two basis partitions (column recursion with corrections)."""
    return LRElement._from_raw(
        _mul_parts(a.parts, b.parts, cap, term_budget(budget)), cap
    )


def mul_by_column(a: Partition, r: int, cap: int | None = None) -> LRElement:
    """Product with a single column of height r (vertical-strip expansion)."""
    if r < 0:
        raise ValueError("negative column height")
    return LRElement._from_raw({t: 1 for t in _pieri(a.parts, r, cap)}, cap)


def mul_element(m: LRElement, b: Partition, budget: int | None = None) -> LRElement:
    """Linear extension of mul to an element times a basis partition."""
    bud = term_budget(budget)
    acc: dict[tuple[int, ...], int] = {}
    for p, c in m.items():
        for t, k in _mul_parts(p.parts, b.parts, m.cap, bud).items():
            acc[t] = acc.get(t, 0) + c * k
    if len(acc) > bud:
        raise BudgetExceeded(f"{len(acc)} terms exceed budget {bud}")
    return LRElement._from_raw(acc, m.cap)


def tensor_power(
    a: Partition,
    n: int,
    cap: int | None = None,
    budget: int | None = None,
    cache=None,
) -> LRElement:
    """n-th power of a basis partition, cap applied at every step.

    Intermediate powers are memoized per (partition, k, cap); an optional
    on-disk cache object (see powercache) is consulted first and updated with
    every power computed along the way.
    """
    if n < 0:
        raise ValueError("negative exponent")
    bud = term_budget(budget)
    parts = a.parts
    cur = None
    k0 = 0
    for k in range(n, -1, -1):
        got = _power_memo.get((parts, k, cap))
        if got is None and cache is not None:
            got = cache.get(parts, k, cap)
            if got is not None:
                _power_memo[(parts, k, cap)] = got
        if got is not None:
            k0, cur = k, got
            break
    if cur is None:
        cur = {(): 1}
        _power_memo[(parts, 0, cap)] = cur
    for k in range(k0 + 1, n + 1):
        nxt: dict[tuple[int, ...], int] = {}
        for t, m in cur.items():
            for u, c in _mul_parts(t, parts, cap, bud).items():
                nxt[u] = nxt.get(u, 0) + m * c
        if len(nxt) > bud:
            raise BudgetExceeded(
                f"power {a}^{k} has {len(nxt)} terms, budget {bud}"
            )
        _power_memo[(parts, k, cap)] = nxt
        cur = nxt
    if cache is not None:
        for k in range(n + 1):
            hit = _power_memo.get((parts, k, cap))
            if hit is not None:
                cache.put(parts, k, cap, hit)
    return LRElement._from_raw(cur, cap)


def lr_coefficient(a: Partition, b: Partition, c: Partition) -> int:
    """Multiplicity of c in a x b, counted directly from skew fillings.

    Counts column-strict fillings of the diagram difference c/a whose entry
    counts match b and whose reverse reading word (right to left along rows,
    top to bottom) keeps every value at least as frequent as the next one.
    """
    if a.weight + b.weight != c.weight:
        return 0
    if not c.contains(a):
        return 0
    if b.weight == 0:
        return 1
    nb = len(b)
    ap = a.padded(len(c))
    cp = c.parts
    cells = []
    for i in range(len(cp)):
        for j in range(cp[i], ap[i], -1):
            cells.append((i, j))
    counts = [0] * (nb + 2)
    remaining = list(b.parts)
    filled: dict[tuple[int, int], int] = {}
    total = 0

    def rec(idx: int) -> None:
        nonlocal total
        if idx == len(cells):
            total += 1
            return
        i, j = cells[idx]
        right = filled.get((i, j + 1))
        hi = right if right is not None else nb
        if i > 0 and j > ap[i - 1]:
            lo = filled[(i - 1, j)] + 1
        else:
            lo = 1
        for v in range(lo, hi + 1):
            if not remaining[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            remaining[v - 1] -= 1
            filled[(i, j)] = v
            rec(idx + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
            del filled[(i, j)]

    rec(0)
    return total


def mul_tableau(a: Partition, b: Partition, cap: int | None = None) -> LRElement:
    """Product of two basis partitions via the skew-filling count (oracle)."""
    total = a.weight + b.weight
    max_len = len(a) + len(b)
    if cap is not None:
        max_len = min(max_len, cap)
    max_part = (a.parts[0] if a else 0) + (b.parts[0] if b else 0)
    acc: dict[Partition, int] = {}
    for c in partitions_of(total, max_len=max_len, max_part=max_part):
        if not c.contains(a):
            continue
        k = lr_coefficient(a, b, c)
        if k:
            acc[c] = k
    return LRElement(acc, cap=cap)


def gl_dimension(p: Partition, d: int) -> int:
    """Dimension of the Schur functor of shape p on a d-dimensional space.

    Hook content formula; zero when p has more rows than d.
    """
    if d < 1:
        raise ValueError("dimension must be positive")
    if len(p) > d:
        return 0
    conj = p.conjugate()
    num = den = 1
    for i, row in enumerate(p.parts, 1):
        for j in range(1, row + 1):
            num *= d + j - i
            den *= (row - j) + (conj[j - 1] - i) + 1
    if num % den:
        raise InternalCheckError(f"hook content not integral for {p}, d={d}")
    return num // den
