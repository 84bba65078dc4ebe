"""Explicit GF(p^n) arithmetic and exhaustive 2x2 matrix-group spectra.

This is the independent oracle for the closed-form spectra: fields are
built from an explicit irreducible modulus, matrices are enumerated one by
one, and element orders are computed by honest powering (memoized per
conjugacy invariant).  Nothing here knows the q-1 / p / q+1 formulas.
"""

from __future__ import annotations

import random
from collections import Counter, deque
from dataclasses import dataclass
from itertools import product

from .errors import CapExceeded, NotPrime
from .numtheory import is_prime

DEFAULT_FIELD_DEGREE_CAP = 4
DEFAULT_FIELD_SIZE_CAP = 10**4
DEFAULT_ENUM_CAP = 32
DEFAULT_CLOSURE_CAP = 100_000

FAMILIES = ("GL2", "SL2", "PGL2", "PSL2")


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists with the constant term first

def _poly_trim(cs: list[int]) -> list[int]:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = num[:]
    dn = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    while len(num) - 1 >= dn and num:
        shift = len(num) - 1 - dn
        scale = num[-1] * inv_lead % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - scale * c) % p
        _poly_trim(num)
        if not num:
            break
    return num


def _poly_mul(x: list[int], y: list[int], p: int) -> list[int]:
    out = [0] * (len(x) + len(y) - 1)
    for i, xi in enumerate(x):
        if xi:
            for j, yj in enumerate(y):
                out[i + j] = (out[i + j] + xi * yj) % p
    return _poly_trim(out)


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    # monic of degree n; reducible iff it has a monic divisor of degree <= n/2
    n = len(poly) - 1
    for d in range(1, n // 2 + 1):
        for tail in product(range(p), repeat=d):
            cand = list(tail) + [1]
            if not _poly_mod(list(poly), cand, p):
                return False
    return True


class FieldCtx:
    """An explicit finite field GF(p^n), immutable after construction.

    Elements are integers in [0, p^n) encoding coefficient vectors in base p
    with the constant term as the least significant digit.  The modulus is
    the lexicographically least monic irreducible polynomial of degree n
    (coefficients compared constant-term first).
    """

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.modulus = modulus
        self.q = p**n
        self._pow_p = [p**i for i in range(n)]

    def __repr__(self):
        return f"FieldCtx(GF({self.p}^{self.n}), modulus={list(self.modulus)})"

    def encode(self, coeffs) -> int:
        return sum(c % self.p * w for c, w in zip(coeffs, self._pow_p))

    def decode(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.n):
            x, r = divmod(x, self.p)
            out.append(r)
        return tuple(out)

    def add(self, x: int, y: int) -> int:
        if hasattr(self, "_tables"):
            return self._tables[0][x][y]
        return self.encode(a + b for a, b in zip(self.decode(x), self.decode(y)))

    def neg(self, x: int) -> int:
        return self.encode(-a for a in self.decode(x))

    def sub(self, x: int, y: int) -> int:
        if hasattr(self, "_tables"):
            return self._tables[1][x][y]
        return self.encode(a - b for a, b in zip(self.decode(x), self.decode(y)))

    def mul(self, x: int, y: int) -> int:
        if hasattr(self, "_tables"):
            return self._tables[2][x][y]
        return self._mul_slow(x, y)

    def _mul_slow(self, x: int, y: int) -> int:
        prod = _poly_mul(list(self.decode(x)), list(self.decode(y)), self.p)
        rem = _poly_mod(prod, list(self.modulus), self.p)
        return self.encode(rem + [0] * (self.n - len(rem)))

    def pow(self, x: int, k: int) -> int:
        out, base = 1, x
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(x, self.q - 2)

    def elements(self):
        return range(self.q)

    def tables(self) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
        """(add, sub, mul) lookup tables; built once, only for small q.

        Once built, the scalar add/sub/mul methods answer from the tables.
        """
        if not hasattr(self, "_tables"):
            q = self.q
            add = [[self.add(x, y) for y in range(q)] for x in range(q)]
            sub = [[self.sub(x, y) for y in range(q)] for x in range(q)]
            mul = [[self._mul_slow(x, y) for y in range(q)] for x in range(q)]
            self._tables = (add, sub, mul)
        return self._tables


def field_ctx(p: int, n: int, degree_cap: int = DEFAULT_FIELD_DEGREE_CAP,
              size_cap: int = DEFAULT_FIELD_SIZE_CAP) -> FieldCtx:
    """Build GF(p^n) with the least monic irreducible modulus.

    Candidates are compared by their descending-degree coefficient sequence
    (so GF(8) gets x^3 + x + 1, not x^3 + x^2 + 1); the stored coefficient
    vector is constant-term first.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1 or n > degree_cap or p**n > size_cap:
        raise CapExceeded(f"GF({p}^{n}) outside caps (degree {degree_cap}, size {size_cap})")
    for high_to_low in product(range(p), repeat=n):
        cand = tuple(reversed(high_to_low)) + (1,)
        if _is_irreducible(cand, p):
            return FieldCtx(p, n, cand)
    raise AssertionError("no irreducible polynomial found")  # cannot happen


# ---------------------------------------------------------------------------
# 2x2 matrices as 4-tuples (a, b, c, d) of encoded field elements

MAT_IDENTITY = (1, 0, 0, 1)


def mat_mul(x, y, ctx: FieldCtx):
    a, b, c, d = x
    e, f, g, h = y
    return (
        ctx.add(ctx.mul(a, e), ctx.mul(b, g)),
        ctx.add(ctx.mul(a, f), ctx.mul(b, h)),
        ctx.add(ctx.mul(c, e), ctx.mul(d, g)),
        ctx.add(ctx.mul(c, f), ctx.mul(d, h)),
    )


def mat_det(x, ctx: FieldCtx):
    a, b, c, d = x
    return ctx.sub(ctx.mul(a, d), ctx.mul(b, c))


def mat_is_scalar(x) -> bool:
    a, b, c, d = x
    return b == 0 and c == 0 and a == d


def projective_canonical(x, ctx: FieldCtx):
    """Scale so the first nonzero entry is 1: a unique coset representative."""
    for entry in x:
        if entry != 0:
            inv = ctx.inv(entry)
            return tuple(ctx.mul(inv, e) for e in x)
    raise ValueError("zero matrix is not projective")


@dataclass(frozen=True)
class ProjMatrix:
    """An invertible 2x2 matrix modulo scalars, stored canonically."""

    entries: tuple[int, int, int, int]
    ctx: FieldCtx

    def __post_init__(self):
        if mat_det(self.entries, self.ctx) == 0:
            raise ValueError("matrix is singular")
        object.__setattr__(self, "entries",
                           projective_canonical(self.entries, self.ctx))

    def __mul__(self, other: "ProjMatrix") -> "ProjMatrix":
        return ProjMatrix(mat_mul(self.entries, other.entries, self.ctx), self.ctx)

    def __eq__(self, other):
        return (isinstance(other, ProjMatrix)
                and self.ctx is other.ctx and self.entries == other.entries)

    def __hash__(self):
        return hash(self.entries)


def linear_order(x, ctx: FieldCtx) -> int:
    """Least k >= 1 with x^k the identity matrix."""
    acc, k = x, 1
    while acc != MAT_IDENTITY:
        acc = mat_mul(acc, x, ctx)
        k += 1
    return k


def projective_order(m, ctx: FieldCtx | None = None) -> int:
    """Least k >= 1 with m^k a scalar matrix."""
    if isinstance(m, ProjMatrix):
        x, ctx = m.entries, m.ctx
    else:
        x = m
    acc, k = x, 1
    while not mat_is_scalar(acc):
        acc = mat_mul(acc, x, ctx)
        k += 1
    return k


# ---------------------------------------------------------------------------
# exhaustive spectra

def _order_by_key(trace, det, scalar, rep, family, ctx, memo):
    key = (trace, det, scalar)
    order = memo.get(key)
    if order is None:
        # trace/det (plus scalar-vs-Jordan flag) determine the conjugacy
        # class of a 2x2 matrix, and order is a class function
        if family in ("GL2", "SL2"):
            order = linear_order(rep, ctx)
        else:
            order = projective_order(rep, ctx)
        memo[key] = order
    return order


def omega_bruteforce(family: str, p: int, n: int,
                     cap: int = DEFAULT_ENUM_CAP):
    """Spectrum of GL/SL/PGL/PSL(2, p^n) by enumerating every matrix.

    PSL2 is realized as the determinant-1 matrices modulo the scalars +-I:
    enumerate SL(2, q) and take projective orders.
    """
    from .spectra import maximal_elements  # local to avoid import cycle

    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}, expected one of {FAMILIES}")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    q = p**n
    if q > cap:
        raise CapExceeded(f"q={q} exceeds enumeration cap {cap}")
    ctx = field_ctx(p, n, degree_cap=max(n, DEFAULT_FIELD_DEGREE_CAP),
                    size_cap=max(q, DEFAULT_FIELD_SIZE_CAP))
    add, sub, mul = ctx.tables()
    need_det_one = family in ("SL2", "PSL2")
    memo: dict = {}
    orders: set[int] = set()
    rng = range(q)
    for a in rng:
        mul_a = mul[a]
        add_a = add[a]
        for d in rng:
            ad = mul_a[d]
            trace = add_a[d]
            sub_ad = sub[ad]
            for b in rng:
                mul_b = mul[b]
                scalar_ab = b == 0 and a == d
                for c in rng:
                    det = sub_ad[mul_b[c]]
                    if det == 0 or (need_det_one and det != 1):
                        continue
                    orders.add(_order_by_key(
                        trace, det, scalar_ab and c == 0,
                        (a, b, c, d), family, ctx, memo))
    label = {"GL2": f"GL(2,{q})", "SL2": f"SL(2,{q})",
             "PGL2": f"PGL(2,{q})", "PSL2": f"PSL(2,{q})"}[family]
    return maximal_elements(orders, label=f"{label} enumerated")


def enumerate_sl2(ctx: FieldCtx) -> list[tuple[int, int, int, int]]:
    """All determinant-1 matrices over the field, in lexicographic order."""
    add, sub, mul = ctx.tables()
    out = []
    q = ctx.q
    for a in range(q):
        mul_a = mul[a]
        for b in range(q):
            mul_b = mul[b]
            for c in range(q):
                bc = mul_b[c]
                for d in range(q):
                    if sub[mul_a[d]][bc] == 1:
                        out.append((a, b, c, d))
    return out


# ---------------------------------------------------------------------------
# generator closure

def subgroup_closure(gens, mode: str = "linear", ctx: FieldCtx | None = None,
                     cap: int = DEFAULT_CLOSURE_CAP) -> list:
    """Breadth-first closure of the generators under multiplication.

    gens may be ProjMatrix instances or raw entry 4-tuples (then ctx is
    required).  Returns the subgroup elements in deterministic BFS order,
    identity first; raises CapExceeded if the closure grows past cap.
    """
    if mode not in ("linear", "projective"):
        raise ValueError("mode must be 'linear' or 'projective'")
    raw = []
    for g in gens:
        if isinstance(g, ProjMatrix):
            raw.append(g.entries)
            ctx = g.ctx
        else:
            raw.append(tuple(g))
    if ctx is None:
        raise ValueError("ctx is required for raw matrix generators")

    def canon(x):
        return projective_canonical(x, ctx) if mode == "projective" else x

    identity = canon(MAT_IDENTITY)
    gens_c = [canon(g) for g in raw]
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for g in gens_c:
            nxt = canon(mat_mul(current, g, ctx))
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"closure exceeded cap {cap}")
                seen.add(nxt)
                order.append(nxt)
                queue.append(nxt)
    return order


@dataclass(frozen=True)
class SubgroupWitness:
    """A subgroup found by search: its generators, elements and order census."""

    generators: tuple
    elements: tuple
    order_counts: tuple[tuple[int, int], ...]  # (element order, multiplicity)

    @property
    def order_set(self) -> frozenset[int]:
        return frozenset(o for o, _ in self.order_counts)


def find_binary_octahedral_subgroup(seed: int = 0,
                                    max_trials: int = 20_000) -> SubgroupWitness:
    """Search SL(2,7) for a 48-element subgroup with orders {1,2,3,4,6,8}.

    Seeded random generator pairs are closed under multiplication (aborting
    as soon as a closure passes 48 elements) until one yields a subgroup of
    size 48 whose element-order set is {1,2,3,4,6,8} with a single
    involution, i.e. a quaternion Sylow 2-subgroup.  Deterministic for a
    fixed seed.
    """
    ctx = field_ctx(7, 1)
    sl2 = enumerate_sl2(ctx)
    rng = random.Random(f"binoct:{seed}")
    for _ in range(max_trials):
        x = sl2[rng.randrange(len(sl2))]
        y = sl2[rng.randrange(len(sl2))]
        try:
            closure = subgroup_closure([x, y], mode="linear", ctx=ctx, cap=48)
        except CapExceeded:
            continue
        if len(closure) != 48:
            continue
        census = Counter(linear_order(g, ctx) for g in closure)
        if set(census) == {1, 2, 3, 4, 6, 8} and census[2] == 1:
            return SubgroupWitness(
                generators=(x, y),
                elements=tuple(closure),
                order_counts=tuple(sorted(census.items())),
            )
    raise RuntimeError(f"no 48-element witness found in {max_trials} trials")
