"""Element-order spectra: canonical mu-form plus the closed-form families.

A spectrum (the set of element orders of a finite group) is divisor-closed,
so it is stored by the antichain of its maximal elements mu; the full set
omega is recovered on demand by divisor closure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import BadAction, CapExceeded, NotPrime
from .numtheory import divisors, is_prime

DEFAULT_PARTITION_CAP = 40
DEFAULT_GROUP_CAP = 100_000


@dataclass(frozen=True)
class Spectrum:
    """An element-order spectrum held by its maximal orders.

    mu must be a divisibility antichain: no member divides another.  In
    particular 1 only appears as the spectrum of the trivial group.
    """

    mu: frozenset[int]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.mu:
            raise ValueError("spectrum must be nonempty")
        if any(m < 1 for m in self.mu):
            raise ValueError("orders must be positive")
        for m in self.mu:
            for k in self.mu:
                if m != k and k % m == 0:
                    raise ValueError(f"{m} divides {k}: mu is not an antichain")

    def sorted_mu(self) -> list[int]:
        return sorted(self.mu)


def maximal_elements(orders, label: str = "") -> Spectrum:
    """Reduce a set of orders to the members maximal under divisibility."""
    values = set(orders)
    if not values:
        raise ValueError("empty order set")
    mu = {m for m in values if not any(k != m and k % m == 0 for k in values)}
    return Spectrum(frozenset(mu), label)


def omega_closure(s: Spectrum) -> list[int]:
    """The full divisor-closed spectrum omega, ascending (always contains 1)."""
    out: set[int] = set()
    for m in s.mu:
        out.update(divisors(m))
    return sorted(out)


def mu_pgl2(p: int, n: int) -> Spectrum:
    """Maximal element orders of PGL(2, p^n): {q - 1, p, q + 1} for q = p^n."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be >= 1")
    q = p**n
    return maximal_elements({q - 1, p, q + 1}, label=f"PGL(2,{q})")


def mu_psl2(p: int, n: int) -> Spectrum:
    """Maximal element orders of PSL(2, p^n): {(q-1)/e, p, (q+1)/e}, e = gcd(2, q-1)."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be >= 1")
    q = p**n
    eps = math.gcd(2, q - 1)
    return maximal_elements({(q - 1) // eps, p, (q + 1) // eps}, label=f"PSL(2,{q})")


def partitions(n: int):
    """Yield the partitions of n as descending lists (iterative, streaming).

    Kelleher's accelerated ascending-composition algorithm; no recursion,
    constant memory per partition.
    """
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    a[1] = n
    while k != 0:
        x = a[k - 1] + 1
        y = a[k] - 1
        k -= 1
        while x <= y:
            a[k] = x
            y -= x
            k += 1
        a[k] = x + y
        yield a[k::-1]


def _lcm(parts) -> int:
    out = 1
    for part in parts:
        out = out * part // math.gcd(out, part)
    return out


def omega_symmetric(n: int, cap: int = DEFAULT_PARTITION_CAP) -> Spectrum:
    """Spectrum of the symmetric group on n letters via cycle types.

    The order of a permutation is the lcm of its cycle lengths, so the order
    set is {lcm(partition) : partition of n}.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds partition cap {cap}")
    return maximal_elements({_lcm(p) for p in partitions(n)}, label=f"S{n}")


def omega_alternating(n: int, cap: int = DEFAULT_PARTITION_CAP) -> Spectrum:
    """Spectrum of the alternating group on n letters.

    Restricts to even cycle types: a partition with r parts is even exactly
    when n - r is even.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds partition cap {cap}")
    orders = {_lcm(p) for p in partitions(n) if (n - len(p)) % 2 == 0}
    return maximal_elements(orders, label=f"A{n}")


def omega_metacyclic(m: int, n: int, k: int,
                     cap: int = DEFAULT_GROUP_CAP) -> Spectrum:
    """Spectrum of <a, b | a^n = b^m = 1, a^-1 b a = b^k> by enumeration.

    Requires k^n = 1 (mod m) for the action to be consistent.  Elements are
    enumerated in the normal form b^i a^j; the product rule
    (b^i a^j)(b^i' a^j') = b^(i + i' * kinv^j) a^(j + j'), with kinv the
    inverse of k mod m, follows from pushing a-powers to the right.
    """
    if m < 1 or n < 1:
        raise ValueError("orders must be positive")
    if pow(k, n, m) != 1 % m:
        raise BadAction(f"k^n = {pow(k, n, m)} (mod {m}), not 1: no such group")
    if m * n > cap:
        raise CapExceeded(f"group order {m * n} exceeds cap {cap}")
    kinv = pow(k, -1, m)
    kinv_pow = [1 % m]
    for _ in range(n - 1):
        kinv_pow.append(kinv_pow[-1] * kinv % m)

    def mul(x, y):
        return (x[0] + y[0] * kinv_pow[x[1]]) % m, (x[1] + y[1]) % n

    identity = (0, 0)
    orders = set()
    for i in range(m):
        for j in range(n):
            g = (i, j)
            acc, order = g, 1
            while acc != identity:
                acc = mul(acc, g)
                order += 1
            orders.add(order)
    return maximal_elements(orders, label=f"Z{m}:Z{n} (b->b^{k})")


def psi_f4(e: int) -> frozenset[int]:
    """The five maximal odd-order torus element orders of F4(2^e).

    For q = 2^e these are q^4 - 1, q^4 + 1, q^4 - q^2 + 1, (q-1)(q^3+1) and
    (q+1)(q^3-1).  This is not the full spectrum of F4(q), only its maximal
    odd part.
    """
    if e < 1:
        raise ValueError("e must be >= 1")
    q = 2**e
    return frozenset({
        q**4 - 1,
        q**4 + 1,
        q**4 - q**2 + 1,
        (q - 1) * (q**3 + 1),
        (q + 1) * (q**3 - 1),
    })
