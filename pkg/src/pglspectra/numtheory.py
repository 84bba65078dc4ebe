"""Arbitrary-precision primality, factorization and primitive prime divisors.

Everything here works on plain Python integers, so values are unbounded.
The two engines for primitive prime divisors of a^n - 1 are:

  * primitive_prime_divisors -- full factorization of a^i - 1 for i <= n and
    a set difference, exactly like the classical table-building routine;
  * ppd_exists_above -- an exact existence test "is some primitive prime
    divisor > q?" that never factors anything big: it evaluates the n-th
    cyclotomic polynomial at a, strips the primes dividing n, and trial
    divides by primes <= q.
"""

from __future__ import annotations

import functools
import math
import random
from collections import Counter
from dataclasses import dataclass, field

from .errors import FactorizationIncomplete, NotCoprime

# Tunable defaults; configure() lets the CLI override them once at startup.
DEFAULT_TRIAL_BOUND = 10**5
DEFAULT_RHO_BUDGET = 10**7
DEFAULT_SEED = 0

_trial_bound = DEFAULT_TRIAL_BOUND
_rho_budget = DEFAULT_RHO_BUDGET
_seed = DEFAULT_SEED


def configure(*, seed: int | None = None, budget: int | None = None,
              bound: int | None = None) -> None:
    """Set process-wide defaults for the randomized factoring machinery.

    Meant to be called once before computation starts (e.g. by the CLI);
    individual functions also accept per-call overrides.
    """
    global _seed, _rho_budget, _trial_bound
    if seed is not None:
        _seed = seed
    if budget is not None:
        _rho_budget = budget
    if bound is not None:
        _trial_bound = bound


# ---------------------------------------------------------------------------
# primality

# Exact for n < 3_317_044_064_679_887_385_961_981 (> 2^64) with these bases.
_DETERMINISTIC_LIMIT = 1 << 64
_DETERMINISTIC_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Above the deterministic limit: 40 fixed Miller-Rabin witnesses (the first
# 40 primes), so results stay reproducible run to run.
_PROBABLE_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                   53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
                   109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173)


@dataclass(frozen=True)
class Primality:
    prime: bool
    probabilistic: bool  # True when n was beyond the deterministic threshold


def _miller_rabin(n: int, bases) -> bool:
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in bases:
        a %= n
        if a in (0, 1, n - 1):
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primality(n: int) -> Primality:
    """Primality of n, recording whether the verdict is only probabilistic."""
    if n < 2:
        return Primality(False, False)
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == p:
            return Primality(True, False)
        if n % p == 0:
            return Primality(False, False)
    if n < _DETERMINISTIC_LIMIT:
        return Primality(_miller_rabin(n, _DETERMINISTIC_BASES), False)
    return Primality(_miller_rabin(n, _PROBABLE_BASES), True)


def is_prime(n: int) -> bool:
    """True iff n is prime (exact below 2^64, 40-witness Miller-Rabin above)."""
    return primality(n).prime


@functools.lru_cache(maxsize=8)
def primes_below(limit: int) -> tuple[int, ...]:
    """All primes < limit, by sieve of Eratosthenes."""
    if limit <= 2:
        return ()
    sieve = bytearray([1]) * limit
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit - 1) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(sieve[i * i::i]))
    return tuple(i for i in range(limit) if sieve[i])


def largest_prime_below(n: int) -> int:
    """The largest prime <= n (n >= 2)."""
    if n < 2:
        raise ValueError("no prime <= n for n < 2")
    k = n
    while not is_prime(k):
        k -= 1
    return k


# ---------------------------------------------------------------------------
# factorization


@dataclass(frozen=True)
class Factorization:
    """n as a product of primes: factors = ((prime, exponent), ...) ascending.

    When complete is False the listed part only divides base_n and the
    remaining composite is carried in cofactor.  probable lists any factor
    whose primality was established only probabilistically.
    """

    base_n: int
    factors: tuple[tuple[int, int], ...]
    complete: bool = True
    cofactor: int = 1
    probable: tuple[int, ...] = ()

    def product(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out * self.cofactor

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def require_complete(self) -> "Factorization":
        if not self.complete:
            raise FactorizationIncomplete(self)
        return self

    def __str__(self) -> str:
        if not self.factors and self.cofactor == 1:
            return "1"
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if not self.complete:
            parts.append(f"[{self.cofactor}]")
        return "*".join(parts)


def _pollard_rho_brent(n: int, rng: random.Random, budget: int) -> tuple[int | None, int]:
    """One randomized Brent-cycle rho attempt: (nontrivial factor | None, evals used)."""
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    used = 0
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        used += r
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        used += min(r, k)
        r *= 2
        if used > budget:
            return None, used
    if g == n:
        # the batched gcd overshot; replay one step at a time
        while True:
            ys = (ys * ys + c) % n
            used += 1
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
            if used > budget:
                return None, used
    return (g, used) if g != n else (None, used)


def _as_perfect_power(n: int) -> tuple[int, int] | None:
    """(root, k) with root**k == n and k >= 2, or None."""
    for k in range(2, n.bit_length() + 1):
        lo, hi = 1, 1 << (n.bit_length() // k + 1)
        while lo < hi:
            mid = (lo + hi) // 2
            if mid**k < n:
                lo = mid + 1
            else:
                hi = mid
        if lo**k == n:
            return lo, k
    return None


# Complete factorizations are unique, so they can be cached regardless of
# which seed/budget produced them.
_COMPLETE_CACHE: dict[int, Factorization] = {}


def factor(n: int, *, bound: int | None = None, budget: int | None = None,
           seed: int | None = None) -> Factorization:
    """Factor n >= 1: trial division below `bound`, then Brent/Pollard rho.

    Never raises on hard input: if the per-cofactor iteration budget runs
    out, the partial result is returned with complete=False and the
    unfactored cofactor recorded.
    """
    if n < 1:
        raise ValueError("factor requires n >= 1")
    cached = _COMPLETE_CACHE.get(n)
    if cached is not None:
        return cached
    bound = _trial_bound if bound is None else bound
    budget = _rho_budget if budget is None else budget
    seed = _seed if seed is None else seed

    counts: Counter[int] = Counter()
    probable: set[int] = set()
    m = n
    for p in primes_below(bound):
        if p * p > m:
            break
        while m % p == 0:
            counts[p] += 1
            m //= p
    stuck: Counter[int] = Counter()

    def settle(c: int, mult: int) -> None:
        # classify c (all prime factors >= bound) recursively
        if c == 1:
            return
        if c % 2 == 0:  # only reachable when bound <= 2; rho dislikes even n
            counts[2] += mult
            settle(c // 2, mult)
            return
        if c < bound * bound:
            counts[c] += mult  # smallest factor >= bound, so c is prime
            return
        st = primality(c)
        if st.prime:
            counts[c] += mult
            if st.probabilistic:
                probable.add(c)
            return
        power = _as_perfect_power(c)
        if power is not None:
            settle(power[0], mult * power[1])
            return
        rng = random.Random(f"{seed}:{c}")
        left = budget
        while left > 0:
            d, used = _pollard_rho_brent(c, rng, left)
            left -= used
            if d is not None:
                settle(d, mult)
                settle(c // d, mult)
                return
        stuck[c] += mult

    settle(m, 1)

    cofactor = 1
    for c, e in stuck.items():
        cofactor *= c**e
    result = Factorization(
        base_n=n,
        factors=tuple(sorted(counts.items())),
        complete=cofactor == 1,
        cofactor=cofactor,
        probable=tuple(sorted(probable)),
    )
    if result.complete and len(_COMPLETE_CACHE) < 200_000:
        _COMPLETE_CACHE[n] = result
    return result


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    f = factor(n).require_complete()
    divs = [1]
    for p, e in f.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    f = factor(n).require_complete()
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def _carmichael(modulus: int) -> int:
    lam = 1
    for p, e in factor(modulus).require_complete().factors:
        if p == 2:
            part = 2 ** max(e - 2, 0) if e > 1 else 1
        else:
            part = p ** (e - 1) * (p - 1)
        lam = lam * part // math.gcd(lam, part)
    return lam


def multiplicative_order(a: int, modulus: int) -> int:
    """Least k >= 1 with a^k = 1 (mod modulus); requires gcd(a, modulus) = 1.

    The order is found by reducing a known exponent multiple (modulus-1 for
    prime moduli, the Carmichael function otherwise) along its prime
    factorization, never by naive stepping.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    a %= modulus
    if math.gcd(a, modulus) != 1:
        raise NotCoprime(f"{a} and {modulus} share a factor")
    e = modulus - 1 if is_prime(modulus) else _carmichael(modulus)
    for p in factor(e).require_complete().primes():
        while e % p == 0 and pow(a, e // p, modulus) == 1:
            e //= p
    return e


def cyclotomic_value(n: int, a: int) -> int:
    """Phi_n(a), the n-th cyclotomic polynomial evaluated at a >= 2.

    Computed exactly as prod over d | n of (a^d - 1)^mobius(n/d); the
    division is exact by construction.
    """
    if n < 1 or a < 2:
        raise ValueError("need n >= 1 and a >= 2")
    num = den = 1
    for d in divisors(n):
        t = a**d - 1
        mu = mobius(n // d)
        if mu == 1:
            num *= t
        elif mu == -1:
            den *= t
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError("cyclotomic quotient not exact")
    return value


# ---------------------------------------------------------------------------
# primitive prime divisors

EXCEPTION_NONE = "none"
EXCEPTION_A2N6 = "a2n6"
EXCEPTION_MERSENNE_SQUARE = "mersenne_square"

METHOD_FULL = "full_factorization"
METHOD_RESIDUAL = "cyclotomic_residual"


def zsigmondy_exception(a: int, n: int) -> str:
    """Which Zsigmondy exception (a, n) falls under, if any.

    The n = 2 exception holds exactly when a + 1 is a power of two, i.e. a
    is a Mersenne *number*; for prime a this is the familiar Mersenne-prime
    case, but composite instances such as a = 15 are exceptions as well
    (15^2 - 1 = 2^5 * 7 and both 2 and 7 already divide 15 - 1).
    """
    if (a, n) == (2, 6):
        return EXCEPTION_A2N6
    if n == 2 and a >= 3 and (a + 1) & a == 0:
        return EXCEPTION_MERSENNE_SQUARE
    return EXCEPTION_NONE


@dataclass(frozen=True)
class PpdReport:
    """Outcome of a primitive-prime-divisor query on a^n - 1.

    primitive_primes holds every prime s with s | a^n - 1 and s not dividing
    a^i - 1 for 1 <= i < n that the chosen method identified; complete says
    whether that set is exhaustive.  For the residual method the verdict
    exists_above_threshold is exact even when the set is not.
    """

    a: int
    n: int
    primitive_primes: frozenset[int]
    exception: str = EXCEPTION_NONE
    method: str = METHOD_FULL
    residual: int = 1
    threshold: int | None = None
    exists_above_threshold: bool | None = None
    complete: bool = True
    probable: tuple[int, ...] = field(default=(), compare=False)


def is_primitive_prime_divisor(a: int, n: int, s: int) -> bool:
    """Definition check: s | a^n - 1 and s does not divide a^i - 1 for i < n."""
    if pow(a, n, s) != 1 % s:
        return False
    return all(pow(a, i, s) != 1 % s for i in range(1, n))


def primitive_prime_divisors(a: int, n: int, **factor_opts) -> PpdReport:
    """All primitive prime divisors of a^n - 1, by full factorization.

    Factors a^i - 1 for every i <= n and takes the set difference of the
    prime sets, i.e. the same computation as the classical tabulation
    routine.  For n = 1 the primitivity condition is vacuous and the result
    is just the prime set of a - 1.
    """
    if a < 2 or n < 1:
        raise ValueError("need a >= 2 and n >= 1")
    complete = True
    probable: set[int] = set()
    s_lower: set[int] = set()
    for i in range(1, n):
        f = factor(a**i - 1, **factor_opts)
        complete &= f.complete
        probable.update(f.probable)
        s_lower.update(f.primes())
    f_top = factor(a**n - 1, **factor_opts)
    complete &= f_top.complete
    probable.update(f_top.probable)
    found = frozenset(set(f_top.primes()) - s_lower)
    return PpdReport(
        a=a, n=n, primitive_primes=found,
        exception=zsigmondy_exception(a, n),
        method=METHOD_FULL, complete=complete, probable=tuple(sorted(probable)),
    )


def ppd_exists_above(a: int, n: int, q: int) -> PpdReport:
    """Exact decision: does some primitive prime divisor of a^n - 1 exceed q?

    No factorization of a^n - 1 is attempted.  Every prime factor of
    Phi_n(a) either divides n or is a primitive prime divisor, and every
    primitive prime divisor divides Phi_n(a); so after stripping the primes
    of n (to full multiplicity) and trial dividing by all primes <= q, a
    residual > 1 is equivalent to the existence of a primitive prime
    divisor > q.

    Stripping the primes of n is always safe: a primitive prime divisor s
    satisfies s = 1 (mod n), hence s > n and s cannot divide n.  When q < n
    the stripped primes exceed q, so as a belt-and-braces measure they are
    re-checked for primitivity by the definition test before being
    discounted (the check can never fire, for the reason above).
    """
    if a < 2 or n < 2 or q < 2:
        raise ValueError("need a >= 2, n >= 2, q >= 2")
    value = cyclotomic_value(n, a)
    n_primes = factor(n).require_complete().primes()
    for r in n_primes:
        while value % r == 0:
            value //= r
    found: set[int] = set()
    for r in primes_below(q + 1):
        if value == 1:
            break
        if value % r == 0:
            found.add(r)
            while value % r == 0:
                value //= r
    exists = value > 1
    if q < n:
        for r in n_primes:
            if r > q and is_primitive_prime_divisor(a, n, r):
                found.add(r)
                exists = True
    return PpdReport(
        a=a, n=n, primitive_primes=frozenset(found),
        exception=zsigmondy_exception(a, n),
        method=METHOD_RESIDUAL, residual=value,
        threshold=q, exists_above_threshold=exists,
        complete=not exists,
    )


# ---------------------------------------------------------------------------
# p^m = q^n + 1

FAMILY_MERSENNE = "mersenne"
FAMILY_FERMAT = "fermat"
FAMILY_EXCEPTIONAL = "exceptional"
FAMILY_UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class CatalanSolution:
    """A solution of p^m = q^n + 1 with p, q prime and m, n >= 1."""

    p: int
    m: int
    q: int
    n: int
    family: str

    @property
    def value(self) -> int:
        return self.p**self.m


def _classify_catalan(p: int, m: int, q: int, n: int) -> str:
    if (p, m, q, n) == (3, 2, 2, 3):
        return FAMILY_EXCEPTIONAL
    if p == 2 and n == 1 and is_prime(m) and q == 2**m - 1:
        return FAMILY_MERSENNE
    if q == 2 and m == 1 and n & (n - 1) == 0 and p == 2**n + 1:
        return FAMILY_FERMAT
    return FAMILY_UNCLASSIFIED


def _prime_power(u: int) -> tuple[int, int] | None:
    """(q, n) with q prime and q^n == u, or None."""
    if u < 2:
        return None
    if u % 2 == 0:
        return (2, u.bit_length() - 1) if u & (u - 1) == 0 else None
    power = _as_perfect_power(u)
    base, exp = power if power is not None else (u, 1)
    while (deeper := _as_perfect_power(base)) is not None:
        base, k = deeper
        exp *= k
    return (base, exp) if is_prime(base) else None


def catalan_solutions(value_bound: int) -> list[CatalanSolution]:
    """All (p, m, q, n) with p, q prime, p^m = q^n + 1 <= value_bound.

    Exhaustively enumerates prime powers p^m up to the bound and tests
    whether p^m - 1 is itself a prime power.  Each solution is classified
    into the Mersenne family (p = 2), the Fermat family (q = 2) or the
    single exceptional solution 3^2 = 2^3 + 1.
    """
    if value_bound < 9:
        raise ValueError("value_bound must be >= 9")
    out = []
    for p in primes_below(value_bound + 1):
        v = p
        m = 1
        while v <= value_bound:
            qn = _prime_power(v - 1)
            if qn is not None:
                q, n = qn
                out.append(CatalanSolution(p, m, q, n, _classify_catalan(p, m, q, n)))
            v *= p
            m += 1
    out.sort(key=lambda s: (s.value, s.p))
    return out
