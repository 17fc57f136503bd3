"""Integer factorization, primality and Zsigmondy prime search."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

MAX_FACTOR_INPUT = 2 ** 127
_TRIAL_LIMIT = 10 ** 6

# Deterministic for n < 3.3e24 (covers 2^64); reused as the fixed schedule above.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXTRA = (41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i::i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


_PRIMES = _small_primes(_TRIAL_LIMIT)


def _prime_blocks(primes, size=512):
    blocks = []
    for i in range(0, len(primes), size):
        chunk = primes[i:i + size]
        prod = 1
        for p in chunk:
            prod *= p
        blocks.append((chunk, prod))
    return blocks


_BLOCKS = _prime_blocks(_PRIMES)


def _mr_round(n, d, s, a):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Miller-Rabin with a fixed base set; deterministic below 2^64."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    bases = _MR_BASES if n < 3317044064679887385961981 else _MR_BASES + _MR_EXTRA
    return all(_mr_round(n, d, s, a) for a in bases)


def _pollard_brent(n, budget=1 << 18):
    """A nontrivial factor of the odd composite n, or None after ``budget`` steps."""
    for c in range(1, 1000):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        steps = 0
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            steps += 2 * r
            r *= 2
            if g == 1 and steps > budget:
                return None
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    return None


# -- elliptic curve method (Montgomery curves, Suyama parametrization) -------

class _FactorFound(Exception):
    def __init__(self, factor):
        super().__init__(factor)
        self.factor = factor


def _inverse(a, n):
    g = gcd(a, n)
    if g != 1:
        raise _FactorFound(g)
    return pow(a, -1, n)


def _xdbl(x, z, a24, n):
    s = (x + z) * (x + z) % n
    d = (x - z) * (x - z) % n
    t = s - d
    return s * d % n, t * (d + a24 * t) % n


def _xadd(xp, zp, xq, zq, xd, zd, n):
    u = (xp - zp) * (xq + zq)
    v = (xp + zp) * (xq - zq)
    return zd * (u + v) ** 2 % n, xd * (u - v) ** 2 % n


def _ladder(k, x, z, a24, n):
    r0, r1 = (x, z), _xdbl(x, z, a24, n)
    for bit in bin(k)[3:]:
        if bit == "1":
            r0 = _xadd(*r0, *r1, x, z, n)
            r1 = _xdbl(*r1, a24, n)
        else:
            r1 = _xadd(*r0, *r1, x, z, n)
            r0 = _xdbl(*r0, a24, n)
    return r0


_ECM_WHEEL = 210
_ECM_BABY = [j for j in range(1, _ECM_WHEEL // 2, 2) if gcd(j, _ECM_WHEEL) == 1]


def _ecm_curve(n, sigma, b1, b2):
    u = (sigma * sigma - 5) % n
    v = 4 * sigma % n
    x, z = pow(u, 3, n), pow(v, 3, n)
    a24 = pow(v - u, 3, n) * (3 * u + v) * _inverse(16 * pow(u, 3, n) * v % n, n) % n
    for p in _PRIMES:
        if p > b1:
            break
        pe = p
        while pe * p <= b1:
            pe *= p
        x, z = _ladder(pe, x, z, a24, n)
    g = gcd(z, n)
    if g != 1:
        return g if g != n else None
    # stage 2: primes k w +- j in (b1, b2] via x-coordinate comparisons
    q1 = (x, z)
    q2 = _xdbl(x, z, a24, n)
    odd = {1: q1, 3: _xadd(*q2, *q1, *q1, n)}
    for j in range(5, _ECM_WHEEL // 2, 2):
        odd[j] = _xadd(*odd[j - 2], *q2, *odd[j - 4], n)
    baby = [odd[j] for j in _ECM_BABY]
    step = _ladder(_ECM_WHEEL, x, z, a24, n)
    k = max(1, b1 // _ECM_WHEEL)
    prev = _ladder((k - 1) * _ECM_WHEEL, x, z, a24, n) if k > 1 else None
    cur = _ladder(k * _ECM_WHEEL, x, z, a24, n)
    while k * _ECM_WHEEL <= b2 + _ECM_WHEEL:
        gx, gz = cur
        term = 1
        for bx, bz in baby:
            term = term * (gx * bz - bx * gz) % n
        g = gcd(term, n)
        if g == n:
            return None
        if g != 1:
            return g
        nxt = _xadd(*cur, *step, *prev, n) if prev is not None else _xdbl(*cur, a24, n)
        prev, cur = cur, nxt
        k += 1
    return None


def _ecm(n):
    """A nontrivial factor of the composite n, by ECM with a fixed curve sequence."""
    sigma = 6
    for b1, curves in ((2000, 25), (11000, 90), (50000, 300), (250000, 700), (10 ** 6, 2000)):
        for _ in range(curves):
            sigma += 1
            try:
                g = _ecm_curve(n, sigma, b1, 100 * b1)
            except _FactorFound as found:
                g = found.factor if found.factor != n else None
            if g:
                return g
    raise ArithmeticError(f"no factor of {n} found")


def _split(n, out):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    r = isqrt(n)
    if r * r == n:
        _split(r, out)
        _split(r, out)
        return
    d = _pollard_brent(n) or _ecm(n)
    _split(d, out)
    _split(n // d, out)


@lru_cache(maxsize=4096)
def _factorize_cached(n):
    out = {}
    for chunk, prod in _BLOCKS:
        if chunk[0] * chunk[0] > n:
            break
        if gcd(n, prod) == 1:
            continue
        for p in chunk:
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                out[p] = e
    if n > 1:
        _split(n, out)
    return tuple(sorted(out.items()))


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n`` as an ascending ``{prime: exponent}`` dict.

    Trial division below 10^6, then Brent's variant of Pollard rho with
    deterministic increments. ``factorize(1) == {}``.
    """
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    if n > MAX_FACTOR_INPUT:
        raise ValueError(f"{n} exceeds the 2^127 factorization ceiling")
    return dict(_factorize_cached(n))


def prime_divisors(n: int) -> list[int]:
    return list(factorize(n))


def odd_part(n: int) -> int:
    """``n`` with every factor of two removed."""
    if n < 1:
        raise ValueError("odd_part needs a positive integer")
    return n // (n & -n)


def p_part(n: int, p: int) -> int:
    """Largest power of ``p`` dividing ``n``."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def multiplicative_order(a: int, m: int) -> int:
    """Least ``k >= 1`` with ``a**k == 1 (mod m)``."""
    if m < 2:
        raise ValueError("modulus must exceed 1")
    if gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1")
    # Carmichael function of m bounds the order.
    lam = 1
    for p, e in factorize(m).items():
        if p == 2 and e >= 3:
            t = 2 ** (e - 2)
        else:
            t = (p - 1) * p ** (e - 1)
        lam = lam * t // gcd(lam, t)
    k = lam
    for q in factorize(lam):
        while k % q == 0 and pow(a, k // q, m) == 1:
            k //= q
    return k


def _mobius(n):
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


@lru_cache(maxsize=None)
def cyclotomic_value(n: int, x: int) -> int:
    """Phi_n(x) for an integer ``x >= 2``, by Moebius inversion."""
    num, den = 1, 1
    for d in divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            num *= x ** d - 1
        elif mu == -1:
            den *= x ** d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def _merge(into, other):
    for p, e in other.items():
        into[p] = into.get(p, 0) + e


def factor_power_minus_one(p: int, m: int) -> dict[int, int]:
    """Factorization of ``p**m - 1`` assembled from cyclotomic pieces."""
    out: dict[int, int] = {}
    for d in divisors(m):
        value = cyclotomic_value(d, p)
        if value > 1:
            _merge(out, factorize(value))
    return dict(sorted(out.items()))


def factor_power_plus_one(p: int, m: int) -> dict[int, int]:
    """Factorization of ``p**m + 1`` (the Phi_d(p) with d | 2m, d not dividing m)."""
    out: dict[int, int] = {}
    for d in divisors(2 * m):
        if m % d == 0:
            continue
        value = cyclotomic_value(d, p)
        if value > 1:
            _merge(out, factorize(value))
    return dict(sorted(out.items()))


@dataclass(frozen=True)
class ZsigmondyWitness:
    prime: int
    multiplicity: int
    large: bool

    def to_dict(self):
        return {"L": self.prime, "multiplicity": self.multiplicity, "large": self.large}


def _is_large(prime, multiplicity, threshold):
    return prime >= threshold or (multiplicity >= 2 and prime * prime >= threshold)


def zsigmondy_primes(p: int, n: int, threshold: int | None = None) -> list[ZsigmondyWitness]:
    """All primes ``L`` dividing ``p**n - 1`` whose multiplicative order of ``p`` is ``n``.

    ``large`` is judged against ``threshold``; the default ``n + 2`` is the
    classical notion (``L > n + 1`` or ``L**2`` divides ``p**n - 1``).
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if n < 1:
        raise ValueError("n must be positive")
    if threshold is None:
        threshold = n + 2
    # Every primitive prime divisor divides Phi_n(p).
    phi = cyclotomic_value(n, p)
    full = None
    out = []
    for prime in factorize(phi) if phi > 1 else {}:
        if prime == p or multiplicative_order(p, prime) != n:
            continue
        if full is None:
            full = p ** n - 1
        mult = 0
        value = full
        while value % prime == 0:
            value //= prime
            mult += 1
        out.append(ZsigmondyWitness(prime, mult, _is_large(prime, mult, threshold)))
    return out


def large_zsigmondy(p: int, n: int, threshold: int) -> ZsigmondyWitness | None:
    """Largest Zsigmondy prime of ``p**n - 1`` that is large for ``threshold``."""
    qualifying = [w for w in zsigmondy_primes(p, n, threshold) if w.large]
    if not qualifying:
        return None
    return max(qualifying, key=lambda w: w.prime)
