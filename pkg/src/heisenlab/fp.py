"""Exact arithmetic in the prime field F_p and on vectors over it.

Vectors are plain tuples of residues reduced into [0, p).  The symplectic
form computed here is what decides commuting everywhere downstream: two
Heisenberg elements with vector parts (x, y) and (a, b) commute exactly
when x.b - y.a = 0 (mod p).
"""

MAX_P = 2 ** 16  # supported modulus range: 2 <= p < 2**16


def is_prime(n):
    """Deterministic trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_modulus(p):
    """Validate p as a supported prime modulus; returns p."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"modulus must be an int, got {p!r}")
    if not 2 <= p < MAX_P:
        raise ValueError(f"modulus {p} outside supported range [2, {MAX_P})")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def reduce_vec(v, p):
    return tuple(int(c) % p for c in v)


def _check_len(u, v):
    if len(u) != len(v):
        raise ValueError(f"vector length mismatch: {len(u)} vs {len(v)}")


def vec_add(u, v, p):
    _check_len(u, v)
    return tuple((a + b) % p for a, b in zip(u, v))


def vec_neg(u, p):
    return tuple((-a) % p for a in u)


def vec_scale(c, u, p):
    return tuple((c * a) % p for a in u)


def vec_dot(u, v, p):
    _check_len(u, v)
    return sum(a * b for a, b in zip(u, v)) % p


def symplectic(x, y, a, b, p):
    """The alternating form x.b - y.a (mod p) on pairs of F_p^n vectors."""
    _check_len(x, y)
    _check_len(a, b)
    _check_len(x, a)
    return (vec_dot(x, b, p) - vec_dot(y, a, p)) % p
