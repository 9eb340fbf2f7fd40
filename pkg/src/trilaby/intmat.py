"""Exact integer matrix helpers for small dense matrices.

Entries are arbitrary-precision integers; gmpy2 backs the arithmetic so
that powers with millions of digits stay fast.  Results convert back to
built-in int seamlessly (mpz interoperates with int everywhere).
"""

from __future__ import annotations

try:
    from gmpy2 import mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    mpz = int

Matrix = list[list[int]]
Vector = list[int]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_pow(a: Matrix, e: int) -> Matrix:
    if e < 0:
        raise ValueError("negative matrix power")
    n = len(a)
    result = [[mpz(1) if i == j else mpz(0) for j in range(n)] for i in range(n)]
    base = [[mpz(x) for x in row] for row in a]
    while e:
        if e & 1:
            result = mat_mul(result, base)
        e >>= 1
        if e:
            base = mat_mul(base, base)
    return result


def pow_geom(a: Matrix, e: int) -> tuple[Matrix, Vector]:
    """Return (a**e, (I + a + ... + a**(e-1)) @ ones) in one squaring chain.

    The partial geometric sum is kept as a vector: doubling uses
    S_{2h} = S_h + a**h S_h, the odd step appends a**(2h) @ ones.
    """
    n = len(a)
    ones = [mpz(1)] * n
    base = [[mpz(x) for x in row] for row in a]

    def rec(k: int) -> tuple[Matrix, Vector]:
        if k == 0:
            return [[mpz(1) if i == j else mpz(0) for j in range(n)] for i in range(n)], [
                mpz(0)
            ] * n
        p, u = rec(k // 2)
        p2 = mat_mul(p, p)
        u2 = [x + y for x, y in zip(u, mat_vec(p, u))]
        if k % 2:
            return mat_mul(p2, base), [x + y for x, y in zip(u2, mat_vec(p2, ones))]
        return p2, u2

    return rec(e)
