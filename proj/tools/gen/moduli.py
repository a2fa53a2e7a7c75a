"""Emit the smallest primitive modulus for every (p, t) with p in {2,3,5}, p^t <= 2^20.

Candidates are ordered by the base-p packing of their low coefficients
(constant term least significant); the first one whose root has full
multiplicative order is kept.
"""
import itertools


def factor(n):
    out, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            out.add(d)
            n //= d
        d += 1
    if n > 1:
        out.add(n)
    return out


def mulmod(a, b, f, p):
    t = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for i in range(len(prod) - 1, t - 1, -1):
        c = prod[i]
        if c:
            for j in range(t + 1):
                prod[i - t + j] = (prod[i - t + j] - c * f[j]) % p
    return (prod + [0] * t)[:t]


def powmod(e, f, p):
    t = len(f) - 1
    result = [1] + [0] * (t - 1)
    base = ([0, 1] + [0] * t)[:t] if t > 1 else [(-f[0]) % p]
    while e:
        if e & 1:
            result = mulmod(result, base, f, p)
        base = mulmod(base, base, f, p)
        e >>= 1
    return result


def primitive(f, p):
    t = len(f) - 1
    n = p ** t - 1
    one = [1] + [0] * (t - 1)
    if f[0] == 0:
        return False
    if powmod(n, f, p) != one:
        return False
    return all(powmod(n // r, f, p) != one for r in factor(n))


for p in (2, 3, 5):
    t = 1
    while p ** t <= 2 ** 20:
        for packed in range(p ** t):
            low = [(packed // p ** i) % p for i in range(t)]
            f = low + [1]
            if primitive(f, p):
                print("    {%d, %d, {%s}}," % (p, t, ", ".join(map(str, f))))
                break
        t += 1
