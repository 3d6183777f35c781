#!/usr/bin/env python3
"""Independent reference for the stream known-answer vectors in tests/kat.rs.

Plain Python integers as GF(2)[x] polynomials; no shared code with the crate.
Usage: python3 kat.py
"""

MASK64 = (1 << 64) - 1


def splitmix_bits(seed, nbits):
    state, out, have = seed, 0, 0
    while have < nbits:
        state = (state + 0x9E3779B97F4A7C15) & MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        z ^= z >> 31
        out |= z << have
        have += 64
    return [(out >> i) & 1 for i in range(nbits)]


def pmod(a, p):
    dp = p.bit_length() - 1
    while a.bit_length() - 1 >= dp:
        a ^= p << (a.bit_length() - 1 - dp)
    return a


def pmul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def pgcd(a, b):
    while b:
        a, b = b, pmod(a, b)
    return a


def irreducible(p):
    n = p.bit_length() - 1
    x = 2
    t = x
    frob = [x]
    for _ in range(n):
        t = pmod(pmul(t, t), p)
        frob.append(t)
    if frob[n] != pmod(x, p):
        return False
    primes = [d for d in range(2, n + 1) if n % d == 0 and all(d % e for e in range(2, d))]
    return all(pgcd(frob[n // r] ^ x, p) == 1 for r in primes)


def modulus(n):
    return next(p for p in range(1 << n, 1 << (n + 1)) if irreducible(p))


def to_int(bits):
    return sum(b << i for i, b in enumerate(bits))


def expand(bits, n, w):
    a_cols = [to_int(bits[c * n:(c + 1) * n]) for c in range(w)]
    c_bits = bits[w * n:]
    y = a_cols + [0] * (n - w)
    for r in range(w):
        for j in range(n - w):
            if c_bits[r * (n - w) + j]:
                y[w + j] ^= a_cols[r]
    return y


def stream(n, k, w, lam, key_seed, seed_bytes, iv_bytes, nbytes):
    p = modulus(n)
    red = n - k
    kb = splitmix_bits(key_seed, k * red * n)
    a = [[to_int(kb[(i * k + j) * n:(i * k + j + 1) * n]) for j in range(k)] for i in range(red)]
    ebits = w * (2 * n - w)
    seed = [(seed_bytes[i // 8] >> (i % 8)) & 1 for i in range(lam)]
    iv = [(iv_bytes[i // 8] >> (i % 8)) & 1 for i in range(ebits - lam)]
    y = expand(seed + iv, n, w)
    out = []
    while len(out) < 8 * nbytes:
        s = [y[i] ^ pmod(sum_xor(pmul(a[i][j], y[red + j]) for j in range(k)), p) for i in range(red)]
        sb = [(e >> b) & 1 for e in s for b in range(n)]
        out += sb[ebits:]
        y = expand(sb[:ebits], n, w)
    return bytes(to_int(out[8 * i:8 * i + 8]) for i in range(nbytes))


def sum_xor(it):
    r = 0
    for v in it:
        r ^= v
    return r


def test_inputs(lam, iv_bits):
    seed = bytes(range(lam // 8))
    iv_len = (iv_bits + 7) // 8
    iv = bytearray((7 * i + 3) & 0xFF for i in range(iv_len))
    if iv_bits % 8:
        iv[-1] &= (1 << (iv_bits % 8)) - 1
    return seed, bytes(iv)


if __name__ == "__main__":
    for label, (n, k, w, lam) in [("compact-128", (31, 13, 10, 128)), ("compact-256", (47, 17, 15, 256)), ("fast-128", (43, 7, 14, 128))]:
        seed, iv = test_inputs(lam, w * (2 * n - w) - lam)
        print(label, "modulus", hex(modulus(n)))
        print(label, "seed", seed.hex())
        print(label, "iv", iv.hex())
        print(label, "stream", stream(n, k, w, lam, 1, seed, iv, 64).hex())
