#!/usr/bin/env python3
"""Regenerates the plain b-file fixtures by direct enumeration of v -> v + s(v).

Independent of the C++ recurrence: every count comes from walking all v below a bound.
"""
import os
import sys

TERMS = 10000


def digit_sum(v, b):
    s = 0
    while v:
        s += v % b
        v //= b
    return s


def counts(limit, b):
    """F(u) for u < limit (complete, since every generator of u is below u)."""
    f = [0] * limit
    f[0] = 1  # v = 0
    for v in range(1, limit):
        u = v + digit_sum(v, b)
        if u < limit:
            f[u] += 1
    return f


def first_terms(f, keep, n):
    out = [u for u, c in enumerate(f) if keep(c)]
    if len(out) < n:
        sys.exit("bound too small")
    return out[:n]


def write(path, values, offset):
    with open(path, "w") as fh:
        for k, v in enumerate(values):
            fh.write(f"{offset + k} {v}\n")


def main():
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "fixtures", "oeis")
    f10 = counts(1_500_000, 10)
    write(os.path.join(out_dir, "A003052.txt"), first_terms(f10, lambda c: c == 0, TERMS), 1)
    write(os.path.join(out_dir, "A230094.txt"), first_terms(f10, lambda c: c >= 2, TERMS), 1)
    write(os.path.join(out_dir, "A092391.txt"),
          [n + digit_sum(n, 2) for n in range(TERMS + 1)], 0)
    f2 = counts(TERMS + 1, 2)
    write(os.path.join(out_dir, "A228085.txt"), f2[:TERMS + 1], 0)


if __name__ == "__main__":
    main()
