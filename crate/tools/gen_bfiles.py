#!/usr/bin/env python3
"""Write OEIS-style b-files for the triangle fixtures.

Each sequence is produced from its own closed form (not from the
recurrence used by the Rust code), read by rows into a linear index.

    python3 tools/gen_bfiles.py [--rows 20] [--out crates/core/tests/fixtures/oeis]
"""

import argparse
from fractions import Fraction
from math import comb, factorial
from pathlib import Path


def stirling2(n, k):
    # inclusion-exclusion
    return sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1)) // factorial(k)


def a049020(n, k):
    return sum(stirling2(n, i) * comb(i, k) for i in range(k, n + 1))


def a008279(n, k):
    return factorial(n) // factorial(n - k)


def series_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(order + 1 - i):
                out[i + j] += x * b[j]
    return out


def series_exp(f, order):
    # f[0] must be 0; g' = f' g
    g = [Fraction(0)] * (order + 1)
    g[0] = Fraction(1)
    for n in range(1, order + 1):
        g[n] = sum(k * f[k] * g[n - k] for k in range(1, n + 1)) / n
    return g


def a154602_rows(rows):
    # exponential Riordan array [exp(f), f], f = sinh(x) e^x = (e^{2x} - 1) / 2
    order = rows
    f = [Fraction(0)] + [Fraction(2**n, 2 * factorial(n)) for n in range(1, order + 1)]
    g = series_exp(f, order)
    table = []
    col = g
    cols = []
    for k in range(rows):
        cols.append(col)
        col = series_mul(col, f, order)
    for n in range(rows):
        row = []
        for k in range(n + 1):
            v = cols[k][n] * factorial(n) / factorial(k)
            assert v.denominator == 1
            row.append(int(v))
        table.append(row)
    return table


def by_rows(entry, rows, first_row=0, first_col=0):
    out = []
    for n in range(first_row, rows):
        for k in range(first_col, n + 1):
            out.append(entry(n, k))
    return out


def write(path, seq_id, title, values, offset):
    lines = [f"# {seq_id} {title}", f"# read by rows, first index {offset}"]
    lines += [f"{i + offset} {v}" for i, v in enumerate(values)]
    path.write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rows", type=int, default=20)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "crates/core/tests/fixtures/oeis"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    r = args.rows
    a154602 = a154602_rows(r)
    write(out / "b048993.txt", "A048993", "Stirling numbers of the second kind, 0 <= k <= n",
          by_rows(stirling2, r), 0)
    write(out / "b008277.txt", "A008277", "Stirling numbers of the second kind, 1 <= k <= n",
          by_rows(stirling2, r, 1, 1), 1)
    write(out / "b049020.txt", "A049020", "sum_i S(n,i) C(i,k)", by_rows(a049020, r), 0)
    write(out / "b008279.txt", "A008279", "n!/(n-k)!", by_rows(a008279, r), 0)
    write(out / "b154602.txt", "A154602", "exponential Riordan array [exp(sinh(x)e^x), sinh(x)e^x]",
          by_rows(lambda n, k: a154602[n][k], r), 0)


if __name__ == "__main__":
    main()
