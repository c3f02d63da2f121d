"""Matroids with equal G-invariant always share a Tutte polynomial.  The
three Tutte routes agree on a handful of small matroids."""

import time

from cyclicflats import uniform
from cyclicflats.constructions import example4_spec, parallel_extension, realize_paving_pair
from cyclicflats.fileformat import load_fixture
from cyclicflats.tutte import format_polynomial, tutte_deletion_contraction, tutte_polynomial


def main():
    M = load_fixture("fig1-M").to_matroid()
    small = [uniform(2, 4), uniform(3, 7), parallel_extension(uniform(2, 4), 1), M, M.dual()]
    for m in small:
        a = tutte_polynomial(m, "subsets")
        ok = a == tutte_polynomial(m, "flats") == tutte_deletion_contraction(m)
        print(f"n={m.n:2d} r={m.r}: routes agree={ok}  T = {format_polynomial(a)}")

    m1, m2 = realize_paving_pair(example4_spec(2))
    t = time.perf_counter()
    p1, p2 = tutte_polynomial(m1), tutte_polynomial(m2)
    print(f"\n24-element pair: equal Tutte={p1 == p2}  ({time.perf_counter() - t:.2f} s)")
    print("T =", format_polynomial(p1))


if __name__ == "__main__":
    main()
