"""Chern classes on Grassmannians of quotients and the excess-intersection numbers.

    python3 demos/grassmannian.py
"""

from math import comb

from nakajima_fock.schubert import (
    GrassRing,
    chern,
    chern_tensor,
    euler_characteristic,
    excess_check,
    intersection_number,
    pairing_coefficient,
    total,
)


def main():
    ring = GrassRing(4, 2)
    print(f"Gr(2 quotients of C^4): dimension {ring.dimension}, "
          f"{len(ring.basis())} Schubert classes")
    print(f"    c(Q)       = {total(chern('Q', ring))}")
    print(f"    c(S)       = {total(chern('S', ring))}")
    print(f"    c(S)c(Q)   = {total(chern('S', ring)) * total(chern('Q', ring))}")
    print(f"    c(S^v(x)Q) = {total(chern_tensor(ring, 'Sdual_tensor_Q'))}")
    print(f"    c(S(x)Q^v) = {total(chern_tensor(ring, 'S_tensor_Qdual'))}")

    report = excess_check(ring)
    print(f"\nThe excess bundle has the Chern classes of S (x) Q^v: "
          f"{report.summary()['passed']}/{report.summary()['total']} checks")

    print("\nIntersection numbers (top Chern class of S (x) Q^v), r = 1..6:")
    for r in range(1, 7):
        row = [intersection_number(r, n) for n in range(r + 1)]
        print(f"    r={r}: {row}")
    print("    Euler characteristics match C(r, n):",
          all(euler_characteristic(GrassRing(r, n)) == comb(r, n) for r in range(7) for n in range(r + 1)))

    r, q = 2, 2
    print(f"\nSumming over subdivisions of n among q points (r={r}, q={q}):")
    print("    ", [pairing_coefficient(r, q, n) for n in range(6)])
    print("     which are the z^2n coefficients of (1 - z^2)^4")


if __name__ == "__main__":
    main()
