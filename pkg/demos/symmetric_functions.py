"""Symmetric functions: bases, the Pieri-type rule for p_i m_mu, and generating functions.

    python3 demos/symmetric_functions.py
"""

from nakajima_fock.genfun import complete_series, elementary_series, newton_series, power_sum_exponent
from nakajima_fock.series import TruncatedSeries
from nakajima_fock.symcore import SymFunc, enumerate_partitions, multiply_p, oracle_expand, pieri_targets


def main():
    print("Partitions of 5, reverse lexicographic:")
    print("   ", ", ".join(str(mu) for mu in enumerate_partitions(5)))

    print("\nOne function in five bases (p_2 p_1):")
    f = SymFunc.power(2) * SymFunc.power(1)
    for basis in ("p", "m", "e", "h", "s"):
        print(f"    {basis}: {f.to(basis)}")

    print("\nMultiplying a monomial function by a power sum adds one part;")
    print("the coefficient counts the parts of the result equal to the new value.")
    mu = [2, 1, 1]
    for i in (1, 2):
        targets = ", ".join(f"{c}*m{nu}" for nu, c in pieri_targets(mu, i))
        print(f"    p_{i} * m{mu} = {targets}")

    print("\nThe same product in 5 variables, by expanding polynomials:")
    lhs = oracle_expand(multiply_p(SymFunc.monomial(mu), 1), 5)
    rhs = oracle_expand(SymFunc.power(1), 5) * oracle_expand(SymFunc.monomial(mu), 5)
    print(f"    {len(lhs.terms)} monomials each side, equal: {lhs == rhs}")

    N = 8
    E, H = elementary_series(N), complete_series(N)
    one = TruncatedSeries([SymFunc.one("e")], N)
    print(f"\nGenerating functions to order {N}:")
    print(f"    E(z) H(-z) = 1:               {E * H.scale(-1) == one}")
    print(f"    H = exp(sum p_n z^n / n):     {power_sum_exponent(N).exp() == H}")
    print(f"    E = exp(sum (-1)^(n-1) ...):  {power_sum_exponent(N, alternating=True).exp() == E}")
    print(f"    P = d/dz log H:               {H.log().derivative() == newton_series(N - 1)}")
    print(f"    coefficient of z^3 in H, in the m basis: {H[3].to('m')}")


if __name__ == "__main__":
    main()
