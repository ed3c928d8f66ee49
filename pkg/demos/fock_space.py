"""The Heisenberg algebra on a polynomial Fock space, and how its constants are forced.

    python3 demos/fock_space.py
"""

from fractions import Fraction

from nakajima_fock.fock import (
    FockVector,
    HeisenbergModel,
    annihilate,
    closed_form_constant,
    commutator,
    create,
    pairing,
    pairing_generating_function,
    phi_identity_check,
    phi_series,
    solve_constants,
)
from nakajima_fock.schubert import binomial_target


def main():
    r, q = 2, 1
    print(f"Rank r={r}, intersection pairing q={q}.")

    print("\nStep 1: the pairing generating function (1 + (-1)^(r-1) z^2)^(rq) fixes the constants.")
    constants = solve_constants(r, q, 8)
    print(f"    solved:      {[str(c) for c in constants]}")
    print(f"    closed form: {[str(closed_form_constant(r, n)) for n in range(1, 9)]}")
    print(f"    another q gives the same list: {solve_constants(r, 3, 8) == constants}")

    model = HeisenbergModel.derive(r, q)
    vac = FockVector.vacuum()
    v = create(create(vac, 1), 2)
    print(f"\nStep 2: operators. Creating p_1 then p_2 from the vacuum gives {v}.")
    print(f"    annihilating index 2: {annihilate(v, 2, model)}")
    print(f"    [B_2, B_-2] on {v}: {commutator(v, 2, -2, model)}"
          f"  (scalar {closed_form_constant(r, 2) * q})")
    print(f"    [B_2, B_-1] on {v}: {commutator(v, 2, -1, model)}")

    print("\nStep 3: the pairing defined by adjointness reproduces the generating function.")
    gf = pairing_generating_function(model, 4)
    print(f"    Fock side:  {[str(gf[k]) for k in range(9)]}")
    print(f"    target:     {[str(binomial_target(r, q, 8)[k]) for k in range(9)]}")
    print(f"    <p_2, p_2> = {pairing(create(vac, 2), create(vac, 2), model)}")

    print("\nStep 4: the vertex identity [C_-(z), exp C'_+(z)] = -Phi(z) exp C'_+(z).")
    phi = phi_series(model, 8)
    print(f"    Phi(z) coefficients: {[str(phi[k]) for k in range(9)]}")
    report = phi_identity_check(model, 8)
    print(f"    holds on {report.summary()['passed']}/{report.summary()['total']} basis vectors")
    wrong = HeisenbergModel(r, q, tuple(Fraction(c + 1) for c in model.constants))
    print(f"    with every constant shifted by one it holds: {phi_identity_check(wrong, 8).passed}")


if __name__ == "__main__":
    main()
