"""Dimension and degree bookkeeping for moduli of framed sheaves.

    python3 demos/numerology.py
"""

from nakajima_fock.numerology import (
    DegreeShift,
    ModuliParams,
    correspondence_dimension_note,
    cycle_dims,
    degree_shift_check,
    moduli_dim,
    quot_fiber_dim,
)


def middle_preserved(r, i, d):
    report = degree_shift_check(r, i, d)
    return next(c.observed for c in report.cases if c.id.endswith("/middle"))


def main():
    print("Moduli dimensions 2rn - (r-1)c^2:")
    for r, c2, n in [(1, 0, 5), (2, 0, 3), (3, -2, 1)]:
        print(f"    r={r} c^2={c2} n={n}: {moduli_dim(ModuliParams(r, c2, n))}")

    print("\nFibers over points with multiplicities (2, 1, 1), rank 3:",
          quot_fiber_dim(3, [2, 1, 1]))
    print("Curve-supported cycles, r=2 s=1 k=3: family", cycle_dims(2, 1, 3, "family"),
          "fixed", cycle_dims(2, 1, 3, "fixed"))

    print("\nDegree shifts of the operators along a class of degree d:")
    for i in (1, 2, -1):
        for d in (0, 2):
            print(f"    i={i:+d} d={d}: shift {DegreeShift(i, d).shift(2):+d} at r=2, "
                  f"middle degree preserved: {middle_preserved(2, i, d)}")

    note = correspondence_dimension_note()
    print("\nDimension a correspondence needs to produce those shifts:")
    print(f"    positive index: stated {note['stated_positive']}, implied {note['implied_positive']}, "
          f"difference {note['positive_difference']}")
    print(f"    negative index: stated {note['stated_negative']}, implied {note['implied_negative']}, "
          f"difference {note['negative_difference']}")


if __name__ == "__main__":
    main()
