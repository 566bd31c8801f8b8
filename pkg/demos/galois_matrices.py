"""Finite-dimensional matrix actions on spaces of periods.

Run from the repository root: python3 demos/galois_matrices.py
"""

from fractions import Fraction

from feynperiods import (
    GaloisElement,
    check_ratio_constraint,
    compose,
    galois_conjugate_span,
    rep_log2,
    rep_zeta35,
    rep_zeta_odd,
)

# A group element is determined by a few rational parameters: a scaling
# lam, a translation nu for log(2), one sigma_n per odd zeta, and a
# parameter for the depth-two value zeta(3,5).
g = GaloisElement(lam=2, nu=Fraction(1, 3), sigma={3: 1, 5: -2}, sigma35=4)
h = GaloisElement(lam=-1, sigma={3: Fraction(1, 2)})


def show(m):
    width = max(len(str(x)) for row in m.entries for x in row)
    print("  basis:", m.basis)
    for row in m.entries:
        print("  [", "  ".join(str(x).rjust(width) for x in row), "]")


# log(2) spans a two-dimensional space together with 1; the action is
# affine: log(2) -> lam log(2) + nu.
print("rep on (log 2, 1) for g:")
show(rep_log2(g))

# An odd zeta also drags the unit period along.
print("\nrep on (zeta(3), 1) for g:")
show(rep_zeta_odd(g, 3))

# zeta(3,5) cannot be separated from zeta(3): its orbit spans a
# three-dimensional space, and the sigma_5 parameter leaks into the
# zeta(3) coordinate with the universal factor -5 lam^3.
print("\nconjugates of zeta(3,5) span:", galois_conjugate_span("zeta(3,5)"))
print("rep on that span for g:")
show(rep_zeta35(g))

# Matrices multiply the way the group composes (row-vector convention).
gh = compose(g, h)
assert rep_zeta35(h) @ rep_zeta35(g) == rep_zeta35(gh)
print("\nhomomorphism check: R(h) R(g) == R(g then h)  ->  ok")

# The structure above pins the ratio of two amplitude coefficients: the
# zeta(3)*zeta(3,5) and zeta(3)*zeta(8) terms must come in the exact
# proportion 216 : 522, whatever the other parameters do.
check = check_ratio_constraint(Fraction(3024, 5), Fraction(-7308, 5))
print("coefficient ratio", check.ratio, "passes:", check.passed, " sign:", check.sign)
perturbed = check_ratio_constraint(Fraction(3024, 5) * Fraction(1001, 1000), Fraction(-7308, 5))
print("after a 0.1% nudge:", perturbed.passed)
