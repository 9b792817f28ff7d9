"""Exact arithmetic in the even-degree lattice of a threefold.

A threefold is described by finitely many integers: a basis of divisor
classes, the symmetric triple-product table d[i][j][k] = e_i.e_j.e_k,
and the degree-4 functionals of c1 and c2.  Every computation below is
a finite, exact calculation in that data — no floating point anywhere.
"""

from fractions import Fraction

from mukai import K3Restriction, ThreefoldRing, mukai_pairing_3fold, restrict_to_k3, star


def main() -> None:
    # The quintic hypersurface ring: one divisor class H with H^3 = 5.
    quintic = ThreefoldRing(
        name="quintic",
        basis_labels=("H",),
        triple=(((5,),),),
        c1_coords=(0,),
        c2_values=(50,),
        chi_top=-200,
        h12=101,
    )
    print(f"ring {quintic.name}: rho = {quintic.rho}, chi_top = {quintic.chi_top}")

    # Graded classes live in degrees 0/2/4/6; degree-4 entries are the
    # functionals <x, e_i> so products never need a dual basis.
    h = quintic.graded(a2=(1,))
    print(f"H         = {h}")
    print(f"H*H       = {h * h}")
    print(f"H*H*H     = {h * h * h}   (degree-6 coefficient is the number H^3 = 5)")

    x = quintic.graded(a0=1, a2=(2,), a4=(Fraction(1, 2),), a6=Fraction(-3, 4))
    y = quintic.graded(a0=2, a2=(-1,), a4=(3,), a6=1)
    print(f"x         = {x}")
    print(f"y         = {y}")
    print(f"x*y       = {x * y}")
    print(f"x*y == y*x: {x * y == y * x}")

    # The dualizing involution negates odd-index summands; it is a ring map.
    print(f"star(x)   = {star(x)}")
    print(f"star(x*y) == star(x)*star(y): {star(x * y) == star(x) * star(y)}")

    # The pairing (u, v) = -[star(v)*u]_6 is antisymmetric by construction.
    p_xy = mukai_pairing_3fold(x, y)
    p_yx = mukai_pairing_3fold(y, x)
    print(f"(x, y)    = {p_xy},  (y, x) = {p_yx},  sum = {p_xy + p_yx}")

    # A rho = 2 ring shows the Gram matrix of the anticanonical K3 member.
    two = ThreefoldRing(
        name="two-divisor",
        basis_labels=("A", "B"),
        triple=(((4, 2), (2, 1)), ((2, 1), (1, 0))),
        c1_coords=(1, 0),
        c2_values=(24, 10),
        chi_top=0,
        h12=0,
    )
    k3 = K3Restriction.from_ring(two, two.c1_coords)
    print(f"\nring {two.name}: restricting to the anticanonical surface")
    for label, row in zip(two.basis_labels, k3.gram):
        print(f"  gram[{label}] = ({', '.join(str(x) for x in row)})")
    v = restrict_to_k3(two.graded(a0=2, a2=(1, -1), a4=(0, 1), a6=3), k3)
    print(f"  a sample class restricts to the K3 vector {v} (degree 6 dies)")


if __name__ == "__main__":
    main()
