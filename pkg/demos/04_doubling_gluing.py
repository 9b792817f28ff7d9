"""Doubles, gluing isometries, smoothability, and deformation counts.

Gluing two flags along their common K3 member produces a reducible
space; whether it smooths is read off the surgery class D, and bundle
data glues exactly when the two restricted vectors match under the
chosen lattice isometry.  All verdicts below are exact lattice checks.
"""

from mukai import (
    FlagDescriptor,
    ThreefoldRing,
    build_double,
    deformation_dims,
    gluing_match,
    joint_obstruction_kernel,
    make_gluing,
    mukai_restrict,
    obstruction_kernel,
    smooth_total_space,
    twisted_double_smoothable,
)
from mukai.documents import builtin_path, load_bundle, load_manifold


def vec(coords) -> str:
    return "(" + ", ".join(str(x) for x in coords) + ")"


def main() -> None:
    flag = load_manifold(builtin_path("cp3-quartic.json"))
    e = load_bundle(builtin_path("instanton1.json"), flag)

    kernel = obstruction_kernel(flag)
    print(f"flag {flag.name}: obstruction kernel dimension = {kernel.dimension}")

    double = build_double(flag)
    print(f"\nplain double: D = {vec(double.section_class_d)}, D^2 = {double.d_square()}")
    print(f"smooths as-is         : {smooth_total_space(double)}")
    joint = joint_obstruction_kernel(double)
    basis = ", ".join(vec(b) for b in joint.basis)
    print(f"joint kernel          : dimension {joint.dimension}, basis {basis}")
    dims = deformation_dims(double, h12_plus=0, h12_minus=0)
    print(f"deformations (D != 0) : {dims.value}  [{dims.case}]")

    flat = make_gluing(flag, flag, section_class=(0,))
    print(f"\nsurgered gluing: D = {vec(flat.section_class_d)}")
    print(f"smooths as-is         : {smooth_total_space(flat)}")
    dims = deformation_dims(flat, h12_plus=0, h12_minus=0)
    print(f"deformations (D = 0)  : {dims.value}  [{dims.case}]")

    v = mukai_restrict(flag, e).vector
    same = gluing_match(flag.k3, ((1,),), v, v)
    flipped = gluing_match(flag.k3, ((-1,),), v, v)
    print(f"\nrestricted vector v = {v}")
    print(f"matches itself under +1: {same}, under -1: {flipped} "
          "(v has no degree-2 part, so both isometries fix it)")

    # A rho = 2 flag carrying the swap involution A <-> B: the twisted
    # double smooths when the involution is an isometry fixing the section.
    ring = ThreefoldRing(
        name="swap-symmetric",
        basis_labels=("A", "B"),
        triple=(((-4, 2), (2, 2)), ((2, 2), (2, -4))),
        c1_coords=(1, 1),
        c2_values=(12, 12),
        chi_top=0,
        h12=0,
    )
    swap_flag = FlagDescriptor(ring=ring, s_coords=(1, 1))
    swap = ((0, 1), (1, 0))
    print(f"\nflag {ring.name}: twisted double along the swap smoothable: "
          f"{twisted_double_smoothable(swap_flag, swap)}")
    minus = ((-1, 0), (0, -1))
    print(f"along -identity (moves the section): "
          f"{twisted_double_smoothable(swap_flag, minus)}")


if __name__ == "__main__":
    main()
