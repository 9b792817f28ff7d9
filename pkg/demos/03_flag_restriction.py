"""Flags, restriction to the K3 member, and moduli dimension bookkeeping.

A flag is a threefold with nonzero anticanonical class together with a
surface class cutting it; the bundled cp3-quartic document is P^3 with
its quartic K3 member.  Restricting a rank-2 instanton type to the
surface gives a K3 Mukai vector whose square drives every dimension
formula, and the flag dimension is exactly half the K3 dimension.
"""

from mukai import (
    bogomolov_check,
    mukai_nonempty,
    mukai_pairing_k3,
    mukai_restrict,
    validate_flag,
    vdim_flag,
    vdim_k3,
)
from mukai.documents import builtin_path, load_bundle, load_manifold


def main() -> None:
    flag = load_manifold(builtin_path("cp3-quartic.json"))
    e = load_bundle(builtin_path("instanton1.json"), flag)

    report = validate_flag(flag)
    print(f"flag {flag.name}: valid = {report.valid}")
    for check in report.checks:
        print(f"  [{'ok' if check.passed else 'FAIL'}] {check.name}: {check.detail}")

    result = mukai_restrict(flag, e)
    v = result.vector
    c1 = ", ".join(str(x) for x in e.c1)
    c2 = ", ".join(str(x) for x in e.c2)
    print(f"\nbundle rank {e.rank}, c1 = ({c1}), c2 = ({c2})")
    print(f"restricted vector      v = {v}")
    print(f"degree-2 part matches  : {result.degree2_matches}")
    print(f"degree-4 part matches  : {result.degree4_matches}  ({result.note})")

    square = mukai_pairing_k3(flag.k3, v, v)
    print(f"\nv^2                    = {square}")
    print(f"vdim on the K3         = v^2 + 2 = {vdim_k3(flag.k3, v)}")
    print(f"vdim on the flag       = v^2/2 + 1 = {vdim_flag(flag, e)}")
    print(f"doubling identity      : {vdim_k3(flag.k3, v)} = 2 * {vdim_flag(flag, e)}")

    nonempty = mukai_nonempty(flag.k3, v)
    print(f"\nK3 moduli nonempty     : {nonempty.nonempty} ({nonempty.note})")
    print(f"  square = {nonempty.square}, primitive = {nonempty.primitive}, "
          f"gcd = {nonempty.component_gcd}")

    delta, degree, positive = bogomolov_check(e, (1,))
    print(f"\ndiscriminant Delta     = {delta}")
    print(f"Delta.H                = {degree} > 0: {positive} "
          "(necessary for stability, satisfied here)")


if __name__ == "__main__":
    main()
