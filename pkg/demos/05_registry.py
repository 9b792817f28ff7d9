"""The invariant registry: seeds, the multiplying closure, and constants.

Counts of stable bundles propagate by two exact rules: seeding (line
bundles count 1; skyscraper points count the Euler number) and closure
(a reflected twist of an exceptional pair carries the product of the
parent values, for all sufficiently large twists).  Degenerations feed
in Euler characteristics of flag moduli, stored up to a global sign.
Values the package cannot recompute live in a read-only constants
table with citations.
"""

import tempfile
from pathlib import Path

from mukai import (
    BUILTIN_CONSTANTS,
    CDRegistry,
    cd_closure,
    cd_degeneration,
    cd_seed,
    twist_chern,
)
from mukai.documents import builtin_path, load_bundle, load_manifold, load_registry, save_registry


def main() -> None:
    quintic = load_manifold(builtin_path("quintic.json"))
    registry = CDRegistry()

    line = cd_seed(registry, quintic, "line-bundle")
    sky = cd_seed(registry, quintic, "skyscraper")
    print(f"seed {line.key!r:28} -> {line.display_value}")
    print(f"seed {sky.key!r:28} -> {sky.display_value} (Euler number, not exceptional)")

    flag = load_manifold(builtin_path("cp3-quartic.json"))
    e = load_bundle(builtin_path("instanton1.json"), flag)
    six_a = cd_degeneration(registry, flag, e, 6)
    six_b = cd_degeneration(registry, flag, twist_chern(e, (1,)), -6)
    print(f"\ndegeneration {six_a.key!r} -> {six_a.display_value}")
    print(f"  ({six_a.sign_note})")
    print(f"degeneration {six_b.key!r} -> {six_b.display_value}")

    # Closure needs the exceptional-realization assertion on both parents.
    six_a = registry.mark_exceptional(six_a.key)
    six_b = registry.mark_exceptional(six_b.key)
    child = cd_closure(registry, six_a, six_b, (1,))
    print(f"\nclosure -> {child.display_value}  (6 * 6), constraint: {child.constraint}")
    child = registry.mark_exceptional(child.key)
    grandchild = cd_closure(registry, child, six_a, (1,), k="k2")
    print(f"closure -> {grandchild.display_value}  (36 * 6): values grow without bound")

    symbolic = cd_degeneration(registry, flag, twist_chern(e, (1,), 2), "chi(M_unknown)")
    named = cd_closure(registry, six_a, registry.mark_exceptional(symbolic.key), (1,), k="k3")
    print(f"symbolic entries propagate: {named.display_value}")

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "registry.json"
        save_registry(path, registry)
        reloaded = load_registry(path)
        print(f"\nsaved and reloaded {len(reloaded)} entries; "
              f"round trip exact: {reloaded.entries() == registry.entries()}")

    print("\nconstants registry (values the engine cannot recompute):")
    for constant in BUILTIN_CONSTANTS:
        value = "open" if constant.value is None else constant.value
        print(f"  {constant.name:36} {value}")


if __name__ == "__main__":
    main()
