"""Search glued-star families for non-isomorphic graphs with equal profiles."""

import sys

from edgeforest.collisions import sweep, verify_known

bound = int(sys.argv[1]) if len(sys.argv) > 1 else 60

for family in ("gs", "gsplus"):
    report = sweep(family, bound)
    print(f"{family}: {report.instances} instances up to {bound} vertices, "
          f"{len(report.groups)} groups in {report.seconds:.2f}s")
    for g in report.groups[:8]:
        members = ", ".join(str(m) for m in g.members)
        print(f"  P(G,1) = {g.profile_fractions()[0]}: {members}  [{','.join(g.explained_by)}]")
    if len(report.groups) > 8:
        print(f"  ... {len(report.groups) - 8} more")

items = verify_known(5)
print(f"\nknown identities: {sum(i.passed for i in items)}/{len(items)} verified exactly")
