"""
Searching all oriented circulants up to 20 vertices
===================================================

One representative per multiplier class, every degree k allowed by the
hypotheses. Only the 12-vertex class turns up.
"""

import sys

from circham import BoundMode, search_counterexamples

n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 20

report = search_counterexamples(3, n_max, BoundMode.STRICT_4K_PLUS_1,
                                progress=lambda s: print(f"  n={s.n:2d} classes={s.classes}"))
print(f"{report.instances_enumerated} oriented sets, {report.classes_enumerated} classes, "
      f"{report.elapsed:.1f}s")
for rec in report.counterexamples:
    print("counterexample:", rec.n, rec.canonical_set)

# with the 4k bound the same graph still qualifies
weak = search_counterexamples(12, 12, BoundMode.WEAK_4K)
print("4k bound at n=12:", [r.canonical_set for r in weak.counterexamples])
