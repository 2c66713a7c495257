"""Sandwich product versus precomputed matrix for transforming many points.

The sandwich q v barstar(q) costs two extension products per point. The
matrix route pays that cost four times once, then does a 4x4 product per
point. Both must agree to 1e-10.
"""

import sys

from quatspace.bench import run_bench

batch = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
for r in run_bench(n=5, batch=batch):
    print(f"{r['algebra']:8s} sandwich {r['sandwich_ns_per_op']:8.1f} ns/op   matrix {r['matrix_ns_per_op']:6.1f} ns/op"
          f"   speedup {r['sandwich_ns_per_op'] / r['matrix_ns_per_op']:5.1f}x   max diff {r['max_difference']:.1e}")
