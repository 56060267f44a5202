"""The four apartment embeddings and the vertices inside the image chamber.

Run:  python3 demos/apartment_tour.py
"""

from jldist.buildings import chamber_vertices, image_vertices, j_map, uniformizer_nrd_valuations
from jldist.localdata import CaseTag, LocalSetup

m = 3
print(f"Standard chamber for m={m}:", ", ".join(str(v) for v in chamber_vertices(m)))
for case in CaseTag:
    images = ", ".join(str(j_map(case, v)) for v in chamber_vertices(m))
    print(f"  {case.name:<8} images: {images}")

print("\nVertices of the big apartment inside the image chamber:")
print("   m   NR_ODD  TR_ODD  NR_EVEN  TR_EVEN")
for m in range(1, 9):
    counts = [len(image_vertices(case, m)) for case in
              (CaseTag.NR_ODD, CaseTag.TR_ODD, CaseTag.NR_EVEN, CaseTag.TR_EVEN)]
    print(f"  {m:2d}" + "".join(f"{c:8d}" for c in counts))

print("\nThe ramified odd case picks up edge midpoints, m=3:")
for p in image_vertices(CaseTag.TR_ODD, 3):
    print("  ", p)

print("\nReduced-norm valuations of the uniformizers:")
for q, ram, n, d in ((3, "nr", 3, 3), (3, "nr", 4, 2), (3, "nr", 8, 8), (3, "tr", 6, 6)):
    s = LocalSetup(q, ram, n, d)
    v = uniformizer_nrd_valuations(s)
    print(f"  n={n} d={d} delta={s.delta} mu={s.mu}: v(Nrd Delta-unif)={v.delta_uniformizer}, "
          f"v(Nrd K-unif)={v.k_uniformizer}, sign of det w0={v.det_sign:+d}")
