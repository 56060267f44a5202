"""Check the engine against exact character tables of small GL_m(F_q).

The first run computes the tables (GL_2(F_9) takes a few seconds) and
stores them in the cache directory; later runs load them.

Run:  python3 demos/oracle_crosscheck.py
"""

import time
from fractions import Fraction

from jldist.charlat import RootOfUnity
from jldist.criterion import check_distinction
from jldist.green import green_match
from jldist.localdata import LocalSetup, TameParameter
from jldist.oracle import build_pair, gl_table, lusztig_xi, multiplicity_trivial, prasad_check, twisted_multiplicity
from jldist.oracle.cache import cache_path

for m, q in ((2, 3), (2, 5), (2, 9)):
    start = time.perf_counter()
    table, hit = gl_table(m, q)
    how = "loaded from" if hit else "computed, saved to"
    print(f"GL_{m}(F_{q}): {len(table.rows)} characters, {how} {cache_path(m, q)} "
          f"in {time.perf_counter() - start:.2f} s")

print("\nRamified, n=2: twisted multiplicities on the finite pairs vs the engine")
print("  q  d  orbit      t    oracle engine")
for q in (3, 5):
    table, _ = gl_table(2, q)
    match = green_match(table)
    pairs = {1: build_pair("ext-levi-eta", q), 2: build_pair("ext-galois-gamma", q)}
    for row, label in sorted(match.rows.items(), key=lambda kv: kv[1].orbit):
        for d, pair in pairs.items():
            for t in (RootOfUnity(0), RootOfUnity(Fraction(1, 2))):
                oracle = twisted_multiplicity(table, row, pair.H, pair.coset, t)
                engine = check_distinction(TameParameter(LocalSetup(q, "tr", 2, d), label.a, t)).multiplicity
                if oracle or engine:
                    print(f"  {q}  {d}  {str(label.orbit):<10} {str(t.t):<4} {oracle:>6} {engine:>6}")
print("  (rows with both multiplicities zero omitted)")

print("\nLusztig's count for the nonsplit torus in GL_2(F_3)")
table, _ = gl_table(2, 3)
pair = build_pair("nonsplit-torus", 3)
for row, label in sorted(green_match(table).rows.items(), key=lambda kv: kv[1].orbit):
    xi = [x for x in lusztig_xi(pair, label.a) if x.theta_stable]
    print(f"  orbit {label.orbit}: r-values {[x.r for x in xi]}, "
          f"sum {sum(x.r for x in xi)}, multiplicity {multiplicity_trivial(table, row, pair.H)}")

print("\nPrasad's test on GL_2(F_9) over GL_2(F_3)")
entries = prasad_check(gl_table(2, 9)[0], 3)
print(f"  {len(entries)} cuspidals, multiplicities {sorted({e.multiplicity for e in entries})}, "
      f"all agree with the contragredient test: {all(e.agrees for e in entries)}")
