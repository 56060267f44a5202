"""Walk through the distinction engine on a handful of tame parameters.

Run:  python3 demos/distinction_walkthrough.py
"""

from fractions import Fraction

from jldist.charlat import RootOfUnity
from jldist.criterion import census, check_distinction, preservation_check
from jldist.localdata import LocalSetup, ParameterError, TameParameter, jl_transfer

ONE, MINUS = RootOfUnity(0), RootOfUnity(Fraction(1, 2))


def brief(cert):
    fields = ", ".join(f"{k}={getattr(v, 't', v)}" for k, v in vars(cert).items())
    return f"{type(cert).__name__}({fields})"


def show(label, p):
    try:
        v = check_distinction(p)
    except ParameterError as exc:
        print(f"  {label:<44} rejected: {exc.reason} {exc.data}")
        return
    mark = "distinguished" if v.distinguished else "not distinguished"
    print(f"  {label:<44} {v.case.name:<8} {mark:<18} {brief(v.certificate)}")


print("1. Parity alone decides two of the four cases.")
show("q=3, unramified, n=2, a=1", TameParameter(LocalSetup(3, "nr", 2, 1), 1))
show("q=3, ramified,   n=3, a=2", TameParameter(LocalSetup(3, "tr", 3, 1), 2))

print("\n2. Ramified, n even: the sign of chi(uniformizer)·chi(eta) matters.")
for t in (ONE, MINUS):
    show(f"q=3, ramified, n=2, a=2, t={t.t}", TameParameter(LocalSetup(3, "tr", 2, 1), 2, t))
show("q=3, ramified, n=2, a=1 (not trivial on F^x)", TameParameter(LocalSetup(3, "tr", 2, 1), 1))

print("\n3. Unramified, n odd: a Galois witness j is reported.")
show("q=3, unramified, n=3, d=3, a=26", TameParameter(LocalSetup(3, "nr", 3, 3), 26))
show("q=3, unramified, n=3, d=1, a=28", TameParameter(LocalSetup(3, "nr", 3, 1), 28))

print("\n4. Short Galois orbits are not cuspidal parameters.")
show("q=3, ramified, n=2, a=4", TameParameter(LocalSetup(3, "tr", 2, 1), 4))

print("\n5. Transfer to an inner form keeps (a, t) and the verdict.")
split = TameParameter(LocalSetup(3, "tr", 2, 1), 2)
inner = jl_transfer(split, 2)
show("split form, d=1", split)
show("inner form, d=2", inner)

print("\n6. Orbit counts over a few setups.")
for q, ram, n in ((3, "tr", 2), (5, "tr", 2), (3, "nr", 3), (5, "tr", 4)):
    c = census([LocalSetup(q, ram, n, 1)])
    print(f"  q={q} {ram} n={n}: {c.total_orbits} regular orbits, {c.count} distinguished (orbit, t) pairs")

print("\n7. Preservation sweep, q=3, n=2..4, both ramifications:")
bad = sum(len(preservation_check(3, n, ram)) for n in (2, 3, 4) for ram in ("nr", "tr"))
print(f"  {bad} mismatches")
