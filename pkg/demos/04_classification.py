"""The classification theorem as a decision procedure, and ordinarity.

Feed in a surface class with its flags, get back Liftable /
NotLiftable / OutOfScope with a citation.  The ordinarity hypotheses
are grounded concretely: for an elliptic curve over F_p the Hasse
invariant (a single polynomial coefficient) must agree with the
point-count criterion, curve by curve.
"""

from w2frob import (
    SingularCurve,
    SurfaceDescriptor,
    WeierstrassCurve,
    classify_surface,
    golden_table,
    hasse_invariant,
    is_ordinary_curve,
)

print("=== some verdicts ===")
examples = [
    {"class": "K3", "p": 5},
    {"class": "abelian", "p": 5, "is_ordinary": True},
    {"class": "abelian", "p": 5, "is_ordinary": False},
    {"class": "hyperelliptic", "p": 3, "type": "c", "E0_ordinary": True,
     "E1_ordinary": True, "omega_pow_p_minus_1_trivial": True},
    {"class": "rational_Fn", "p": 2, "n": 1},
    {"class": "ruled", "p": 7, "base_genus": 1, "base_is_ordinary": True},
    {"class": "general_type", "p": 11},
]
for raw in examples:
    d = SurfaceDescriptor.from_json_dict(raw)
    v = classify_surface(d)
    print(f"  {raw}")
    print(f"      -> {v.outcome}: {v.citation}")

print()
rows = golden_table()
ok = sum(1 for d, e in rows if classify_surface(d) == e)
print(f"=== golden table: {ok}/{len(rows)} rows reproduced ===")

print()
print("=== supersingular census over F_p, two ways ===")
for p in (5, 7, 11, 13):
    ss = []
    total = 0
    for a in range(p):
        for b in range(p):
            try:
                E = WeierstrassCurve.short_form(p, a, b)
            except SingularCurve:
                continue
            total += 1
            by_hasse = hasse_invariant(E).is_zero()
            by_count = E.trace() % p == 0
            assert by_hasse == by_count
            if by_hasse:
                ss.append((a, b))
    print(f"  p={p:2}: {total:3} smooth curves, {len(ss):2} supersingular "
          f"(Hasse invariant and point counts agree on every curve)")

E = WeierstrassCurve.short_form(5, 1, 0)
print()
print(f"example: y^2 = x^3 + x over F_5: Hasse invariant "
      f"{hasse_invariant(E).as_int()}, {E.count_points()} points, "
      f"ordinary = {is_ordinary_curve(E)}")
