"""When is D_q**q an honest distance?

At q = 1/2 the order-q Hellinger distance raised to the q-th power is a
true metric between shifted densities, so the triangle inequality always
holds.  Away from q = 1/2 it is only distance-like near zero shift; this
scan exhibits concrete triples of shifts where the inequality genuinely
fails.  Each probe propagates its quadrature error, so a reported
violation is never numerical noise.
"""

from genfisher import ProbeDistribution, triangle_probe

TRIPLES = ((0.0, 0.5, 1.0), (0.0, 0.2, 2.0), (0.0, 1.0, 4.0))

for q in (0.25, 0.5, 2.0, 4.0):
    print(f"order q = {q}")
    for alpha in (1.0, 5.0):
        dist = ProbeDistribution.from_shape_energy(alpha, 1.0)
        for triple in TRIPLES:
            rep = triangle_probe(dist, q, triple)
            verdict = "VIOLATED" if rep.violated else "held    "
            slack = rep.rhs - rep.lhs
            print(f"  alpha={alpha:<4g} shifts={str(triple):<17} {verdict} "
                  f"long={rep.lhs:.5f} short sum={rep.rhs:.5f} margin={slack:+.5f}")
    print()

print("degenerate triples cost nothing and never violate:")
rep = triangle_probe(ProbeDistribution.from_shape_energy(2.0, 1.0), 2.0, (0.3, 0.3, 1.0))
print(f"  legs={tuple(round(t, 6) for t in rep.legs)} violated={rep.violated}")
