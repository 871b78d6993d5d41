"""Color a few named graphs and print the certificate and reduction trace."""

from itertools import groupby

from hadwiger7 import color7, complete, pattern, verify_certificate
from hadwiger7.generators import circulant, random_cockade, random_planar


def show(name, g):
    cert, trace = color7(g)
    kind = type(cert).__name__
    extra = f"{cert.count} colors" if hasattr(cert, "count") else "K7- minor model"
    runs = [(k, len(list(grp))) for k, grp in groupby(s.kind for s in trace)]
    steps = " > ".join(k if c == 1 else f"{k} x{c}" for k, c in runs)
    print(f"{name:<22} n={g.n:<3} m={g.edge_count:<4} {kind:<14} {extra:<16} verified={verify_certificate(g, cert)}")
    print(f"{'':<22} trace: {steps}")


if __name__ == "__main__":
    show("K7", complete(7))
    show("K8", complete(8))
    show("C8(1,2)", pattern("C8_12").graph)
    show("C20(1,2,3,4)", circulant(20, [1, 2, 3, 4]))
    show("random cockade", random_cockade(24, seed=3)[0])
    show("planar triangulation", random_planar(40, seed=1))
