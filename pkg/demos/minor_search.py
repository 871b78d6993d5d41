"""Search for small clique minors and check every model independently."""

from hadwiger7 import complete, find_minor, pattern, verify_model
from hadwiger7.generators import circulant, random_cockade

HOSTS = {
    "K8": complete(8),
    "C8(1,2)": pattern("C8_12").graph,
    "C13(1,5)": circulant(13, [1, 5]),
    "cockade n=20": random_cockade(20, seed=7)[0],
}

if __name__ == "__main__":
    for tag in ("K5", "K6-", "K7-"):
        pat = pattern(tag)
        for name, g in HOSTS.items():
            model = find_minor(pat, g, budget=None)
            if model is None:
                print(f"{tag:<4} in {name:<22} absent")
            else:
                sizes = [len(model.branch_sets[p]) for p in sorted(model.branch_sets)]
                print(f"{tag:<4} in {name:<22} found, branch set sizes {sizes}, verified={verify_model(g, model)}")
