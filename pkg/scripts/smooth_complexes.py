"""Print the rank/degree blueprints of G_{i,k} and G_{k,i} side by side.

    python scripts/smooth_complexes.py --n 2
"""

import argparse

from phdiamond.smooth import build_G, check_smooth_phs, degree_window


def describe(g):
    if not g.terms:
        return "0"
    return "  ".join(f"V^{a},{b}(x)Om^{c}@{t.degree}[r{t.rank}]" for t in g.terms for a, b, c in [t.label])


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=2)
    args = parser.parse_args()
    n = args.n
    for i in range(2 * n + 1):
        for k in range(i, 2 * n + 1):
            verdict = "ok" if check_smooth_phs(n, i, k).passed else "MISMATCH"
            lo, hi = degree_window(n, i, k)
            print(f"(i,k)=({i},{k}) window [{lo},{hi}] {verdict}")
            print(f"   G_ik: {describe(build_G(n, i, k))}")
            print(f"   G_ki: {describe(build_G(n, k, i))}")


if __name__ == "__main__":
    main()
