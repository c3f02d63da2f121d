"""Insert the same chain above different atoms of a small lattice and realize
both results as matroids.  The two matroids agree on catenary data."""

from cyclicflats import configuration_of, labeled_isomorphic
from cyclicflats.constructions import build_lattice_extension, fig3_spec, realize_extension_pair
from cyclicflats.ginv import catenary_data


def main():
    spec, sizes, ranks = fig3_spec()
    Ls, Lt = build_lattice_extension(spec)
    for label, L in (("s", Ls), ("t", Lt)):
        covers = {L.names[i]: [L.names[j] for j in L.upper_covers[i]] for i in range(L.size)}
        print(f"L_{label} upper covers: {covers}")

    ms, mt = realize_extension_pair(spec, sizes, ranks)
    print(f"\nrealized on {ms.n} elements with rank {ms.r}")
    for s, k in ms.cyclic_flats():
        print(f"  M_s cyclic flat {sorted(s)} rank {k}")
    print("catenary data equal:", catenary_data(ms) == catenary_data(mt))
    print("configurations isomorphic:", labeled_isomorphic(configuration_of(ms), configuration_of(mt)))


if __name__ == "__main__":
    main()
