"""Smoke test for the hadwiger extension module."""

import hadwiger


def main():
    pet = hadwiger.Graph.generate("petersen")
    assert pet.n == 10 and pet.edge_count() == 15
    assert pet.to_graph6() == "IheA@GUAo"
    assert hadwiger.Graph.from_graph6("IheA@GUAo") == pet

    chi, colors = hadwiger.chromatic_number(pet)
    assert chi == 3
    assert all(colors[u] != colors[v] for u, v in pet.edges())

    assert hadwiger.hadwiger_number(pet) == 5
    parts = hadwiger.find_clique_minor(pet, 5)
    assert hadwiger.verify_clique_minor(pet, parts) is None
    assert hadwiger.find_clique_minor(pet, 6) is None
    assert hadwiger.find_subdivision(pet, 5) is None

    branch, paths = hadwiger.find_subdivision(hadwiger.Graph.generate("cycle", 5), 3)
    assert branch == [0, 1, 2] and paths[(0, 2)] == [0, 4, 3, 2]

    tw, order = hadwiger.exact_treewidth(pet)
    assert tw == 4 and sorted(order) == list(range(10))

    td = hadwiger.decompose(pet, "exact")
    assert td.bag_width() == 5
    assert td.verify(pet) == {"W1": None, "W2": None, "W3": None}
    assert td.width() == (5, 5, True)
    coloring = hadwiger.color_by_decomposition(pet, td)
    assert all(coloring[u] != coloring[v] for u, v in pet.edges())
    assert max(coloring) < td.bag_width()

    again = hadwiger.TreeDecomposition.from_td(td.to_td())
    assert again.bags == td.bags

    broken = hadwiger.TreeDecomposition([None, 0], [[0, 1], [1]], 3)
    triangle = hadwiger.Graph(3, [(0, 1), (1, 2), (0, 2)])
    assert broken.verify(triangle)["W1"] is not None

    counts = [len(hadwiger.enumerate_graphs(n)) for n in range(1, 6)]
    assert counts == [1, 2, 4, 11, 34]

    record = hadwiger.evaluate(hadwiger.Graph.from_graph6("Dhc"))
    assert record["chi"] == 3 and record["full_holds"] is True

    try:
        hadwiger.Graph.from_graph6("D")
    except ValueError:
        pass
    else:
        raise AssertionError("malformed graph6 accepted")

    print("hadwiger smoke test passed")


if __name__ == "__main__":
    main()
