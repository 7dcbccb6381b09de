"""Smoke test for the pynbhd extension module.

Uses an installed `pynbhd` when available, otherwise loads the library built by
`cargo build --release -p nbhd-perfect-py`.
"""

import importlib.util
import pathlib
import sys


def load():
    try:
        import pynbhd

        return pynbhd
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        for name in ("libpynbhd.so", "libpynbhd.dylib", "pynbhd.dll"):
            path = root / "target" / profile / name
            if path.exists():
                spec = importlib.util.spec_from_file_location("pynbhd", path)
                module = importlib.util.module_from_spec(spec)
                spec.loader.exec_module(module)
                return module
    sys.exit("pynbhd not found: build it with `cargo build --release -p nbhd-perfect-py`")


def main():
    nb = load()

    c5 = nb.Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert (c5.n, c5.m) == (5, 5)
    cls, perfect, witness = nb.recognize(c5)
    assert cls == "P4-tidy" and not perfect and witness.startswith("C5"), witness
    assert nb.params(c5) == {"rho_n": 3, "alpha_n": 2, "alpha_2": 1, "gamma": 2}

    star = nb.Graph.generate("starfish(6)")
    lists = nb.optimal_lists(star)
    assert len(lists["a_n"]) == len(lists["r_n"]) == 6
    assert all(isinstance(x, tuple) for x in lists["a_n"])
    assert nb.brute_param(star, "pn", max_n=12) == 6

    tree = nb.Graph.generate("random_tree(8)", seed=4)
    assert nb.recognize(tree)[1] and nb.brute_is_np(tree)
    assert nb.Graph.from_text(tree.to_text()).edges() == tree.edges()

    h = nb.Graph(3)
    g, x, y = nb.reduce_alpha_to_an(h)
    assert (len(x), len(y)) == (3, 3) and nb.brute_param(g, "an") == 3

    try:
        nb.params(nb.Graph.generate("cycle(6)"))
        raise AssertionError("C6 is outside both classes")
    except nb.UnsupportedClassError:
        pass
    try:
        nb.brute_param(nb.Graph.generate("path(13)"), "pn")
        raise AssertionError("size guard did not fire")
    except nb.SizeGuardError:
        pass
    try:
        nb.Graph(2, [(0, 0)])
        raise AssertionError("loop accepted")
    except ValueError:
        pass

    print("pynbhd smoke test passed")


if __name__ == "__main__":
    main()
