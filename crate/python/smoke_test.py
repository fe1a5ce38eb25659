"""Smoke test for the pytorusfold extension.

Build and install it first, e.g. `maturin develop -m crates/python/Cargo.toml`,
or put a copy of the built library named `pytorusfold.so` on PYTHONPATH.
"""

import pathlib

import pytorusfold as tf

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "crates" / "core" / "fixtures"


def main():
    mm = tf.MarkedMap((FIXTURES / "figure_eight.map").read_text())
    assert mm.genus == 1 and mm.is_tight, mm
    assert mm.h1() == "Z"
    assert "# step 0" in mm.decompose()

    m = mm.mapping_torus()
    assert m.folds == 2 and m.tetrahedra == 48, m
    bound, applicable, ok = m.bound
    assert (bound, applicable, ok) == (240, True, True)

    t = m.triangulation
    assert len(t) == 48 and t.is_orientable
    assert sorted(set(t.vertex_links())) == ["sphere", "torus"]
    again = tf.Triangulation.from_snappea(t.to_snappea("fig8"))
    assert again.is_isomorphic(t)

    small = tf.Triangulation.from_tg((FIXTURES / "figure_eight.tg").read_text())
    assert len(small) == 2 and small.h1() == "Z"
    assert small.edge_valences() == [6, 6]
    assert tf.Triangulation.from_tg(small.to_tg()).is_isomorphic(small)

    try:
        tf.MarkedMap("edge a v v\nmap a = q\n")
    except tf.ParseError as e:
        assert "line 2" in str(e), e
    else:
        raise AssertionError("expected ParseError")

    print("smoke test ok")


if __name__ == "__main__":
    main()
