"""Smoke test for the pyinvpipes extension.

Build first with `python/build.sh` (or `maturin develop -m crates/python/Cargo.toml`),
then run `python3 python/smoke_test.py`.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pyinvpipes as ip


def main():
    w = ip.Permutation("1432")
    assert w.length() == 3
    assert str(w.schubert()) == str(w.schubert("dd"))
    assert len(w.pipe_dreams()) == 5
    assert str(ip.Permutation("21").double_schubert()) == "x1 - y1"

    y = ip.Involution("1432")
    expected = "x1^2 + 2*x1*x2 + x2^2 + x1*x3 + x2*x3"
    assert str(y.schubert()) == expected
    assert str(y.schubert("dreams")) == expected
    assert sorted(y.pipe_dreams()) == [[(2, 1), (2, 2)], [(2, 1), (3, 1)]]
    assert y.weighted_count() == "3"
    assert sorted(str(a) for a in y.atoms()) == ["1342", "1423"]
    assert y.involution_words() == [[2, 3], [3, 2]]

    z = ip.FpfInvolution("216543")
    assert len(z.pipe_dreams()) == 4
    assert z.schubert() == z.schubert("dreams")
    assert sorted(a.one_line(4) for a in ip.FpfInvolution("4321").atoms()) == [[1, 3, 4, 2], [3, 1, 2, 4]]

    perm, reduced = ip.resolve_cells([(1, 3), (2, 1)])
    assert reduced and perm.one_line(4) == [1, 4, 2, 3]
    assert "2 -> 4" in ip.render_cells([(1, 3), (2, 1)])
    assert ip.render_cells([(1, 1)], "svg").startswith("<svg")

    assert ip.rpp_count([3, 1], 1, shifted=True) == 6

    passed, report = ip.verify(["transition", "pd-oracle"], 4)
    assert passed, report

    try:
        ip.Involution("2314")
    except ValueError:
        pass
    else:
        raise AssertionError("2314 is not an involution")

    print("pyinvpipes smoke test passed")


if __name__ == "__main__":
    main()
