"""Smoke test for the skeinlab Python extension.

Builds the extension with cargo if needed, loads it from a temporary
directory and exercises each exported entry point once.
"""

import json
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load():
    subprocess.run(["cargo", "build", "--release", "-p", "skeinlab-py"], cwd=ROOT, check=True)
    lib = ROOT / "target" / "release" / "libskeinlab.so"
    if not lib.exists():
        lib = ROOT / "target" / "release" / "libskeinlab.dylib"
    tmp = pathlib.Path(tempfile.mkdtemp())
    shutil.copy(lib, tmp / "skeinlab.so")
    sys.path.insert(0, str(tmp))
    import skeinlab

    return skeinlab


def main():
    sk = load()

    unknot = sk.Diagram.from_json('{"width_in":0,"events":[["cup",0],["cap",0]],"width_out":0,"orient":["u"]}')
    assert unknot.invariant("bracket") == "1"
    assert unknot.is_closed() and unknot.components == 1

    right = sk.Diagram.from_braid(2, [1, 1, 1]).closure()
    left = right.mirror()
    assert right.invariant("jones") == "-s^8 + s^6 + s^2"
    assert right.invariant("jones") != left.invariant("jones")
    assert right.tait_number() == 3

    tref = sk.Diagram.from_pd([[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]])
    assert tref.crossings == 3
    assert tref.invariant("homflypt") in (right.invariant("homflypt"), left.invariant("homflypt"))
    assert sk.Diagram.from_json(tref.to_json()) == tref

    try:
        right.two_cable().invariant("homflypt", max_crossings=4)
    except RuntimeError as e:
        assert "budget" in str(e)
    else:
        raise AssertionError("cap was not enforced")

    m = sk.MarkedLink.random(3)
    for axis in "xyz":
        kinds = ["bracket"]
        if m.component_preserving(axis):
            kinds += ["homflypt", "kauffman_f"]
        cert = json.loads(sk.certify(m.link(), m.mutant(axis), kinds, construction="mutation", theorem="1.1"))
        assert all(cert["verdicts"].values()), cert["verdicts"]

    l, rl = sk.random_rotant_pair(7, 3)
    cert = json.loads(sk.certify(l, rl, ["bracket", "homflypt"], construction="rotant", theorem="2.2"))
    assert all(cert["verdicts"].values())

    a, b = sk.connected_sum_pair(right, 0, right, 0)
    assert a.invariant("homflypt") == b.invariant("homflypt")

    p = sk.spectral("tl3", '["1","2","A","A^-1","3"]')
    assert p is not None and "b0-t0,b1-t1" in json.loads(p[0])
    assert sk.spectral("tl3", '["0","0","0","1","0"]') is None
    assert sk.spectral("h3", '{"123":"1","213":"v","312":"z"}') is not None
    assert sk.sprime3_spectral('["1","1","0","0","0","2"]', '["0","0","1","0","0","1"]') is not None

    rep = json.loads(sk.run_suite("3.4a", 7, 5))
    assert rep["checks"] == 5 and not rep["failures"]
    rep = json.loads(sk.run_suite("2.2", 1, 3, n=4))
    assert rep["checks"] == 3 and not rep["failures"]

    print("python smoke test passed")


if __name__ == "__main__":
    main()
