"""Smoke test for the pycubeset extension.

Build it with `cargo build -p cubeset-py` and put the library on the path
as `pycubeset.so`, or run `python/smoke_test.py --build` to do both.
"""

import json
import os
import shutil
import subprocess
import sys
import tempfile

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def build():
    subprocess.run(["cargo", "build", "-p", "cubeset-py"], cwd=ROOT, check=True)
    out = tempfile.mkdtemp(prefix="pycubeset-")
    shutil.copy(os.path.join(ROOT, "target", "debug", "libpycubeset.so"), os.path.join(out, "pycubeset.so"))
    sys.path.insert(0, out)


def main():
    if "--build" in sys.argv:
        build()
    import pycubeset as cs

    P = cs.Theory("P")
    empty = cs.Theory("none")
    meet = cs.Theory("meet")
    assert cs.hom_count(P, 2, 1) == 6
    assert cs.hom_count(empty, 1, 1) == 3
    assert len(cs.hom(empty, 0, 2)) == 4

    join = cs.CubeMap(2, 1, ["0", "1", "1", "1"])
    assert cs.is_member(P, join) and not cs.is_member(meet, join)
    assert join.is_active()

    f = cs.CubeMap(2, 2, ["01", "11", "01", "11"])
    kappa, psi = f.active_face_factor()
    assert kappa == [(2, 1)] and psi.table == ["0", "1", "0", "1"]
    assert cs.CubeMap.from_json(f.to_json()) == f

    delta = cs.CubeMap(1, 2, ["00", "11"])
    assert cs.standard_decomposition(delta, 0).table == ["00", "00", "10", "11"]

    assert cs.representable(P, 1, 2).counts()[2] == 6
    assert cs.boundary(empty, 2, 2).nondegenerate_counts() == [4, 4, 0]
    i = cs.representable(meet, 1, 2)
    assert cs.cartesian_product(i, i).counts()[1] == 9
    assert cs.left_extend(cs.representable(meet, 1, 3), P).counts() == cs.representable(P, 1, 3).counts()

    assert "n-identities" in cs.check_suites()
    report = json.loads(cs.run_check("n-identities", max_dim=2, max_k=1, theory=P))
    assert report["failureCount"] == 0 and report["cases"] > 0

    cert = cs.certify(meet, P, 1)
    assert json.loads(cert)["allInner"]
    code, _ = cs.verify(cert)
    assert code == 0
    code, _ = cs.verify("not json")
    assert code == 2
    print("pycubeset smoke test passed")


if __name__ == "__main__":
    main()
