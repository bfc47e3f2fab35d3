"""Backend selection: forced pure mode must reproduce compiled results."""

import json
import subprocess
import sys

import pytest

import steinitzcalc as sc

_HAVE_SPEEDUPS = sc.BACKEND == "speedups"


def _run(env_pure: bool, code: str) -> str:
    env = {"PATH": "/usr/bin:/bin", "STEINITZCALC_PURE": "1"} if env_pure else {
        "PATH": "/usr/bin:/bin"
    }
    out = subprocess.run(
        [sys.executable, "-c", code], capture_output=True, text=True, env=env
    )
    assert out.returncode == 0, out.stderr
    return out.stdout


_PROBE = """
import json
import steinitzcalc as sc
from steinitzcalc import grouptree as gt
payload = {"backend": sc.BACKEND}
payload["cl84"] = [f.as_tuple() for f in sc.class_group(-84).forms]
payload["rt_c3_84"] = [
    f.as_tuple() for f in sc.rt(sc.QuadField(-84), gt.leaf(3)).subgroup.member_forms()
]
payload["rt_d9_23"] = [
    f.as_tuple()
    for f in sc.rt(sc.QuadField(-23), gt.dihedral_tree(9)).subgroup.member_forms()
]
w = sc.w_group(sc.QuadField(-84), 3, sc.CycloSubgroup(3, frozenset([1])))
payload["w84"] = [f.as_tuple() for f in w.subgroup.member_forms()]
payload["w84_windows"] = list(w.certificate.windows)
print(json.dumps(payload, sort_keys=True))
"""


def test_pure_env_forces_pure_backend():
    data = json.loads(_run(True, _PROBE))
    assert data["backend"] == "pure"


@pytest.mark.skipif(not _HAVE_SPEEDUPS, reason="compiled kernels not built")
def test_backends_agree_end_to_end():
    pure = json.loads(_run(True, _PROBE))
    fast = json.loads(_run(False, _PROBE))
    assert fast["backend"] == "speedups"
    for key in ("cl84", "rt_c3_84", "rt_d9_23", "w84", "w84_windows"):
        assert pure[key] == fast[key], key
