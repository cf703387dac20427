import io
import json
import random
import subprocess
import sys

from flagsphere.cli import run
from flagsphere.complex import read_facets
from flagsphere.constructions import build_W


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_generate_and_alpha(tmp_path):
    code, out, _ = call("generate", "W:d=3,k=3", "-o", str(tmp_path))
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["W_d3_k3.facets", "W_d3_k3.graph", "manifest.json"]
    manifest = json.loads((tmp_path / "manifest.json").read_text())
    assert manifest["n"] == 14 and manifest["expected_alpha"] == 4
    assert manifest["f_vector"] == [1, 14, 36, 24] and json.loads(out) == manifest
    assert read_facets(tmp_path / "W_d3_k3.facets") == build_W(3, 3)
    code, out, _ = call("alpha", str(tmp_path / "W_d3_k3.graph"))
    body = json.loads(out)
    assert code == 0 and body["size"] == 4 and body["method"] == "exact"
    code, out, _ = call("alpha", str(tmp_path / "W_d3_k3.graph"), "--method", "turan")
    assert code == 0 and json.loads(out)["size"] >= 3


def test_alpha_link_method(tmp_path):
    call("generate", "Wp:k=2", "-o", str(tmp_path))
    code, out, _ = call("alpha", str(tmp_path / "Wp_k2.graph"), "--method", "link")
    assert code == 0 and json.loads(out)["method"] == "link_recursive"


def test_alpha_budget_exhausted(tmp_path):
    path = tmp_path / "big.graph"
    rng = random.Random(1)
    edges = {(u, v) for u in range(120) for v in range(u + 1, 120) if rng.random() < 0.08}
    path.write_text(f"{120} {len(edges)}\n" + "".join(f"v{u} v{v}\n" for u, v in sorted(edges)))
    code, out, _ = call("alpha", str(path), "--budget", "0")
    assert code == 2 and json.loads(out)["optimal"] is False


def test_verify_exit_codes(tmp_path):
    bad = tmp_path / "bad.facets"
    bad.write_text("a b c\nb c d\n")
    code, out, _ = call("verify", str(bad))
    assert code == 1 and json.loads(out)["verdict"] == "NotSphere"
    call("generate", "W:d=3,k=2", "-o", str(tmp_path))
    assert call("verify", str(tmp_path / "W_d3_k2.facets"))[0] == 0
    call("generate", "cross:d=6", "-o", str(tmp_path))
    code, out, _ = call("verify", str(tmp_path / "cross_d6.facets"))
    assert code == 2 and json.loads(out)["verdict"] == "HomologySphere"


def test_usage_and_input_errors(tmp_path):
    assert call("frobnicate")[0] == 64
    assert call("generate", "Q:d=3")[0] == 64
    code, _, err = call("verify", str(tmp_path / "missing.facets"))
    assert code == 64 and "missing.facets" in err
    mal = tmp_path / "mal.facets"
    mal.write_text("a b c\n\nb b c\n")
    code, _, err = call("verify", str(mal))
    assert code == 64 and "mal.facets:3" in err
    assert call("table", "--d", "4", "--n-min", "9", "--n-max", "8")[0] == 64
    assert call("rigidity", str(mal))[0] == 64


def test_rigidity_command(tmp_path):
    call("generate", "Wp:k=3", "-o", str(tmp_path))
    path = str(tmp_path / "Wp_k3.facets")
    code, out, _ = call("rigidity", path, "--dim", "4", "--probe-r", "5", "--trials", "3")
    body = json.loads(out)
    assert code == 0 and body["rank"] == body["expected_rank"] == 70
    assert body["stress_dim"] == body["g2"] and body["probe"]["r"] == 5
    assert call("rigidity", path, "--dim", "3")[0] == 1


def test_table(tmp_path):
    code, out, _ = call("table", "--d", "3", "--n-min", "6", "--n-max", "10")
    assert code == 0 and len(out.strip().splitlines()) == 6
    code, out, _ = call("table", "--d", "4", "--n-min", "8", "--n-max", "9", "--format", "json")
    rows = json.loads(out)
    assert [r["construction_alpha"] for r in rows] == [2, 2]


def test_json_output_is_deterministic(tmp_path):
    call("generate", "Xp:k=2,j=1", "-o", str(tmp_path))
    path = str(tmp_path / "Xp_k2_j1.facets")
    first = call("rigidity", path, "--dim", "4", "--seed", "7")[1]
    second = call("rigidity", path, "--dim", "4", "--seed", "7")[1]
    assert first == second
    assert call("verify", path, "--seed", "3")[1] == call("verify", path, "--seed", "3")[1]


def test_check_suite_bounds():
    code, out, _ = call("check", "--suite", "bounds")
    assert code == 0 and "[PASS]  9" in out and "[PASS] 10" in out
    code, out, _ = call("check", "--suite", "bounds", "--format", "json")
    assert code == 0 and [r["criterion"] for r in json.loads(out)["results"]] == [9, 10]


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "flagsphere", "generate", "cross:d=3",
                           "-o", str(tmp_path)], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["n"] == 6
