import json
import subprocess
import sys

import pytest

from xmodkit.catalog import catalog_to_json, save_catalog
from xmodkit.crossed_modules import xmod_to_json
from xmodkit.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, main, parse_group, resolve_xmod
from xmodkit.dot import dot_counts
from xmodkit.errors import NotFound


@pytest.fixture(scope="module")
def catalog_file(tmp_path_factory, small_catalog):
    path = tmp_path_factory.mktemp("cat") / "cat4.json"
    save_catalog(small_catalog, path)
    return path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog_command(tmp_path, capsys):
    out = tmp_path / "c.json"
    code, text, _ = run(capsys, "catalog", "--max-order", "3", "--out", str(out))
    assert code == EXIT_OK and "3 groups" in text
    data = json.loads(out.read_text())
    assert [g["label"] for g in data["groups"]] == ["Z1", "Z2", "Z3"]


@pytest.mark.parametrize(
    "ref,degrees",
    [("cyclic:4:2", [2, 1]), ("id:Z2", [1]), ("zero:Z2:Z2", [None, None])],
)
def test_liftings_rows(capsys, ref, degrees):
    code, text, _ = run(capsys, "liftings", "--xmod", ref, "--json")
    assert code == EXIT_OK
    report = json.loads(text)
    assert [row["degree"] for row in report["liftings"]] == degrees


def test_liftings_table(capsys):
    code, text, _ = run(capsys, "liftings", "--xmod", "cyclic:4:2")
    lines = text.strip().splitlines()
    assert code == EXIT_OK and lines[0].startswith("liftings of Z4->Z2") and len(lines) == 4


def test_liftings_from_catalog_and_file(capsys, catalog_file, tmp_path, mod2):
    code, text, _ = run(capsys, "liftings", "--xmod", "Z4->Z2#2", "--catalog", str(catalog_file), "--json")
    assert code == EXIT_OK and json.loads(text)["xmod"] == "Z4->Z2#2"
    f = tmp_path / "x.json"
    f.write_text(json.dumps(xmod_to_json(mod2)))
    code, text, _ = run(capsys, "liftings", "--xmod", str(f), "--json")
    assert len(json.loads(text)["liftings"]) == 2


def test_verify_fresh_catalog(capsys, catalog_file):
    code, text, _ = run(capsys, "verify", "--catalog", str(catalog_file))
    assert code == EXIT_OK
    assert text.strip().splitlines()[-1].startswith("OK:")


def test_verify_scope(capsys, catalog_file):
    code, text, _ = run(capsys, "verify", "--scope", "liftings", "--catalog", str(catalog_file))
    assert code == EXIT_OK
    scopes = {line.split("]")[0] for line in text.splitlines() if line.startswith("PASS")}
    assert scopes == {"PASS [liftings"}


def test_verify_corrupted_catalog(capsys, small_catalog, tmp_path):
    data = catalog_to_json(small_catalog)
    data["groups"][2]["table"][1][1] = 1
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, text, _ = run(capsys, "verify", "--catalog", str(path))
    assert code == EXIT_FAIL
    assert "FAIL catalog-load: group Z3" in text


def test_verify_garbage_and_missing(capsys, tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("{not json")
    assert run(capsys, "verify", "--catalog", str(path))[0] == EXIT_FAIL
    assert run(capsys, "verify", "--catalog", str(tmp_path / "none.json"))[0] == EXIT_USAGE


@pytest.mark.parametrize(
    "ref,counts",
    [("eta:id:Z2", (2, 2)), ("discrete:Z3", (3, 0)), ("regular:Z2", (2, 2)), ("group:S3", (1, 5))],
)
def test_export_dot(capsys, tmp_path, ref, counts):
    out = tmp_path / "g.dot"
    code, _, _ = run(capsys, "export-dot", "--ref", ref, "--out", str(out))
    assert code == EXIT_OK
    text = out.read_text()
    assert text.startswith("digraph") and dot_counts(text) == counts


def test_export_dot_identities_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.dot", tmp_path / "b.dot"
    run(capsys, "export-dot", "--ref", "eta:id:Z2", "--out", str(a), "--include-identities")
    run(capsys, "export-dot", "--ref", "eta:id:Z2", "--out", str(b), "--include-identities")
    assert dot_counts(a.read_text()) == (2, 4)
    assert a.read_bytes() == b.read_bytes()


@pytest.mark.parametrize(
    "argv",
    [
        ["liftings", "--xmod", "nonsense"],
        ["liftings", "--xmod", "cyclic:4:3"],
        ["export-dot", "--ref", "what:Z2", "--out", "x.dot"],
        ["catalog", "--max-order", "99", "--out", "x.json"],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify"])
    assert exc.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--scope", "bogus", "--catalog", "x"])
    assert exc.value.code == EXIT_USAGE


def test_parse_group_and_resolve():
    assert parse_group("Z2xV4").order == 8
    assert parse_group("Q8").order == 8 and not parse_group("Q8").is_abelian
    with pytest.raises(NotFound):
        parse_group("A4")
    assert resolve_xmod("V4->Z2#1").A.label == "V4"
    with pytest.raises(NotFound):
        resolve_xmod("Z2->Z2#99")


def test_console_script_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "xmodkit.cli", "liftings", "--xmod", "cyclic:4:2", "--json"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert len(json.loads(proc.stdout)["liftings"]) == 2
