import json
import pathlib


from logenriques import cli

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    assert doc["schema_version"] == cli.SCHEMA_VERSION
    return doc


def _floats_tagged(node):
    """Every float in the document sits in a {"value", "tol"} object."""
    if isinstance(node, dict):
        if set(node) == {"value", "tol"}:
            return True
        return all(_floats_tagged(v) for v in node.values())
    if isinstance(node, list):
        return all(_floats_tagged(v) for v in node)
    return not isinstance(node, float)


def test_coeffs_csv(capsys):
    code, out, _ = run(capsys, "coeffs", "--k", "3", "--order", "20", "--csv")
    assert code == 0
    rows = out.strip().splitlines()
    assert rows[0] == "l_times_4,c0,c1"
    for row in rows[1:]:
        [int(x) for x in row.split(",")]
    assert len(rows) > 20


def test_coeffs_json_exact_strings(capsys):
    doc = run_json(capsys, "coeffs", "--k", "3", "--order", "3")
    assert doc["c0"] == {"-1": "1", "0": "14", "1": "96", "2": "448"}
    assert doc["c1"] == {"3/4": "-64", "11/4": "-1216"}


def test_phi_eval_golden(capsys):
    doc = run_json(capsys, "phi", "eval", "--degree", "6", "--y", "3,-1,-1,-1", "--x", "0,0,0,0", "--cap", "8")
    gold = json.loads((GOLDEN / "phi_eval_deg6.json").read_text())
    assert set(doc) == set(gold)
    for key in ("cap", "terms", "degree", "variant"):
        assert doc[key] == gold[key]
    for key in ("log_re", "log_im", "log_norm"):
        assert abs(doc[key]["value"] - gold[key]["value"]) <= gold["bound"]["value"]
    assert _floats_tagged(doc)


def test_phi_eval_outside_cone_is_usage_error(capsys):
    code, out, err = run(capsys, "phi", "eval", "--degree", "6", "--y", "2,1,1,1", "--x", "0,0,0,0", "--cap", "8")
    assert code == 2 and out == "" and "Kaehler cone" in err


def test_bad_subcommand(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "coeffs")[0] == 2


def test_phi_check_and_qpb(capsys):
    doc = run_json(capsys, "phi", "check", "--degree", "7", "--points", "2")
    assert doc["passed"]
    doc = run_json(capsys, "phi", "qpb", "--degree", "8", "--variant", "Sigma0", "--points", "5")
    assert doc["spread"]["value"] < 1e-6
    assert run(capsys, "phi", "qpb", "--degree", "1")[0] == 2


def test_lat_and_dp(capsys):
    doc = run_json(capsys, "lat", "disc", "--k", "4")
    assert doc["disc_complement"] == doc["disc_expected"] == "256"
    doc = run_json(capsys, "lat", "show", "--name", "K3")
    assert doc["signature"] == [3, 19] and doc["discriminant"] in ("1", "-1")
    doc = run_json(capsys, "dp", "classes", "--degree", "5")
    assert doc["count"] == "10" and doc["enumerators_agree"]
    doc = run_json(capsys, "dp", "info", "--degree", "8", "--variant", "Sigma0")
    assert doc["minus_one_count"] == "0"


def test_eh_commands(capsys):
    doc = run_json(capsys, "eh", "chern2", "--eps", "1")
    assert abs(doc["integral_c2"]["value"] - 1.5) < 1e-4
    doc = run_json(capsys, "eh", "probe", "--delta", "1", "--cutoff", "exp_bump")
    assert doc["monotone"]
    doc = run_json(capsys, "eh", "check", "--eps", "0.5", "--points", "20")
    assert doc["max_det_error"]["value"] < 1e-8
    assert _floats_tagged(doc)


def test_spec_commands(capsys):
    doc = run_json(capsys, "spec", "p1", "--lam", "2,10")
    assert doc["zeta0_exact"] == "-2/3"
    for r in doc["ratios"]:
        assert abs(r["ratio"]["value"] - r["power_law"]["value"]) < 1e-12
    assert run_json(capsys, "spec", "bost")["log_lambda_coefficient"] == "-2/3"
    assert run_json(capsys, "spec", "cone")["alternating_factor"] == "0"
    assert run_json(capsys, "spec", "bcov-surface", "--count", "20")["all_equal"]
    assert run(capsys, "spec", "bost", "--d", "2", "--hodge", "1,0,1")[0] == 2


def test_inv_config(capsys, tmp_path):
    cfg = tmp_path / "inputs.cfg"
    cfg.write_text(
        "# synthetic bundle\n"
        "k = 2\n"
        "tau_Y_gamma = 2.0   # torsion\n"
        "vol_Y_gamma = 3\n"
        "xi_l1_norm = 1\n"
        "singular_ratios = 1, 1\n"
        "bott_chern_integral = 0\n",
        encoding="utf-8",
    )
    doc = run_json(capsys, "inv", "tau-k", "--config", str(cfg))
    assert abs(doc["tau_k"]["value"] - 6.0) < 1e-12
    assert doc["xi_rescaling_exponent"] == "0"
    doc = run_json(capsys, "inv", "tau-bcov", "--config", str(cfg))
    assert abs(doc["tau_bcov"]["value"] - 1 / 36) < 1e-15
    assert run_json(capsys, "inv", "c2", "--k", "10")["one_24th_int_c2_Y"] == "3/16"
    assert run_json(capsys, "inv", "chi-orb", "--k", "3")["chi_orb"] == "36"
    bad = tmp_path / "bad.cfg"
    bad.write_text("k 2\n", encoding="utf-8")
    assert run(capsys, "inv", "c2", "--config", str(bad))[0] == 2
    assert run(capsys, "inv", "c2")[0] == 2


def test_inv_compare(capsys, tmp_path):
    cfg = tmp_path / "cmp.cfg"
    cfg.write_text("k = 2\ndisc_plus_X = 4\ncoker_q = 1\ncoker_qtilde = 2\ndisc_plus_Xtilde = 16\n")
    doc = run_json(capsys, "inv", "compare", "--config", str(cfg))
    assert doc["numeric"] == "1/4" and doc["symbol"] == "C(k)^8"


def test_out_and_figures(capsys, tmp_path):
    out = tmp_path / "r.json"
    figs = tmp_path / "figs"
    assert cli.run(["spec", "cone", "--out", str(out), "--figures", str(figs)]) == 0
    doc = json.loads(out.read_text())
    assert doc["figures"] and all(pathlib.Path(f).stat().st_size > 0 for f in doc["figures"])
    assert cli.run(["coeffs", "--k", "2", "--order", "12", "--csv", "--figures", str(figs)]) == 0
    assert (figs / "qseries_growth_k2.png").exists()


def test_accept_deterministic(capsys):
    a = run(capsys, "accept", "--seed", "7", "--only", "10,11,12")
    b = run(capsys, "accept", "--seed", "7", "--only", "10,11,12")
    assert a[0] == b[0] == 0
    assert a[1] == b[1]
    assert _floats_tagged(json.loads(a[1]))
    assert "[PASS] 10" in a[2]


def test_accept_failure_exit_code(capsys):
    code, out, err = run(capsys, "accept", "--only", "9")
    assert code == 1
    assert json.loads(out)["failed"] == "1"
    assert run(capsys, "accept", "--only", "13")[0] == 2
