import json

from tamewild.cli import RunConfig, dispatch, element_from_string
from tamewild.localfield import qp_zeta


def _run(capsys, argv):
    code = dispatch(argv)
    out = capsys.readouterr().out
    return code, out


def _run_json(capsys, argv):
    code, out = _run(capsys, argv + ["--json"])
    return code, json.loads(out)


def test_element_parser():
    ctx = qp_zeta(3, 16)
    assert element_from_string(ctx, "p") == ctx.from_int(3)
    assert element_from_string(ctx, "1+3*pi^2") == \
        ctx.one + ctx.from_int(3) * ctx.pi ** 2
    assert element_from_string(ctx, "-(pi+1)") == -(ctx.pi + ctx.one)
    assert element_from_string(ctx, "2pi") == ctx.pi * 2


def test_moore_subcommand(capsys):
    code, doc = _run_json(capsys, ["moore", "--a", "13", "--b", "17"])
    assert code == 0
    assert doc["schema"] == "v1"
    assert doc["result"]["product"] == 1
    assert doc["result"]["table"]["13"] == 1


def test_hilbert2_subcommand(capsys):
    code, doc = _run_json(capsys,
                          ["hilbert2", "--place", "5", "--a", "5", "--b", "2"])
    assert code == 0 and doc["result"]["value"] == -1
    code, doc = _run_json(capsys, ["hilbert2", "--place", "inf",
                                   "--a", "-1", "--b", "-1"])
    assert doc["result"]["value"] == -1
    # negative fractions need the --opt=value spelling
    code, doc = _run_json(capsys, ["hilbert2", "--place", "3",
                                   "--a", "1/3", "--b=-5/7"])
    assert code == 0


def test_tame_subcommand(capsys):
    code, doc = _run_json(capsys, ["tame", "--preset", "qp-5",
                                   "--x", "p", "--y", "2"])
    assert code == 0
    assert doc["result"]["value"]["tame_mod"] == 4
    assert not doc["result"]["trivial"]


def test_wild_zeta_subcommand(capsys):
    code, doc = _run_json(capsys, ["wild-zeta", "--p", "3", "--x", "1+p"])
    assert code == 0
    assert doc["result"]["value"]["wild"] == 1


def test_norm_oracle_subcommand(capsys):
    code, doc = _run_json(capsys, ["norm-oracle", "--preset", "qp-5",
                                   "--m", "2", "--x", "2", "--y", "5"])
    assert code == 0 and doc["result"]["trivial"] is False
    code, doc = _run_json(capsys, ["norm-oracle", "--preset", "qp-zeta-3",
                                   "--m", "p", "--x", "1+p", "--y", "1+pi",
                                   "--precision", "32"])
    assert code == 0 and doc["result"]["trivial"] is False


def test_order_subcommand(capsys):
    code, doc = _run_json(capsys, ["order", "--preset", "sqrt-3",
                                   "--m", "2", "--x", "pi^3"])
    assert code == 0
    assert doc["result"]["contains"] is True
    assert doc["result"]["index"] == "3"


def test_m0_subcommand(capsys):
    code, doc = _run_json(capsys, ["m0", "--preset", "qp-zeta-3",
                                   "--precision", "32"])
    assert code == 0
    assert doc["result"]["bound"] == 4
    assert doc["result"]["estimated_m0"] <= 4


def test_hasse_subcommand(capsys):
    code, doc = _run_json(capsys, ["hasse-verify", "--preset", "qp-zeta-5",
                                   "--t", "2", "--precision", "32"])
    assert code == 0
    assert doc["result"]["ok"] is True


def test_lattice_subcommand(capsys):
    code, doc = _run_json(capsys, ["lattice", "--p", "3", "--m", "2"])
    assert code == 0
    assert doc["result"]["index"] == 3
    assert doc["result"]["multiplicatively_closed"] is True


def test_ff_subcommands(capsys):
    code, doc = _run_json(capsys, ["weil", "--q", "3",
                                   "--f", "t", "--g", "t^2+1"])
    assert code == 0 and doc["result"]["product_is_one"]
    code, doc = _run_json(capsys, ["ff-hilbert", "--q", "4",
                                   "--f", "t^2+t", "--g", "t+1"])
    assert code == 0 and doc["result"]["product_is_one"]
    code, doc = _run_json(capsys, ["residue", "--q", "5",
                                   "--f", "1/(t^2-t)", "--g", "t"])
    assert code == 0 and doc["result"]["sum_is_zero"]


def test_usage_errors(capsys):
    assert dispatch(["no-such-command"]) == 2
    capsys.readouterr()
    assert dispatch(["hilbert2", "--place", "5", "--a", "0", "--b", "1"]) == 2
    capsys.readouterr()
    assert dispatch(["lattice", "--p", "11"]) == 2
    capsys.readouterr()


def test_field_json_descriptor(tmp_path, capsys):
    desc = qp_zeta(3, 16).descriptor()
    path = tmp_path / "field.json"
    path.write_text(json.dumps(desc))
    code, doc = _run_json(capsys, ["tame", "--field-json", str(path),
                                   "--x", "pi", "--y", "pi"])
    assert code == 0
    assert doc["result"]["value"]["tame"] == (qp_zeta(3, 16).q - 1) // 2


def test_byte_identical_output(capsys):
    argv = ["m0", "--preset", "qp-zeta-3", "--precision", "32", "--json"]
    _, out1 = _run(capsys, argv)
    _, out2 = _run(capsys, argv)
    assert out1 == out2
    argv = ["moore", "--a", "-99", "--b", "1001", "--json"]
    _, out1 = _run(capsys, argv)
    _, out2 = _run(capsys, argv)
    assert out1 == out2


def test_selftest_single(capsys):
    code, out = _run(capsys, ["selftest", "--only", "11"])
    assert code == 0
    assert "[PASS] criterion 11" in out


def test_selftest_byte_identical(capsys):
    _, out1 = _run(capsys, ["selftest", "--only", "11"])
    _, out2 = _run(capsys, ["selftest", "--only", "11"])
    assert out1 == out2


def test_runconfig_json():
    cfg = RunConfig(precision=32, budget=100, seed=7)
    assert cfg.to_json() == {"precision": 32, "budget": 100, "seed": 7}
