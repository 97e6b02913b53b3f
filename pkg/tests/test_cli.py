import pytest

from primecert.cli import main, parse_int_expr


def test_int_expression_parsing():
    assert parse_int_expr("227") == 227
    assert parse_int_expr("2^10") == 1024
    assert parse_int_expr("2^500+200000") == 2 ** 500 + 200000
    assert parse_int_expr("2^64-59") == 2 ** 64 - 59
    for bad in ("", "abc", "2^", "2^3^4", "1+2+3", "-5", "2 ^ 3"):
        with pytest.raises(ValueError):
            parse_int_expr(bad)


def test_prove_good_prime_roundtrip(tmp_path, capsys):
    cert = tmp_path / "c.pem"
    assert main(["prove", "227", "--out", str(cert)]) == 0
    out = capsys.readouterr().out
    assert out.strip().endswith("PRIME")
    text = cert.read_text()
    assert text.startswith("CERTCHAIN v1\nN 227\nGOOD R=113 ")
    assert main(["verify", str(cert)]) == 0
    assert capsys.readouterr().out.strip() == "ACCEPT"


def test_prove_composite_exit_codes(capsys):
    assert main(["prove", "221"]) == 1
    assert capsys.readouterr().out.startswith("COMPOSITE ")
    assert main(["prove", "27"]) == 1
    assert capsys.readouterr().out.strip() == "COMPOSITE perfect_power 3^3"


def test_usage_errors(capsys):
    assert main(["prove", "not-a-number"]) == 3
    assert main(["prove", "1"]) == 3
    assert main(["nonsense"]) == 3
    assert main(["verify", "/does/not/exist"]) == 3


def test_verify_detects_corruption(tmp_path, capsys):
    cert = tmp_path / "c.pem"
    assert main(["prove", str(2 ** 64 + 13), "--seed", "5", "--out", str(cert)]) == 0
    capsys.readouterr()
    text = cert.read_text()
    # corrupt the last field of the terminal record
    lines = text.split("\n")
    idx = len(lines) - 3  # line before END (text ends with newline)
    tokens = lines[idx].split(" ")
    name, val = tokens[-1].split("=")
    tokens[-1] = f"{name}={int(val) + 1}"
    lines[idx] = " ".join(tokens)
    cert.write_text("\n".join(lines))
    assert main(["verify", str(cert)]) == 1
    assert capsys.readouterr().out.startswith("REJECT link=")
    cert.write_text(text[: len(text) // 2])  # truncate
    assert main(["verify", str(cert)]) == 3


def test_survey_csv_output(capsys):
    assert main(["survey", "2^20", "5000", "--seed", "2"]) == 0
    out = capsys.readouterr().out.strip()
    start, end, primes, good, ratio = out.split(",")
    assert int(start) == 2 ** 20 and int(end) == 2 ** 20 + 5000
    assert int(primes) > 0 and 0 <= int(good) <= int(primes)
    assert len(ratio.split(".")[1]) == 4


def test_beta_output(capsys):
    assert main(["beta", "250000", "500000"]) == 0
    lines = capsys.readouterr().out.strip().split("\n")
    assert lines[0] == "0.9472455"
    assert lines[1] == "one_minus_beta 0.0527545"
    assert lines[2] == "inv_ln_b1 0.0804556"


def test_bench_smoke(capsys):
    assert main(["bench", "48", "--trials", "1", "--seed", "4"]) == 0
    out = capsys.readouterr().out
    assert "bits=48" in out and "pow_1_plus_x_s=" in out and "prove_s=" in out


def test_prove_seed_reproducibility(tmp_path):
    a, b = tmp_path / "a.pem", tmp_path / "b.pem"
    n = str(2 ** 80 + 13)
    assert main(["prove", n, "--seed", "9", "--out", str(a)]) == 0
    assert main(["prove", n, "--seed", "9", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
