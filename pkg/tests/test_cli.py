from __future__ import annotations

import json

import pytest

from nearcentral.cli import run


def _invoke(capsys, argv: list[str]) -> tuple[int, object, str]:
    code = run(argv)
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out.strip() else None
    return code, doc, captured.err


def test_genchar_default_method(capsys) -> None:
    code, doc, _ = _invoke(
        capsys,
        ["genchar", "--n", "3", "--mu", "2,1", "--j", "2", "--lambda", "2,1", "--i", "2"],
    )
    assert code == 0
    assert doc == {"value": "1/2", "method": "auto"}


def test_genchar_all_methods_agree(capsys) -> None:
    base = ["genchar", "--n", "3", "--mu", "2,1", "--j", "2", "--lambda", "2,1", "--i", "2"]
    for method in ("auto", "table", "strahov", "oracle"):
        code, doc, _ = _invoke(capsys, base + ["--method", method])
        assert code == 0
        assert doc["value"] == "1/2"
        assert doc["method"] == method


def test_starfact_count(capsys) -> None:
    code, doc, _ = _invoke(
        capsys, ["starfact", "count", "--lambda", "2,1", "--i", "2", "--r", "3"]
    )
    assert code == 0
    assert doc == {"count": "3"}


def test_starfact_class_and_cycles(capsys) -> None:
    code, doc, _ = _invoke(
        capsys, ["starfact", "class", "--lambda", "2,1", "--r", "3"]
    )
    assert code == 0 and doc == {"count": "8"}
    code, doc, _ = _invoke(
        capsys, ["starfact", "cycles", "--n", "3", "--k", "3", "--r", "2"]
    )
    assert code == 0 and doc == {"count": "2"}


def test_starfact_closed(capsys) -> None:
    for case, expected in (
        ("full-cycle", "1"),
        ("fix-point-mark1", "2"),
        ("transposed-mark", "3"),
    ):
        r = "2" if case == "full-cycle" else "3"
        code, doc, _ = _invoke(
            capsys, ["starfact", "closed", "--case", case, "--n", "3", "--r", r]
        )
        assert code == 0
        assert doc == {"count": expected}


def test_partitions_listing(capsys) -> None:
    code, doc, _ = _invoke(capsys, ["partitions", "--n", "3"])
    assert code == 0
    assert doc == {"n": 3, "partitions": ["3", "2,1", "1,1,1"]}
    code, doc, _ = _invoke(capsys, ["partitions", "--n", "3", "--marked"])
    assert code == 0
    assert doc == {
        "n": 3,
        "marked_partitions": ["3@3", "2,1@2", "2,1@1", "1,1,1@1"],
    }


def test_tableaux_listing(capsys) -> None:
    code, doc, _ = _invoke(capsys, ["tableaux", "--shape", "2,1"])
    assert code == 0
    assert doc["count"] == 2
    code, doc, _ = _invoke(capsys, ["tableaux", "--shape", "2,1", "--mark", "2"])
    assert code == 0
    assert doc["count"] == 1


def test_chartable_json_and_csv(capsys) -> None:
    code, doc, _ = _invoke(capsys, ["chartable", "--n", "3"])
    assert code == 0
    assert doc["table"] == [
        ["1", "1", "1"],
        ["-1", "0", "2"],
        ["1", "-1", "1"],
    ]
    code = run(["chartable", "--n", "3", "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    rows = [line for line in out.splitlines() if line]
    assert len(rows) == 4  # header + one row per shape
    assert rows[1].split(",")[0] == "3"


def test_connection(capsys) -> None:
    code, doc, _ = _invoke(
        capsys,
        [
            "connection", "--n", "3",
            "--lambda", "2,1", "--i", "2",
            "--mu", "2,1", "--j", "2",
            "--nu", "1,1,1", "--k", "1",
        ],
    )
    assert code == 0
    assert doc == {"value": "2"}


def test_oracle_verify(capsys) -> None:
    code, doc, _ = _invoke(capsys, ["oracle", "verify", "--max-n", "3"])
    assert code == 0
    assert doc["status"] == "ok"
    assert doc["max_n"] == 3
    assert doc["checks"] > 0


def test_usage_errors_exit_64(capsys) -> None:
    assert run(["nonsense"]) == 64
    capsys.readouterr()
    assert run(["genchar", "--n", "3"]) == 64
    capsys.readouterr()


def test_domain_error_exits_1(capsys) -> None:
    code, doc, err = _invoke(
        capsys,
        ["genchar", "--n", "3", "--mu", "2,1", "--j", "3", "--lambda", "2,1", "--i", "2"],
    )
    assert code == 1
    assert doc["status"] == "error"
    assert err


def test_guard_exceeded_exits_2(capsys) -> None:
    code, doc, _ = _invoke(
        capsys,
        [
            "genchar", "--n", "12",
            "--mu", "6,3,3", "--j", "3",
            "--lambda", "6,3,3", "--i", "6",
            "--method", "strahov",
        ],
    )
    assert code == 2
    assert doc["status"] == "error"


def test_output_is_deterministic(capsys) -> None:
    argv = ["genchar", "--n", "4", "--mu", "3,1", "--j", "3", "--lambda", "2,2", "--i", "2"]
    run(argv)
    first = capsys.readouterr().out
    run(argv)
    second = capsys.readouterr().out
    assert first == second
