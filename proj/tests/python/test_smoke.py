# Copyright 2026 The franfit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import csv
import json
import math
import os
import pathlib
import subprocess

import pytest

import franfit

CLI = os.environ.get("FRANFIT_CLI")
SCHEMAS = os.environ.get("FRANFIT_SCHEMAS")


def test_kinds():
    assert franfit.KINDS == ["Weibull", "TruncatedWeibull", "Gamma", "InvGamma", "LogNormal"]


def test_lognormal_closed_form():
    xs = franfit.draw("LogNormal", {"mu": 4.0, "sigma": 0.3}, 2000, 7)
    fit = franfit.fit_lognormal(xs)
    logs = [math.log(x) for x in xs]
    mu = sum(logs) / len(logs)
    sigma = math.sqrt(sum((v - mu) ** 2 for v in logs) / len(logs))
    assert fit["kind"] == "LogNormal"
    assert fit["params"]["mu"] == pytest.approx(mu, rel=1e-12)
    assert fit["params"]["sigma"] == pytest.approx(sigma, rel=1e-10)
    assert fit["loglik"] == pytest.approx(
        franfit.log_likelihood("LogNormal", fit["params"], xs), rel=1e-12)


def test_fit_all_and_gof():
    xs = franfit.draw("Gamma", {"shape": 9.0, "rate": 0.5}, 3000, 3)
    fits = {f["kind"]: f for f in franfit.fit_all(xs)}
    assert set(fits) == set(franfit.KINDS)
    g = fits["Gamma"]
    assert g["params"]["shape"] == pytest.approx(9.0, rel=0.1)
    assert franfit.ks_statistic(xs, "Gamma", g["params"]) < 0.03
    assert franfit.anderson_darling(xs, "Gamma", g["params"]) < 2.5


def test_errors_are_value_errors():
    with pytest.raises(franfit.FranfitError):
        franfit.fit_lognormal([2.0, 2.0, 2.0])
    with pytest.raises(ValueError):
        franfit.draw("Gamma", {"shape": -1.0, "rate": 1.0}, 10, 0)


def test_helpers():
    assert franfit.classify_dispersion(0.10) == "Low"
    assert franfit.classify_dispersion(0.20) == "Medium"
    assert franfit.classify_dispersion(0.50) == "High"
    dd = franfit.max_drawdown(["2008-01-02", "2008-01-03", "2008-01-04", "2008-01-07"],
                              [10.0, 12.0, 6.0, 13.0], "2008-01-01..2008-12-31")
    assert dd["max_drawdown"] == pytest.approx(0.5)
    assert dd["recovery_date"] == "2008-01-07"
    vals = franfit.normalize([2007, 2008, 2009], [2.0, 4.0, 6.0], 2007, 2009)
    assert vals == pytest.approx([0.5, 1.0, 1.5])


def test_demo_pipeline_in_process(tmp_path):
    conf = franfit.write_demo_tree(str(tmp_path), 5)
    assert franfit.cmd_cohort(str(conf)) == 0
    with open(tmp_path / "out" / "summary.csv", newline="") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 9
    assert all(r["status"] == "ok" for r in rows)


needs_cli = pytest.mark.skipif(not CLI, reason="FRANFIT_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@pytest.fixture(scope="module")
def demo(tmp_path_factory):
    root = tmp_path_factory.mktemp("demo")
    assert run("demo", "--out", str(root)).returncode == 0
    return root


@needs_cli
def test_cli_cohort_and_fit(demo):
    conf = str(demo / "franfit.conf")
    assert run("cohort", "--config", conf).returncode == 0
    r = run("fit", "--config", conf, "--ticker", "MCD")
    assert r.returncode == 0, r.stderr
    doc = json.loads((demo / "out" / "fits" / "MCD.json").read_text())
    assert doc["ticker"] == "MCD"
    assert doc["fits"][0]["gof"]["aic"] <= doc["fits"][-1]["gof"]["aic"]
    if SCHEMAS:
        jsonschema = pytest.importorskip("jsonschema")
        schema = json.loads(pathlib.Path(SCHEMAS, "fit_result.schema.json").read_text())
        jsonschema.validate(doc, schema)


@needs_cli
def test_cli_fundamentals(demo):
    r = run("fundamentals", "--config", str(demo / "franfit.conf"))
    assert r.returncode == 0, r.stderr
    assert (demo / "out" / "fundamentals" / "EPS.csv").exists()


@needs_cli
def test_cli_exit_codes(demo, tmp_path):
    conf = str(demo / "franfit.conf")
    # Missing price file: I/O.
    r = run("fit", "--config", conf, "--ticker", "NOPE")
    assert r.returncode == 2
    assert json.loads(r.stderr.splitlines()[0])["command"] == "fit"
    # Constant prices: fitting failure.
    flat = tmp_path / "flat"
    (flat / "prices").mkdir(parents=True)
    (flat / "universe.csv").write_text("ticker,name,franchise_class\nFLT,Flat,Franchised\n")
    lines = ["date,close"] + [f"2008-01-{d:02d},5.00" for d in range(2, 31)]
    (flat / "prices" / "FLT.csv").write_text("\n".join(lines) + "\n")
    (flat / "franfit.conf").write_text("universe_path = universe.csv\nprice_dir = prices\n")
    assert run("fit", "--config", str(flat / "franfit.conf"), "--ticker", "FLT").returncode == 3
    # Unknown metric in the fundamentals file: schema error.
    (flat / "f.csv").write_text("ticker,metric,year,value\nFLT,Sales,2008,1\n")
    (flat / "franfit.conf").write_text(
        "universe_path = universe.csv\nprice_dir = prices\nfundamentals_path = f.csv\n")
    assert run("fundamentals", "--config", str(flat / "franfit.conf")).returncode == 4
    # Bad plot kind and missing subcommand arguments.
    assert run("plot", "--config", conf, "--ticker", "MCD", "--kind", "pie").returncode == 4
    assert run("--help").returncode == 0
