import json

import numpy as np
import pytest

from gsvdkit import cli


def write_csv(path, rows):
    with open(path, "w", encoding="utf-8") as fh:
        for row in rows:
            fh.write(",".join(str(x) for x in row) + "\n")
    return str(path)


@pytest.fixture
def worked_example(tmp_path):
    a = write_csv(tmp_path / "a.csv", [[3, 0], [0, 4]])
    b = write_csv(tmp_path / "b.csv", [[1, 1]])
    return a, b


class TestGsvdCommand:
    def test_worked_example_values(self, worked_example, tmp_path, capsys):
        a, b = worked_example
        out = str(tmp_path / "factors.json")
        assert cli.main(["gsvd", a, b, "--json", out]) == 0
        printed = capsys.readouterr().out
        assert "inf" in printed
        doc = json.load(open(out))
        values = doc["generalized_values"]
        assert values[0] == "inf"
        assert abs(values[1] - 2.4) <= 1e-12
        assert doc["structure"]["n_infinite"] == 1
        assert (doc["r"], doc["ra"], doc["rb"]) == (2, 2, 1)

    def test_compact_flag_shapes(self, worked_example, tmp_path):
        a, b = worked_example
        out = str(tmp_path / "factors.json")
        assert cli.main(["gsvd", a, b, "--compact", "--json", out]) == 0
        doc = json.load(open(out))
        u = np.array(doc["u"])
        assert u.shape == (2, doc["ra"])

    def test_top_convention(self, worked_example, tmp_path):
        a, b = worked_example
        out = str(tmp_path / "factors.json")
        assert cli.main(["gsvd", a, b, "--convention", "top", "--json", out]) == 0
        doc = json.load(open(out))
        cols = [j for j in doc["v_col_of"] if j >= 0]
        assert cols == list(range(len(cols)))

    def test_dimension_mismatch_exit_3(self, tmp_path):
        a = write_csv(tmp_path / "a.csv", [[1, 2]])
        b = write_csv(tmp_path / "b.csv", [[1, 2, 3]])
        assert cli.main(["gsvd", a, b]) == 3

    def test_parse_error_exit_2_names_location(self, tmp_path, capsys):
        a = write_csv(tmp_path / "a.csv", [[1, 2]])
        bad = tmp_path / "bad.csv"
        bad.write_text("1,2\n3,oops\n")
        assert cli.main(["gsvd", a, str(bad)]) == 2
        err = capsys.readouterr().err
        assert "bad.csv" in err and ":2" in err

    def test_ragged_rows_exit_2(self, tmp_path):
        a = write_csv(tmp_path / "a.csv", [[1, 2]])
        bad = tmp_path / "ragged.csv"
        bad.write_text("1,2\n3\n")
        assert cli.main(["gsvd", a, str(bad)]) == 2

    def test_csv_prefix_outputs(self, worked_example, tmp_path):
        a, b = worked_example
        prefix = str(tmp_path / "out")
        assert cli.main(["gsvd", a, b, "--csv-prefix", prefix]) == 0
        u = cli.read_matrix(prefix + "_U.csv")
        c = cli.read_matrix(prefix + "_C.csv")
        s = cli.read_matrix(prefix + "_S.csv")
        v = cli.read_matrix(prefix + "_V.csv")
        h = cli.read_matrix(prefix + "_H.csv")
        rebuilt = np.vstack([u @ c, v @ s]) @ h
        np.testing.assert_allclose(rebuilt, [[3, 0], [0, 4], [1, 1]], atol=1e-12)

    def test_header_flag(self, tmp_path):
        a = tmp_path / "a.csv"
        a.write_text("x,y\n3,0\n0,4\n")
        b = write_csv(tmp_path / "b.csv", [[1, 1]])
        assert cli.main(["--header", "gsvd", str(a),
                         write_csv(tmp_path / "b2.csv", [["1", "1"]])]) == 2
        # header flag applies to every input, so b needs one too
        b2 = tmp_path / "bh.csv"
        b2.write_text("x,y\n1,1\n")
        assert cli.main(["--header", "gsvd", str(a), str(b2)]) == 0

    def test_unwritable_output_exit_2(self, worked_example, tmp_path):
        a, b = worked_example
        missing_dir = str(tmp_path / "no" / "such" / "dir" / "f.json")
        assert cli.main(["gsvd", a, b, "--json", missing_dir]) == 2

    def test_deterministic_output(self, worked_example, tmp_path):
        a, b = worked_example
        out1 = str(tmp_path / "f1.json")
        out2 = str(tmp_path / "f2.json")
        cli.main(["gsvd", a, b, "--json", out1])
        cli.main(["gsvd", a, b, "--json", out2])
        assert open(out1).read() == open(out2).read()


class TestVerifyCommand:
    def test_round_trip(self, worked_example, tmp_path, capsys):
        a, b = worked_example
        out = str(tmp_path / "factors.json")
        cli.main(["gsvd", a, b, "--json", out])
        assert cli.main(["verify", a, b, out]) == 0
        assert "OK" in capsys.readouterr().out

    def test_document_round_trip_exact(self, worked_example, tmp_path):
        from gsvdkit import gsvd
        from gsvdkit.matcore import Tolerance
        a, b = worked_example
        f = gsvd.gsvd_decompose(cli.read_matrix(a), cli.read_matrix(b))
        doc = cli.factors_to_document(f, Tolerance(), "bottom")
        path = tmp_path / "doc.json"
        path.write_text(json.dumps(doc))
        back = cli.factors_from_document(json.loads(path.read_text()))
        np.testing.assert_array_equal(back.u, f.u)
        np.testing.assert_array_equal(back.v, f.v)
        np.testing.assert_array_equal(back.c, f.c)
        np.testing.assert_array_equal(back.s, f.s)
        np.testing.assert_array_equal(back.h, f.h)
        np.testing.assert_array_equal(back.v_col_of, f.v_col_of)

    def test_mismatched_factors_exit_5(self, worked_example, tmp_path):
        a, b = worked_example
        out = str(tmp_path / "factors.json")
        cli.main(["gsvd", a, b, "--json", out])
        doc = json.load(open(out))
        doc["h"][0][0] += 0.5
        with open(out, "w") as fh:
            json.dump(doc, fh)
        assert cli.main(["verify", a, b, out]) == 5


class TestTikhonovCommand:
    def test_monotone_norms_with_identity_regularizer(self, tmp_path, capsys):
        rng = np.random.default_rng(3)
        a = rng.standard_normal((6, 3))
        write_csv(tmp_path / "a.csv", a.tolist())
        write_csv(tmp_path / "l.csv", np.eye(3).tolist())
        write_csv(tmp_path / "b.csv", [[x] for x in rng.standard_normal(6)])
        out = str(tmp_path / "path.json")
        code = cli.main(["tikhonov", str(tmp_path / "a.csv"), str(tmp_path / "l.csv"),
                         str(tmp_path / "b.csv"), "--lambdas", "0,1,10",
                         "--json", out])
        assert code == 0
        doc = json.load(open(out))
        norms = [row["x_norm"] for row in doc["solutions"]]
        assert norms[0] >= norms[1] >= norms[2]

    def test_rank_deficient_exit_4(self, tmp_path):
        write_csv(tmp_path / "a.csv", [[1, 1], [2, 2], [3, 3]])
        write_csv(tmp_path / "l.csv", np.eye(2).tolist())
        write_csv(tmp_path / "b.csv", [[1], [2], [3]])
        assert cli.main(["tikhonov", str(tmp_path / "a.csv"),
                         str(tmp_path / "l.csv"), str(tmp_path / "b.csv")]) == 4

    def test_negative_lambda_exit_2(self, tmp_path):
        write_csv(tmp_path / "a.csv", [[1, 0], [0, 1], [1, 1]])
        write_csv(tmp_path / "l.csv", np.eye(2).tolist())
        write_csv(tmp_path / "b.csv", [[1], [2], [3]])
        assert cli.main(["tikhonov", str(tmp_path / "a.csv"),
                         str(tmp_path / "l.csv"), str(tmp_path / "b.csv"),
                         "--lambdas", "0,-1"]) == 2


class TestAnovaCommand:
    def test_reference_f_value(self, tmp_path, capsys):
        data = write_csv(tmp_path / "v.csv",
                         [[x] for x in [6, 8, 4, 5, 3, 4, 8, 12, 9, 11, 6, 8,
                                        13, 9, 11, 8, 7, 12]])
        assert cli.main(["anova", data, "--partition", "6,6,6"]) == 0
        out = capsys.readouterr().out
        f_line = [line for line in out.splitlines() if line.startswith("F =")][0]
        assert abs(float(f_line.split("=")[1]) - 9.264705882352956) <= 1e-9

    def test_partition_mismatch_exit_3(self, tmp_path):
        data = write_csv(tmp_path / "v.csv", [[1], [2], [3]])
        assert cli.main(["anova", data, "--partition", "2,2"]) == 3


class TestEllipseCommand:
    def test_worked_example(self, worked_example, tmp_path):
        a, b = worked_example
        out = str(tmp_path / "ellipse.json")
        assert cli.main(["ellipse", a, b, "--json", out]) == 0
        doc = json.load(open(out))
        assert doc["cosine_lengths"][0] == 1.0
        sphere = np.array(doc["sphere_points"])
        np.testing.assert_allclose(np.linalg.norm(sphere, axis=0), 1.0,
                                   atol=1e-12)
        assert len(doc["cosine_boundary"]) == 64

    def test_equal_pair_circles(self, tmp_path):
        a = write_csv(tmp_path / "i1.csv", np.eye(2).tolist())
        b = write_csv(tmp_path / "i2.csv", np.eye(2).tolist())
        out = str(tmp_path / "ellipse.json")
        assert cli.main(["ellipse", a, b, "--json", out]) == 0
        doc = json.load(open(out))
        np.testing.assert_allclose(doc["cosine_lengths"],
                                   np.full(2, 1 / np.sqrt(2)), atol=1e-12)
        np.testing.assert_allclose(doc["sine_lengths"],
                                   np.full(2, 1 / np.sqrt(2)), atol=1e-12)


class TestAnglesCommand:
    def test_identical_subspaces(self, tmp_path, capsys):
        a1 = write_csv(tmp_path / "s1.csv", [[1, 0], [0, 1], [1, 1]])
        a2 = write_csv(tmp_path / "s2.csv", [[2, 0], [0, 2], [2, 2]])
        assert cli.main(["angles", a1, a2]) == 0
        out = capsys.readouterr().out
        lines = [line.split() for line in out.splitlines()[1:]]
        assert all(float(cells[1]) == 0.0 for cells in lines)


class TestReduceCommand:
    def test_column_count(self, tmp_path):
        rng = np.random.default_rng(9)
        data = write_csv(tmp_path / "m.csv", rng.standard_normal((9, 4)).tolist())
        out = str(tmp_path / "mg.csv")
        assert cli.main(["reduce", data, "--partition", "3,3,3",
                         "--out", out]) == 0
        mg = cli.read_matrix(out)
        assert mg.shape == (9, 2)


class TestJacobiCommand:
    def test_seed_gives_identical_bytes(self, tmp_path):
        args = ["jacobi", "--m1", "3", "--m2", "4", "--n", "2",
                "--samples", "1200", "--seed", "17"]
        out1 = str(tmp_path / "s1.csv")
        out2 = str(tmp_path / "s2.csv")
        assert cli.main(args + ["--out", out1]) == 0
        assert cli.main(args + ["--out", out2]) == 0
        assert open(out1, "rb").read() == open(out2, "rb").read()

    def test_reports_ks_for_scalar(self, capsys):
        assert cli.main(["jacobi", "--m1", "3", "--m2", "5", "--n", "1",
                         "--samples", "2000", "--seed", "1"]) == 0
        assert "KS distance" in capsys.readouterr().out
