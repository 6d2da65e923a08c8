import subprocess
import sys

import pytest

from sfckit.cli import main
from sfckit.csbench import write_idx_images
from sfckit.strokes import stroke_images


def run_cli(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_path_csv_starts_at_the_origin(capsys):
    code, out, err = run_cli(["path", "--curve", "aztec", "--order", "1"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d,x,y"
    assert lines[1] == "0,0,0"
    assert len(lines) == 17
    assert err.startswith("config:")


def test_path_json_output(capsys):
    code, out, _ = run_cli(["path", "--curve", "hilbert", "--order", "1", "--format", "json"], capsys)
    assert code == 0
    assert out.strip() == "[[0,0],[0,1],[1,1],[1,0]]"


def test_path_order_means_side_for_grid_scans(capsys):
    code, out, _ = run_cli(["path", "--curve", "raster-v", "--order", "2"], capsys)
    assert code == 0
    assert out.strip().splitlines()[1:] == ["0,0,0", "1,0,1", "2,1,0", "3,1,1"]


def test_verify_passes_for_aztec(capsys):
    code, out, _ = run_cli(["verify", "--curve", "aztec", "--orders", "1..4"], capsys)
    assert code == 0
    assert out.count("pass") == 4


def test_verify_treats_grid_scans_as_discontinuous_by_design(capsys):
    # grid scans are documented as discontinuous, so only bijectivity
    # is expected of them and zigzag verifies clean
    code, out, _ = run_cli(["verify", "--curve", "zigzag", "--orders", "4"], capsys)
    assert code == 0
    assert "n/a" in out


def test_clusters_summary_and_csv(tmp_path, capsys):
    out_file = tmp_path / "clusters.csv"
    code, out, _ = run_cli(
        ["clusters", "--curve", "aztec", "--order", "1", "--out", str(out_file)], capsys
    )
    assert code == 0
    assert "clusters" in out
    text = out_file.read_text()
    assert text.startswith("x0,y0,x1,y1,min_index,max_index,area\n")


def test_render_writes_svg(tmp_path, capsys):
    svg = tmp_path / "aztec.svg"
    code, _, _ = run_cli(
        ["render", "--curve", "aztec", "--order", "2", "--svg", str(svg), "--clusters"], capsys
    )
    assert code == 0
    assert svg.read_text().startswith("<?xml")


def test_metrics_runs(tmp_path, capsys):
    out_file = tmp_path / "metrics.csv"
    code, out, _ = run_cli(
        ["metrics", "--curves", "aztec,hilbert,raster-v", "--side", "16",
         "--queries", "25", "--seed", "3", "--out", str(out_file)], capsys
    )
    assert code == 0
    assert "locality" in out
    assert out_file.read_text().startswith("scan,side,samples,seed,mean_runs,max_runs\n")


def test_bench_without_images_flag_exits_2():
    proc = subprocess.run(
        [sys.executable, "-m", "sfckit", "bench"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert "usage" in proc.stderr.lower()


def test_bench_with_missing_file_exits_2(capsys):
    code, _, err = run_cli(["bench", "--images", "/nonexistent.idx", "--count", "1"], capsys)
    assert code == 2
    assert "error:" in err


def test_bench_end_to_end(tmp_path, capsys):
    idx = tmp_path / "digits.idx3-ubyte"
    write_idx_images(idx, stroke_images(3, seed=1))
    out_file = tmp_path / "records.csv"
    stats_file = tmp_path / "stats.csv"
    code, out, _ = run_cli(
        ["bench", "--images", str(idx), "--count", "3", "--sparsity", "25",
         "--scans", "hilbert,raster-v", "--out", str(out_file), "--stats-out", str(stats_file)],
        capsys,
    )
    assert code == 0
    assert "batch statistics" in out
    lines = out_file.read_text().strip().splitlines()
    assert lines[0] == "image_id,scan,sparsity,psnr_db,omp_time_ms,iterations"
    assert len(lines) == 7
    assert stats_file.read_text().startswith("scan,metric,")


def test_bad_curve_name_exits_2(capsys):
    code, _, err = run_cli(["path", "--curve", "gosper", "--order", "1"], capsys)
    assert code == 2
    assert "error:" in err


def test_oversized_order_exits_2(capsys):
    code, _, err = run_cli(["path", "--curve", "aztec", "--order", "9"], capsys)
    assert code == 2
    assert "error:" in err


def test_help_lists_all_subcommands():
    proc = subprocess.run(
        [sys.executable, "-m", "sfckit", "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    for sub in ("path", "verify", "clusters", "render", "metrics", "bench"):
        assert sub in proc.stdout


@pytest.mark.parametrize("sub", ["path", "verify", "clusters", "render", "metrics", "bench"])
def test_subcommand_help_documents_flags(sub):
    proc = subprocess.run(
        [sys.executable, "-m", "sfckit", sub, "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "--" in proc.stdout


def test_repeated_path_runs_are_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run_cli(["path", "--curve", "peano", "--order", "2", "--out", str(a)], capsys)
    run_cli(["path", "--curve", "peano", "--order", "2", "--out", str(b)], capsys)
    assert a.read_bytes() == b.read_bytes()
