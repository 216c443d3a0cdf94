"""The experiment grid: methods x block sizes x seeds, plus baselines.

Per cell: derive the cell key, transform train/val through the blockkey
CLI, train the toy network, then let `blockkey sweep` score the checkpoint
on correct-key, plain, and freshly sampled incorrect-key test inputs.
Completed artifacts (checkpoints, sweep reports) are reused on rerun, so an
interrupted grid resumes where it stopped.

Outputs: results.json / results.csv / one bar chart per method, written to
the workdir and mirrored to the committed results directory.
"""

from __future__ import annotations

import csv
import json
import shlex
import shutil
import subprocess
import sys
import time
from pathlib import Path

from .config import HarnessConfig
from .data import generate_dataset
from .predict import predict_dir
from .train import (
    blockkey_evaluate,
    blockkey_transform,
    train_model,
    write_cell_key,
)

HARNESS_ROOT = Path(__file__).resolve().parent.parent


def _log(msg: str) -> None:
    print(f"[grid +{time.strftime('%H:%M:%S')}] {msg}", flush=True)


def ensure_dataset(cfg: HarnessConfig) -> None:
    marker = cfg.data_root / "images" / "train"
    if marker.exists() and any(marker.iterdir()):
        return
    _log("generating toy dataset")
    generate_dataset(cfg.dataset, cfg.data_root)


def _predict_cmd_template(checkpoint: Path) -> str:
    # Absolute interpreter + PYTHONPATH so the hook works from any cwd.
    return (
        f"PYTHONPATH={shlex.quote(str(HARNESS_ROOT))} "
        f"{shlex.quote(sys.executable)} -m harness predict "
        f"--checkpoint {shlex.quote(str(checkpoint))} --in {{in}} --out {{out}}"
    )


def _evaluate_checkpoint(
    cfg: HarnessConfig, checkpoint: Path, image_dir: Path, split: str, tag: str
) -> float:
    pred_dir = Path(cfg.workdir) / "predictions" / tag
    predict_dir(checkpoint, image_dir, pred_dir)
    report = blockkey_evaluate(
        cfg, pred_dir, cfg.data_root / "masks" / split, cfg.dataset.num_classes
    )
    return report["mean_iou"]


def run_baseline(cfg: HarnessConfig, seed: int) -> dict:
    images = cfg.data_root / "images"
    checkpoint = Path(cfg.workdir) / "checkpoints" / f"baseline_seed{seed}.pt"
    log_path = Path(cfg.workdir) / "logs" / f"baseline_seed{seed}.json"
    if not checkpoint.exists():
        _log(f"training baseline seed={seed}")
        train_model(
            cfg,
            images / "train",
            images / "val",
            seed,
            checkpoint,
            {"mode": "baseline", "seed": seed},
            log_path,
        )
    val = _evaluate_checkpoint(cfg, checkpoint, images / "val", "val", f"baseline_val_s{seed}")
    test = _evaluate_checkpoint(
        cfg, checkpoint, images / "test", "test", f"baseline_test_s{seed}"
    )
    _log(f"baseline seed={seed}: val={val:.4f} test={test:.4f}")
    return {"seed": seed, "val_mean_iou": val, "test_mean_iou": test,
            "checkpoint": str(checkpoint)}


def run_cell(cfg: HarnessConfig, method: str, block_size: int, seed: int) -> dict:
    images = cfg.data_root / "images"
    cell = f"{method}_m{block_size:03d}_seed{seed}"
    key_file = write_cell_key(cfg, method, block_size, seed)

    transformed = Path(cfg.workdir) / "transformed" / f"{method}_m{block_size:03d}_seed{seed}"
    for split in ("train", "val"):
        blockkey_transform(
            cfg, images / split, transformed / split, method, block_size, key_file
        )

    checkpoint = Path(cfg.workdir) / "checkpoints" / f"{cell}.pt"
    if not checkpoint.exists():
        _log(f"training {cell}")
        train_model(
            cfg,
            transformed / "train",
            transformed / "val",
            seed,
            checkpoint,
            {
                "mode": "protected",
                "method": method,
                "block_size": block_size,
                "seed": seed,
            },
            Path(cfg.workdir) / "logs" / f"{cell}.json",
        )

    val = _evaluate_checkpoint(
        cfg, checkpoint, transformed / "val", "val", f"{cell}_val"
    )

    sweep_dir = Path(cfg.workdir) / "sweeps" / cell
    report_path = sweep_dir / "sweep_report.json"
    if not report_path.exists():
        _log(f"sweeping {cell} ({cfg.grid.num_incorrect_keys} incorrect keys)")
        cmd = cfg.blockkey() + [
            "sweep", "--method", method, "--block-size", str(block_size),
            "--key", str(key_file), "--in", str(images / "test"),
            "--gt", str(cfg.data_root / "masks" / "test"),
            "--classes", str(cfg.dataset.num_classes),
            "--num-keys", str(cfg.grid.num_incorrect_keys),
            "--predict-cmd", _predict_cmd_template(checkpoint),
            "--out", str(sweep_dir),
        ]
        subprocess.run(cmd, check=True, capture_output=True, text=True)
    report = json.loads(report_path.read_text())

    ordering_ok = (
        report["correct_key_score"] > report["plain_score"]
        and report["correct_key_score"] > report["incorrect_mean"]
    )
    record = {
        "method": method,
        "block_size": block_size,
        "seed": seed,
        "key_fingerprint": report["key_fingerprint"],
        "val_mean_iou": val,
        "correct": report["correct_key_score"],
        "plain": report["plain_score"],
        "incorrect_scores": report["incorrect_key_scores"],
        "incorrect_mean": report["incorrect_mean"],
        "ordering_ok": ordering_ok,
        "checkpoint": str(checkpoint),
    }
    _log(
        f"{cell}: correct={record['correct']:.4f} plain={record['plain']:.4f} "
        f"incorrect={record['incorrect_mean']:.4f} ordering_ok={ordering_ok}"
    )
    return record


def write_outputs(cfg: HarnessConfig, results: dict) -> None:
    out_dir = Path(cfg.workdir) / "results"
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / "results.json").write_text(json.dumps(results, indent=2) + "\n")

    with open(out_dir / "results.csv", "w", newline="") as f:
        writer = csv.writer(f)
        writer.writerow(
            ["method", "block_size", "seed", "correct", "plain", "incorrect_mean",
             "val_mean_iou", "ordering_ok"]
        )
        for cell in results["cells"]:
            writer.writerow(
                [cell["method"], cell["block_size"], cell["seed"],
                 f"{cell['correct']:.6f}", f"{cell['plain']:.6f}",
                 f"{cell['incorrect_mean']:.6f}", f"{cell['val_mean_iou']:.6f}",
                 cell["ordering_ok"]]
            )

    plot_results(results, out_dir)

    mirror = Path(cfg.results_dir)
    mirror.mkdir(parents=True, exist_ok=True)
    for name in ("results.json", "results.csv"):
        shutil.copy2(out_dir / name, mirror / name)
    for plot in out_dir.glob("access_control_*.png"):
        shutil.copy2(plot, mirror / plot.name)


def plot_results(results: dict, out_dir: Path) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    baseline_mean = float(
        np.mean([b["test_mean_iou"] for b in results["baseline"].values()])
    )
    methods = sorted({c["method"] for c in results["cells"]})
    for method in methods:
        cells = [c for c in results["cells"] if c["method"] == method]
        sizes = sorted({c["block_size"] for c in cells})
        series = {"correct": [], "plain": [], "incorrect avg": []}
        for m in sizes:
            group = [c for c in cells if c["block_size"] == m]
            series["correct"].append(np.mean([c["correct"] for c in group]))
            series["plain"].append(np.mean([c["plain"] for c in group]))
            series["incorrect avg"].append(np.mean([c["incorrect_mean"] for c in group]))

        x = np.arange(len(sizes))
        fig, ax = plt.subplots(figsize=(6, 4))
        for i, (label, values) in enumerate(series.items()):
            ax.bar(x + (i - 1) * 0.25, values, width=0.25, label=label)
        ax.axhline(baseline_mean, color="gray", linestyle="--", linewidth=1,
                   label="baseline")
        ax.set_xticks(x, [str(m) for m in sizes])
        ax.set_xlabel("block size M")
        ax.set_ylabel("mean IoU")
        ax.set_ylim(0, 1)
        ax.set_title(f"access control: {method}")
        ax.legend()
        fig.tight_layout()
        fig.savefig(out_dir / f"access_control_{method}.png", dpi=120)
        plt.close(fig)


def run_grid(cfg: HarnessConfig) -> dict:
    started = time.perf_counter()
    ensure_dataset(cfg)
    results = {
        "config": {
            "dataset": vars(cfg.dataset),
            "training": {**vars(cfg.training), "seeds": list(cfg.training.seeds)},
            "grid": {
                "methods": list(cfg.grid.methods),
                "block_sizes": list(cfg.grid.block_sizes),
                "num_incorrect_keys": cfg.grid.num_incorrect_keys,
            },
        },
        "baseline": {},
        "cells": [],
    }
    for seed in cfg.training.seeds:
        results["baseline"][str(seed)] = run_baseline(cfg, seed)
    for method in cfg.grid.methods:
        for block_size in cfg.grid.block_sizes:
            for seed in cfg.training.seeds:
                results["cells"].append(run_cell(cfg, method, block_size, seed))

    results["ordering_violations"] = [
        f"{c['method']} M={c['block_size']} seed={c['seed']}"
        for c in results["cells"]
        if not c["ordering_ok"]
    ]
    results["elapsed_seconds"] = round(time.perf_counter() - started, 1)
    write_outputs(cfg, results)
    _log(
        f"grid finished in {results['elapsed_seconds']}s; "
        f"{len(results['ordering_violations'])} ordering violation(s): "
        f"{results['ordering_violations']}"
    )
    return results
