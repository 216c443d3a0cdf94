"""Command-line entry: python -m harness {gen|train|predict|grid}."""

from __future__ import annotations

import argparse
import json
from pathlib import Path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="harness", description="Toy access-control training harness."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate the synthetic shapes dataset")
    gen.add_argument("--config", default=None)

    train = sub.add_parser("train", help="train one model (baseline or protected)")
    train.add_argument("--config", default=None)
    train.add_argument("--seed", type=int, default=0)
    group = train.add_mutually_exclusive_group(required=True)
    group.add_argument("--baseline", action="store_true")
    group.add_argument("--method", choices=("shf", "np", "ffx"))
    train.add_argument("--block-size", type=int, default=2)

    predict = sub.add_parser("predict", help="label every image in a directory")
    predict.add_argument("--checkpoint", required=True)
    predict.add_argument("--in", dest="in_dir", required=True)
    predict.add_argument("--out", dest="out_dir", required=True)
    predict.add_argument("--batch-size", type=int, default=8)

    grid = sub.add_parser("grid", help="run the full methods x block sizes x seeds grid")
    grid.add_argument("--config", default=None)

    args = parser.parse_args(argv)

    if args.command == "predict":
        # Import lazily: the predict hook runs many times per sweep and only
        # needs torch, not the rest of the pipeline.
        from .predict import predict_dir

        written = predict_dir(args.checkpoint, args.in_dir, args.out_dir, args.batch_size)
        print(f"wrote {written} prediction(s) to {args.out_dir}")
        return 0

    from .config import load_config

    cfg = load_config(args.config)

    if args.command == "gen":
        from .data import generate_dataset

        counts = generate_dataset(cfg.dataset, cfg.data_root)
        print(f"dataset written to {cfg.data_root}: {counts}")
        return 0

    if args.command == "train":
        from .grid import ensure_dataset, run_baseline, run_cell

        ensure_dataset(cfg)
        if args.baseline:
            record = run_baseline(cfg, args.seed)
        else:
            record = run_cell(cfg, args.method, args.block_size, args.seed)
        print(json.dumps(record, indent=2))
        return 0

    if args.command == "grid":
        from .grid import run_grid

        results = run_grid(cfg)
        out = Path(cfg.workdir) / "results" / "results.json"
        print(f"results written to {out}")
        print(f"ordering violations: {results['ordering_violations']}")
        return 0

    return 2


if __name__ == "__main__":
    raise SystemExit(main())
