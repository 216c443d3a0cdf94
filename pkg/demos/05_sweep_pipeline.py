"""Run the full CLI sweep pipeline with a stand-in predictor.

Builds a micro dataset, then drives `blockkey keygen / transform / sweep`
as subprocesses the same way a real experiment would. The predictor hook
here just copies the ground truth, so every variant scores 1.0; swap in a
real model runner (see harness/) to measure actual access control.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import numpy as np

from blockkey import write_image, write_labels
from sample_data import make_sample_image


def run(*args):
    print("$", " ".join(map(str, args)))
    subprocess.run([str(a) for a in args], check=True)


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)
    images, masks = tmp / "images", tmp / "masks"
    images.mkdir(), masks.mkdir()
    rng = np.random.default_rng(0)
    for i in range(4):
        write_image(images / f"scene_{i}.png", make_sample_image(seed=i))
        write_labels(masks / f"scene_{i}.png", rng.integers(0, 3, size=(64, 64)))

    key_file = tmp / "key.txt"
    run(sys.executable, "-m", "blockkey", "keygen", "--out", key_file)

    run(
        sys.executable, "-m", "blockkey", "transform",
        "--method", "ffx", "--block-size", "4", "--key", key_file,
        "--in", images, "--out", tmp / "protected",
    )
    manifest = json.loads((tmp / "protected" / "manifest.json").read_text())
    print(f"\ntransformed {len(manifest['files'])} files; "
          f"key fingerprint {manifest['key_fingerprint'][:16]}...")

    copy_gt_hook = f"cp {masks}/*.png {{out}}/"
    run(
        sys.executable, "-m", "blockkey", "sweep",
        "--method", "ffx", "--block-size", "4", "--key", key_file,
        "--in", images, "--gt", masks, "--classes", "3", "--num-keys", "3",
        "--predict-cmd", copy_gt_hook, "--out", tmp / "sweep",
    )
    report = json.loads((tmp / "sweep" / "sweep_report.json").read_text())
    print("\nsweep scores (degenerate copy-gt predictor, so all 1.0):")
    print(f"  correct:   {report['correct_key_score']}")
    print(f"  plain:     {report['plain_score']}")
    print(f"  incorrect: {report['incorrect_key_scores']}")
