"""Inference: turn a directory of images into a directory of label maps.

Used directly and as the --predict-cmd hook for `blockkey sweep`. Accepts
both plain/transformed PNGs and .bkt float tensors; when a stem has both
(ffx outputs ship a preview PNG next to the tensor) the tensor wins.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np
import torch
from PIL import Image

from .model import TinySegNet
from .train import collect_inputs, load_input_array


def load_checkpoint(path: str | Path) -> TinySegNet:
    payload = torch.load(path, map_location="cpu", weights_only=True)
    model = TinySegNet(payload["num_classes"])
    model.load_state_dict(payload["state_dict"])
    model.eval()
    return model


def predict_dir(
    checkpoint: str | Path, image_dir: str | Path, out_dir: str | Path, batch_size: int = 8
) -> int:
    """Write one label PNG per input; returns the number of files written."""
    torch.set_num_threads(1)
    model = load_checkpoint(checkpoint)
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    inputs = collect_inputs(Path(image_dir))
    if not inputs:
        raise FileNotFoundError(f"no inputs found in {image_dir}")
    written = 0
    with torch.no_grad():
        for start in range(0, len(inputs), batch_size):
            chunk = inputs[start : start + batch_size]
            x = torch.from_numpy(np.stack([load_input_array(p) for p in chunk]))
            labels = model(x).argmax(dim=1).numpy().astype(np.uint8)
            for path, label in zip(chunk, labels):
                Image.fromarray(label, mode="L").save(out_dir / f"{path.stem}.png")
                written += 1
    return written
