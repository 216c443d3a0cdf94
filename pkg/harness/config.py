"""YAML experiment configuration."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path

import yaml


@dataclass
class DatasetConfig:
    image_size: int = 64
    num_classes: int = 4
    train: int = 160
    val: int = 24
    test: int = 24
    seed: int = 1234


@dataclass
class TrainingConfig:
    epochs: int = 44
    batch_size: int = 12
    learning_rate: float = 1e-3
    # Fixed schedule: halve the learning rate at these epochs.
    lr_drops: tuple[int, ...] = (30, 38)
    seeds: tuple[int, ...] = (0, 1, 2)


@dataclass
class GridConfig:
    methods: tuple[str, ...] = ("shf", "np", "ffx")
    block_sizes: tuple[int, ...] = (2, 4, 8, 16)
    num_incorrect_keys: int = 10


@dataclass
class HarnessConfig:
    dataset: DatasetConfig = field(default_factory=DatasetConfig)
    training: TrainingConfig = field(default_factory=TrainingConfig)
    grid: GridConfig = field(default_factory=GridConfig)
    workdir: Path = Path("harness/runs")
    results_dir: Path = Path("harness/results")
    # Command prefix for the primary CLI; defaults to the current interpreter.
    blockkey_cmd: tuple[str, ...] = ()

    def blockkey(self) -> list[str]:
        if self.blockkey_cmd:
            return list(self.blockkey_cmd)
        return [sys.executable, "-m", "blockkey"]

    @property
    def data_root(self) -> Path:
        return Path(self.workdir) / "data"


def load_config(path: str | Path | None) -> HarnessConfig:
    """Load a YAML config; missing keys fall back to the defaults above."""
    cfg = HarnessConfig()
    if path is None:
        return cfg
    raw = yaml.safe_load(Path(path).read_text()) or {}
    for section, target in (
        ("dataset", cfg.dataset),
        ("training", cfg.training),
        ("grid", cfg.grid),
    ):
        for key, value in (raw.get(section) or {}).items():
            if not hasattr(target, key):
                raise KeyError(f"unknown config key {section}.{key}")
            current = getattr(target, key)
            if isinstance(current, tuple):
                value = tuple(value)
            setattr(target, key, value)
    if "workdir" in raw:
        cfg.workdir = Path(raw["workdir"])
    if "results_dir" in raw:
        cfg.results_dir = Path(raw["results_dir"])
    if "blockkey_cmd" in raw and raw["blockkey_cmd"]:
        cfg.blockkey_cmd = tuple(raw["blockkey_cmd"])
    return cfg
