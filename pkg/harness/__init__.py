"""Toy-scale training harness demonstrating keyed access control end to end.

Generates a synthetic shapes segmentation dataset, trains a small network
on images transformed by the blockkey CLI, and runs the method x block-size
grid, contrasting correct-key, plain, and incorrect-key test inputs.

The harness talks to the blockkey package exclusively through its external
interfaces: the CLI commands and the documented file formats.
"""

__version__ = "0.1.0"
