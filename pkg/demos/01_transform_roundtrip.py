"""Transform one image with each method and block size, then invert it.

Writes a panel of transformed images to demos/out/ so you can see how the
methods scramble content as the block size grows, and proves every variant
inverts back to the original bit-exactly.
"""

from pathlib import Path

import numpy as np

from blockkey import (
    TransformSpec,
    float_preview,
    invert_image,
    key_generate,
    transform_image,
    write_image,
)
from sample_data import make_sample_image

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

image = make_sample_image(size=64)
write_image(out_dir / "original.png", image)

key = key_generate()
print(f"using key {key}")

for method in ("shf", "np", "ffx"):
    for m in (2, 4, 8, 16):
        spec = TransformSpec(method, m, key)
        transformed = transform_image(image, spec)

        if method == "ffx":
            viewable = float_preview(transformed)
        else:
            viewable = transformed
        write_image(out_dir / f"{method}_m{m:02d}.png", viewable)

        restored = invert_image(transformed, spec)
        assert np.array_equal(restored, image), "round trip must be exact"
        print(f"{method} M={m:2d}: transformed and inverted exactly")

print(f"\npanels written to {out_dir}/")
