"""Show what an incorrect key does.

Two independently generated keys produce different transforms of the same
image, and inverting with the wrong key yields garbage rather than the
original: exactly the property that locks a model to its key.
"""

from pathlib import Path

import numpy as np

from blockkey import TransformSpec, invert_image, key_generate, transform_image, write_image
from sample_data import make_sample_image

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

image = make_sample_image(size=64)
correct, wrong = key_generate(), key_generate()

spec_correct = TransformSpec("shf", 8, correct)
spec_wrong = TransformSpec("shf", 8, wrong)

protected = transform_image(image, spec_correct)

good = invert_image(protected, spec_correct)
bad = invert_image(protected, spec_wrong)

write_image(out_dir / "wrong_key_inversion.png", bad)

print(f"correct-key inversion exact: {np.array_equal(good, image)}")
mismatch = float(np.mean(bad != image))
print(f"wrong-key inversion: {mismatch:.1%} of pixel values differ from the original")

# The transforms themselves diverge too: same image, two keys.
t1 = transform_image(image, spec_correct)
t2 = transform_image(image, spec_wrong)
print(f"transforms under two keys differ on {float(np.mean(t1 != t2)):.1%} of values")
