"""Mean IoU on tiny maps you can check by hand.

Walks through the 2x2 fixture used in the tests (mean IoU 7/12), then a
dataset-aggregated batch, printing the JSON report shape the CLI emits.
"""

import json

import numpy as np

from blockkey import batch_mean_iou, mean_iou

gt = np.array([[0, 0], [1, 1]])
pred = np.array([[0, 1], [1, 1]])

report = mean_iou(pred, gt, class_count=2)
print("per-class counts:")
for c in report.per_class:
    print(f"  class {c.class_id}: intersection={c.intersection} union={c.union} iou={c.iou}")
print(f"mean IoU = {report.mean_iou} (exactly 7/12: {report.mean_iou == 7 / 12})")

# A second pair where class 1 never occurs: absent classes are excluded
# from mean_iou but pull down all_classes_mean.
gt2 = np.zeros((2, 2), dtype=int)
pred2 = np.zeros((2, 2), dtype=int)
batch = batch_mean_iou([(pred, gt), (pred2, gt2)], class_count=3)
print("\ndataset-aggregated report over two pairs:")
print(json.dumps(batch.to_dict(), indent=2))
