"""Axis-aligned bounding boxes and the IOU metric.

Boxes are (x, y, w, h) in continuous pixel coordinates: x/y is the
top-left corner, w/h the extent. Zero-area boxes are valid data
(a vanished prediction) and score IOU 0 against everything,
including themselves.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BoundingBox:
    x: float
    y: float
    w: float
    h: float

    def __post_init__(self):
        if self.w < 0 or self.h < 0:
            raise ValueError(f"negative box extent: w={self.w}, h={self.h}")

    @property
    def area(self) -> float:
        return self.w * self.h

    @property
    def center(self) -> tuple[float, float]:
        return (self.x + self.w / 2.0, self.y + self.h / 2.0)

    @property
    def x2(self) -> float:
        return self.x + self.w

    @property
    def y2(self) -> float:
        return self.y + self.h

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.x, self.y, self.w, self.h)


def iou(a: BoundingBox, b: BoundingBox) -> float:
    """Intersection over union in [0, 1]; 0 whenever the union is empty."""
    ix = min(a.x2, b.x2) - max(a.x, b.x)
    iy = min(a.y2, b.y2) - max(a.y, b.y)
    if ix <= 0 or iy <= 0:
        return 0.0
    inter = ix * iy
    union = a.area + b.area - inter
    if union <= 0:
        return 0.0
    return inter / union


def scale_context(b: BoundingBox, factor: float, frame_w: float, frame_h: float) -> BoundingBox:
    """Expand ``b`` about its center by ``factor``, then fit inside the frame.

    The expanded box is shifted before it is clipped, so its size is
    preserved whenever ``factor * extent`` fits in the frame; only when it
    does not fit is the extent cut down to the frame.
    """
    if factor <= 0:
        raise ValueError("context factor must be positive")
    cx, cy = b.center
    fw = factor * b.w
    fh = factor * b.h

    if fw >= frame_w:
        x, fw = 0.0, frame_w
    else:
        x = min(max(cx - fw / 2.0, 0.0), frame_w - fw)
    if fh >= frame_h:
        y, fh = 0.0, frame_h
    else:
        y = min(max(cy - fh / 2.0, 0.0), frame_h - fh)
    return BoundingBox(x, y, fw, fh)


def expand(b: BoundingBox, factor: float) -> BoundingBox:
    """Expand ``b`` about its center by ``factor`` with no frame clipping."""
    cx, cy = b.center
    fw = factor * b.w
    fh = factor * b.h
    return BoundingBox(cx - fw / 2.0, cy - fh / 2.0, fw, fh)


def center_distance(a: BoundingBox, b: BoundingBox) -> float:
    """Euclidean distance between box centers, in pixels."""
    ax, ay = a.center
    bx, by = b.center
    return ((ax - bx) ** 2 + (ay - by) ** 2) ** 0.5
