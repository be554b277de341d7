"""Tracker-facing data types and patch extraction.

A tracker is any object with::

    initialize(frame, box) -> TemplateSet
    predict(frame, templates, prior_box) -> (BoundingBox, score)
    make_template(frame, box) -> Template

``predict`` accepts either a :class:`TemplateSet` (normal forward
tracking, conditioned on both the fixed and the online template) or a
single :class:`Template` (verification passes, conditioned on the
candidate alone). Trackers carry no cross-frame state other than what
the caller hands them, so one instance per sequence is the intended
usage.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exceptions import ZeroAreaTarget
from .geometry import BoundingBox, expand
from .kernels import bilinear_sample


@dataclass(frozen=True)
class Frame:
    """One grayscale frame; image values in [0, 1], shape (height, width)."""

    index: int
    image: np.ndarray

    @property
    def height(self) -> int:
        return self.image.shape[0]

    @property
    def width(self) -> int:
        return self.image.shape[1]

    def bounds(self) -> BoundingBox:
        return BoundingBox(0.0, 0.0, float(self.width), float(self.height))


@dataclass(frozen=True)
class Template:
    """A fixed-size square patch cut around a target box.

    ``patch`` is always ``size x size``; ``source_box`` is the target box
    (not the context-expanded crop region) in the source frame.
    """

    patch: np.ndarray
    source_box: BoundingBox
    source_frame_index: int
    context_factor: float

    @property
    def size(self) -> int:
        return self.patch.shape[0]


@dataclass
class TemplateSet:
    """The pair of matching references: a fixed template and an online one.

    ``fixed`` is never replaced after initialization; ``online`` starts
    equal to ``fixed`` and may be swapped for an accepted candidate.
    """

    fixed: Template
    online: Template

    def as_list(self) -> list[Template]:
        return [self.fixed, self.online]


def crop_patch(frame: Frame, box: BoundingBox, context_factor: float, out_size: int) -> Template:
    """Cut a context-expanded square patch around ``box`` from ``frame``.

    The crop region is ``box`` grown ``context_factor`` times about its
    center with no frame clipping; out-of-frame area is filled by edge
    replication, and the region is resampled bilinearly to
    ``out_size x out_size``.
    """
    if box.area <= 0:
        raise ZeroAreaTarget(f"cannot crop template from zero-area box {box.as_tuple()}")
    region = expand(box, context_factor)
    patch = bilinear_sample(
        frame.image, region.x, region.y, region.x2, region.y2, out_size, out_size
    )
    return Template(
        patch=patch,
        source_box=box,
        source_frame_index=frame.index,
        context_factor=context_factor,
    )


def require_frame_overlap(frame: Frame, box: BoundingBox) -> None:
    """Raise ZeroAreaTarget unless ``box`` has positive area inside the frame."""
    from .geometry import iou  # local import to avoid cycle noise

    if box.area <= 0:
        raise ZeroAreaTarget(f"target box has zero area: {box.as_tuple()}")
    ix = min(box.x2, frame.width) - max(box.x, 0.0)
    iy = min(box.y2, frame.height) - max(box.y, 0.0)
    if ix <= 0 or iy <= 0:
        raise ZeroAreaTarget(
            f"target box {box.as_tuple()} does not intersect frame "
            f"{frame.width}x{frame.height}"
        )
