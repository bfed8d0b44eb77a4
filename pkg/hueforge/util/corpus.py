"""
Test corpus: deterministic synthetic HDR scenes, and YAML manifests listing images and operators.

A manifest looks like::

    images:
      - synthetic:hue_wheel
      - scenes/tree.hdr
    tmos: [reinhard_global, durand]
    params:
      reinhard_global: {key_value: 0.18}

Relative paths resolve against the manifest's directory.
"""

import os, logging
from collections import namedtuple

import numpy as np
import yaml
import colour

from .exceptions import ValidationError, UsageError
from .image import HdrImage
from .imageio import read_hdr, write_pfm
from .tmo import operators, TmoConfig

logger = logging.getLogger(__name__)

synthetic_prefix = "synthetic:"
default_size = 128

Manifest = namedtuple("Manifest", ["images", "tmos", "params"])

def _grid(size):
    y, x = np.mgrid[0:size, 0:size]
    return (x + 0.5) / size, (y + 0.5) / size

def _hsv(hue, saturation, value):
    return colour.HSV_to_RGB(np.stack(np.broadcast_arrays(hue, saturation, value), axis=-1))

def hue_wheel(size=default_size):
    """Hue by angle, saturation by radius, radiance rising over four decades from left to right."""
    x, y = _grid(size)
    hue = (np.arctan2(y - 0.5, x - 0.5) / (2 * np.pi)) % 1.0
    saturation = np.clip(0.35 + np.hypot(x - 0.5, y - 0.5) * 1.3, 0, 1)
    return _hsv(hue, saturation, 1.0) * (10.0 ** (4 * x - 2))[..., None]

def color_ramps(size=default_size):
    """Eight horizontal bands of saturated colors, each an exponential ramp spanning six decades."""
    x, y = _grid(size)
    hue = np.floor(y * 8) / 8 + 1 / 48
    return _hsv(hue, 0.85, 1.0) * (10.0 ** (6 * x - 3))[..., None]

def step_edge(size=default_size):
    """A dim orange field against a blue field a thousand times brighter."""
    x, y = _grid(size)
    dim, bright = np.array([0.9, 0.45, 0.1]), np.array([0.15, 0.3, 0.95])
    texture = 1.0 + 0.2 * np.sin(2 * np.pi * 6 * y)[..., None]
    return np.where((x < 0.5)[..., None], dim * 0.05, bright * 50.0) * texture

def saturated_patches(size=default_size):
    """A 4x4 checker of saturated patches whose exposures step by one stop from patch to patch."""
    x, y = _grid(size)
    index = np.floor(y * 4) * 4 + np.floor(x * 4)
    hue = (index * 5 / 16) % 1.0 + 0.02
    return _hsv(hue, 0.9, 1.0) * (2.0 ** (index - 6))[..., None]

def sunset(size=default_size):
    """Orange-to-violet sky with a small, very bright sun near the horizon."""
    x, y = _grid(size)
    hue = 0.06 + 0.7 * y
    sky = _hsv(hue % 1.0, 0.6 + 0.3 * y, 1.0) * (2.0 * (1.1 - y))[..., None]
    sun = 400.0 * np.exp(-((x - 0.6) ** 2 + (y - 0.7) ** 2) / 0.004)
    return sky + sun[..., None] * np.array([1.0, 0.7, 0.3])

def neon_sign(size=default_size):
    """Bright neon strokes of several hues on a dark, dimly tinted background."""
    x, y = _grid(size)
    background = _hsv(0.62, 0.4, 1.0) * (0.02 + 0.01 * x[..., None])
    strokes = np.zeros_like(background)
    for i, hue in enumerate((0.95, 0.33, 0.55, 0.12)):
        row = 0.2 + 0.2 * i
        weight = np.exp(-((y - row - 0.05 * np.sin(8 * x)) ** 2) / 0.0006)
        strokes += weight[..., None] * _hsv(hue, 0.95, 1.0) * 120.0
    return background + strokes

def gray_ramp(size=default_size):
    """Achromatic exponential ramp."""
    x, _ = _grid(size)
    return np.repeat((10.0 ** (4 * x - 2))[..., None], 3, axis=-1)

synthetic_images = {
    "hue_wheel": hue_wheel,
    "color_ramps": color_ramps,
    "step_edge": step_edge,
    "saturated_patches": saturated_patches,
    "sunset": sunset,
    "neon_sign": neon_sign,
    "gray_ramp": gray_ramp
}
chromatic_images = tuple(name for name in synthetic_images if name != "gray_ramp")

def synthetic(name, size=default_size):
    if name not in synthetic_images:
        raise UsageError("Unknown synthetic image {!r}, expected one of {}".format(name, ", ".join(synthetic_images)))
    return HdrImage(np.maximum(synthetic_images[name](size), 0.0))

def image_name(ref):
    if ref.startswith(synthetic_prefix):
        return ref[len(synthetic_prefix):]
    return os.path.splitext(os.path.basename(ref))[0]

def load_image(ref, base_dir="."):
    """Resolve a manifest image reference (``synthetic:<name>`` or a file path) to an HdrImage."""
    if ref.startswith(synthetic_prefix):
        return synthetic(ref[len(synthetic_prefix):])
    return read_hdr(os.path.join(base_dir, ref))

def parse_manifest(document, base_dir="."):
    if not isinstance(document, dict) or not isinstance(document.get("images"), list) or not document["images"]:
        raise ValidationError("Corpus manifest must contain a non-empty images list")
    tmos = document.get("tmos") or list(operators)
    for tmo in tmos:
        if tmo not in operators:
            raise UsageError("Unknown tone mapping operator {!r} in manifest".format(tmo))
    params = document.get("params") or {}
    for tmo, overrides in params.items():
        unknown = set(overrides) - set(TmoConfig._fields)
        if tmo not in operators or unknown:
            raise ValidationError("Bad manifest parameters for {}: {}".format(tmo, overrides))
    images = [ref if ref.startswith(synthetic_prefix) else os.path.join(base_dir, ref) for ref in document["images"]]
    return Manifest(images=images, tmos=list(tmos), params=params)

def load_manifest(path):
    with open(path) as fh:
        document = yaml.safe_load(fh)
    return parse_manifest(document, base_dir=os.path.dirname(os.path.abspath(path)))

def export_corpus(directory, names=chromatic_images, tmos=None, size=default_size):
    """
    Write synthetic scenes as ``<name>.pfm`` files plus a ``corpus.yml`` manifest listing them, and return the
    manifest path. The written corpus loads through the same file readers as photographed scenes.
    """
    os.makedirs(directory, exist_ok=True)
    for name in names:
        write_pfm(synthetic(name, size=size), file=os.path.join(directory, name + ".pfm"))
    document = dict(images=[name + ".pfm" for name in names], tmos=list(tmos or operators))
    path = os.path.join(directory, "corpus.yml")
    with open(path, "w") as fh:
        yaml.safe_dump(document, fh, default_flow_style=False)
    logger.info("Wrote %d scenes and manifest %s", len(names), path)
    return path
