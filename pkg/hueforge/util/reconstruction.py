"""
Rebuild color from compressed luminance and turn it into an 8-bit image.

Quantization rounds half away from zero and then clamps to [0, 255]. The two halves are also available separately
(``clip_only`` and ``round_only``) so that clipping and rounding error can be measured in isolation.
"""

import logging
from collections import namedtuple

import numpy as np

from .exceptions import ValidationError
from .image import LdrImage, HdrImage, check_same_size

logger = logging.getLogger(__name__)

ReconstructionConfig = namedtuple("ReconstructionConfig", ["gamma", "record_prequant"])
ReconstructionConfig.__new__.__defaults__ = (2.2, False)

Reconstruction = namedtuple("Reconstruction", ["ldr", "prequant"])

def validate_config(config):
    if config.gamma is not None and not config.gamma > 0:
        raise ValidationError("Gamma must be positive, got {}".format(config.gamma))
    return config

def round_half_away(values):
    values = np.asarray(values, dtype=np.float64)
    return np.sign(values) * np.floor(np.abs(values) + 0.5)

def color_ratio(hdr, lum):
    """C_f = (L_d / L_w) * C per channel. Pixels with zero world luminance become black."""
    pixels = hdr.pixels if isinstance(hdr, HdrImage) else np.asarray(hdr, dtype=np.float64)
    world, display = np.asarray(lum.world, dtype=np.float64), np.asarray(lum.display, dtype=np.float64)
    if world.shape != pixels.shape[:2] or display.shape != pixels.shape[:2]:
        raise ValidationError("Luminance maps {} do not align with image {}".format(world.shape, pixels.shape[:2]))
    ratio = np.divide(display, world, out=np.zeros_like(world), where=world > 0)
    return pixels * ratio[..., None]

def gamma_encode(img, gamma):
    if not gamma > 0:
        raise ValidationError("Gamma must be positive, got {}".format(gamma))
    return np.power(np.maximum(np.asarray(img, dtype=np.float64), 0.0), 1.0 / gamma)

def round_only(img):
    """round(C_f * 255) without the clamp as a wide integer array, possibly outside [0, 255]."""
    return round_half_away(np.asarray(img, dtype=np.float64) * 255).astype(np.int64)

def clip_only(img):
    """Clamp to [0, 1] without quantizing."""
    return np.clip(np.asarray(img, dtype=np.float64), 0.0, 1.0)

def quantize_clip(img):
    img = np.asarray(img, dtype=np.float64)
    if not np.all(np.isfinite(img)):
        raise ValidationError("Cannot quantize non-finite channel values")
    return LdrImage(np.clip(round_only(img), 0, 255).astype(np.uint8))

def reconstruct(hdr, lum, config=ReconstructionConfig()):
    """
    Color reconstruction and quantization. Returns a ``Reconstruction`` whose ``prequant`` field holds the
    floating point image fed to the quantizer when ``config.record_prequant`` is set, else None.
    """
    validate_config(config)
    check_same_size(hdr, lum.world)
    prequant = color_ratio(hdr, lum)
    if config.gamma is not None:
        prequant = gamma_encode(prequant, config.gamma)
    return Reconstruction(ldr=quantize_clip(prequant), prequant=prequant if config.record_prequant else None)
