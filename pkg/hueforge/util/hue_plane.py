"""
Constant-hue plane algebra.

Every RGB pixel x lies on the triangle spanned by white w = (1, 1, 1), black k = (0, 0, 0) and its maximally
saturated color c, which has max channel 1 and min channel 0::

    c   = (x - min(x)) / (max(x) - min(x))
    x   = a_w w + a_k k + a_c c
    a_w = min(x),  a_c = max(x) - min(x),  a_k = 1 - max(x)

The coefficients always sum to 1. For pixels inside the unit cube they also lie in [0, 1]; HDR pixels may have
a_k < 0 and a_c > 1. Hue compensation keeps an LDR pixel's coefficients and swaps its c for the HDR pixel's, which
stays inside the unit cube because it is a convex combination of w, k and a point of the cube.

All functions operate on a single pixel or on any ``(..., 3)`` pixel array. A pixel with max(x) - min(x) <= tol is
achromatic: its c is undefined and reported as zeros with the ``achromatic`` flag set.
"""

import logging
from collections import namedtuple

import numpy as np

from .exceptions import ValidationError
from .image import LdrImage, HdrImage, as_normalized, channel_minmax, check_same_size
from .reconstruction import quantize_clip

logger = logging.getLogger(__name__)

# Achromatic tolerance for HDR pixels; 8-bit pixels use exact equality
hdr_tolerance = 1e-9

MaxSaturatedColor = namedtuple("MaxSaturatedColor", ["color", "achromatic"])
HuePlaneCoords = namedtuple("HuePlaneCoords", ["a_w", "a_k", "a_c", "c", "achromatic"])

def max_saturated_color(x, tol=0.0):
    x = np.asarray(x, dtype=np.float64)
    if x.shape[-1:] != (3,):
        raise ValidationError("Expected RGB pixels with a trailing axis of 3, got shape {}".format(x.shape))
    low, high = channel_minmax(x)
    spread = high - low
    achromatic = spread <= tol
    safe_spread = np.where(achromatic, 1.0, spread)
    color = np.where(achromatic[..., None], 0.0, (x - low[..., None]) / safe_spread[..., None])
    return MaxSaturatedColor(color=color, achromatic=achromatic)

def decompose(x, tol=0.0):
    x = np.asarray(x, dtype=np.float64)
    low, high = channel_minmax(x)
    target = max_saturated_color(x, tol=tol)
    return HuePlaneCoords(a_w=low, a_k=1.0 - high, a_c=high - low, c=target.color, achromatic=target.achromatic)

def recompose(coords):
    """Inverse of decompose. Black contributes nothing; achromatic coordinates rebuild as a_w (1, 1, 1)."""
    a_w, a_c = np.asarray(coords.a_w, dtype=np.float64), np.asarray(coords.a_c, dtype=np.float64)
    c = np.where(np.asarray(coords.achromatic)[..., None], 0.0, coords.c)
    gray = np.broadcast_to(a_w[..., None], c.shape)
    return np.where(np.asarray(coords.achromatic)[..., None], gray, gray + a_c[..., None] * c)

def compensate_pixel(x_prime, c_h, achromatic=False):
    """
    Replace the maximally saturated color of ``x_prime`` by ``c_h``, keeping its white, black and color weights.
    Where ``achromatic`` is set (``c_h`` undefined) the pixel is returned unchanged. ``c_h`` may also be a
    MaxSaturatedColor, in which case its own flag is used.
    """
    if isinstance(c_h, MaxSaturatedColor):
        c_h, achromatic = c_h
    x_prime = np.asarray(x_prime, dtype=np.float64)
    coords = decompose(x_prime)
    transplanted = coords.a_w[..., None] + coords.a_c[..., None] * np.asarray(c_h, dtype=np.float64)
    return np.where(np.asarray(achromatic)[..., None], x_prime, transplanted)

def hdr_target(hdr, gamma=None):
    """
    Maximally saturated colors of an HDR image, optionally after the display power law 1/gamma. A pure power law
    keeps the result independent of the image's absolute scale.
    """
    pixels = as_normalized(hdr)
    if gamma is not None:
        pixels = np.power(pixels, 1.0 / gamma)
    return max_saturated_color(pixels, tol=hdr_tolerance)

def compensate_image(ldr, hdr, gamma=None):
    """
    Hue-compensate a tone mapped image against its HDR source and re-quantize it. Pass the display gamma that was
    applied before quantization so the target hue is taken in the same encoding as the LDR values.
    """
    if not isinstance(ldr, LdrImage) or not isinstance(hdr, HdrImage):
        raise ValidationError("compensate_image expects an LdrImage and an HdrImage")
    check_same_size(hdr, ldr)
    x_prime = ldr.normalized()
    target = hdr_target(hdr, gamma=gamma)
    lost = int(np.count_nonzero(target.achromatic & ~max_saturated_color(x_prime).achromatic))
    if lost:
        logger.warning("%d chromatic LDR pixels have an achromatic HDR source and were left unchanged", lost)
    return quantize_clip(compensate_pixel(x_prime, target))
