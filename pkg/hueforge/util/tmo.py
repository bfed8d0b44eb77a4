"""
Tone mapping operators. Each operator maps a world luminance map to a display luminance map in [0, 1].
"""

import logging, math
from collections import namedtuple

import numpy as np
import scipy.ndimage
import cv2

from .exceptions import ValidationError
from .image import LuminancePair

logger = logging.getLogger(__name__)

operators = ("reinhard_global", "reinhard_local", "drago", "durand")

luminance_weights = np.array([0.27, 0.67, 0.06])

# Guard for log(L_w) at black pixels
log_delta = 1e-6

# Base layers spanning less than this many log10 units are left uncompressed
flat_base_range = 1e-6

TmoConfig = namedtuple("TmoConfig", ["operator", "key_value", "drago_bias", "durand_contrast", "num_scales",
                                     "sharpening", "threshold", "scale_ratio", "durand_sigma_space",
                                     "durand_sigma_range"])
TmoConfig.__new__.__defaults__ = ("reinhard_global", 0.18, 0.85, 50.0, 8, 8.0, 0.05, 1.6, 0.02, 0.4)

def validate_config(config):
    if config.operator not in operators:
        raise ValidationError("Unknown tone mapping operator {!r}, expected one of {}".format(config.operator,
                                                                                             ", ".join(operators)))
    if not 0 <= config.key_value <= 1:
        raise ValidationError("Key value must lie in [0, 1], got {}".format(config.key_value))
    if not 0 < config.drago_bias <= 1:
        raise ValidationError("Drago bias must lie in (0, 1], got {}".format(config.drago_bias))
    if not config.durand_contrast > 1:
        raise ValidationError("Durand contrast must exceed 1, got {}".format(config.durand_contrast))
    if config.num_scales < 1:
        raise ValidationError("Scale count must be at least 1, got {}".format(config.num_scales))
    return config

def world_luminance(img):
    """L_w = 0.27 R + 0.67 G + 0.06 B per pixel."""
    return np.asarray(getattr(img, "pixels", img), dtype=np.float64) @ luminance_weights

def log_average(lum, delta=log_delta):
    """Geometric mean exp(mean(log(delta + L_w)))."""
    lum = np.asarray(lum, dtype=np.float64)
    if lum.size == 0:
        raise ValidationError("Cannot take the log-average luminance of an empty image")
    return float(np.exp(np.mean(np.log(delta + lum))))

def _scaled_luminance(lum, key_value):
    lum = np.asarray(lum, dtype=np.float64)
    return (key_value / log_average(lum)) * lum

def reinhard_global(lum, key_value=0.18):
    scaled = _scaled_luminance(lum, key_value)
    return scaled / (1.0 + scaled)

def _local_sigmas(num_scales, scale_ratio):
    # Center kernel of scale s is exp(-r^2 / (a s)^2) with a = 1/(2 sqrt 2), i.e. sigma = a s / sqrt 2. The surround
    # at scale s_i coincides with the center at s_(i+1).
    alpha = 1 / (2 * math.sqrt(2))
    scales = [scale_ratio ** i for i in range(num_scales + 1)]
    return scales, [alpha * s / math.sqrt(2) for s in scales]

def reinhard_local(lum, key_value=0.18, num_scales=8, sharpening=8.0, threshold=0.05, scale_ratio=1.6):
    """
    Dodging-and-burning variant of the photographic operator: each pixel is divided by the blurred luminance at the
    largest scale whose center-surround difference stays below ``threshold``.
    """
    if num_scales < 2:
        raise ValidationError("The local operator needs at least 2 scales, got {}".format(num_scales))
    lum = np.asarray(lum, dtype=np.float64)
    scales, sigmas = _local_sigmas(num_scales, scale_ratio)
    extent = 2 * int(4.0 * sigmas[-1] + 0.5) + 1
    if min(lum.shape) < extent:
        logger.warning("Image %dx%d is smaller than the %d px surround kernel; using the global operator",
                       lum.shape[1], lum.shape[0], extent)
        return reinhard_global(lum, key_value=key_value)
    scaled = _scaled_luminance(lum, key_value)
    blurred = np.stack([scipy.ndimage.gaussian_filter(scaled, sigma, mode="reflect", truncate=4.0)
                        for sigma in sigmas])
    center, surround = blurred[:-1], blurred[1:]
    norm = (2.0 ** sharpening) * key_value / np.square(scales[:-1])[:, None, None]
    activity = (center - surround) / (norm + center)
    exceeded = np.abs(activity) >= threshold
    first = np.argmax(exceeded, axis=0)
    chosen = np.where(exceeded.any(axis=0), np.maximum(first - 1, 0), num_scales - 1)
    adaptation = np.take_along_axis(center, chosen[None], axis=0)[0]
    return np.clip(scaled / (1.0 + adaptation), 0.0, 1.0)

def drago(lum, bias=0.85):
    """
    Adaptive logarithmic mapping, normalized so that the brightest pixel maps to 1. Luminance is first expressed
    relative to its log-average, which makes the operator independent of the absolute radiance scale.
    """
    lum = np.asarray(lum, dtype=np.float64)
    if lum.size == 0 or lum.max() <= 0:
        return np.zeros_like(lum)
    adapted = lum / log_average(lum)
    adapted_max = adapted.max()
    exponent = math.log(bias) / math.log(0.5)
    mapped = np.log1p(adapted) / np.log(2.0 + 8.0 * np.power(adapted / adapted_max, exponent))
    return np.clip(mapped / (np.log1p(adapted_max) / np.log(10.0)), 0.0, 1.0)

def durand(lum, contrast=50.0, sigma_space=0.02, sigma_range=0.4):
    """
    Fast bilateral base/detail decomposition in the log10 domain. The base layer is compressed to span
    log10(contrast), the detail layer is kept, and the result is normalized to a peak of 1. ``sigma_space`` is a
    fraction of the image diagonal; ``sigma_range`` is in log10 units.
    """
    if not contrast > 1:
        raise ValidationError("Durand contrast must exceed 1, got {}".format(contrast))
    lum = np.asarray(lum, dtype=np.float64)
    log_lum = np.log10(lum + log_delta)
    space = max(sigma_space * math.hypot(*lum.shape), 0.5)
    base = cv2.bilateralFilter(log_lum.astype(np.float32), d=-1, sigmaColor=sigma_range, sigmaSpace=space)
    base = base.astype(np.float64)
    detail = log_lum - base
    base_range = base.max() - base.min()
    factor = math.log10(contrast) / base_range if base_range > flat_base_range else 1.0
    display = np.power(10.0, (base - base.max()) * factor + detail)
    return np.clip(display / display.max(), 0.0, 1.0)

def display_luminance(lum, config):
    validate_config(config)
    if config.operator == "reinhard_global":
        return reinhard_global(lum, key_value=config.key_value)
    elif config.operator == "reinhard_local":
        return reinhard_local(lum, key_value=config.key_value, num_scales=config.num_scales,
                              sharpening=config.sharpening, threshold=config.threshold, scale_ratio=config.scale_ratio)
    elif config.operator == "drago":
        return drago(lum, bias=config.drago_bias)
    return durand(lum, contrast=config.durand_contrast, sigma_space=config.durand_sigma_space,
                  sigma_range=config.durand_sigma_range)

def tone_map(hdr, config=TmoConfig()):
    """World luminance and display luminance of an HDR image."""
    world = world_luminance(hdr)
    return LuminancePair(world=world, display=display_luminance(world, config))
