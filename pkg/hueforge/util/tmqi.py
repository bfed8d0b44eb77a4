"""
Tone mapped image quality index: a multi-scale structural fidelity score S comparing the HDR and LDR luminance,
a statistical naturalness score N of the LDR luminance, and their combination Q = a S^alpha + (1 - a) N^beta.

Luminance is taken with Rec. 709 weights. The HDR luminance is stretched to [0, 2^32 - 1]; the LDR luminance stays
on the 0-255 scale.
"""

import logging
from collections import namedtuple

import numpy as np
import scipy.ndimage
import scipy.stats
from scipy.signal.windows import gaussian

from .exceptions import ValidationError
from .image import LdrImage, HdrImage, check_same_size

logger = logging.getLogger(__name__)

rec709_weights = np.array([0.2126, 0.7152, 0.0722])

TmqiConfig = namedtuple("TmqiConfig", ["a", "alpha", "beta", "level_weights", "window_size", "window_sigma", "c1",
                                       "c2", "naturalness_mean", "naturalness_std", "contrast_scale", "contrast_a",
                                       "contrast_b", "block_size", "hdr_range"])
TmqiConfig.__new__.__defaults__ = (0.8012, 0.3046, 0.7088, (0.0448, 0.2856, 0.3001, 0.2363, 0.1333), 11, 1.5, 0.01,
                                   10.0, 115.94, 27.99, 64.29, 4.4, 10.1, 11, 2.0 ** 32 - 1)

TmqiResult = namedtuple("TmqiResult", ["q", "s", "n", "s_levels", "s_maps"])

def luminance(pixels):
    return np.asarray(pixels, dtype=np.float64) @ rec709_weights

def _window(config):
    taps = gaussian(config.window_size, config.window_sigma)
    return taps / taps.sum()

def _filter_valid(img, taps):
    # Separable correlation cropped to the fully overlapping region
    out = scipy.ndimage.correlate1d(scipy.ndimage.correlate1d(img, taps, axis=0), taps, axis=1)
    half = len(taps) // 2
    return out[half:img.shape[0] - half, half:img.shape[1] - half]

def _downsample(img):
    padded = np.pad(img, ((0, img.shape[0] % 2), (0, img.shape[1] % 2)), mode="symmetric")
    h, w = padded.shape
    return padded.reshape(h // 2, 2, w // 2, 2).mean(axis=(1, 3))

def _contrast_threshold(spatial_frequency):
    csf = 100.0 * 2.6 * (0.0192 + 0.114 * spatial_frequency) * np.exp(-(0.114 * spatial_frequency) ** 1.1)
    u = 128.0 / (1.4 * csf)
    return u, u / 3.0

def local_structure(l_ref, l_test, spatial_frequency, config=TmqiConfig()):
    """Single-scale modified SSIM map between two luminance maps."""
    taps = _window(config)
    mu1, mu2 = _filter_valid(l_ref, taps), _filter_valid(l_test, taps)
    sigma1_sq = _filter_valid(l_ref * l_ref, taps) - mu1 * mu1
    sigma2_sq = _filter_valid(l_test * l_test, taps) - mu2 * mu2
    sigma12 = _filter_valid(l_ref * l_test, taps) - mu1 * mu2
    sigma1, sigma2 = np.sqrt(np.maximum(sigma1_sq, 0)), np.sqrt(np.maximum(sigma2_sq, 0))
    u, sig = _contrast_threshold(spatial_frequency)
    p1, p2 = scipy.stats.norm.cdf(sigma1, u, sig), scipy.stats.norm.cdf(sigma2, u, sig)
    return ((2 * p1 * p2 + config.c1) / (p1 * p1 + p2 * p2 + config.c1)
            * ((sigma12 + config.c2) / (sigma1 * sigma2 + config.c2)))

def usable_levels(shape, config=TmqiConfig()):
    levels, size = 0, min(shape)
    while levels < len(config.level_weights) and size >= config.window_size:
        levels += 1
        size = (size + 1) // 2
    return levels

def structural_fidelity(l_ref, l_test, config=TmqiConfig()):
    """
    Multi-scale structural fidelity. Returns (S, per-level scores, per-level maps). Images too small for every level
    are evaluated on fewer levels with the remaining weights renormalized.
    """
    l_ref, l_test = np.asarray(l_ref, dtype=np.float64), np.asarray(l_test, dtype=np.float64)
    check_same_size(l_ref, l_test)
    levels = usable_levels(l_ref.shape, config)
    if levels == 0:
        raise ValidationError("Image {}x{} is smaller than the {}px TMQI window".format(
            l_ref.shape[1], l_ref.shape[0], config.window_size))
    if levels < len(config.level_weights):
        logger.warning("Image %dx%d supports only %d of %d TMQI scales", l_ref.shape[1], l_ref.shape[0], levels,
                       len(config.level_weights))
    weights = np.asarray(config.level_weights[:levels], dtype=np.float64)
    weights = weights / weights.sum()
    frequency = 2.0 ** len(config.level_weights)
    scores, maps = [], []
    for level in range(levels):
        frequency /= 2
        s_map = local_structure(l_ref, l_test, frequency, config)
        maps.append(s_map)
        scores.append(float(np.clip(s_map.mean(), 0.0, 1.0)))
        l_ref, l_test = _downsample(l_ref), _downsample(l_test)
    return float(np.prod(np.power(scores, weights))), scores, maps

def _block_contrast(l_ldr, block):
    h, w = (l_ldr.shape[0] // block) * block, (l_ldr.shape[1] // block) * block
    if h == 0 or w == 0:
        return float(np.std(l_ldr, ddof=1)) if l_ldr.size > 1 else 0.0
    blocks = l_ldr[:h, :w].reshape(h // block, block, w // block, block).swapaxes(1, 2).reshape(-1, block * block)
    return float(np.std(blocks, axis=1, ddof=1).mean())

def statistical_naturalness(l_ldr, config=TmqiConfig()):
    """Naturalness of an 8-bit scale luminance map from its mean and mean block contrast, in [0, 1]."""
    l_ldr = np.asarray(l_ldr, dtype=np.float64)
    a, b = config.contrast_a, config.contrast_b
    mode = (a - 1) / (a + b - 2)
    p_contrast = (scipy.stats.beta.pdf(_block_contrast(l_ldr, config.block_size) / config.contrast_scale, a, b)
                  / scipy.stats.beta.pdf(mode, a, b))
    mean, std = config.naturalness_mean, config.naturalness_std
    p_brightness = scipy.stats.norm.pdf(l_ldr.mean(), mean, std) / scipy.stats.norm.pdf(mean, mean, std)
    return float(np.clip(p_brightness * p_contrast, 0.0, 1.0))

def hdr_luminance(hdr, config=TmqiConfig()):
    lum = luminance(hdr.pixels if isinstance(hdr, HdrImage) else hdr)
    low, high = lum.min(), lum.max()
    if high == low:
        return np.zeros_like(lum)
    return config.hdr_range * (lum - low) / (high - low)

def tmqi(hdr, ldr, config=TmqiConfig()):
    if not isinstance(ldr, LdrImage):
        raise ValidationError("TMQI expects an LdrImage as the test image")
    check_same_size(hdr, ldr)
    l_ldr = luminance(ldr.pixels)
    s, s_levels, s_maps = structural_fidelity(hdr_luminance(hdr, config), l_ldr, config)
    n = statistical_naturalness(l_ldr, config)
    q = config.a * s ** config.alpha + (1 - config.a) * n ** config.beta
    return TmqiResult(q=float(q), s=s, n=n, s_levels=s_levels, s_maps=s_maps)
