"""
Mantiuk-style color correction, used as the comparison baseline: C_out = (C / L_in)^s * L_out.
"""

import logging
from collections import namedtuple

import numpy as np

from .exceptions import ValidationError
from .image import HdrImage

logger = logging.getLogger(__name__)

MantiukConfig = namedtuple("MantiukConfig", ["saturation", "k1", "k2"])
MantiukConfig.__new__.__defaults__ = ("auto", 1.6774, 0.9925)

def mantiuk_correct(channel, l_in, l_out, s):
    """Nonlinear correction of one channel (or channel array). Zero input luminance gives 0."""
    if s < 0:
        raise ValidationError("Saturation factor must be nonnegative, got {}".format(s))
    channel, l_in, l_out = (np.asarray(v, dtype=np.float64) for v in (channel, l_in, l_out))
    ratio = np.divide(channel, l_in, out=np.zeros(np.broadcast(channel, l_in).shape), where=l_in > 0)
    corrected = np.power(ratio, s) * l_out
    return np.where(l_in > 0, corrected, 0.0)

def mantiuk_saturation_for_contrast(c, k1=1.6774, k2=0.9925):
    if not c > 0:
        raise ValidationError("Contrast ratio must be positive, got {}".format(c))
    return (1 + k1) * c ** k2 / (1 + k1 * c ** k2)

def estimate_contrast(lum):
    """
    Global contrast compression ratio of a tone curve: the least squares slope of log L_out against log L_in over
    pixels where both are positive. Returns 1 when the fit is degenerate.
    """
    world, display = np.ravel(lum.world), np.ravel(lum.display)
    valid = (world > 0) & (display > 0)
    if np.count_nonzero(valid) < 2:
        return 1.0
    log_in, log_out = np.log(world[valid]), np.log(display[valid])
    if np.ptp(log_in) == 0:
        return 1.0
    slope = np.polyfit(log_in, log_out, 1)[0]
    return float(slope) if slope > 0 else 1.0

def saturation_for(lum, config=MantiukConfig()):
    if config.saturation != "auto":
        return float(config.saturation)
    contrast = estimate_contrast(lum)
    s = mantiuk_saturation_for_contrast(contrast, k1=config.k1, k2=config.k2)
    logger.info("Mantiuk correction (nonlinear): contrast slope %.4f, saturation %.4f", contrast, s)
    return s

def mantiuk_color(hdr, lum, config=MantiukConfig()):
    """Floating point LDR image produced by the Mantiuk correction in place of the plain color ratio."""
    pixels = hdr.pixels if isinstance(hdr, HdrImage) else np.asarray(hdr, dtype=np.float64)
    s = saturation_for(lum, config)
    return mantiuk_correct(pixels, np.asarray(lum.world)[..., None], np.asarray(lum.display)[..., None], s)
