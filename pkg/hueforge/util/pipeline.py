"""
End-to-end rendering of an HDR image into an 8-bit image by one of three methods:

- ``conventional``: tone map, scale colors by L_d / L_w, gamma encode, quantize.
- ``proposed``: the conventional image with its hue compensated against the HDR source.
- ``mantiuk``: tone map, Mantiuk color correction, gamma encode, quantize.
"""

import logging
from collections import namedtuple

from .exceptions import ValidationError
from .tmo import tone_map, TmoConfig
from .reconstruction import (ReconstructionConfig, reconstruct, gamma_encode, quantize_clip, clip_only, round_only,
                             validate_config)
from .hue_plane import compensate_image
from .baseline import mantiuk_color, MantiukConfig
from .metrics import delta_c

logger = logging.getLogger(__name__)

methods = ("conventional", "proposed", "mantiuk")

Rendering = namedtuple("Rendering", ["method", "ldr", "lum", "prequant"])

def render(hdr, method="conventional", tmo_config=TmoConfig(), config=ReconstructionConfig(),
           mantiuk_config=MantiukConfig(), lum=None):
    if method not in methods:
        raise ValidationError("Unknown method {!r}, expected one of {}".format(method, ", ".join(methods)))
    validate_config(config)
    if lum is None:
        lum = tone_map(hdr, tmo_config)
    if method == "mantiuk":
        prequant = mantiuk_color(hdr, lum, mantiuk_config)
        if config.gamma is not None:
            prequant = gamma_encode(prequant, config.gamma)
        return Rendering(method, quantize_clip(prequant), lum, prequant if config.record_prequant else None)
    ldr, prequant = reconstruct(hdr, lum, config)
    if method == "proposed":
        ldr = compensate_image(ldr, hdr, gamma=config.gamma)
    return Rendering(method, ldr, lum, prequant)

def render_all(hdr, tmo_config=TmoConfig(), config=ReconstructionConfig(), mantiuk_config=MantiukConfig(),
               which=("conventional", "proposed")):
    """Render several methods sharing one tone mapping pass."""
    lum = tone_map(hdr, tmo_config)
    return [render(hdr, method, tmo_config, config, mantiuk_config, lum=lum) for method in which]

def ablation(hdr, tmo_config=TmoConfig(), config=ReconstructionConfig()):
    """
    Δc against the HDR source of the pre-quantization image with clipping only, rounding only, and both. Each entry
    is a MetricMap.
    """
    rendering = render(hdr, "conventional", tmo_config, config._replace(record_prequant=True))
    prequant = rendering.prequant
    return {
        "clip_only": delta_c(hdr, clip_only(prequant), gamma=config.gamma),
        "round_only": delta_c(hdr, round_only(prequant) / 255.0, gamma=config.gamma),
        "clip_round": delta_c(hdr, rendering.ldr, gamma=config.gamma)
    }
