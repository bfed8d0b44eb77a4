"""
Objective hue and quality metrics for tone mapped images.

- Δc: mean Euclidean distance between per-pixel maximally saturated colors.
- ΔH: mean CIEDE2000 hue difference |ΔH'|. HDR references are brought to display range first: divided by their
  99.9th percentile luminance, clipped to [0, 1] and sRGB encoded.
- TMQI: see ``hueforge.util.tmqi``.
"""

import io, logging
from collections import namedtuple, OrderedDict

import numpy as np
import colour
from PIL import Image

from .exceptions import ValidationError
from .image import HdrImage, as_normalized, check_same_size
from .hue_plane import max_saturated_color, hdr_tolerance
from .reconstruction import round_half_away, quantize_clip
from .color import srgb_to_lab, ciede2000
from .tmo import world_luminance
from .tmqi import tmqi, TmqiConfig

logger = logging.getLogger(__name__)

MetricsConfig = namedtuple("MetricsConfig", ["delta_h_normalized", "hdr_percentile", "hdr_encoding"])
MetricsConfig.__new__.__defaults__ = (False, 99.9, "srgb")

MetricMap = namedtuple("MetricMap", ["mean", "map"])

report_fields = ("delta_c", "delta_h", "tmqi_q", "tmqi_s", "tmqi_n")

class MetricReport(namedtuple("MetricReport", report_fields + ("delta_c_map", "delta_h_map"))):
    def scalars(self):
        return OrderedDict((field, float(getattr(self, field))) for field in report_fields)

def _hue_target(image, gamma=None):
    if isinstance(image, HdrImage):
        pixels = image.pixels if gamma is None else np.power(image.pixels, 1.0 / gamma)
        return max_saturated_color(pixels, tol=hdr_tolerance)
    return max_saturated_color(as_normalized(image))

def delta_c(i1, i2, gamma=None):
    """
    Mean distance between the maximally saturated colors of two images. HDR inputs may be carried through the
    display power law 1/gamma first. Where either pixel is achromatic the term is 0.
    """
    check_same_size(i1, i2)
    c1, c2 = _hue_target(i1, gamma), _hue_target(i2, gamma)
    one_sided = int(np.count_nonzero(c1.achromatic ^ c2.achromatic))
    if one_sided:
        logger.warning("%d pixels are achromatic in only one image; their Δc term is 0", one_sided)
    distance = np.linalg.norm(c1.color - c2.color, axis=-1)
    distance[c1.achromatic | c2.achromatic] = 0.0
    return MetricMap(mean=float(np.mean(distance)), map=distance)

def saturated_color_image(image, gamma=None):
    """Maximally saturated color of every pixel as an 8-bit image; achromatic pixels are black."""
    return quantize_clip(_hue_target(image, gamma).color)

def hdr_to_display(hdr, percentile=99.9, encoding="srgb"):
    """Nonlinear [0, 1] rendition of an HDR image used as the Lab reference."""
    pixels = hdr.pixels
    lum = world_luminance(pixels)
    white = np.percentile(lum, percentile)
    if white <= 0:
        white = lum.max()
    linear = np.clip(pixels / white, 0.0, 1.0) if white > 0 else np.zeros_like(pixels)
    if encoding == "srgb":
        return colour.models.eotf_inverse_sRGB(linear)
    elif encoding == "linear":
        return linear
    try:
        gamma = float(encoding)
    except ValueError:
        raise ValidationError("HDR encoding must be srgb, linear or a gamma value, got {!r}".format(encoding))
    if not gamma > 0:
        raise ValidationError("HDR encoding gamma must be positive, got {}".format(gamma))
    return np.power(linear, 1.0 / gamma)

def to_lab(image, config=MetricsConfig()):
    if isinstance(image, HdrImage):
        return srgb_to_lab(hdr_to_display(image, percentile=config.hdr_percentile, encoding=config.hdr_encoding))
    return srgb_to_lab(as_normalized(image))

def ciede2000_delta_h(i1, i2, config=MetricsConfig()):
    """Mean per-pixel |ΔH'|, or |ΔH'| / S_H when ``config.delta_h_normalized`` is set."""
    check_same_size(i1, i2)
    terms = ciede2000(to_lab(i1, config), to_lab(i2, config))
    hue = np.abs(terms.delta_h / terms.s_h if config.delta_h_normalized else terms.delta_h)
    return MetricMap(mean=float(np.mean(hue)), map=hue)

def mean_luminance(ldr):
    return float(np.mean(world_luminance(ldr.normalized())))

def mean_luminance_adjust(ldr, target_mean):
    """Scale every channel so that the mean luminance becomes ``target_mean`` (on the [0, 1] scale), re-quantized."""
    if not target_mean > 0:
        raise ValidationError("Target mean luminance must be positive, got {}".format(target_mean))
    current = mean_luminance(ldr)
    if current == 0:
        raise ValidationError("Cannot adjust the mean luminance of an all-black image")
    return quantize_clip(ldr.normalized() * (target_mean / current))

def evaluate(hdr, ldr, gamma=None, config=MetricsConfig(), tmqi_config=TmqiConfig()):
    check_same_size(hdr, ldr)
    dc, dh = delta_c(hdr, ldr, gamma=gamma), ciede2000_delta_h(hdr, ldr, config)
    quality = tmqi(hdr, ldr, tmqi_config)
    return MetricReport(delta_c=dc.mean, delta_h=dh.mean, tmqi_q=quality.q, tmqi_s=quality.s, tmqi_n=quality.n,
                        delta_c_map=dc.map, delta_h_map=dh.map)

def heatmap(values, scale=None, file=None):
    """
    Grayscale PNG of a per-pixel difference map; white is ``scale`` (default: the map's maximum). Returns the encoded
    bytes and writes them to ``file`` if given.
    """
    values = np.asarray(values, dtype=np.float64)
    scale = scale or values.max() or 1.0
    gray = np.clip(round_half_away(values / scale * 255), 0, 255).astype(np.uint8)
    buf = io.BytesIO()
    Image.fromarray(gray).save(buf, format="PNG")
    if file is not None:
        with open(file, "wb") as fh:
            fh.write(buf.getvalue())
    return buf.getvalue()
