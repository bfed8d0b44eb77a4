"""
Image containers shared by every stage of the pipeline.

Pixels are stored as row-major ``(height, width, 3)`` numpy arrays. HDR images hold linear-light float64 radiance of
arbitrary absolute scale; LDR images hold 8-bit display values. Both are read-only after construction so they can be
shared between worker threads.
"""

from collections import namedtuple

import numpy as np

from .exceptions import ValidationError, DimensionMismatch

LuminancePair = namedtuple("LuminancePair", "world display")
LuminancePair.__doc__ = "Per-pixel world luminance (>= 0) and display luminance (in [0, 1]) maps."

def _as_rgb_array(pixels, dtype, width=None, height=None):
    array = np.asarray(pixels)
    if width is not None and height is not None:
        if array.ndim == 2 and array.shape[1] == 3:
            if array.shape[0] != width * height:
                raise DimensionMismatch((width, height), (array.shape[0], 1), what="pixel array")
            array = array.reshape(height, width, 3)
        elif array.shape[:2] != (height, width):
            raise DimensionMismatch((width, height), array.shape[1::-1], what="pixel array")
    if array.ndim != 3 or array.shape[2] != 3:
        raise ValidationError("Expected an RGB pixel array of shape (height, width, 3), got {}".format(array.shape))
    if array.shape[0] == 0 or array.shape[1] == 0:
        raise ValidationError("Degenerate image dimensions {}x{}".format(array.shape[1], array.shape[0]))
    array = np.array(array, dtype=dtype)
    array.setflags(write=False)
    return array

class _Image(object):
    def __init__(self, pixels):
        self.pixels = pixels

    @property
    def height(self):
        return self.pixels.shape[0]

    @property
    def width(self):
        return self.pixels.shape[1]

    @property
    def size(self):
        return self.width, self.height

    def __eq__(self, other):
        return type(self) is type(other) and np.array_equal(self.pixels, other.pixels)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "<{}.{} {}x{}>".format(self.__module__, self.__class__.__name__, self.width, self.height)

class HdrImage(_Image):
    """
    Linear floating-point RGB image. Every channel is finite and nonnegative.
    """
    def __init__(self, pixels, width=None, height=None):
        pixels = _as_rgb_array(pixels, np.float64, width=width, height=height)
        if not np.all(np.isfinite(pixels)):
            raise ValidationError("HDR image contains non-finite channel values")
        if np.any(pixels < 0):
            raise ValidationError("HDR image contains negative channel values")
        super(HdrImage, self).__init__(pixels)

class LdrImage(_Image):
    """
    8-bit RGB image, every channel an integer in [0, 255].
    """
    def __init__(self, pixels, width=None, height=None):
        array = np.asarray(pixels)
        if array.dtype != np.uint8:
            if array.size and (not np.all(np.isfinite(array)) or array.min() < 0 or array.max() > 255
                               or np.any(np.mod(array, 1) != 0)):
                raise ValidationError("LDR channel values must be integers in [0, 255]")
        super(LdrImage, self).__init__(_as_rgb_array(array, np.uint8, width=width, height=height))

    def normalized(self):
        """Channels rescaled to [0, 1] as float64."""
        return self.pixels / 255.0

def new_hdr(width, height, pixels):
    return HdrImage(pixels, width=width, height=height)

def new_ldr(width, height, pixels):
    return LdrImage(pixels, width=width, height=height)

def as_normalized(image):
    """
    Float RGB view of an image for hue-plane and metric work: HDR channels as-is, LDR channels divided by 255, arrays
    passed through.
    """
    if isinstance(image, LdrImage):
        return image.normalized()
    if isinstance(image, HdrImage):
        return image.pixels
    return np.asarray(image, dtype=np.float64)

def channel_minmax(p):
    """(min, max) over the last axis of an RGB pixel or pixel map."""
    p = np.asarray(p, dtype=np.float64)
    return p.min(axis=-1), p.max(axis=-1)

def check_same_size(a, b):
    size_a = a.shape[1::-1] if isinstance(a, np.ndarray) else a.size
    size_b = b.shape[1::-1] if isinstance(b, np.ndarray) else b.size
    if tuple(size_a) != tuple(size_b):
        raise DimensionMismatch(size_a, size_b)
