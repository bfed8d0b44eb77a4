"""
Image file codecs: Radiance RGBE (.hdr/.pic) input and PFM input/output for HDR images, PNG and PPM for LDR images.

RGBE pixels decode as ``mantissa * 2**(exponent - 136)`` (no half-step mantissa centering); an all-zero exponent
decodes to black. Both flat and adaptive run-length scanlines are accepted.
"""

import io, os, re, logging

import numpy as np
from PIL import Image

from .exceptions import FormatError, ValidationError
from .image import HdrImage, LdrImage

logger = logging.getLogger(__name__)

ldr_formats = {"png": "PNG", "ppm": "PPM"}
hdr_extensions = {".hdr": "rgbe", ".pic": "rgbe", ".rgbe": "rgbe", ".pfm": "pfm"}

_resolution_pattern = re.compile(rb"^([-+])([XY]) (\d+) ([-+])([XY]) (\d+)$")

def _as_stream(source):
    if isinstance(source, (bytes, bytearray)):
        return io.BytesIO(source)
    return source

def _read_line(stream, what):
    line = stream.readline()
    if not line.endswith(b"\n"):
        raise FormatError("Unexpected end of file while reading {}".format(what))
    return line.rstrip(b"\r\n")

def rgbe_to_float(rgbe):
    """Decode a (..., 4) uint8 RGBE array to (..., 3) float64 radiance."""
    rgbe = np.asarray(rgbe, dtype=np.uint8)
    exponent = rgbe[..., 3:].astype(np.int32)
    rgb = np.ldexp(rgbe[..., :3].astype(np.float64), exponent - 136)
    rgb[(exponent == 0)[..., 0]] = 0.0
    return rgb

def _read_rgbe_header(stream):
    signature = stream.readline()
    if not signature.startswith(b"#?"):
        raise FormatError("Missing #?RADIANCE or #?RGBE signature")
    while True:
        line = _read_line(stream, "RGBE header")
        if line == b"":
            break
        if line.startswith(b"FORMAT=") and line != b"FORMAT=32-bit_rle_rgbe":
            pixel_format = line[len(b"FORMAT="):].decode(errors="replace")
            raise FormatError("Unsupported RGBE pixel format {}".format(pixel_format))
    resolution = _resolution_pattern.match(_read_line(stream, "RGBE resolution line"))
    if resolution is None:
        raise FormatError("Malformed RGBE resolution line")
    sign_y, axis_y, height, sign_x, axis_x, width = resolution.groups()
    if (sign_y, axis_y, sign_x, axis_x) != (b"-", b"Y", b"+", b"X"):
        raise FormatError("Unsupported RGBE orientation {}".format(resolution.group(0).decode()))
    return int(width), int(height)

def _read_exactly(stream, count, what="RGBE scanline"):
    data = stream.read(count)
    if len(data) != count:
        raise FormatError("Truncated {}".format(what))
    return data

def _read_rle_scanline(stream, width):
    scanline = np.empty((4, width), dtype=np.uint8)
    for channel in range(4):
        x = 0
        while x < width:
            count = _read_exactly(stream, 1)[0]
            if count > 128:
                count -= 128
                if x + count > width:
                    raise FormatError("RGBE run overruns scanline")
                scanline[channel, x:x + count] = _read_exactly(stream, 1)[0]
            else:
                if count == 0 or x + count > width:
                    raise FormatError("Bad RGBE scanline data")
                scanline[channel, x:x + count] = np.frombuffer(_read_exactly(stream, count), dtype=np.uint8)
            x += count
    return scanline.T

def _read_rgbe_scanline(stream, width):
    if width < 8 or width > 0x7fff:
        return np.frombuffer(_read_exactly(stream, 4 * width), dtype=np.uint8).reshape(width, 4)
    head = _read_exactly(stream, 4)
    if head[0] != 2 or head[1] != 2 or head[2] & 0x80:
        rest = _read_exactly(stream, 4 * (width - 1))
        return np.frombuffer(head + rest, dtype=np.uint8).reshape(width, 4)
    if (head[2] << 8 | head[3]) != width:
        raise FormatError("RGBE scanline width does not match header")
    return _read_rle_scanline(stream, width)

def read_radiance_hdr(source):
    """
    Decode a Radiance RGBE image from a bytes object or binary stream.
    """
    stream = _as_stream(source)
    width, height = _read_rgbe_header(stream)
    rgbe = np.empty((height, width, 4), dtype=np.uint8)
    for y in range(height):
        rgbe[y] = _read_rgbe_scanline(stream, width)
    return HdrImage(rgbe_to_float(rgbe))

def read_pfm(source):
    """
    Decode a three-channel portable float map. The scale line's sign selects endianness (negative: little-endian);
    rows are stored bottom-up.
    """
    stream = _as_stream(source)
    identifier = _read_line(stream, "PFM identifier")
    if identifier == b"Pf":
        raise FormatError("Grayscale PFM (Pf) images are not supported")
    if identifier != b"PF":
        raise FormatError("Unrecognized PFM identifier")
    try:
        width, height = (int(i) for i in _read_line(stream, "PFM dimensions").split())
        scale = float(_read_line(stream, "PFM scale"))
    except ValueError:
        raise FormatError("Malformed PFM header")
    if width <= 0 or height <= 0 or scale == 0:
        raise FormatError("Malformed PFM header")
    dtype = np.dtype("<f4") if scale < 0 else np.dtype(">f4")
    payload = _read_exactly(stream, width * height * 3 * dtype.itemsize, what="PFM payload")
    pixels = np.frombuffer(payload, dtype=dtype).reshape(height, width, 3)[::-1]
    pixels = pixels.astype(np.float64)
    try:
        return HdrImage(pixels)
    except ValidationError as e:
        raise ValidationError("PFM payload failed validation ({}); check the endianness of the scale line".format(e))

def read_hdr(path):
    """Read an HDR image file, dispatching on extension."""
    ext = os.path.splitext(path)[1].lower()
    if ext not in hdr_extensions:
        raise FormatError("Unrecognized HDR file extension {!r} for {}".format(ext, path))
    with open(path, "rb") as fh:
        if hdr_extensions[ext] == "pfm":
            return read_pfm(fh)
        return read_radiance_hdr(fh)

def write_pfm(img, file=None):
    """
    Encode an HDR image as a little-endian three-channel PFM (rows bottom-up, scale -1). Returns the encoded bytes,
    and also writes them to ``file`` (a path or binary stream) if given.
    """
    if not isinstance(img, HdrImage):
        raise ValidationError("Expected an HdrImage, got {}".format(type(img).__name__))
    height, width = img.pixels.shape[:2]
    header = "PF\n{} {}\n-1.0\n".format(width, height).encode()
    payload = header + np.ascontiguousarray(img.pixels[::-1], dtype="<f4").tobytes()
    if file is not None:
        if isinstance(file, (str, bytes)):
            with open(file, "wb") as fh:
                fh.write(payload)
        else:
            file.write(payload)
    return payload

def write_ldr(img, format="png", file=None):
    """
    Encode an LDR image as PNG (8-bit truecolor, no gamma or ICC chunks) or binary PPM. Returns the encoded bytes, and
    also writes them to ``file`` (a path or binary stream) if given.
    """
    if format not in ldr_formats:
        raise ValidationError("Unsupported LDR output format {!r}".format(format))
    buf = io.BytesIO()
    Image.fromarray(np.ascontiguousarray(img.pixels)).save(buf, format=ldr_formats[format])
    payload = buf.getvalue()
    if file is not None:
        if isinstance(file, (str, bytes)):
            with open(file, "wb") as fh:
                fh.write(payload)
        else:
            file.write(payload)
    return payload

def read_ldr(source):
    """Decode a PNG or PPM image (path, bytes or binary stream) into an LdrImage."""
    source = _as_stream(source)
    try:
        with Image.open(source) as im:
            im.load()
            if im.mode not in ("RGB", "L", "P", "RGBA"):
                raise FormatError("Unsupported LDR image mode {}".format(im.mode))
            if im.mode == "RGBA":
                logger.warning("Discarding alpha channel of %s", getattr(source, "name", source))
            return LdrImage(np.asarray(im.convert("RGB")))
    except (IOError, SyntaxError) as e:
        if isinstance(e, (FileNotFoundError, PermissionError)):
            raise
        raise FormatError("Could not decode LDR image: {}".format(e))
