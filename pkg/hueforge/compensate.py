"""
Compensate the hue of a tone mapped image against its HDR source.

The output keeps each pixel's white, black and color weights and takes its maximally saturated color from the HDR
pixel. Pass the same gamma that was used when the image was quantized.
"""

import os

from . import register_parser, logger
from .util import add_gamma_args, reconstruction_config
from .util.corpus import load_image
from .util.imageio import read_ldr, write_ldr
from .util.hue_plane import compensate_image

def compensate(args):
    hdr = load_image(args.hdr)
    ldr = read_ldr(args.ldr)
    result = compensate_image(ldr, hdr, gamma=reconstruction_config(args).gamma)
    image_format = "ppm" if os.path.splitext(args.out)[1].lower() == ".ppm" else "png"
    write_ldr(result, format=image_format, file=args.out)
    logger.info("Wrote %s", args.out)

parser = register_parser(compensate)
parser.add_argument("--hdr", required=True, help="HDR source image (or synthetic:<name>)")
parser.add_argument("--ldr", required=True, help="Tone mapped 8-bit image (PNG or PPM)")
parser.add_argument("--out", required=True, help="Output image path; a .ppm suffix selects PPM, otherwise PNG")
add_gamma_args(parser)
