"""
Measure hue distortion and quality of a tone mapped image against its HDR source.

Reports Δc (maximally saturated color distance), ΔH (CIEDE2000 hue difference) and TMQI (Q, S, N).
"""

import os, sys

from . import register_parser, logger
from .util import add_gamma_args, reconstruction_config, metrics_config, tmqi_config
from .util.corpus import load_image, image_name
from .util.imageio import read_ldr, write_ldr
from .util.metrics import evaluate, heatmap, mean_luminance_adjust, saturated_color_image
from .util.printing import format_report

def metrics(args):
    hdr = load_image(args.hdr)
    ldr = read_ldr(args.ldr)
    if args.mean_luminance is not None:
        ldr = mean_luminance_adjust(ldr, args.mean_luminance)
    gamma = reconstruction_config(args).gamma
    report = evaluate(hdr, ldr, gamma=gamma, config=metrics_config(args), tmqi_config=tmqi_config())
    if args.heatmap:
        if not os.path.isdir(args.heatmap):
            os.makedirs(args.heatmap)
        heatmap(report.delta_c_map, scale=2 ** 0.5, file=os.path.join(args.heatmap, "delta_c.png"))
        heatmap(report.delta_h_map, file=os.path.join(args.heatmap, "delta_h.png"))
        logger.info("Wrote heatmaps to %s", args.heatmap)
    if args.saturated_colors:
        if not os.path.isdir(args.saturated_colors):
            os.makedirs(args.saturated_colors)
        write_ldr(saturated_color_image(hdr, gamma), file=os.path.join(args.saturated_colors, "hdr.png"))
        write_ldr(saturated_color_image(ldr), file=os.path.join(args.saturated_colors, "ldr.png"))
        logger.info("Wrote maximally saturated color images to %s", args.saturated_colors)
    row = dict(image=image_name(args.hdr), tmo=args.tmo_label, method=args.method_label, **report.scalars())
    if args.format == "csv":
        sys.stdout.write(format_report([row], fmt="csv"))
    else:
        print(format_report(report.scalars(), fmt="json"))

parser = register_parser(metrics)
parser.add_argument("--hdr", required=True, help="HDR reference image (or synthetic:<name>)")
parser.add_argument("--ldr", required=True, help="Tone mapped 8-bit image (PNG or PPM)")
add_gamma_args(parser)
parser.add_argument("--format", choices=["json", "csv"])
parser.add_argument("--heatmap", metavar="DIR", help="Write delta_c.png and delta_h.png difference maps to DIR")
parser.add_argument("--saturated-colors", metavar="DIR",
                    help="Write maximally saturated color images of both inputs to DIR as hdr.png and ldr.png")
parser.add_argument("--hdr-encoding", help="Transfer used to bring the HDR reference to display range before Lab "
                                           "conversion: srgb, linear, or a gamma value")
parser.add_argument("--mean-luminance", type=float,
                    help="Scale the LDR image to this mean luminance (0-1) before measuring")
parser.add_argument("--tmo-label", default="", help="Operator name for the CSV row")
parser.add_argument("--method-label", default="", help="Method name for the CSV row")
