"""
Tone map HDR images to 8-bit images.

Each input (a .hdr/.pic/.pfm file or a synthetic:<name> reference) is written to the output directory as
<name>.<tmo>.<format>, and the run is recorded in tonemap.json next to the images.
"""

import os, json

from . import register_parser, logger
from .util import add_tmo_args, add_gamma_args, tmo_config, reconstruction_config, mantiuk_config, executor
from .util.corpus import load_image, image_name
from .util.imageio import write_ldr, ldr_formats
from .util.pipeline import render, ablation
from .util.metrics import heatmap

def _method(args):
    if args.compensate:
        return "proposed"
    return "mantiuk" if args.baseline == "mantiuk" else "conventional"

def tonemap(args):
    config = tmo_config(args)
    rec_config = reconstruction_config(args)
    method = _method(args)
    if not os.path.isdir(args.out):
        os.makedirs(args.out)

    def process(ref):
        hdr = load_image(ref)
        rendering = render(hdr, method, config, rec_config, mantiuk_config())
        name = image_name(ref)
        filename = "{}.{}.{}".format(name, config.operator, args.image_format)
        write_ldr(rendering.ldr, format=args.image_format, file=os.path.join(args.out, filename))
        entry = dict(input=ref, output=filename, width=hdr.width, height=hdr.height)
        if args.ablation:
            entry["ablation"] = {}
            for variant, result in sorted(ablation(hdr, config, rec_config).items()):
                heatmap_name = "{}.{}.{}.png".format(name, config.operator, variant)
                heatmap(result.map, scale=2 ** 0.5, file=os.path.join(args.out, heatmap_name))
                entry["ablation"][variant] = dict(delta_c=result.mean, heatmap=heatmap_name)
        logger.info("Wrote %s", filename)
        return entry

    with executor() as pool:
        outputs = list(pool.map(process, args.hdr))
    log = dict(tmo=config._asdict(), gamma=rec_config.gamma, method=method, outputs=outputs)
    with open(os.path.join(args.out, "tonemap.json"), "w") as fh:
        json.dump(log, fh, indent=2, sort_keys=True)
        fh.write("\n")

parser = register_parser(tonemap)
parser.add_argument("--hdr", nargs="+", required=True, help="HDR input files or synthetic:<name> references")
add_tmo_args(parser)
add_gamma_args(parser)
method_group = parser.add_mutually_exclusive_group()
method_group.add_argument("--compensate", action="store_true", help="Compensate hue against the HDR source")
method_group.add_argument("--baseline", choices=["mantiuk"], help="Use the Mantiuk color correction instead")
parser.add_argument("--ablation", action="store_true",
                    help="Also measure clipping-only and rounding-only hue error and write their heatmaps")
parser.add_argument("--image-format", choices=sorted(ldr_formats))
parser.add_argument("--out", help="Output directory")
