"""
Compare conventional tone mapping, hue compensation and (optionally) the Mantiuk correction over a corpus.

Every image is tone mapped with every requested operator; each method's result is scored with Δc, ΔH and TMQI.
The best value of each metric per image and operator is shown in bold in table output. Images that cannot be
processed leave gaps in the report and make the command exit with status 1.
"""

import sys

from . import register_parser, logger
from .util import (add_tmo_args, add_gamma_args, tmo_config, reconstruction_config, mantiuk_config, tmqi_config,
                   metrics_config, executor)
from .util.exceptions import HueforgeException, UsageError
from .util.tmo import operators
from .util.corpus import load_manifest, load_image, image_name, synthetic_prefix, chromatic_images, Manifest
from .util.pipeline import render_all
from .util.metrics import evaluate
from .util.printing import format_report, page_output, metric_fields

def _manifest(args):
    if args.manifest:
        manifest = load_manifest(args.manifest)
    elif args.synthetic:
        names = chromatic_images if args.synthetic == ["all"] else args.synthetic
        manifest = Manifest(images=[synthetic_prefix + name for name in names], tmos=list(operators), params={})
    else:
        raise UsageError("Either --manifest or --synthetic is required")
    if args.tmo:
        manifest = manifest._replace(tmos=args.tmo)
    return manifest

def compare(args):
    manifest = _manifest(args)
    methods = ("conventional", "proposed") + (("mantiuk",) if args.baseline == "mantiuk" else ())
    if args.baseline == "mantiuk" and set(manifest.tmos) != {"durand"}:
        logger.warning("Mantiuk baseline rows for %s are outside its durand calibration",
                       ", ".join(tmo for tmo in manifest.tmos if tmo != "durand"))
    rec_config = reconstruction_config(args)
    mantiuk, quality, metric_options = mantiuk_config(), tmqi_config(), metrics_config()

    def load(ref):
        try:
            return load_image(ref)
        except (HueforgeException, EnvironmentError) as e:
            logger.error("Skipping %s: %s: %s", ref, e.__class__.__name__, e)
            return None

    def score(job):
        ref, hdr, tmo = job
        rows = [dict(image=image_name(ref), tmo=tmo, method=method) for method in methods]
        if hdr is None:
            return rows, False
        config = tmo_config(args, operator=tmo, overrides=manifest.params.get(tmo))
        for row, rendering in zip(rows, render_all(hdr, config, rec_config, mantiuk, which=methods)):
            report = evaluate(hdr, rendering.ldr, gamma=rec_config.gamma, config=metric_options, tmqi_config=quality)
            row.update(report.scalars())
        return rows, True

    with executor() as pool:
        images = list(pool.map(load, manifest.images))
        jobs = [(ref, hdr, tmo) for ref, hdr in zip(manifest.images, images) for tmo in manifest.tmos]
        results = list(pool.map(score, jobs))
    rows = [row for job_rows, _ in results for row in job_rows]
    for row in rows:
        for field in metric_fields:
            row.setdefault(field, None)
    output = format_report(rows, fmt=args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(output if output.endswith("\n") else output + "\n")
    elif args.format == "table":
        page_output(output)
    else:
        sys.stdout.write(output if output.endswith("\n") else output + "\n")
    if not all(ok for _, ok in results):
        return SystemExit(1)

parser = register_parser(compare)
parser.add_argument("--manifest", help="YAML corpus manifest")
parser.add_argument("--synthetic", nargs="+", metavar="NAME",
                    help="Bundled synthetic images to use instead of a manifest, or 'all' for every chromatic one")
add_tmo_args(parser, multiple=True)
add_gamma_args(parser)
parser.add_argument("--baseline", choices=["mantiuk"], help="Add rows for the Mantiuk color correction")
parser.add_argument("--format", choices=["json", "csv", "table"])
parser.add_argument("--out", help="Write the report to this file instead of standard output")
