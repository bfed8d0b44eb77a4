import os, logging, concurrent.futures

from .tmo import operators, TmoConfig
from .reconstruction import ReconstructionConfig
from .baseline import MantiukConfig
from .tmqi import TmqiConfig
from .metrics import MetricsConfig
from .exceptions import UsageError

logger = logging.getLogger(__name__)

def worker_count():
    """Pool size from HUEFORGE_THREADS, or None for the executor default."""
    value = os.environ.get("HUEFORGE_THREADS")
    if not value:
        return None
    try:
        count = int(value)
    except ValueError:
        raise UsageError("HUEFORGE_THREADS must be a positive integer, got {!r}".format(value))
    if count < 1:
        raise UsageError("HUEFORGE_THREADS must be a positive integer, got {!r}".format(value))
    return count

def executor():
    return concurrent.futures.ThreadPoolExecutor(max_workers=worker_count())

def add_tmo_args(p, multiple=False):
    if multiple:
        p.add_argument("--tmo", nargs="+", choices=operators, help="Tone mapping operators to run")
    else:
        p.add_argument("--tmo", choices=operators, help="Tone mapping operator")
    p.add_argument("--alpha", type=float, help="Key value of the photographic operators")
    p.add_argument("--bias", type=float, help="Bias of the adaptive logarithmic operator")
    p.add_argument("--contrast", type=float, help="Target base contrast of the bilateral operator")

def add_gamma_args(p):
    p.add_argument("--gamma", type=float, help="Display gamma applied before quantization")
    p.add_argument("--no-gamma", action="store_true", help="Quantize linear values without gamma encoding")

def _section(name):
    from .. import config
    return dict(config.get(name, {}))

def _pick(section, fields):
    return {k: v for k, v in section.items() if k in fields}

def tmo_config(args, operator=None, overrides=None):
    """TmoConfig from the tone_mapping config section, per-operator overrides and command line flags."""
    settings = _pick(_section("tone_mapping"), TmoConfig._fields)
    settings.update(overrides or {})
    for flag, field in (("alpha", "key_value"), ("bias", "drago_bias"), ("contrast", "durand_contrast")):
        if getattr(args, flag, None) is not None:
            settings[field] = getattr(args, flag)
    settings["operator"] = operator or args.tmo
    return TmoConfig(**settings)

def reconstruction_config(args, record_prequant=False):
    gamma = None if getattr(args, "no_gamma", False) else getattr(args, "gamma", None)
    return ReconstructionConfig(gamma=gamma, record_prequant=record_prequant)

def mantiuk_config():
    return MantiukConfig(**_pick(_section("mantiuk"), MantiukConfig._fields))

def tmqi_config():
    settings = _pick(_section("tmqi"), TmqiConfig._fields)
    if "level_weights" in settings:
        settings["level_weights"] = tuple(settings["level_weights"])
    return TmqiConfig(**settings)

def metrics_config(args=None):
    settings = _pick(_section("metrics"), MetricsConfig._fields)
    if getattr(args, "hdr_encoding", None) is not None:
        settings["hdr_encoding"] = args.hdr_encoding
    return MetricsConfig(**settings)
