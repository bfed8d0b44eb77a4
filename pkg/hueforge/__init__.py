"""
HDR tone mapping with hue compensation on the constant-hue plane

For help with individual commands, run ``hueforge <command> --help``.
"""

import os, sys, argparse, logging, shutil, json, datetime, traceback, platform
from textwrap import fill

import tweak

from .util.exceptions import HueforgeException
from .version import __version__

logger = logging.getLogger(__name__)

config, parser = None, None
_subparsers = {}

class HueforgeConfig(tweak.Config):
    """Packaged defaults, then /etc/hueforge/config.yml, then the user file(s)."""
    base_config_file = os.path.join(os.path.dirname(__file__), "base_config.yml")

    @property
    def config_files(self):
        return [self.base_config_file] + tweak.Config.config_files.fget(self)

    @property
    def user_config_file(self):
        return self.config_files[2]

    @property
    def user_config_dir(self):
        return os.path.join(self._user_config_home, self._name)

class HueforgeHelpFormatter(argparse.RawTextHelpFormatter):
    def _get_help_string(self, action):
        default = _get_config_for_prog(self._prog).get(action.dest)
        if action.help and default is not None and not isinstance(default, (list, dict)):
            return "{} (default: {})".format(action.help, default)
        return action.help

def _load_config():
    loaded = HueforgeConfig(__name__, use_yaml=True, save_on_exit=False)
    if os.path.exists(loaded.user_config_file):
        return loaded
    os.makedirs(os.path.dirname(os.path.abspath(loaded.user_config_file)), exist_ok=True)
    shutil.copy(os.path.join(os.path.dirname(__file__), "user_config.yml"), loaded.user_config_file)
    logger.info("Wrote new config file %s with default values", loaded.user_config_file)
    return HueforgeConfig(__name__, use_yaml=True, save_on_exit=False)

def initialize():
    global config, parser
    from .util.printing import BOLD, ENDC
    config = _load_config()
    title = BOLD() + __name__.capitalize() + ENDC()
    parser = argparse.ArgumentParser(description="{}: {}".format(title, fill(__doc__.strip())),
                                     formatter_class=HueforgeHelpFormatter)
    runtime = " ".join([platform.python_implementation(), platform.python_version()])
    parser.add_argument("--version", action="version",
                        version="%(prog)s {}\n{}\n{}".format(__version__, runtime, platform.platform()))

    def help(args):
        parser.print_help()
    register_parser(help)

def _record_crash():
    """Append the current traceback to error.log in the user config directory."""
    try:
        crash_log = os.path.join(config.user_config_dir, "error.log")
        with open(crash_log, "a") as fh:
            fh.write("{}\n{}\n".format(datetime.datetime.now().isoformat(), traceback.format_exc()))
        print("See {} for error details.".format(crash_log), file=sys.stderr)
    except Exception:
        print(traceback.format_exc(), file=sys.stderr)

def main(args=None):
    parsed_args = parser.parse_args(args=args)
    if not hasattr(parsed_args, "entry_point"):
        parser.print_help(sys.stderr)
        sys.exit(2)
    logging.basicConfig(format="%(levelname)s:%(name)s:%(message)s")
    logger.setLevel(parsed_args.log_level)
    try:
        result = parsed_args.entry_point(parsed_args)
    except Exception as e:
        if logger.level <= logging.DEBUG:
            raise
        if not isinstance(e, (HueforgeException, EnvironmentError)):
            _record_crash()
        print("{}: {}".format(type(e).__name__, e), file=sys.stderr)
        sys.exit(e.exit_code if isinstance(e, HueforgeException) else 1)
    if isinstance(result, SystemExit):
        raise result
    if result is not None:
        print(json.dumps(result, indent=2, sort_keys=True, default=str))

def _get_config_for_prog(prog):
    """Config section for a parser's prog string: ``hueforge configure get`` reads section ``configure_get``."""
    command = prog.split(" ", 1)[-1]
    return config.get(command.replace("-", "_").replace(" ", "_"), {})

log_levels = [logging.getLevelName(level) for level in range(logging.DEBUG, logging.CRITICAL + 1, 10)]

def register_parser(function, parent=None, name=None, **add_parser_args):
    """
    Add a sub-command running ``function(args)``. Its help text defaults to the first line of the function's or
    its module's docstring, and its argument defaults come from the command's config section.
    """
    if config is None:
        initialize()
    parent = parent or parser
    if parent.prog not in _subparsers:
        _subparsers[parent.prog] = parent.add_subparsers()
    add_parser_args.setdefault("description", add_parser_args.get("help") or function.__doc__
                               or sys.modules[function.__module__].__doc__)
    if add_parser_args["description"]:
        add_parser_args.setdefault("help", add_parser_args["description"].strip().splitlines()[0].rstrip("."))
    add_parser_args.setdefault("formatter_class", HueforgeHelpFormatter)
    subparser = _subparsers[parent.prog].add_parser((name or function.__name__).replace("_", "-"), **add_parser_args)
    subparser.add_argument("--log-level", default=config.get("log_level"), choices=log_levels,
                           help=str(log_levels))
    subparser.set_defaults(entry_point=function, **_get_config_for_prog(subparser.prog))
    return subparser
