"""
List, read, and write hueforge configuration parameters.

Keys are dotted paths into the merged configuration, e.g. ``tonemap.tmo`` or ``tmqi.window_size``. ``set`` writes
to the user config file only; the packaged and system-wide files are never modified.
"""

import json

from . import register_parser
from .util.exceptions import UsageError
from .util.printing import page_output, format_table

def configure(args):
    configure_parser.print_help()

configure_parser = register_parser(configure)

def flatten(section, prefix=""):
    for key in sorted(section):
        value = section[key]
        if hasattr(value, "items"):
            for item in flatten(value, prefix + key + "."):
                yield item
        else:
            yield prefix + key, value

def lookup(section, key):
    for part in key.split("."):
        if not hasattr(section, "items") or part not in section:
            raise UsageError("Unknown configuration key {}".format(key))
        section = section[part]
    return section

def ls(args):
    """List all configuration parameters and their values"""
    from . import config
    page_output(format_table([[key, repr(value)] for key, value in flatten(config)], column_names=["Key", "Value"]))

ls_parser = register_parser(ls, parent=configure_parser)

def get(args):
    """Get a configuration parameter by dotted name"""
    from . import config
    print(json.dumps(lookup(config, args.key)))

get_parser = register_parser(get, parent=configure_parser)
get_parser.add_argument("key")

def set(args):
    """Set a configuration parameter in the user config file"""
    from . import config, tweak

    class UserConfig(tweak.Config):
        @property
        def config_files(self):
            return [config.config_files[2]]

    user_config = UserConfig(use_yaml=True, save_on_exit=False)
    *parents, name = args.key.split(".")
    section = user_config
    for part in parents:
        if part not in section:
            section[part] = {}
        section = section[part]
    try:
        section[name] = json.loads(args.value) if args.json else args.value
    except ValueError:
        raise UsageError("Value {!r} is not valid JSON".format(args.value))
    user_config.save()

set_parser = register_parser(set, parent=configure_parser)
set_parser.add_argument("key")
set_parser.add_argument("value")
set_parser.add_argument("--json", action="store_true", help="Parse the value as JSON")
