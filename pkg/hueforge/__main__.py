import argcomplete

from . import tonemap, compensate, metrics, compare, configure  # noqa
from . import main, parser

argcomplete.autocomplete(parser)
main()
