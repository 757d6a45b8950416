#! /usr/bin/env python

""" sslartbench, run a sweep of settings and write one row per run

Comma separated values of the sweep options, or arrays in the config file,
give the values of each axis of the grid.
"""

import sys
from sslart.cmd import SslArtArgumentParser, process_bench, run_process

def sslart_bench_parser():
    parser = SslArtArgumentParser(prog='sslartbench')
    parser.add_bench_options()
    parser.set_defaults(process=process_bench)
    return parser

def main(argv=None):
    parser = sslart_bench_parser()
    options = parser.parse_args(argv)
    if options.data2 is not None:
        options.data = options.data2
    if options.data is None and options.synthetic is None \
            and options.config is None:
        sys.stderr.write("Error: no data file given\n")
        parser.print_help()
        sys.exit(1)
    sys.exit(run_process(options))
