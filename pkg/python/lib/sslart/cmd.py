#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""sslart command line tool

Note: this script is mostly about parsing command line arguments. For more
readable code examples, check out the `python/demos` folder."""

import sys
import argparse
import warnings
from dataclasses import asdict, replace

import pandas

import sslart
from .dataset import Schema, load_and_normalize, read_frame
from .errors import ConfigError, DataError, SslArtError, SslArtWarning
from .errors import EXIT_CONFIG, EXIT_OK, exit_code
from .experiment import INCREMENTAL_FIELDS, SWEEP_KEYS, RunConfig, RunResult
from .experiment import coerce_setting, expand_grid, incremental_curve
from .experiment import load_dataset, make_config, read_config
from .experiment import repetition_seeds, repetitions, run_once, summary_row
from .experiment import sweep, write_rows
from .metrics import evaluate
from .persist import load_model, save_model
from .rules import extract_rules, render_rules, rules_table
from .rules import write_rules_table

_config_fields = [name for name in RunConfig.__dataclass_fields__]


def sslart_parser():
    epilog = 'use "%(prog)s <command> --help" for more info about each command'
    parser = SslArtArgumentParser(epilog=epilog)
    parser.add_argument('-V', '--version', help="show version",
            action="store_true", dest="show_version")

    subparsers = parser.add_subparsers(title='commands', dest='command',
            parser_class=SslArtArgumentParser,
            metavar="")

    parser_add_subcommand_help(subparsers)

    parser_add_subcommand_train(subparsers)
    parser_add_subcommand_predict(subparsers)
    parser_add_subcommand_eval(subparsers)
    parser_add_subcommand_rules(subparsers)
    parser_add_subcommand_bench(subparsers)
    parser_add_subcommand_incremental(subparsers)

    return parser

def parser_add_subcommand_help(subparsers):
    # global help subcommand
    subparsers.add_parser('help',
            help='show help message',
            formatter_class=argparse.ArgumentDefaultsHelpFormatter)

def parser_add_subcommand_train(subparsers):
    # train subcommand
    subparser = subparsers.add_parser('train',
            help='train a model and save it')
    subparser.add_input()
    subparser.add_config()
    subparser.add_model_options()
    subparser.add_split_options()
    subparser.add_noise_options()
    subparser.add_run_options(out_help="model file to write; with several"
            " repetitions, the run number is added to its name"
            " [default=sslart-model.json]")
    subparser.add_verbose_help()
    subparser.set_defaults(process=process_train)

def parser_add_subcommand_predict(subparsers):
    # predict subcommand
    subparser = subparsers.add_parser('predict',
            help='predict the class of each row of a file')
    subparser.add_input(helpstr="file of samples to classify")
    subparser.add_model_file()
    subparser.add_search_depth()
    subparser.add_out()
    subparser.add_verbose_help()
    subparser.set_defaults(process=process_predict)

def parser_add_subcommand_eval(subparsers):
    # eval subcommand
    subparser = subparsers.add_parser('eval',
            help='score saved models on a test file, or run repetitions')
    subparser.add_input()
    subparser.add_model_file(multiple=True, required=False)
    subparser.add_config()
    subparser.add_model_options()
    subparser.add_split_options()
    subparser.add_noise_options()
    subparser.add_run_options()
    subparser.add_verbose_help()
    subparser.set_defaults(process=process_eval)

def parser_add_subcommand_rules(subparsers):
    # rules subcommand
    subparser = subparsers.add_parser('rules',
            help='extract fuzzy if-then rules from a saved model')
    subparser.add_model_file()
    subparser.add_quantization()
    subparser.add_argument("-n", "--names",
            metavar="<names_file>", dest="names", default=None,
            help="file holding one feature name per line")
    subparser.add_argument("-f", "--format",
            metavar="<format>", dest="format", default="text",
            choices=("text", "csv"),
            help="output format, text or csv [default=text]")
    subparser.add_out()
    subparser.add_verbose_help()
    subparser.set_defaults(process=process_rules)

def parser_add_subcommand_bench(subparsers):
    # bench subcommand
    subparser = subparsers.add_parser('bench',
            help='run a sweep over a grid of settings')
    subparser.add_bench_options()
    subparser.set_defaults(process=process_bench)

def parser_add_subcommand_incremental(subparsers):
    # incremental subcommand
    subparser = subparsers.add_parser('incremental',
            help='learning curve as labeled samples keep arriving')
    subparser.add_input()
    subparser.add_config()
    subparser.add_model_options()
    subparser.add_split_options()
    subparser.add_argument("--initial", type=int,
            metavar="<count>", dest="initial", default=10,
            help="labeled samples learned first [default=10]")
    subparser.add_argument("--cohort", type=int,
            metavar="<count>", dest="cohort", default=10,
            help="labeled samples added at each step [default=10]")
    subparser.add_run_options()
    subparser.add_verbose_help()
    subparser.set_defaults(process=process_incremental)

class SslArtArgumentParser(argparse.ArgumentParser):

    def error(self, message):
        # usage errors share the exit status of configuration errors
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, '%s: error: %s\n' % (self.prog, message))

    def add_input(self, helpstr="delimited text file of samples"):
        self.add_argument("data", default=None, nargs='?',
                help=helpstr, metavar="<data>")
        self.add_argument("-i", "--input", dest="data2",
                help=helpstr, metavar="<data>")
        self.add_argument("--schema",
                metavar="<schema_file>", dest="schema", default=None,
                help="TOML file describing the columns of the data file")
        self.add_argument("--synthetic",
                metavar="<kind>", dest="synthetic", default=None,
                help="use a generated dataset instead of a file,"
                " two-gaussians|rings|xor")
        self.add_argument("--n-synthetic",
                metavar="<count>", dest="n_synthetic", default=None,
                help="number of generated samples [default=400]")

    def add_config(self):
        self.add_argument("-c", "--config",
                metavar="<config_file>", dest="config", default=None,
                help="TOML file of settings, overridden by flags")

    def add_verbose_help(self):
        self.add_argument("-v", "--verbose",
                action="count", dest="verbose", default=1,
                help="make lots of noise [default]")
        self.add_argument("-q", "--quiet",
                action="store_const", dest="verbose", const=0,
                help="be quiet")

    def add_art_params(self):
        self.add_argument("-r", "--rho",
                metavar="<rho>", dest="rho", default=None,
                help="vigilance of the input network [default=0.9]")
        self.add_argument("--alpha",
                metavar="<alpha>", dest="alpha", default=None,
                help="choice parameter [default=0.001]")
        self.add_argument("--beta",
                metavar="<beta>", dest="beta", default=None,
                help="learning rate, 1 for fast learning [default=1]")
        self.add_argument("--delta",
                metavar="<delta>", dest="delta", default=None,
                help="match tracking increment [default=0.001]")
        self.add_argument("--rho-ab",
                metavar="<rho_ab>", dest="rho_ab", default=None,
                help="map field vigilance, one-to-one mapping only"
                " [default=0.95]")

    def add_search_depth(self):
        self.add_argument("-T", "--search-depth",
                metavar="<depth>", dest="search_depth", default=None,
                help="number of best nodes searched for a label, or all"
                " [default=all]")

    def add_model_options(self):
        self.add_art_params()
        self.add_argument("--mapping",
                metavar="<mapping>", dest="mapping", default=None,
                help="class mapping, otm or oto [default=otm]")
        self.add_argument("--voting",
                metavar="<voting>", dest="voting", default=None,
                help="weighted, majority or single [default=weighted]")
        self.add_argument("-M", "--members",
                metavar="<count>", dest="members", default=None,
                help="number of ensemble members [default=7]")
        self.add_search_depth()
        self.add_argument("--no-pretrain",
                action="store_const", dest="pretrain", const=False,
                default=None,
                help="skip learning the unlabeled samples")

    def add_quantization(self):
        self.add_argument("-Q", "--quantization",
                metavar="<levels>", dest="quantization", default=None,
                help="number of levels of the rule antecedents [default=5]")

    def add_split_options(self):
        self.add_argument("--test-frac",
                metavar="<frac>", dest="test_frac", default=None,
                help="fraction of the data kept for testing [default=0.2]")
        self.add_argument("--labeled-frac",
                metavar="<frac>", dest="labeled_frac", default=None,
                help="fraction of the training data with class ids"
                " [default=0.25]")
        self.add_argument("--unlabeled-frac",
                metavar="<frac>", dest="unlabeled_frac", default=None,
                help="fraction of the training data without class ids"
                " [default=the rest]")

    def add_noise_options(self):
        self.add_argument("--label-noise",
                metavar="<frac>", dest="label_noise", default=None,
                help="fraction of labeled samples with a switched class"
                " [default=0]")
        self.add_argument("--feature-noise",
                metavar="<frac>", dest="feature_noise", default=None,
                help="fraction of training samples with noisy features"
                " [default=0]")
        self.add_argument("--snr",
                metavar="<snr>", dest="snr", default=None,
                help="signal to noise ratio of the feature noise"
                " [default=10]")

    def add_out(self, helpstr="output file [default=stdout]"):
        self.add_argument("-o", "--out",
                metavar="<output>", dest="out", default=None,
                help=helpstr)

    def add_run_options(self, out_help="output file [default=stdout]"):
        self.add_argument("-s", "--seed",
                metavar="<seed>", dest="seed", default=None,
                help="master seed [default=0]")
        self.add_argument("--reps", "--repetitions",
                metavar="<count>", dest="reps", default=None,
                help="number of repetitions [default=10]")
        self.add_argument("-j", "--jobs",
                metavar="<count>", dest="jobs", default=None,
                help="number of worker processes [default=1]")
        self.add_out(out_help)

    def add_model_file(self, multiple=False, required=True):
        if multiple:
            self.add_argument("-m", "--model",
                    metavar="<model_file>", dest="model", default=None,
                    action="append", required=required,
                    help="saved model, may be repeated")
        else:
            self.add_argument("-m", "--model",
                    metavar="<model_file>", dest="model", default=None,
                    required=required, help="saved model")

    def add_bench_options(self):
        self.add_input()
        self.add_config()
        self.add_model_options()
        self.add_split_options()
        self.add_noise_options()
        self.add_run_options()
        self.add_verbose_help()

# some utilities

def collect_settings(args, sweep=False):
    """Settings of the config file, if any, then of the flags.

    With `sweep`, comma separated flag values give lists of values.
    """
    settings = read_config(args.config) if getattr(args, 'config', None) \
        else {}
    for key in _config_fields:
        value = getattr(args, key, None)
        if value is None:
            continue
        if isinstance(value, str) and ',' in value:
            if not sweep or key not in SWEEP_KEYS:
                raise ConfigError("%s takes a single value, got %r"
                                  % (key, value))
            settings[key] = [coerce_setting(key, v) for v in value.split(',')]
        else:
            settings[key] = value
    return settings

def model_path(out, run, reps):
    # sslart-model.json -> sslart-model-03.json
    if reps == 1:
        return out
    base, dot, ext = out.rpartition('.')
    if not dot or '/' in ext:
        return '%s-%02d' % (out, run)
    return '%s-%02d.%s' % (base, run, ext)

def open_output(path):
    if path is None or path == '-':
        return sys.stdout
    return open(path, 'w', newline='')

def load_for_model(path, model, metadata):
    """Read the samples of `path` scaled as the training data of `model`."""
    frame = read_frame(path)
    if frame.empty:
        raise DataError("%s: no data" % path)
    schema = Schema()
    if frame.shape[1] == model.dim:
        schema = Schema(class_column=None)
    schema = replace(schema, classes=model.classes)
    ranges = metadata.get('ranges')
    dataset = load_and_normalize(path, schema, ranges)
    if dataset.dim != model.dim:
        raise DataError("%s: %d features, the model expects %d"
                        % (path, dataset.dim, model.dim))
    return dataset

def node_counts_info(model):
    members = getattr(model, 'members', [model])
    parts = ["%d/%d/%d" % (m.n_stage1, m.n_committed, m.n_labeled)
             for m in members]
    return "nodes (stage 1/stage 2/labeled): " + ' '.join(parts)

# definition of processing classes

class default_process(object):
    sweep = False
    def __init__(self, args):
        self.args = args
        self.verbose = args.verbose
        if getattr(args, 'data2', None) is not None:
            args.data = args.data2
        self.settings = collect_settings(args, self.sweep)
        if args.verbose > 2:
            name = type(self).__name__.split('_')[1]
            optstr = ' '.join(['running', name, 'with settings',
                repr(self.settings), '\n'])
            sys.stderr.write(optstr)

    def info(self, msg, level=1):
        if self.verbose >= level:
            sys.stderr.write(msg + '\n')

    def run(self):
        raise NotImplementedError

class process_train(default_process):
    def __init__(self, args):
        super(process_train, self).__init__(args)
        self.settings.setdefault('reps', 1)
        self.config = make_config(self.settings)

    def run(self):
        config = self.config
        dataset = load_dataset(config)
        out = config.out or 'sslart-model.json'
        seeds = repetition_seeds(config.seed, config.reps)
        for run, seed in enumerate(seeds, 1):
            self.info("run %d with seed %d" % (run, seed), 2)
            result = run_once(dataset, config, seed, run, keep_model=True)
            metadata = {'dataset': dataset.name,
                        'feature_names': dataset.feature_names,
                        'run': run, 'seed': seed,
                        'config': asdict(config)}
            if dataset.ranges is not None:
                metadata['ranges'] = [r.tolist() for r in dataset.ranges]
            path = model_path(out, run, config.reps)
            save_model(result.model, path, metadata)
            self.info("%s: %s, test accuracy %.4f" % (path,
                node_counts_info(result.model), result.metrics.accuracy))

class process_predict(default_process):
    def run(self):
        args = self.args
        if args.data is None:
            raise ConfigError("a file of samples is required")
        model, metadata = load_model(args.model, with_metadata=True)
        dataset = load_for_model(args.data, model, metadata)
        depth = coerce_setting('search_depth', args.search_depth)
        predictions = model.predict_many(dataset.X, depth)
        f = open_output(args.out)
        try:
            for p in predictions:
                f.write(('' if p.label is None else model.classes[p.label])
                        + '\n')
        finally:
            if f is not sys.stdout:
                f.close()
        abstained = sum(p.label is None for p in predictions)
        self.info("%d samples, %d without prediction"
                  % (len(predictions), abstained))

class process_eval(default_process):
    def run(self):
        if self.args.model:
            rows = self.eval_models()
        else:
            config = make_config(self.settings)
            dataset = load_dataset(config)
            results = repetitions(dataset, config)
            rows = [r.row() for r in results] + [summary_row(results)]
        f = open_output(self.settings.get('out'))
        try:
            write_rows(rows, f)
        finally:
            if f is not sys.stdout:
                f.close()
        self.info("mean accuracy %.4f [%.4f, %.4f]" % (rows[-1]['accuracy'],
            rows[-1].get('accuracy_lo', rows[-1]['accuracy']),
            rows[-1].get('accuracy_hi', rows[-1]['accuracy'])))

    def eval_models(self):
        if self.args.data is None:
            raise ConfigError("a test file is required with --model")
        depth = coerce_setting('search_depth', self.args.search_depth)
        results = []
        for run, path in enumerate(self.args.model, 1):
            model, metadata = load_model(path, with_metadata=True)
            dataset = load_for_model(self.args.data, model, metadata)
            if dataset.y is None:
                raise DataError("%s: no class column" % self.args.data)
            settings = dict(metadata.get('config') or {})
            settings['search_depth'] = depth if depth is not None \
                else model_depth(model)
            config = make_config(settings)
            self.info("%s: %s" % (path, node_counts_info(model)), 2)
            metrics = evaluate(model, dataset, depth)
            results.append(RunResult(run, metadata.get('seed', 0), config,
                                     metrics, 0.))
        rows = [r.row() for r in results]
        if len(results) > 1:
            rows.append(summary_row(results))
        return rows

def model_depth(model):
    members = getattr(model, 'members', [model])
    return members[0].search_depth

class process_rules(default_process):
    def run(self):
        args = self.args
        levels = coerce_setting('quantization',
                                self.settings.get('quantization', 5))
        if levels < 2:
            raise ConfigError("2 or more quantization levels expected, got %d"
                              % levels)
        model, metadata = load_model(args.model, with_metadata=True)
        names = metadata.get('feature_names')
        if args.names is not None:
            with open(args.names) as f:
                names = [line.strip() for line in f if line.strip()]
        members = getattr(model, 'members', [model])
        f = open_output(args.out)
        try:
            for m, member in enumerate(members, 1):
                rules = extract_rules(member, levels)
                if len(members) > 1 and args.format == 'text':
                    f.write("# member %d\n" % m)
                if args.format == 'text':
                    text = render_rules(rules, names,
                                        class_names=model.classes)
                    f.write(text + ('\n' if text else ''))
                elif len(members) == 1:
                    write_rules_table(rules, f, names, model.classes)
                else:
                    table = rules_table(rules, names, model.classes)
                    write_member_table(f, m, table, header=m == 1)
                self.info("member %d: %d rules" % (m, len(rules)), 2)
        finally:
            if f is not sys.stdout:
                f.close()

def write_member_table(f, member, table, header=True):
    if not table:
        return
    frame = pandas.DataFrame(table[1:], columns=table[0])
    frame.insert(0, 'member', member, allow_duplicates=True)
    frame.to_csv(f, index=False, header=header, lineterminator='\n')

class process_bench(default_process):
    sweep = True
    def run(self):
        configs = expand_grid(self.settings)
        base = configs[0]
        dataset = load_dataset(base)
        self.info("%d grid cells of %d runs on %r" % (len(configs), base.reps,
            dataset.name))
        rows = sweep(dataset, configs, base.jobs)
        f = open_output(base.out)
        try:
            write_rows(rows, f)
        finally:
            if f is not sys.stdout:
                f.close()
        failed = sum(1 for r in rows if r.get('error') and r['run'] != 'summary')
        if failed:
            self.info("%d runs failed" % failed)

class process_incremental(default_process):
    def run(self):
        config = make_config(self.settings)
        dataset = load_dataset(config)
        rows = incremental_curve(dataset, config, self.args.initial,
                                 self.args.cohort)
        f = open_output(config.out)
        try:
            write_rows(rows, f, INCREMENTAL_FIELDS)
        finally:
            if f is not sys.stdout:
                f.close()
        self.info("%d steps, final accuracy %.4f" % (len(rows),
            rows[-1]['accuracy']))

def run_process(args):
    """Run the subcommand of `args` and return the exit status."""
    if args.verbose == 0:
        warnings.simplefilter('ignore', SslArtWarning)
    try:
        processor = args.process(args)
        processor.run()
    except KeyboardInterrupt:
        return EXIT_CONFIG
    except (SslArtError, OSError, AssertionError) as e:
        sys.stderr.write("sslart: error: %s\n" % e)
        return exit_code(e)
    return EXIT_OK

def main(argv=None):
    parser = sslart_parser()
    args = parser.parse_args(argv)
    if 'show_version' in args and args.show_version:
        sys.stdout.write('sslart version ' + sslart.version + '\n')
        sys.exit(EXIT_OK)
    elif 'verbose' in args and args.verbose > 3:
        sys.stderr.write('sslart version ' + sslart.version + '\n')
    if 'command' not in args or args.command is None \
            or args.command in ['help']:
        # no command given, print help and return 1
        parser.print_help()
        if args.command and args.command in ['help']:
            sys.exit(EXIT_OK)
        else:
            sys.exit(EXIT_CONFIG)
    sys.exit(run_process(args))
