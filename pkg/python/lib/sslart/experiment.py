# -*- coding: utf-8 -*-
""" run configurations, repeated hold-out runs, sweeps and learning curves

A run splits a dataset into labeled, unlabeled and test pools, optionally
corrupts the training pools, trains a single model or an ensemble and
scores it on the test pool. Every source of randomness of a run derives
from one integer seed, so that runs are reproducible one by one.
"""

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields, replace
from functools import partial
from typing import Optional

import numpy
import pandas

from .art import ArtParams
from .dataset import load_and_normalize, load_schema, make_synthetic
from .dataset import read_toml
from .ensemble import VOTING_RULES, train_ensemble, train_member
from .errors import ConfigError, SslArtError
from .mapfield import ArtmapModel
from .metrics import Metrics, bootstrap_ci, evaluate
from .noise import inject_feature_noise, inject_label_noise
from .semisup import SslArtModel
from .splitting import SplitSpec, split

__all__ = ['MAPPINGS', 'VOTING_MODES', 'SWEEP_KEYS', 'ROW_FIELDS',
           'INCREMENTAL_FIELDS', 'RunConfig', 'RunResult', 'config_row',
           'coerce_setting', 'read_config', 'make_config', 'expand_grid',
           'repetition_seeds', 'load_dataset', 'make_member', 'train_model',
           'run_once', 'repetitions', 'summary_row', 'sweep',
           'incremental_curve', 'write_rows']

MAPPINGS = ('otm', 'oto')
VOTING_MODES = VOTING_RULES + ('single',)

# settings that may hold a list of values in a sweep
SWEEP_KEYS = ('rho', 'members', 'mapping', 'voting', 'search_depth',
              'labeled_frac', 'label_noise', 'feature_noise', 'pretrain')

ROW_FIELDS = ('run', 'seed', 'rho', 'members', 'mapping', 'voting',
              'search_depth', 'labeled_frac', 'label_noise', 'feature_noise',
              'pretrain', 'coverage', 'correctness', 'accuracy',
              'sensitivity', 'specificity', 'f1', 'nodes_stage1',
              'nodes_stage2', 'nodes_labeled', 'wall_time', 'accuracy_lo',
              'accuracy_hi', 'error')

INCREMENTAL_FIELDS = ('step', 'n_labeled', 'coverage', 'correctness',
                      'accuracy', 'nodes_stage2', 'nodes_labeled')


@dataclass(frozen=True)
class RunConfig:
    """Every setting of a run.

    Defaults train a weighted ensemble of 7 one-to-many members with a
    vigilance of 0.9 and fast learning, on 25% of the training part with
    class ids and the remaining 75% without, testing on 20% of the data.
    With `voting='single'`, `members` is ignored.
    """
    data: Optional[str] = None
    schema: Optional[str] = None
    synthetic: Optional[str] = None
    n_synthetic: int = 400
    rho: float = 0.9
    alpha: float = 0.001
    beta: float = 1.
    delta: float = 0.001
    rho_b: float = 1.
    rho_ab: float = 0.95
    mapping: str = 'otm'
    voting: str = 'weighted'
    members: int = 7
    search_depth: Optional[int] = None
    quantization: int = 5
    test_frac: float = 0.2
    labeled_frac: float = 0.25
    unlabeled_frac: Optional[float] = None
    label_noise: float = 0.
    feature_noise: float = 0.
    snr: float = 10.
    pretrain: bool = True
    reps: int = 10
    seed: int = 0
    jobs: int = 1
    out: Optional[str] = None

    def __post_init__(self):
        if self.mapping not in MAPPINGS:
            raise ConfigError("mapping should be one of %s, got %r"
                              % ('|'.join(MAPPINGS), self.mapping))
        if self.voting not in VOTING_MODES:
            raise ConfigError("voting should be one of %s, got %r"
                              % ('|'.join(VOTING_MODES), self.voting))
        for name in ('members', 'reps', 'jobs', 'n_synthetic'):
            if getattr(self, name) < 1:
                raise ConfigError("%s should be 1 or more, got %r"
                                  % (name, getattr(self, name)))
        if self.search_depth is not None and self.search_depth < 1:
            raise ConfigError("search_depth should be 1 or more, got %r"
                              % self.search_depth)
        if self.quantization < 2:
            raise ConfigError("quantization should be 2 or more, got %r"
                              % self.quantization)
        for name in ('label_noise', 'feature_noise'):
            if not 0. <= getattr(self, name) <= 1.:
                raise ConfigError("%s should be in [0, 1], got %r"
                                  % (name, getattr(self, name)))
        if not self.snr > 0.:
            raise ConfigError("snr should be > 0, got %r" % self.snr)
        if self.rho_b != 1.:
            raise ConfigError("rho_b should be 1, got %r" % self.rho_b)
        if not 0. <= self.rho_ab <= 1.:
            raise ConfigError("rho_ab should be in [0, 1], got %r"
                              % self.rho_ab)
        if not self.delta > 0.:
            raise ConfigError("delta should be > 0, got %r" % self.delta)
        self.art_params()
        self.split_spec(self.seed)

    def art_params(self):
        return ArtParams(self.rho, self.alpha, self.beta)

    def split_spec(self, seed):
        return SplitSpec(self.test_frac, self.labeled_frac,
                         self.unlabeled_frac, seed)

    @property
    def n_members(self):
        return 1 if self.voting == 'single' else self.members

    def replace(self, **changes):
        return replace(self, **changes)


_fields = {f.name: f for f in fields(RunConfig)}


def coerce_setting(key, value):
    """Convert a TOML or command line `value` to the type of the setting
    `key`; `'all'` stands for an unbounded search depth."""
    if key not in _fields:
        raise ConfigError("unknown setting %r" % (key,))
    default = _fields[key].default
    if value is None:
        return None
    try:
        if key == 'search_depth':
            if isinstance(value, str) and value.strip().lower() == 'all':
                return None
            return int(value)
        if isinstance(default, bool):
            if isinstance(value, str):
                if value.strip().lower() not in ('true', 'false', '1', '0'):
                    raise ValueError(value)
                return value.strip().lower() in ('true', '1')
            return bool(value)
        if isinstance(default, int):
            return int(value)
        if isinstance(default, float) or key == 'unlabeled_frac':
            return float(value)
    except (TypeError, ValueError):
        raise ConfigError("invalid value %r for %s" % (value, key))
    return str(value)


def read_config(path):
    """Read run settings from a TOML file whose keys are the
    :class:`RunConfig` fields.

    Keys of :data:`SWEEP_KEYS` may hold arrays of values.

    Returns
    -------
    dict
        the settings, converted to their types
    """
    values = read_toml(path)
    settings = {}
    for key, value in values.items():
        if isinstance(value, list):
            if key not in SWEEP_KEYS:
                raise ConfigError("%s: %s can not hold a list" % (path, key))
            settings[key] = [coerce_setting(key, v) for v in value]
        else:
            settings[key] = coerce_setting(key, value)
    return settings


def make_config(settings=None, **overrides):
    """Build a :class:`RunConfig` from `settings`, then `overrides`.

    Raises
    ------
    ConfigError
        On unknown keys, invalid values or lists of values.
    """
    merged = dict(settings or {})
    merged.update(overrides)
    values = {}
    for key, value in merged.items():
        if isinstance(value, (list, tuple)):
            raise ConfigError("a single value expected for %s, got %r"
                              % (key, value))
        value = coerce_setting(key, value)
        # None keeps the default
        if value is not None or key == 'search_depth':
            values[key] = value
    return RunConfig(**values)


def expand_grid(settings):
    """Cartesian product of the list values of `settings`.

    Returns
    -------
    list of RunConfig
        one configuration per grid cell, the last key varying fastest
    """
    keys = [k for k in SWEEP_KEYS if isinstance(settings.get(k), (list, tuple))]
    fixed = {k: v for k, v in settings.items() if k not in keys}
    for k in keys:
        if not settings[k]:
            raise ConfigError("empty list of values for %s" % k)
    return [make_config(fixed, **dict(zip(keys, cell)))
            for cell in itertools.product(*[settings[k] for k in keys])]


def repetition_seeds(seed, reps):
    """Independent seeds of `reps` repetitions, derived from `seed`."""
    return [int(s.generate_state(1)[0])
            for s in numpy.random.SeedSequence(seed).spawn(reps)]


def _child_seeds(seed, n=4):
    return [int(s.generate_state(1)[0])
            for s in numpy.random.SeedSequence(seed).spawn(n)]


def load_dataset(config):
    """Dataset named by `config`: a file, or a synthetic set."""
    if config.data is not None:
        schema = load_schema(config.schema) if config.schema else None
        return load_and_normalize(config.data, schema)
    if config.synthetic is not None:
        return make_synthetic(config.synthetic, config.n_synthetic,
                              seed=config.seed)
    raise ConfigError("no dataset given, set data or synthetic")


def make_member(config, dim, classes):
    """Factory of new untrained models, as set by `config`."""
    if config.mapping == 'otm':
        return partial(SslArtModel, dim, classes, config.art_params(),
                       config.search_depth, config.rho_b)
    return partial(ArtmapModel, dim, classes, config.art_params(),
                   config.search_depth, config.rho_b, config.rho_ab,
                   config.delta)


def train_model(config, labeled, unlabeled, seed=0, jobs=1):
    """Train a single model or an ensemble on the given pools.

    The labeled and unlabeled samples are learned in an order shuffled by
    `seed`.
    """
    factory = make_member(config, labeled.dim, labeled.classes)
    X_u = unlabeled.X if unlabeled is not None else \
        numpy.zeros((0, labeled.dim))
    if config.voting == 'single':
        model, _, _ = train_member(factory, labeled.X, labeled.y, X_u, seed,
                                   validation_frac=0.,
                                   pretrain=config.pretrain)
        return model
    return train_ensemble(labeled.X, labeled.y, X_u, factory,
                          n_members=config.members, seed=seed,
                          voting=config.voting, pretrain=config.pretrain,
                          jobs=jobs)


@dataclass
class RunResult:
    """Outcome of one run."""
    run: int
    seed: int
    config: RunConfig
    metrics: Metrics
    wall_time: float
    model: object = field(default=None, repr=False)

    def row(self):
        m = self.metrics
        row = config_row(self.config, self.run, self.seed)
        row.update({'coverage': m.coverage, 'correctness': m.correctness,
                    'accuracy': m.accuracy, 'sensitivity': m.sensitivity,
                    'specificity': m.specificity, 'f1': m.f1,
                    'nodes_stage1': m.nodes_stage1,
                    'nodes_stage2': m.nodes_stage2,
                    'nodes_labeled': m.nodes_labeled,
                    'wall_time': round(self.wall_time, 6)})
        return row


def config_row(config, run, seed):
    """Settings part of a result row."""
    return {'run': run, 'seed': seed, 'rho': config.rho,
            'members': config.n_members, 'mapping': config.mapping,
            'voting': config.voting,
            'search_depth': 'all' if config.search_depth is None
            else config.search_depth,
            'labeled_frac': config.labeled_frac,
            'label_noise': config.label_noise,
            'feature_noise': config.feature_noise,
            'pretrain': config.pretrain}


def run_once(dataset, config, seed, run=0, keep_model=False):
    """Split, corrupt, train and score, all driven by `seed`.

    Returns
    -------
    RunResult
    """
    start = time.perf_counter()
    split_seed, label_seed, feature_seed, train_seed = _child_seeds(seed)
    labeled, unlabeled, test = split(dataset, config.split_spec(split_seed))
    if config.label_noise > 0.:
        labeled = inject_label_noise(labeled, config.label_noise, label_seed)
    if config.feature_noise > 0.:
        labeled = inject_feature_noise(labeled, config.feature_noise,
                                       config.snr, feature_seed)
        unlabeled = inject_feature_noise(unlabeled, config.feature_noise,
                                         config.snr, feature_seed + 1)
    model = train_model(config, labeled, unlabeled, train_seed)
    metrics = evaluate(model, test)
    return RunResult(run, seed, config, metrics,
                     time.perf_counter() - start,
                     model if keep_model else None)


def _run_task(args):
    return run_once(*args)


def _recorded_task(args):
    # a failing run of a sweep gives its error instead of a result
    try:
        return run_once(*args)
    except SslArtError as e:
        return e


def _map(tasks, jobs, func=_run_task):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            return list(executor.map(func, tasks))
    return [func(t) for t in tasks]


def repetitions(dataset, config, keep_model=False):
    """Run `config.reps` repetitions with seeds derived from `config.seed`.

    Repetitions run in `config.jobs` processes; results keep the order of
    the repetitions.
    """
    tasks = [(dataset, config, s, r, keep_model) for r, s in
             enumerate(repetition_seeds(config.seed, config.reps), 1)]
    return _map(tasks, config.jobs)


def summary_row(results, level=0.95, resamples=10000):
    """Row holding the mean accuracy of `results` and its bootstrap
    interval, the other scores averaged."""
    rows = [r.row() for r in results]
    row = dict(rows[0])
    row.update(run='summary', seed=results[0].config.seed)
    for key in ('coverage', 'correctness', 'accuracy', 'sensitivity',
                'specificity', 'f1', 'nodes_stage1', 'nodes_stage2',
                'nodes_labeled', 'wall_time'):
        row[key] = float(numpy.mean([r[key] for r in rows]))
    accuracies = [r.metrics.accuracy for r in results]
    if len(accuracies) > 1:
        mean, lo, hi = bootstrap_ci(accuracies, level, resamples,
                                    results[0].config.seed)
    else:
        mean = lo = hi = accuracies[0]
    row.update(accuracy=mean, accuracy_lo=lo, accuracy_hi=hi)
    return row


def sweep(dataset, configs, jobs=1):
    """Run every configuration of a grid, all repetitions included.

    A failing run does not stop the sweep: its row holds the error.

    Returns
    -------
    list of dict
        one row per run, followed by one summary row per grid cell, in
        grid order
    """
    tasks, cells = [], []
    for config in configs:
        seeds = repetition_seeds(config.seed, config.reps)
        cells.append(len(seeds))
        tasks.extend((dataset, config, s, r, False)
                     for r, s in enumerate(seeds, 1))
    results = _map(tasks, jobs, _recorded_task)
    rows, start = [], 0
    for n in cells:
        done = []
        for task, result in zip(tasks[start:start + n],
                                results[start:start + n]):
            if isinstance(result, Exception):
                row = config_row(task[1], task[3], task[2])
                row['error'] = str(result)
                rows.append(row)
            else:
                done.append(result)
                rows.append(result.row())
        if done:
            rows.append(summary_row(done))
        else:
            config = tasks[start][1]
            row = config_row(config, 'summary', config.seed)
            row['error'] = 'every run failed'
            rows.append(row)
        start += n
    return rows


def incremental_curve(dataset, config, initial, cohort, seed=None):
    """Accuracy as labeled samples keep arriving.

    The dataset is split once. The model learns the unlabeled pool and the
    first `initial` labeled samples, then each further cohort of `cohort`
    labeled samples; the labels are finalized and the test pool scored
    after each step.

    Returns
    -------
    list of dict
        one row per step: `step`, `n_labeled` samples learned so far and
        the scores of the model
    """
    if initial < 1 or cohort < 1:
        raise ConfigError("initial and cohort sizes should be 1 or more")
    seed = config.seed if seed is None else seed
    split_seed, order_seed, train_seed, _ = _child_seeds(seed)
    labeled, unlabeled, test = split(dataset, config.split_spec(split_seed))
    order = numpy.random.default_rng(order_seed).permutation(len(labeled))
    first = labeled.subset(order[:initial])
    model = train_model(config, first, unlabeled, train_seed)
    rows = []

    def _record(step, seen):
        m = evaluate(model, test)
        rows.append({'step': step, 'n_labeled': seen,
                     'coverage': m.coverage, 'correctness': m.correctness,
                     'accuracy': m.accuracy,
                     'nodes_stage2': m.nodes_stage2,
                     'nodes_labeled': m.nodes_labeled})

    seen = len(first)
    _record(0, seen)
    for step, begin in enumerate(range(initial, len(labeled), cohort), 1):
        batch = labeled.subset(order[begin:begin + cohort])
        if hasattr(model, 'partial_fit'):
            model.partial_fit(batch.X, batch.y)
        else:
            for x, y in batch.pairs():
                model.train_labeled(x, y)
            model.finalize_labels()
        seen += len(batch)
        _record(step, seen)
    return rows


def _cell(value):
    if isinstance(value, float):
        return repr(value)
    return value


def write_rows(rows, fileobj, fieldnames=ROW_FIELDS):
    """Write `rows` as comma separated values, with a header line.

    Keys outside `fieldnames` are dropped, missing ones left empty.
    """
    records = [{k: _cell(v) for k, v in row.items()} for row in rows]
    frame = pandas.DataFrame(records, columns=list(fieldnames), dtype=object)
    frame.to_csv(fileobj, index=False, lineterminator='\n')
