#! /usr/bin/env python

import os
import shutil
import tempfile

from numpy.testing import TestCase
import sslart.cmd
from sslart import load_model, ConfigError, EnsembleModel, SslArtModel
from sslart import EXIT_OK, EXIT_CONFIG, EXIT_DATA
from utils import write_csv_file, write_text_file

def run_main(argv):
    """ run sslart and return its exit status """
    try:
        sslart.cmd.main(argv)
    except SystemExit as e:
        return e.code
    raise AssertionError("sslart.cmd.main returned without exiting")

class sslart_cmd(TestCase):

    def setUp(self):
        self.a_parser = sslart.cmd.sslart_parser()

    def test_default_creation(self):
        try:
            assert self.a_parser.parse_args(['-V']).show_version
        except SystemExit:
            url = 'https://bugs.python.org/issue9253'
            self.skipTest('subcommand became optional in py3, see %s' % url)

    def test_train_options(self):
        args = self.a_parser.parse_args(['train', 'data.csv', '-r', '0.8',
            '--mapping', 'oto', '-T', '3', '-q'])
        assert args.data == 'data.csv'
        assert (args.rho, args.mapping, args.search_depth) == \
                ('0.8', 'oto', '3')
        assert args.verbose == 0

    def test_eval_many_models(self):
        args = self.a_parser.parse_args(['eval', 'test.csv', '-m', 'a.json',
            '-m', 'b.json'])
        assert args.model == ['a.json', 'b.json']

    def test_usage_error_status(self):
        with self.assertRaises(SystemExit) as cm:
            self.a_parser.parse_args(['predict', 'test.csv'])
        assert cm.exception.code == EXIT_CONFIG

    def test_no_class_vigilance_option(self):
        with self.assertRaises(SystemExit):
            self.a_parser.parse_args(['train', 'data.csv', '--rho-b', '0.3'])

class sslart_cmd_utils(TestCase):

    def setUp(self):
        self.a_parser = sslart.cmd.sslart_parser()

    def test_model_path(self):
        self.assertEqual(sslart.cmd.model_path('model.json', 3, 1),
                'model.json')
        self.assertEqual(sslart.cmd.model_path('model.json', 3, 10),
                'model-03.json')
        self.assertEqual(sslart.cmd.model_path('out/model', 12, 20),
                'out/model-12')

    def test_collect_settings(self):
        args = self.a_parser.parse_args(['train', '--synthetic', 'xor',
            '-r', '0.7', '-M', '3'])
        settings = sslart.cmd.collect_settings(args)
        assert settings == {'synthetic': 'xor', 'rho': '0.7', 'members': '3'}

    def test_collect_settings_no_list(self):
        args = self.a_parser.parse_args(['train', '-r', '0.5,0.7'])
        with self.assertRaises(ConfigError):
            sslart.cmd.collect_settings(args)

    def test_collect_settings_sweep(self):
        args = self.a_parser.parse_args(['bench', '-r', '0.5,0.7'])
        settings = sslart.cmd.collect_settings(args, sweep=True)
        assert settings['rho'] == [0.5, 0.7]

    def test_collect_settings_config_file(self):
        d = tempfile.mkdtemp()
        try:
            path = write_text_file(os.path.join(d, 'run.toml'),
                    'rho = 0.6\nmembers = 5\n')
            args = self.a_parser.parse_args(['train', '-c', path, '-M', '3'])
            settings = sslart.cmd.collect_settings(args)
            assert settings['rho'] == 0.6
            assert settings['members'] == '3'
        finally:
            shutil.rmtree(d)

class sslart_cmd_run(TestCase):

    def setUp(self):
        self.dir = tempfile.mkdtemp()
        self.model = os.path.join(self.dir, 'model.json')
        self.samples = write_csv_file(os.path.join(self.dir, 'samples.csv'),
                [[0.1, 0.1], [0.9, 0.1], [0.1, 0.9], [0.9, 0.9]])
        self.test = write_csv_file(os.path.join(self.dir, 'test.csv'),
                [[0.1, 0.1, 0], [0.9, 0.1, 1], [0.1, 0.9, 1], [0.9, 0.9, 0]])

    def tearDown(self):
        shutil.rmtree(self.dir)

    def path(self, name):
        return os.path.join(self.dir, name)

    def train(self, *options):
        argv = ['train', '--synthetic', 'xor', '--n-synthetic', '80',
                '-o', self.model, '-q'] + list(options)
        assert run_main(argv) == EXIT_OK

    def test_no_command(self):
        assert run_main([]) == EXIT_CONFIG

    def test_help(self):
        assert run_main(['help']) == EXIT_OK

    def test_version(self):
        assert run_main(['-V']) == EXIT_OK

    def test_train(self):
        self.train('-M', '3')
        model, metadata = load_model(self.model, with_metadata=True)
        assert isinstance(model, EnsembleModel)
        assert model.n_members == 3
        assert metadata['dataset'] == 'xor'
        assert metadata['config']['members'] == 3

    def test_train_repetitions(self):
        self.train('--voting', 'single', '--reps', '2')
        for run in (1, 2):
            model = load_model(self.path('model-%02d.json' % run))
            assert isinstance(model, SslArtModel)

    def test_predict(self):
        self.train('--voting', 'single')
        out = self.path('predictions.txt')
        assert run_main(['predict', self.samples, '-m', self.model,
            '-o', out, '-q']) == EXIT_OK
        with open(out) as f:
            lines = f.read().splitlines()
        assert len(lines) == 4
        assert all(line in ('', '0', '1') for line in lines)

    def test_eval_model(self):
        self.train('--voting', 'single')
        out = self.path('scores.csv')
        assert run_main(['eval', self.test, '-m', self.model, '-o', out,
            '-q']) == EXIT_OK
        with open(out) as f:
            lines = f.read().splitlines()
        assert lines[0].startswith('run,seed,rho')
        assert len(lines) == 2

    def test_eval_repetitions(self):
        out = self.path('scores.csv')
        assert run_main(['eval', '--synthetic', 'two-gaussians',
            '--n-synthetic', '60', '--voting', 'majority', '-M', '3',
            '--reps', '3', '-o', out, '-q']) == EXIT_OK
        with open(out) as f:
            lines = f.read().splitlines()
        assert len(lines) == 5
        assert lines[-1].startswith('summary,')

    def test_rules(self):
        self.train('--voting', 'single')
        out = self.path('rules.txt')
        assert run_main(['rules', '-m', self.model, '-Q', '3', '-o', out,
            '-q']) == EXIT_OK
        with open(out) as f:
            lines = f.read().splitlines()
        assert lines
        assert all(line.startswith('If ') for line in lines)

    def test_rules_csv_ensemble(self):
        self.train('-M', '2')
        out = self.path('rules.csv')
        assert run_main(['rules', '-m', self.model, '-f', 'csv', '-o', out,
            '-q']) == EXIT_OK
        with open(out) as f:
            lines = f.read().splitlines()
        assert lines[0].startswith('member,')
        assert {line.split(',')[0] for line in lines[1:]} <= {'1', '2'}

    def test_incremental(self):
        out = self.path('curve.csv')
        assert run_main(['incremental', '--synthetic', 'xor',
            '--n-synthetic', '100', '--voting', 'single', '--initial', '5',
            '--cohort', '5', '-o', out, '-q']) == EXIT_OK
        with open(out) as f:
            lines = f.read().splitlines()
        assert lines[0] == ','.join(sslart.INCREMENTAL_FIELDS)
        # 20 labeled samples learned in 4 steps
        assert len(lines) == 5

    def test_bad_setting(self):
        assert run_main(['train', '--synthetic', 'xor', '-r', '2',
            '-o', self.model, '-q']) == EXIT_CONFIG

    def test_missing_data_file(self):
        assert run_main(['train', self.path('missing.csv'), '-o', self.model,
            '-q']) == EXIT_DATA

    def test_bad_data_file(self):
        bad = write_text_file(self.path('bad.csv'), '0.1,0.2,a\n0.3,x,b\n')
        assert run_main(['train', bad, '-o', self.model, '-q']) == EXIT_DATA

    def test_corrupted_model(self):
        write_text_file(self.model, '{"format": ')
        assert run_main(['predict', self.samples, '-m', self.model,
            '-q']) == EXIT_DATA

    def test_wrong_dimension(self):
        self.train('--voting', 'single')
        wide = write_csv_file(self.path('wide.csv'),
                [[0.1, 0.2, 0.3, 0.4], [0.5, 0.6, 0.7, 0.8]])
        assert run_main(['predict', wide, '-m', self.model,
            '-q']) == EXIT_DATA

if __name__ == '__main__':
    from unittest import main
    main()
