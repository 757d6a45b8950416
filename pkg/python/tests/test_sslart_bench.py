#! /usr/bin/env python

import os
import shutil
import tempfile

import sslart.bench
from numpy.testing import TestCase

class sslart_bench(TestCase):

    def setUp(self):
        self.a_parser = sslart.bench.sslart_bench_parser()

    def test_default_creation(self):
        assert self.a_parser.parse_args(['-v']).verbose

    def test_sweep_options(self):
        args = self.a_parser.parse_args(['--synthetic', 'rings',
            '-r', '0.5,0.9', '--mapping', 'otm,oto'])
        assert args.rho == '0.5,0.9'
        assert args.process is sslart.cmd.process_bench

class sslart_bench_run(TestCase):

    def setUp(self):
        self.dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.dir)

    def test_no_data(self):
        with self.assertRaises(SystemExit) as cm:
            sslart.bench.main(['-q'])
        assert cm.exception.code == 1

    def test_grid(self):
        out = os.path.join(self.dir, 'sweep.csv')
        with self.assertRaises(SystemExit) as cm:
            sslart.bench.main(['--synthetic', 'two-gaussians',
                '--n-synthetic', '60', '--voting', 'single', '--reps', '2',
                '-r', '0.5,0.9', '--mapping', 'otm,oto', '-o', out, '-q'])
        assert cm.exception.code == 0
        with open(out) as f:
            lines = f.read().splitlines()
        # header, then 2 runs and a summary per grid cell
        assert len(lines) == 1 + 4 * 3
        assert [l.split(',')[0] for l in lines[1:4]] == ['1', '2', 'summary']

    def test_list_not_sweepable(self):
        with self.assertRaises(SystemExit) as cm:
            sslart.bench.main(['--synthetic', 'xor', '-s', '1,2', '-q'])
        assert cm.exception.code == 1

if __name__ == '__main__':
    from unittest import main
    main()
