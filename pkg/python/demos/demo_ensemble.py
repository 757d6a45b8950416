#! /usr/bin/env python

"""Compare a single model with weighted and majority voting ensembles over
repeated runs."""

import sys
import sslart

kind = sys.argv[1] if len(sys.argv) > 1 else 'xor'
dataset = sslart.make_synthetic(kind, 300, seed=0)

for voting in ('single', 'majority', 'weighted'):
    config = sslart.make_config({'voting': voting, 'members': 7, 'reps': 10,
        'rho': 0.9})
    results = sslart.repetitions(dataset, config)
    row = sslart.summary_row(results)
    print("%-9s accuracy %.3f [%.3f, %.3f]" % (voting, row['accuracy'],
        row['accuracy_lo'], row['accuracy_hi']))
