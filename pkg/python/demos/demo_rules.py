#! /usr/bin/env python

"""Read fuzzy if-then rules out of a model trained on a csv file.

The last column of the file holds the classes.
"""

import sys
import sslart

if len(sys.argv) < 2:
    print("Usage: %s <data.csv> [levels]" % sys.argv[0])
    sys.exit(1)

levels = int(sys.argv[2]) if len(sys.argv) > 2 else 5

dataset = sslart.load_and_normalize(sys.argv[1])
model = sslart.SslArtModel(dataset.dim, dataset.classes,
        sslart.ArtParams(rho=0.7))
model.fit(dataset.pairs())

rules = sslart.extract_rules(model, levels)
print(sslart.render_rules(rules, dataset.feature_names,
    class_names=dataset.classes))
