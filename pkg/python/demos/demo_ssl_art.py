#! /usr/bin/env python

"""Train a single one-to-many model on a few labeled samples."""

import sys
import sslart

kind = sys.argv[1] if len(sys.argv) > 1 else 'two-gaussians'

dataset = sslart.make_synthetic(kind, 400, seed=0)
# 10% of the training part keeps its class ids
labeled, unlabeled, test = sslart.split(dataset,
        sslart.SplitSpec(test_frac=0.2, labeled_frac=0.1, seed=0))

model = sslart.SslArtModel(dataset.dim, dataset.classes,
        sslart.ArtParams(rho=0.8))
model.pretrain_unsupervised(unlabeled.X)
print("stage 1: %d nodes from %d unlabeled samples"
        % (model.n_committed, len(unlabeled)))
model.fit(labeled.pairs())
print("stage 2: %d nodes, %d of them labeled, from %d labeled samples"
        % (model.n_committed, model.n_labeled, len(labeled)))

for depth in (1, 2, 3, None):
    m = sslart.evaluate(model, test, depth)
    print("T=%-4s coverage %.3f correctness %.3f accuracy %.3f"
            % (depth or 'all', m.coverage, m.correctness, m.accuracy))
