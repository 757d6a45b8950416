#! /usr/bin/env python

"""Plot the number of nodes and the test accuracy against the vigilance."""

import numpy as np
import sslart
import matplotlib.pyplot as plt

dataset = sslart.make_synthetic('rings', 400, seed=0)
rhos = np.arange(1, 10) / 10.

fig, axes = plt.subplots(1, 2, figsize=(10, 4))
for mapping in ('otm', 'oto'):
    nodes, accuracy = [], []
    for rho in rhos:
        config = sslart.make_config({'rho': rho, 'mapping': mapping,
            'voting': 'single', 'reps': 5})
        results = sslart.repetitions(dataset, config)
        nodes.append(np.mean([r.metrics.nodes_stage2 for r in results]))
        accuracy.append(np.mean([r.metrics.accuracy for r in results]))
    axes[0].plot(rhos, nodes, 'o-', label=mapping)
    axes[1].plot(rhos, accuracy, 'o-', label=mapping)

axes[0].set_xlabel('vigilance')
axes[0].set_ylabel('nodes')
axes[1].set_xlabel('vigilance')
axes[1].set_ylabel('accuracy')
axes[1].legend()
plt.show()
