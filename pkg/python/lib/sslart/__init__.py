#! /usr/bin/env python
# -*- coding: utf8 -*-

"""
sslart
======

Provides fuzzy ART and ARTMAP networks for semi-supervised classification:
a one-to-many mapping between input categories and classes that learns from
few labeled samples, ensembles of such networks with weighted voting, fuzzy
if-then rules read from the learned categories, and a harness to split,
corrupt and score datasets over repeated runs.

How to use the documentation
----------------------------

Documentation of the python module is available as docstrings provided
within the code, and a reference guide in the `doc` folder.

The docstrings examples are written assuming `sslart` and `numpy` have been
imported with:

>>> import sslart
>>> import numpy as np
"""

version = '0.1.0'
__version__ = version

from .errors import *
from .fuzzy import *
from .art import *
from .mapfield import *
from .semisup import *
from .ensemble import *
from .rules import *
from .dataset import *
from .splitting import *
from .noise import *
from .metrics import *
from .persist import *
from .experiment import *
