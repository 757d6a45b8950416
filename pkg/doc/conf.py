# -*- coding: utf-8 -*-
#
# sslart documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing
# dir.

import sys, os

# the package is documented from the source tree
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)),
    '..', 'python', 'lib'))

import sslart

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.viewcode', 'sphinx.ext.autodoc',
        'sphinx.ext.napoleon', 'sphinx.ext.intersphinx']

autodoc_member_order = 'groupwise'

intersphinx_mapping = {
        'numpy': ('https://numpy.org/doc/stable/', None),
        }

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'sslart'

version = sslart.version.rsplit('.', 1)[0]
release = sslart.version

exclude_patterns = ['_build']

pygments_style = 'colorful'

modindex_common_prefix = ['sslart.']

# -- Options for HTML output ---------------------------------------------------

html_theme = 'pyramid'

html_static_path = []

html_show_sphinx = False

htmlhelp_basename = 'sslartdoc'

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'sslart', u'sslart Documentation',
     [], 1)
]
