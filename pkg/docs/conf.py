# -*- coding: utf-8 -*-
#
# Sphinx configuration of the heawood-ude documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

# -- Project information -----------------------------------------------------

project = u'heawood-ude'
copyright = u'2026, heawood-ude developers'
author = u'heawood-ude developers'

version = u'1.0'
release = u'1.0.0'

# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.githubpages',
]

templates_path = ['.templates']
source_suffix = '.rst'
master_doc = 'index'
language = None
exclude_patterns = [u'_build', 'Thumbs.db', '.DS_Store']
pygments_style = 'sphinx'

# -- Options for HTML output -------------------------------------------------

html_theme = 'alabaster'
htmlhelp_basename = 'heawood-ude-doc'

# -- Options for LaTeX output ------------------------------------------------

latex_documents = [
    (master_doc, 'heawood-ude.tex', u'heawood-ude Documentation',
     author, 'manual'),
]
