# Configuration file for the Sphinx documentation builder.
# http://www.sphinx-doc.org/en/master/config

import mealygrowth

project = 'mealygrowth'
copyright = '2026, The mealygrowth developers'
author = 'The mealygrowth developers'
release = mealygrowth.__version__

extensions = [
    'sphinx.ext.autodoc',
    'sphinx_autodoc_typehints',
    'sphinx.ext.viewcode',
    'sphinxemoji.sphinxemoji',  # releases.rst
    'm2r2',  # contributing.rst includes CONTRIBUTING.md
]

exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store']

html_theme = "furo"

master_doc = 'index'

autodoc_member_order = 'bysource'

source_suffix = ['.rst', '.md']
