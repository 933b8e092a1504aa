# -*- coding: utf-8 -*-
#
# Sphinx configuration for the convexpoly documentation.
# The API pages under source/ are regenerated by sphinx-apidoc on every build.

project = 'convexpoly'
copyright = '2026, convexpoly developers'
author = 'convexpoly developers'

version = '0.1'
release = '0.1.0'

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx_autodoc_typehints',
    'sphinx.ext.mathjax',
    'sphinx.ext.viewcode',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = ['_build', 'source/*.tests.*']
pygments_style = 'sphinx'

import sphinx_rtd_theme  # noqa: E402
html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
html_static_path = ['_static']
htmlhelp_basename = 'convexpolydoc'

man_pages = [
    (master_doc, 'convexpoly', 'convexpoly Documentation', [author], 1)
]


def run_apidoc(_):
    import os
    import sys
    from sphinx.ext import apidoc
    sys.path.append(os.path.join(os.path.dirname(__file__), '..'))
    cur_dir = os.path.abspath(os.path.dirname(__file__))
    argv = ['-f', '-T', '-e', '-M', '-o', os.path.join(cur_dir, 'source'), '../convexpoly']
    apidoc.main(argv)


def setup(app):
    app.connect('builder-inited', run_apidoc)
