# Sphinx configuration of the Ring-Explorer documentation.

import os
import sys

sys.path.insert(0, os.path.abspath("../app"))

from ring_explorer import __version__  # noqa: E402

project = "Ring-Explorer"
copyright = "2026, Ring-Explorer developers"
author = "Ring-Explorer developers"
release = __version__

extensions = ["sphinx.ext.autodoc", "sphinx.ext.napoleon"]
autodoc_member_order = "bysource"

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

html_theme = "alabaster"
html_static_path = ["_static"]
