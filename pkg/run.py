#!python

import pyrootutils

# ------------------------------------------------------------------------------------ #
# `pyrootutils.setup_root(...)` searches for ".git" or "setup.py" in present and parent
# dirs to determine the project root dir, adds it to the PYTHONPATH and sets the
# PROJECT_ROOT environment variable used in "configs/paths/default.yaml"
#
# additionally loads environment variables from ".env" file (e.g. CORRKIT_BUDGET)
#
# https://github.com/ashleve/pyrootutils
# -------------------

root = pyrootutils.setup_root(
    search_from=__file__,
    indicator=[".git", "setup.py"],
    pythonpath=True,
    dotenv=True,
)

from corrkit.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
