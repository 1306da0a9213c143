import sys

import hydra
from omegaconf import DictConfig


@hydra.main(version_base='1.1', config_path="../configs", config_name="config.yaml")
def main(config: DictConfig):
    """``corrkit command=<verb> command.input=<file> [overrides]``; exits 0 pass, 1 fail, 2 bad input."""
    from corrkit import utils
    from corrkit.pipeline import run

    config = utils.extras(config)

    # hydra discards the return value of the task function
    code = run(config)
    if code:
        sys.exit(code)


if __name__ == "__main__":
    main()
