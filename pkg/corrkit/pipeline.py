import sys
from pathlib import Path
from typing import Any, Dict, Optional

import rich.console
import rich.table
from hydra.utils import to_absolute_path
from omegaconf import DictConfig

from corrkit import utils
from corrkit.commands import Command, CommandResult
from corrkit.errors import CorrkitError, SchemaError, ValidationError
from corrkit.io.serialize import dumps
from corrkit.utils.config import instantiate_from_config

log = utils.get_logger(__name__)

FORMATS = ("json", "summary")


def render_summary(name: str, payload: Dict[str, Any], exit_code: int) -> rich.table.Table:
    """Scalar and short-list fields of a payload; nested documents are left to ``format=json``."""
    table = rich.table.Table(title=f"corrkit {name}", show_header=False)
    table.add_column("key", style="bold")
    table.add_column("value")
    for key, value in sorted(payload.items()):
        if isinstance(value, dict):
            continue
        if isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
            table.add_row(key, f"{len(value)} entries")
        else:
            table.add_row(key, str(value))
    table.add_row("exit", str(exit_code))
    return table


def emit(config: DictConfig, name: str, payload: Dict[str, Any], exit_code: int) -> None:
    fmt = config.get("format", "json")
    output: Optional[str] = config.get("output")
    if output:
        Path(to_absolute_path(output)).write_text(dumps(payload) + "\n")
        log.info(f"Wrote result to <{output}>")
    if fmt == "summary":
        rich.console.Console().print(render_summary(name, payload, exit_code))
    elif not output:
        sys.stdout.write(dumps(payload) + "\n")


def report_error(e: Exception) -> int:
    """Writes the error as one JSON line on stderr; anything outside the corrkit tree exits 2 as an internal error."""
    if isinstance(e, CorrkitError):
        log.error(f"{type(e).__name__}: {e}")
    else:
        log.exception(f"Internal error: {type(e).__name__}: {e}")
    message = str(e).splitlines()[0] if str(e) else type(e).__name__
    payload = dict(error=type(e).__name__, message=message)
    if not isinstance(e, CorrkitError):
        payload["internal"] = True
    if isinstance(e, ValidationError):
        payload.update(e.report.to_dict())
    if isinstance(e, SchemaError):
        payload["path"] = e.path
    sys.stderr.write(dumps(payload) + "\n")
    return getattr(e, "exit_code", 2)


def run(config: DictConfig) -> int:
    """Instantiates the configured command, runs it and writes its result.

    Returns the process exit code: 0 pass, 1 property failure, 2 invalid input.
    """
    if config.get("format", "json") not in FORMATS:
        log.error(f"Unknown format <{config.format}>, expected one of {FORMATS}")
        return 2

    # Set seed for random number generators in numpy and python.random
    if config.get("seed") is not None:
        utils.seed_everything(config.seed)

    name = str(config.command.get("_target_", "?"))
    log.info(f"Instantiating command <{name}>")
    try:
        command: Command = instantiate_from_config(config.command, group="command")
    except KeyError as e:
        log.error(str(e))
        return 2
    except Exception as e:
        return report_error(e)

    try:
        result: CommandResult = command(config)
        emit(config, name, result.payload, result.exit_code)
    except Exception as e:
        return report_error(e)

    log.info(f"Finished <{name}> with exit code {result.exit_code}")
    return result.exit_code
