import os
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Optional

from dotenv import load_dotenv
from inflection import underscore

from ..constants import ENV_PREFIX
from ..errors import InvalidArgument

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

_INTEGER_KEYS = ("n", "degree_bound", "seed", "step_budget")
_STRING_KEYS = ("mode", "output")


def kwargs_from_env(environment: Optional[Mapping[str, str]] = None) -> dict:
    """
    Extract workbench configuration parameters from environment variables.

    Nothing is required: variables that are not set are simply absent from
    the result, so the configuration defaults apply.

    Args:
        environment (Mapping[str, str], optional): Environment variables.
            Defaults to None, which loads a ``.env`` file if present and
            uses ``os.environ``.

    Returns:
        dict: Keyword arguments for :class:`wbench.config.WorkbenchConfig`.

    Raises:
        InvalidArgument: If an integer variable does not parse.

    Environment Variables:
        WBENCH_N, WBENCH_MODE, WBENCH_DEGREE_BOUND, WBENCH_SEED,
        WBENCH_OUTPUT, WBENCH_STEP_BUDGET, WBENCH_RULES
    """
    if environment is None:
        load_dotenv()
        environment = os.environ

    params = {}
    for key in _INTEGER_KEYS:
        value = environment.get(ENV_PREFIX + key.upper())
        if value:
            try:
                params[key] = int(value)
            except ValueError as exc:
                raise InvalidArgument(f"{ENV_PREFIX}{key.upper()} must be an integer") from exc
    for key in _STRING_KEYS:
        value = environment.get(ENV_PREFIX + key.upper())
        if value:
            params[key] = underscore(value.strip())
    rules = environment.get(ENV_PREFIX + "RULES")
    if rules:
        params["rules_path"] = rules
    return params


def get_data_file(name: str) -> Path:
    """
    Locate a data file shipped with the package.

    Raises:
        FileNotFoundError: If the file does not exist.
    """
    path = DATA_DIR / name
    if not path.is_file():
        raise FileNotFoundError(f"missing data file: {path}")
    return path


def get_default_rule_file() -> Path:
    """The relation table of Y_2(sigma) shipped with the package."""
    return get_data_file("shifted_yangian.rules")


def load_degree_table(path: Path) -> dict[tuple[str, int], tuple[int, ...]]:
    """
    Read a fundamental degree table.

    Each non-comment line reads ``TYPE RANK d_1 d_2 ...``; ``#`` starts a
    comment.

    Raises:
        InvalidArgument: On a malformed line or a repeated (type, rank).
    """
    table = {}
    with open(path, encoding="utf-8") as file:
        for number, raw in enumerate(file, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            try:
                type_name, rank = fields[0].upper(), int(fields[1])
                degrees = tuple(int(d) for d in fields[2:])
            except (IndexError, ValueError) as exc:
                raise InvalidArgument(f"{path}:{number}: malformed degree line") from exc
            if len(degrees) != rank:
                raise InvalidArgument(f"{path}:{number}: {type_name}{rank} needs {rank} degrees")
            if (type_name, rank) in table:
                raise InvalidArgument(f"{path}:{number}: duplicate entry {type_name}{rank}")
            table[(type_name, rank)] = degrees
    return table


@lru_cache(maxsize=None)
def get_default_degree_table() -> dict[tuple[str, int], tuple[int, ...]]:
    """The fundamental degree table shipped with the package."""
    return load_degree_table(get_data_file("fundamental_degrees.txt"))
