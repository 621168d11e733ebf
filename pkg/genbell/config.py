"""Config for genbell"""

from typing import Optional, Any, Dict, Callable, TypeVar
import os

from genbell.util.rootpath import is_pyproject, has_config_file, load_config_file, load_pyproject

T = TypeVar("T")

ENV_PREFIX = "GENBELL_"

DEFAULT_SEED = 42
DEFAULT_TRIALS = 200
DEFAULT_MAX_N = 8
DEFAULT_CELLSIZE = 4
DEFAULT_LOG_LEVEL = "WARNING"


class Config:
    """General configuration for genbell"""

    seed: int
    trials: int
    max_n: int
    cellsize: int
    log_level: str

    _pyproject_dict: Optional[Dict[str, Any]] = None
    _config_file: Optional[Dict[str, Any]] = None

    def __init__(
        self,
        seed: Optional[int] = None,
        trials: Optional[int] = None,
        max_n: Optional[int] = None,
        cellsize: Optional[int] = None,
        log_level: Optional[str] = None,
        root: Optional[str] = None,
    ):
        """Configuration, resolved from arguments, env vars, pyproject.toml and genbell.yaml

        Args:
            seed (Optional[int], optional): Seed for the verification suite. Defaults to None.
            trials (Optional[int], optional): Random trials per property. Defaults to None.
            max_n (Optional[int], optional): Largest qubit count for dense cross-checks. Defaults to None.
            cellsize (Optional[int], optional): Pixels per matrix entry when rendering. Defaults to None.
            log_level (Optional[str], optional): Logging level name. Defaults to None.
            root (Optional[str], optional): Path to search for the project root from. Defaults to cwd.
        """
        if is_pyproject(root):
            self._pyproject_dict = load_pyproject(root)

        if has_config_file(root):
            self._config_file = load_config_file(root)

        self.seed = seed if seed is not None else self._lookup("seed", int, DEFAULT_SEED)
        self.trials = trials if trials is not None else self._lookup("trials", int, DEFAULT_TRIALS)
        self.max_n = max_n if max_n is not None else self._lookup("max_n", int, DEFAULT_MAX_N)
        self.cellsize = cellsize if cellsize is not None else self._lookup("cellsize", int, DEFAULT_CELLSIZE)
        self.log_level = log_level if log_level is not None else self._lookup("log_level", str, DEFAULT_LOG_LEVEL)

        if self.trials < 1:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if self.cellsize < 1:
            raise ValueError(f"cellsize must be positive, got {self.cellsize}")

    def _lookup(self, key: str, parse: Callable[[Any], T], default: T) -> T:
        env = os.getenv(ENV_PREFIX + key.upper())
        if env is not None:
            return self._parse(key, parse, env, "$" + ENV_PREFIX + key.upper())

        if self._pyproject_dict is not None:
            try:
                value = self._pyproject_dict["tool"]["genbell"][key]
                return self._parse(key, parse, value, "pyproject.toml")
            except KeyError:
                pass

        if self._config_file is not None:
            if key in self._config_file:
                return self._parse(key, parse, self._config_file[key], "genbell.yaml")

        return default

    @staticmethod
    def _parse(key: str, parse: Callable[[Any], T], value: Any, source: str) -> T:
        try:
            return parse(value)
        except (TypeError, ValueError):
            raise ValueError(f"invalid value '{value}' for '{key}' in {source}")
