import os
import re
from os import path, listdir
from typing import Optional, Dict, Any

import yaml
import tomli


DEFAULT_ROOT_FILENAME_MATCH_PATTERN = ".git|pyproject.toml|genbell.yaml"
CONFIG_FILENAME = "genbell.yaml"


def detect(current_path: Optional[str] = None, pattern: Optional[str] = None) -> Optional[str]:
    """
    Find project root path from specified file/directory path,
    based on common project root file pattern.
    Examples:
        rootpath.detect()
        rootpath.detect(__file__)
        rootpath.detect('./src')
    """
    current_path = current_path or os.getcwd()
    current_path = path.abspath(path.normpath(path.expanduser(current_path)))
    matcher = re.compile(pattern or DEFAULT_ROOT_FILENAME_MATCH_PATTERN)

    if not path.isdir(current_path):
        current_path = path.dirname(current_path)

    while True:
        file_names = listdir(current_path)
        if any(matcher.fullmatch(name) for name in file_names):
            return current_path

        parent = path.dirname(current_path)
        if parent == current_path:
            return None
        current_path = parent


def is_pyproject(current_path: Optional[str] = None, pattern: Optional[str] = None) -> bool:
    root = detect(current_path, pattern)
    if root is None:
        return False

    return os.path.exists(os.path.join(root, "pyproject.toml"))


def has_config_file(current_path: Optional[str] = None, pattern: Optional[str] = None) -> bool:
    root = detect(current_path, pattern)
    if root is None:
        return False

    return os.path.exists(os.path.join(root, CONFIG_FILENAME))


def load_config_file(current_path: Optional[str] = None, pattern: Optional[str] = None) -> Dict[str, Any]:
    root = detect(current_path, pattern)
    if root is None:
        raise ValueError("could not find root path")

    config_path = os.path.join(root, CONFIG_FILENAME)

    with open(config_path, "r") as stream:
        loaded = yaml.safe_load(stream)
        if loaded is None:
            return {}
        if not isinstance(loaded, dict):
            raise ValueError(f"'{config_path}' must contain a mapping")
        return loaded


def load_pyproject(current_path: Optional[str] = None, pattern: Optional[str] = None) -> Dict[str, Any]:
    root = detect(current_path, pattern)
    if root is None:
        raise ValueError("could not find root path")

    config_path = os.path.join(root, "pyproject.toml")

    with open(config_path, "rb") as f:
        return tomli.load(f)
