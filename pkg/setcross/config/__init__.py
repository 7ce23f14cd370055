# -*- coding: utf-8 -*-
"""Functionality for configuring the ``setcross`` package."""
# Includes functionality like get_config, set_config, and config_context
# that is similar to scikit-learn. The configuration is a class importable as
# a module and every setting is driven by the registry below, so adding a
# capacity limit only means adding a registry entry and a keyword.
import os
import sys
import threading
import types
import warnings
from contextlib import contextmanager
from typing import Any, Callable, Dict, Iterator, List, Optional, TypedDict, Union

import toml

from setcross.exceptions import ConfigurationError

__author__: List[str] = ["RNKuhns"]


def _positive_int(value: Any) -> int:
    """Parse a strictly positive integer setting."""
    if isinstance(value, bool):
        raise ValueError("booleans are not valid integer settings")
    parsed = int(value)
    if parsed < 1 or str(parsed) != str(value).strip():
        raise ValueError(f"{value!r} is not a positive integer")
    return parsed


def _boolean(value: Any) -> bool:
    """Parse a boolean setting given as bool or as 'True'/'False'."""
    if isinstance(value, bool):
        return value
    if value in ("True", "true"):
        return True
    if value in ("False", "false"):
        return False
    raise ValueError(f"{value!r} is not a boolean")


class ConfigParamSettingInfo(TypedDict):
    """Define types of the setting information for a given config parameter."""

    env_name: str
    parse: Callable[[Any], Any]
    default: Any
    description: str


_CONFIG_REGISTRY: Dict[str, ConfigParamSettingInfo] = {
    "enumeration_limit": {
        "env_name": "SETCROSS_ENUMERATION_LIMIT",
        "parse": _positive_int,
        "default": 12,
        "description": "Largest n for exhaustive enumeration of set partitions.",
    },
    "polynomial_limit": {
        "env_name": "SETCROSS_POLYNOMIAL_LIMIT",
        "parse": _positive_int,
        "default": 40,
        "description": "Largest n for closed-form distribution polynomials.",
    },
    "series_limit": {
        "env_name": "SETCROSS_SERIES_LIMIT",
        "parse": _positive_int,
        "default": 12,
        "description": "Largest truncation order for generating-function tables.",
    },
    "stirling_limit": {
        "env_name": "SETCROSS_STIRLING_LIMIT",
        "parse": _positive_int,
        "default": 2000,
        "description": "Largest row of the memoized Stirling and Bell tables.",
    },
    "float_digits": {
        "env_name": "SETCROSS_FLOAT_DIGITS",
        "parse": _positive_int,
        "default": 30,
        "description": "Significant digits used when converting exact values.",
    },
    "print_changed_only": {
        "env_name": "SETCROSS_PRINT_CHANGED_ONLY",
        "parse": _boolean,
        "default": True,
        "description": "Only show non-default parameters when printing objects.",
    },
}

_GLOBAL_CONFIG: Dict[str, Any] = {
    config_name: config_info["default"]
    for config_name, config_info in _CONFIG_REGISTRY.items()
}

_THREAD_LOCAL_DATA = threading.local()


class ConfigManager(types.ModuleType):
    """Configure the package."""

    _default_config = _GLOBAL_CONFIG.copy()
    _shared_config = _GLOBAL_CONFIG.copy()
    _threadlocal = _THREAD_LOCAL_DATA

    @classmethod
    def _get_threadlocal_config(cls) -> Dict[str, Any]:
        """Get a threadlocal **mutable** configuration.

        If the configuration does not exist, copy the configuration shared by all
        threads.

        Returns
        -------
        threadlocal_global_config : dict
            Threadlocal global config or copy of default global configuration.
        """
        if not hasattr(cls._threadlocal, "global_config"):
            cls._threadlocal.global_config = cls._shared_config.copy()
        threadlocal_global_config = cls._threadlocal.global_config
        return threadlocal_global_config

    @classmethod
    def get_config_os_env_names(cls) -> List[str]:
        """Retrieve the os environment names for configurable settings.

        Returns
        -------
        env_names : list
            The os environment names that can be used to set configurable settings.

        See Also
        --------
        config_context :
            Configuration context manager.
        get_config :
            Retrieve current global configuration values.
        set_config :
            Set global configuration.

        Examples
        --------
        >>> from setcross.config import get_config_os_env_names
        >>> get_config_os_env_names()[:2]
        ['SETCROSS_ENUMERATION_LIMIT', 'SETCROSS_POLYNOMIAL_LIMIT']
        """
        return [config_info["env_name"] for config_info in _CONFIG_REGISTRY.values()]

    @classmethod
    def get_default_config(cls) -> Dict[str, Any]:
        """Retrieve the default global configuration.

        The defaults are the registry defaults overridden by any valid values
        found in the os environment when the package was imported.

        Returns
        -------
        config : dict
            The configurable settings (keys) and their default values (values).
        """
        return cls._default_config.copy()

    @classmethod
    def get_config(cls) -> Dict[str, Any]:
        """Retrieve current values for configuration set by :meth:`set_config`.

        Returns
        -------
        config : dict
            The configurable settings (keys) and their current values (values).

        See Also
        --------
        config_context :
            Configuration context manager.
        set_config :
            Set global configuration.
        set_default_config :
            Reset configuration to default.

        Examples
        --------
        >>> from setcross.config import get_config
        >>> sorted(get_config())[:3]
        ['enumeration_limit', 'float_digits', 'polynomial_limit']
        """
        return cls._get_threadlocal_config().copy()

    @classmethod
    def set_config(
        cls,
        enumeration_limit: Optional[int] = None,
        polynomial_limit: Optional[int] = None,
        series_limit: Optional[int] = None,
        stirling_limit: Optional[int] = None,
        float_digits: Optional[int] = None,
        print_changed_only: Optional[bool] = None,
        local_threadsafe: bool = False,
    ) -> None:
        """Set global configuration.

        Parameters
        ----------
        enumeration_limit : int, default=None
            Largest ground-set size accepted by exhaustive enumeration. Raising it
            above 12 multiplies run time by roughly the Bell-number ratio.
        polynomial_limit : int, default=None
            Largest ``n`` for the closed-form distribution polynomials.
        series_limit : int, default=None
            Largest truncation order of the generating-function table.
        stirling_limit : int, default=None
            Largest row kept in the memoized Stirling table.
        float_digits : int, default=None
            Significant digits used when exact values are converted to floats.
        print_changed_only : bool, default=None
            If True, only the parameters that were set to non-default
            values will be printed when printing a BaseObject instance.
        local_threadsafe : bool, default=False
            If False, set the configuration as default for all threads.

        Returns
        -------
        None : None
            No output returned.

        See Also
        --------
        config_context :
            Configuration context manager.
        get_config :
            Retrieve current global configuration values.
        set_default_config :
            Reset configuration to default.

        Examples
        --------
        >>> from setcross.config import get_config, set_config, set_default_config
        >>> set_config(enumeration_limit=10)
        >>> get_config()["enumeration_limit"]
        10
        >>> set_default_config()
        """
        local_config = cls._get_threadlocal_config()
        settings = {
            "enumeration_limit": enumeration_limit,
            "polynomial_limit": polynomial_limit,
            "series_limit": series_limit,
            "stirling_limit": stirling_limit,
            "float_digits": float_digits,
            "print_changed_only": print_changed_only,
        }
        for config_name, value in settings.items():
            if value is not None:
                local_config[config_name] = _CONFIG_REGISTRY[config_name]["parse"](
                    value
                )

        if not local_threadsafe:
            cls._shared_config = local_config.copy()

    @classmethod
    def set_default_config(cls) -> None:
        """Reset the configuration to the default.

        Returns
        -------
        None : None
            No output returned.

        See Also
        --------
        get_config :
            Retrieve current global configuration values.
        get_default_config :
            Return default global configuration values.
        """
        default_config = cls.get_default_config()
        cls.set_config(**default_config)

    @classmethod
    @contextmanager
    def config_context(
        cls,
        enumeration_limit: Optional[int] = None,
        polynomial_limit: Optional[int] = None,
        series_limit: Optional[int] = None,
        stirling_limit: Optional[int] = None,
        float_digits: Optional[int] = None,
        print_changed_only: Optional[bool] = None,
        local_threadsafe: bool = False,
    ) -> Iterator[None]:
        """Context manager for global configuration.

        Parameters
        ----------
        enumeration_limit, polynomial_limit, series_limit, stirling_limit : int
            Capacity limits, see :meth:`set_config`. None keeps the current value.
        float_digits : int, default=None
            Significant digits for exact-to-float conversion.
        print_changed_only : bool, default=None
            Whether BaseObject printing only shows non-default parameters.
        local_threadsafe : bool, default=False
            If False, set the configuration as default for all threads.

        Yields
        ------
        None

        Notes
        -----
        All settings, not just those presently modified, will be returned to
        their previous values when the context manager is exited.

        Examples
        --------
        >>> from setcross.config import config_context, get_config
        >>> with config_context(enumeration_limit=8):
        ...     get_config()["enumeration_limit"]
        8
        """
        old_config = cls.get_config()
        cls.set_config(
            enumeration_limit=enumeration_limit,
            polynomial_limit=polynomial_limit,
            series_limit=series_limit,
            stirling_limit=stirling_limit,
            float_digits=float_digits,
            print_changed_only=print_changed_only,
            local_threadsafe=local_threadsafe,
        )

        try:
            yield
        finally:
            cls.set_config(**old_config, local_threadsafe=local_threadsafe)

    @classmethod
    def load_config_file(
        cls, path: Union[str, os.PathLike], local_threadsafe: bool = False
    ) -> Dict[str, Any]:
        """Apply settings read from a TOML ``key = value`` file.

        Parameters
        ----------
        path : str or path-like
            File holding top-level ``key = value`` lines using registry names,
            for example ``enumeration_limit = 11``.
        local_threadsafe : bool, default=False
            Passed through to :meth:`set_config`.

        Returns
        -------
        applied : dict
            The parsed settings that were applied.

        Raises
        ------
        ConfigurationError
            If the file names an unknown setting or holds an invalid value.
        """
        try:
            raw = toml.load(os.fspath(path))
        except toml.TomlDecodeError as err:
            raise ConfigurationError(f"Cannot parse config file {path}: {err}") from err
        applied: Dict[str, Any] = {}
        for key, value in raw.items():
            if key not in _CONFIG_REGISTRY:
                msg = f"Unknown configuration key {key!r} in {path}. "
                msg += f"Valid keys are {', '.join(_CONFIG_REGISTRY)}."
                raise ConfigurationError(msg)
            try:
                applied[key] = _CONFIG_REGISTRY[key]["parse"](value)
            except (TypeError, ValueError) as err:
                raise ConfigurationError(
                    f"Invalid value for {key!r} in {path}: {err}"
                ) from err
        cls.set_config(**applied, local_threadsafe=local_threadsafe)
        return applied

    @classmethod
    def initialize_config(cls) -> None:
        """Initialize the package configuration.

        The package configuration is initialized according to the following
        hierarchy:

        - Any configurations set in the os environment variables are retrieved
        - Configurable settings not set in os environment have their default values
          retrieved
        - Set config is used to initialize the configuration.

        Returns
        -------
        None : None
            No output returned.
        """
        config_settings: Dict[str, Any] = {}
        for config_name, config_info in _CONFIG_REGISTRY.items():
            config_setting = os.environ.get(
                config_info["env_name"], config_info["default"]
            )
            try:
                config_setting = config_info["parse"](config_setting)
            except (TypeError, ValueError):
                msg = f"{config_info['env_name']} is not valid: "
                msg += f"{config_info['description']} "
                msg += "Using default value for this configuration as a result."
                warnings.warn(msg, UserWarning)
                config_setting = config_info["default"]
            config_settings[config_name] = config_setting

        cls._default_config = config_settings
        cls._shared_config = config_settings.copy()
        cls.set_config(**config_settings)

    def __dir__(self) -> List[str]:
        """Indicate items in the scope."""
        return [
            "config_context",
            "get_config",
            "get_config_os_env_names",
            "get_default_config",
            "load_config_file",
            "set_config",
            "set_default_config",
            "ConfigManager",
        ]


# Initialise the configuration from the environment
ConfigManager.initialize_config()

sys.modules[__name__].__class__ = ConfigManager
