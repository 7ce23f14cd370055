# -*- coding: utf-8 -*-
# copyright: setcross developers, BSD-3-Clause License (see LICENSE file)
"""Parametric base class shared by methods, samplers and series contexts."""
from __future__ import annotations

import collections
import copy
import inspect
from typing import Any, ClassVar, DefaultDict, Dict, List, Optional, TypeVar

from setcross.config import get_config  # type: ignore
from setcross.exceptions import NoTagsError

__all__: List[str] = ["BaseObject"]
__author__: List[str] = ["RNKuhns"]

T = TypeVar("T", bound="BaseObject")


class BaseObject:
    """Base class for parametric objects following scikit-learn design.

    Parameters are explicit keyword arguments of ``__init__`` stored under the
    same attribute names, which is what lets :func:`setcross.base.clone` rebuild
    an object and lets reports record how a value was produced. Class level
    ``_tags`` describe fixed properties of a class (for instance which
    distribution method it implements) and can be overridden per instance with
    :meth:`set_tags`.

    Notes
    -----
    Subclasses follow these conventions:

    - Specify all parameters in the classes ``__init__`` as explicit keyword
      arguments. No ``args`` or ``kwargs`` should be used to set class parameters.
    - Keyword arguments are stored as attributes with the same name.
    - All instance attributes are created in ``__init__``. Attributes holding
      state that depends on use (such as a random generator) end in an
      underscore and start as None.

    Examples
    --------
    >>> from setcross.base import BaseObject
    >>> class Grid(BaseObject):
    ...     _tags = {"kind": "grid"}
    ...     def __init__(self, size: int = 3):
    ...         self.size = size
    ...         super().__init__()
    >>> grid = Grid(size=5)
    >>> grid.get_params()
    {'size': 5}
    >>> grid.get_tag("kind")
    'grid'
    >>> grid
    Grid(size=5)
    """

    _tags: ClassVar[Dict[str, Any]] = {}

    def __init__(self):
        self._tags_dynamic: Dict[str, Any] = {}
        super().__init__()

    @classmethod
    def _get_param_names(cls) -> List[str]:
        """Get parameter names.

        Returns
        -------
        param_names : list of str
            Sorted list of parameter names.
        """
        init = cls.__init__
        if init is object.__init__:
            return []

        init_signature = inspect.signature(init)
        parameters = [
            p
            for p in init_signature.parameters.values()
            if p.name != "self" and p.kind != p.VAR_KEYWORD
        ]
        for p in parameters:
            if p.kind == p.VAR_POSITIONAL:
                raise RuntimeError(
                    "Classes inheriting from BaseObject should specify their "
                    "parameters in the signature of __init__ (no args or kwargs).\n"
                    f"{cls} with constructor {init_signature} doesn't "
                    "follow this convention."
                )
        return sorted(p.name for p in parameters)

    def get_params(self, deep: bool = True) -> Dict[str, Any]:
        """Get class parameters.

        Parameters
        ----------
        deep : bool, default=True
            If True, also return the parameters of contained objects that
            implement ``get_params``, keyed as ``<param>__<sub_param>``.

        Returns
        -------
        params : dict
            Parameter names mapped to their values.
        """
        params = {}
        for param_name in self._get_param_names():
            value = getattr(self, param_name)
            params[param_name] = value
            if deep and hasattr(value, "get_params") and not isinstance(value, type):
                deep_items = value.get_params().items()
                params.update((param_name + "__" + k, val) for k, val in deep_items)
        return params

    def set_params(self: T, **params: Any) -> T:
        """Set the class instance's parameters.

        Nested parameters use the ``<component>__<parameter>`` form.

        Parameters
        ----------
        **params : dict
            BaseObject parameters.

        Returns
        -------
        self : instance of BaseObject
            BaseObject instance.

        Raises
        ------
        ValueError
            If a parameter name is not a parameter of the object.
        """
        if not params:
            return self
        valid_params = self.get_params(deep=True)

        nested_params: DefaultDict[str, Any] = collections.defaultdict(dict)
        for key, value in params.items():
            key, delim, sub_key = key.partition("__")
            if key not in valid_params:
                raise ValueError(
                    f"Invalid parameter {key} for {type(self).__name__}. "
                    "Check the list of available parameters "
                    "with `get_params().keys()`."
                )
            if delim:
                nested_params[key][sub_key] = value
            else:
                setattr(self, key, value)
                valid_params[key] = value

        for key, sub_params in nested_params.items():
            valid_params[key].set_params(**sub_params)

        self._reset_state()
        return self

    def _reset_state(self) -> None:
        """Drop state derived from parameters; subclasses with state override."""

    @classmethod
    def get_class_tags(cls) -> Dict[str, Any]:
        """Get class tags from class and all its parent classes.

        Returns
        -------
        collected_tags : dict
            Dictionary of tag name : tag value pairs collected through the
            inheritance chain, later classes overriding earlier ones.

        Raises
        ------
        NoTagsError
            If the class has no ``_tags`` attribute.
        """
        if not hasattr(cls, "_tags"):
            raise NoTagsError(
                f"{cls.__name__} is unable to inspect tags, no `_tags` attribute."
            )
        collected_tags: Dict[str, Any] = {}
        for parent_class in reversed(inspect.getmro(cls)[:-1]):
            if hasattr(parent_class, "_tags"):
                collected_tags.update(parent_class._tags)  # type: ignore
        return copy.deepcopy(collected_tags)

    @classmethod
    def get_class_tag(
        cls,
        tag_name: str,
        default_value: Optional[Any] = None,
        raise_error: bool = False,
    ) -> Any:
        """Get tag value from class (only class tags).

        Parameters
        ----------
        tag_name : str
            Name of tag value.
        default_value : any type
            Default value to return if `tag_name` is not found in class tags.
        raise_error : bool, default=False
            Whether to raise an error if `tag_name` not in class tags.

        Returns
        -------
        tag_value :
            Value of the `tag_name` tag, or `default_value`.
        """
        collected_tags = cls.get_class_tags()
        if raise_error and tag_name not in collected_tags:
            raise ValueError(f"`{tag_name}` not in class tags.")
        return collected_tags.get(tag_name, default_value)

    def get_tags(self) -> Dict[str, Any]:
        """Get tags from class and any dynamic tag overrides.

        Returns
        -------
        collected_tags : dict
            Class tags updated with the instance's dynamic tags.
        """
        collected_tags = self.get_class_tags()
        collected_tags.update(getattr(self, "_tags_dynamic", {}))
        return copy.deepcopy(collected_tags)

    def get_tag(
        self,
        tag_name: str,
        default_value: Optional[Any] = None,
        raise_error: bool = True,
    ) -> Any:
        """Get tag value from the class and dynamic tag overrides.

        Parameters
        ----------
        tag_name : str
            Name of tag to be retrieved.
        default_value : any type, default=None
            Default value to return if `tag_name` is not found in tags.
        raise_error : bool, default=True
            Whether a ValueError is raised when `tag_name` is not found in tags.

        Returns
        -------
        tag_value :
            Value of the `tag_name` tag in self, or `default_value`.
        """
        collected_tags = self.get_tags()
        if raise_error and tag_name not in collected_tags:
            raise ValueError(f"Tag with name `{tag_name}` could not be found.")
        return collected_tags.get(tag_name, default_value)

    def set_tags(self: T, **tag_dict: Any) -> T:
        """Set dynamic tags to given values.

        Parameters
        ----------
        tag_dict : dict
            Dictionary of tag name : tag value pairs.

        Returns
        -------
        Self :
            Reference to self.
        """
        if not hasattr(self, "_tags_dynamic"):
            raise NoTagsError(
                f"{type(self).__name__} has no `_tags_dynamic` attribute; "
                "call BaseObject.__init__ in the subclass constructor."
            )
        self._tags_dynamic.update(copy.deepcopy(tag_dict))
        return self

    def _changed_params(self) -> Dict[str, Any]:
        """Return the parameters whose values differ from the constructor defaults."""
        params = self.get_params(deep=False)
        init_params = inspect.signature(type(self).__init__).parameters
        changed = {}
        for name, value in params.items():
            default = init_params[name].default
            if default is inspect.Parameter.empty or repr(value) != repr(default):
                changed[name] = value
        return changed

    def __repr__(self) -> str:
        """Represent the object by its class name and parameters."""
        if get_config()["print_changed_only"]:
            params = self._changed_params()
        else:
            params = self.get_params(deep=False)
        args = ", ".join(f"{name}={value!r}" for name, value in sorted(params.items()))
        return f"{type(self).__name__}({args})"
