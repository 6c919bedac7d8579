"""Filters on real-valued maps of a finite space, in exact rational arithmetic."""
from .filters import *  # noqa: F401,F403
from .regions import *  # noqa: F401,F403
from . import filters, regions

__all__ = filters.__all__ + regions.__all__
