"""Feasibility bounds for laminate stiffness tensors."""

from .expressions import *  # noqa: F401,F403
from .expressions import __all__ as _expr_all
from .feasibility import *  # noqa: F401,F403
from .feasibility import __all__ as _feas_all
from .minimize import *  # noqa: F401,F403
from .minimize import __all__ as _min_all
from .report import *  # noqa: F401,F403
from .report import __all__ as _rep_all

__all__ = [*_expr_all, *_feas_all, *_min_all, *_rep_all]
