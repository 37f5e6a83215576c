"""outerstring-mis - reductions, exact solvers and approximations for independent set on grounded string representations"""

from outerstring_mis.cli import Workbench, main

__all__ = ["Workbench", "main"]
