"""Random-surface laboratory bindings.

Uniform triangulations of the 2-sphere, their n^(-1/4)-rescaled metric
geometry, exact small-instance Gromov-Hausdorff distances, and the Gaussian
free field / Liouville area measure on the sphere.
"""

from ._blab import *  # noqa: F401,F403
from ._blab import __doc__ as _core_doc  # noqa: F401
