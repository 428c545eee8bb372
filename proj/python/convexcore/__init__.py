"""Hilbert geometry and convex cocompactness diagnostics for discrete
subgroups of PGL(n, R).

The heavy lifting lives in the compiled extension ``_convexcore``; this
package re-exports its public names.
"""

from ._convexcore import *  # noqa: F401,F403
