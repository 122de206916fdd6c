"""curvelab: exact-arithmetic laboratory for curve graphs of low-complexity
surfaces, mapping class group actions, and large-displacement quotients."""

__version__ = "0.1.0"
