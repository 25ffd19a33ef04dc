"""Crystal elements and top semi-module tuples for superbasic GL_n."""

__version__ = "0.1.0"
