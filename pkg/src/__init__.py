"""
Main source package initialization.
"""

__version__ = "0.1.0"
__author__ = "System Architect"
