"""
Application Services Package
=============================

Services sit between the command line and the library: they own the
coefficient cache and turn library results into documents and files.

- CoefficientService: cache-aware g, gbar, lr and mult records
- TableService: CSV tables of reduced coefficients
"""

from src.application.services.coefficient_service import CoefficientService
from src.application.services.table_service import TableService

__all__ = [
    "CoefficientService",
    "TableService",
]
