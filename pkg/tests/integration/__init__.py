"""
Integration tests.

Identity suites at their acceptance sizes and end-to-end table runs against a
real cache file. Marked ``integration`` and ``slow``; deselect with
``-m "not slow"`` for a quick pass.
"""
