"""
Uptrans project initialization.
"""
