"""Top-level package for knotmosaic."""

__author__ = """The knotmosaic developers"""
__version__ = '0.1.0'
