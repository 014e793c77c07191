"""Keeps the tests directory importable so modules can share frozen data."""

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))
