# Metadata lives in pyproject.toml; this file only serves legacy tooling.
from setuptools import setup

setup()
