"""Setup script for dfolkit."""

from setuptools import find_packages, setup

setup(
    name="dfolkit",
    version="0.3.0",
    packages=find_packages(include=["dfolkit", "dfolkit.*"]),
    include_package_data=True,
    package_data={"dfolkit.corpus": ["*.th", "*.voc", "*.prf", "*.model"]},
    python_requires=">=3.9",
)
