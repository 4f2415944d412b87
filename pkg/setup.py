"""
Script defining python package for fiblucas_matrix.
"""

# third party
from setuptools import find_packages
from setuptools import setup

setup(
    name="fiblucas_matrix",
    version="0.1",
    packages=find_packages(exclude=["tests"]),
    install_requires=["numpy", "pandas", "tabulate", "requests", "backoff"],
    package_data={"fiblucas_matrix": ["data/*.bfile"]},
    entry_points={"console_scripts": ["fiblucas-matrix=fiblucas_matrix.main:main"]},
)
