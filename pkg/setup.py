from setuptools import setup, find_packages

setup(
    name="freefactors",
    version="0.1.0",
    packages=find_packages(include=["freefactors", "freefactors.*"]),
    python_requires=">=3.12",
    entry_points={"console_scripts": ["freefactors=freefactors.cli.main:main"]},
)
