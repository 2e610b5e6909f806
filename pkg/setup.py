from setuptools import setup
import os

__version__ = "0.0.0"
with open("mealygrowth/_version.py") as f:
    exec(f.read())


def read(file_name):
    return open(os.path.join(os.path.dirname(__file__), file_name)).read()


setup(
    name="mealygrowth",
    version=__version__,
    author="The mealygrowth developers",
    description="Growth functions of Mealy automata and the semigroups they generate.",
    long_description=read("README.rst"),
    license="MIT",
    packages=["mealygrowth", "mealygrowth.series", "mealygrowth.corpus"],
    package_data={
        "mealygrowth": ["py.typed"],
        "mealygrowth.corpus": ["*.mealy", "*.csv", "*.json"],
    },
    python_requires=">=3.7",
    include_package_data=True,
    extras_require={
        "tests": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["mealygrowth=mealygrowth.cli:main"],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Natural Language :: English",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.7",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)

# Build and Publish Commands:
#
# python -m build
# twine upload --skip-existing dist/*
