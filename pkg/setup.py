#!/usr/bin/env python

from setuptools import find_packages, setup

setup(
    name="corrkit",
    version="0.0.1",
    description="Finite simplicial sets, correspondences and their categorical counterparts",
    author="",
    author_email="",
    packages=find_packages(include=["corrkit", "corrkit.*"]),
    install_requires=[
        "hydra-core>=1.2.0",
        "hydra-colorlog>=1.2.0",
        "omegaconf",
        "pyrootutils",
        "python-dotenv",
        "rich",
        "numpy",
        "tqdm",
    ],
    entry_points={"console_scripts": ["corrkit=corrkit.cli:main"]},
)
