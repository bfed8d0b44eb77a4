#!/usr/bin/env python

import glob, subprocess, setuptools

try:
    # Git version extraction logic designed to be compatible with both semver and PEP 440
    version = subprocess.check_output(["git", "describe", "--tags", "--match", "v*.*.*"]).decode()
    version = version.strip("v\n").replace("-", "+", 1).replace("-", ".")
except Exception:
    version = "0.0.0"

setuptools.setup(
    name="hueforge",
    version=version,
    license=open("LICENSE.md").readline().strip(),
    description="HDR tone mapping with hue compensation on the constant-hue plane",
    long_description=open("README.rst").read(),
    install_requires=[
        "numpy >= 1.17, < 3",
        "scipy >= 1.4, < 2",
        "Pillow >= 7, < 12",
        "colour-science >= 0.4, < 0.5",
        "opencv-python-headless >= 4.2, < 5",
        "argcomplete >= 1.9.5, < 4",
        "tweak >= 1.0.2, < 2",
        "pyyaml >= 3.12, < 7"
    ],
    tests_require=[
        "coverage",
        "flake8"
    ],
    packages=setuptools.find_packages(exclude=["test"]),
    package_data={"hueforge": ["base_config.yml", "user_config.yml"]},
    scripts=glob.glob("scripts/*"),
    platforms=["MacOS X", "Posix"],
    test_suite="test",
    include_package_data=True
)
