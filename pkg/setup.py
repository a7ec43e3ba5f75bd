#!/usr/bin/env python
# -*- coding: utf-8 -*-

from setuptools import setup

with open('README.md') as readme_file:
    readme = readme_file.read()

with open('CHANGELOG.md') as history_file:
    history = history_file.read()

with open('dev-requirements.txt') as dev_requirements_file:
    tests_require = [r.strip() for r in dev_requirements_file.readlines()]

setup(
    name="affwreath",
    version='0.1.0',

    package_dir={
        '': 'src'
    },

    packages=[
        "affwreath",
    ],

    include_package_data=True,

    python_requires=">=3.8",

    install_requires=[
        "attrs",
        "PyYAML",
        "sympy",
    ],

    setup_requires=[
        'pytest-runner',
    ],

    tests_require=tests_require,

    entry_points={
        'console_scripts': [
            'affwreath = affwreath.cli:main',
        ],
    },

    license="MIT license",

    keywords='affine wreath product algebra frobenius superalgebra '
             'cyclotomic quotient exact arithmetic',
    description="Exact arithmetic in affine wreath product algebras",
    long_description="%s\n\n%s" % (readme, history),
    long_description_content_type="text/markdown",

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
)
