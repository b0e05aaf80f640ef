#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Setup for `evb`.
"""

from os import path

from setuptools import find_packages, setup

requirements = [
    'numpy>=1.2',
    'pandas>=1.3'
    ]

# read version
this_directory = path.abspath(path.dirname(__file__))
with open(path.join(this_directory, 'evb', '_version.py'), encoding='utf-8') as f:
    version = f.read().split('=')[1].strip().strip('\'"')


setup(name='evb',
      version=version,
      description='An experience base for software engineering know-how: '
                  'quality models, lessons learned and the measurement data behind them.',
      license='CC',
      packages=find_packages(exclude=['tests', 'tests.*']),
      install_requires=requirements,
      extras_require={'test': ['pytest', 'syrupy>=4']},
      include_package_data=True,
      package_data={'evb.examples': ['data/*/*.evb', 'data/*/*.csv', 'data/*/*.md']},
      entry_points={'console_scripts': ['evb=evb.cli:main']}
	 )
