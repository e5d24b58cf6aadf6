#!/usr/bin/env python

"""The setup script."""

from setuptools import setup, find_packages

with open('README.rst') as readme_file:
    readme = readme_file.read()

with open('HISTORY.rst') as history_file:
    history = history_file.read()

requirements = ['Click>=7.0', 'tqdm>=4.64', 'zstandard>=0.19',
                'python-dotenv>=1.0', 'sympy>=1.10', ]

test_requirements = [ ]

setup(
    author="The knotmosaic developers",
    python_requires='>=3.7',
    classifiers=[
        'Development Status :: 2 - Pre-Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Natural Language :: English',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    description="Knot mosaics: enumerate them, sort them into move "
                "classes, and certify knot equivalence.",
    entry_points={
        'console_scripts': [
            'knotmosaic=knotmosaic.cli:main',
        ],
    },
    install_requires=requirements,
    license="MIT license",
    long_description=readme + '\n\n' + history,
    include_package_data=True,
    package_data={'knotmosaic': ['data/*.txt']},
    keywords='knotmosaic knot mosaic grid diagram',
    name='knotmosaic',
    packages=find_packages(include=['knotmosaic', 'knotmosaic.*']),
    test_suite='tests',
    tests_require=test_requirements,
    url='https://github.com/hide_ous/knotmosaic',
    version='0.1.0',
    zip_safe=False,
)
