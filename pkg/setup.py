from setuptools import setup, find_packages

import os
from codecs import open

install_requires = [
        'numpy>=1.17',
        'pandas>=1.1.2',
    ]

tests_require = [
        'hypothesis>=5.0',
    ]

#Get version
here = os.path.abspath(os.path.dirname(__file__))
_version = {}
_version_path = os.path.join(here, 'TenfoldWay', '__version__.py')
with open(_version_path, 'r', 'utf-8') as f:
    exec(f.read(), _version)

#Get README.md for long description
with open('README.md', 'r', 'utf-8') as f:
    readme = f.read()

setup(
    name='TenfoldWay',
    version=_version['__version__'],
    description="Exact classification of real super division algebras, Clifford periodicity and the threefold way",
    long_description=readme,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    install_requires=install_requires,
    tests_require=tests_require,
    extras_require={'test': tests_require},
    entry_points={
        'console_scripts': ['tenfold = TenfoldWay.cli:main'],
    },
    license='Apache 2.0',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Environment :: Console',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Operating System :: Unix',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
)
