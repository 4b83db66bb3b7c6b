# -*- coding: utf-8 -*-

# This file exists for readthedocs

import setuptools

package_dir = {'': 'src'}

packages = ['ddca_verify', 'ddca_verify.ddca', 'ddca_verify.suites']

package_data = {'': ['*']}

install_requires = ['sympy>=1.13,<2.0']

extras_require = \
    {u'docs': ['sphinx-autodoc-typehints>=1.3,<2.0', 'sphinx>=1.7,<2.0']}

entry_points = \
    {'console_scripts': ['ddca-verify = ddca_verify.cli:main']}

setuptools.setup(
    name='ddca-verify',
    version='0.1.0',
    description='Exact symbolic verification of identities in deformed double current algebras.',
    author='Andrew Cordery',
    author_email='cordery@gmail.com',
    package_dir=package_dir,
    packages=packages,
    package_data=package_data,
    install_requires=install_requires,
    extras_require=extras_require,
    entry_points=entry_points,
    python_requires='>=3.8,<4.0',
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
    ]
)
