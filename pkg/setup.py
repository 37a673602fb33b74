# -*- coding: utf-8 -*-
import pathlib
from setuptools import setup, find_packages

packages = find_packages(include=['src', 'src.*'])

# The directory containing this file
HERE = pathlib.Path(__file__).parent

# The text of the README file
README = (HERE / "README.md").read_text()

package_data = {'': ['*']}

entry_points = {
    'console_scripts': ['rc = src.librc.rc:main']
}

setup_kwargs = {
    'name': 'rclab',
    'version': '0.3.0',
    'description': "Exact epsilon-relaxation complexity of lattice-convex sets",
    'classifiers': [
        # How mature is this project? Common values are
        #   3 - Alpha
        #   4 - Beta
        #   5 - Production/Stable
        'Development Status :: 3 - Alpha',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: GNU General Public License v3 or later (GPLv3+)',

        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.8',
    ],
    'long_description_content_type': "text/markdown",
    'long_description': README,
    'packages': packages,
    'package_data': package_data,
    'entry_points': entry_points,
    'install_requires': ['networkx>=2.5'],
    'python_requires': '>=3.6,<4.0',
}

setup(**setup_kwargs)
