# -*- coding: UTF-8 -*-
################################################################################
#
#   Copyright (c) 2026  The reebedit Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
################################################################################
"""
Setup script.
"""
from io import open
import setuptools
from setuptools import setup

install_requires = [
    "numpy>=1.17",
    "networkx>=2.5",
    "joblib>=0.14",
    "tqdm",
    "configparser",
]

with open("README.md", "r", encoding='utf8') as fh:
    long_description = fh.read()
setup(
    name="reebedit",
    version="0.1.0",
    author="The reebedit Authors",
    description="Edit distance bounds and deformations for labeled Reeb graphs of surfaces.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    install_requires=install_requires,
    extras_require={"test": ["pytest", "hypothesis"]},
    python_requires=">=3.6",
    packages=setuptools.find_packages(),
    package_data={"reebedit": ["config.ini", "*.sh"]},
    include_package_data=True,
    entry_points={"console_scripts": ["reebedit=reebedit.run:main"]},
    platforms="any",
    keywords=("reeb graph edit distance persistence"),
    license='Apache 2.0',
    classifiers=[
        'License :: OSI Approved :: Apache Software License',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.6',
        'Programming Language :: Python :: 3.7',
        'Programming Language :: Python :: 3.8',
    ],
)
