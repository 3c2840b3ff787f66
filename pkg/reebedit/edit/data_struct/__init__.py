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
#################################################################################
"""
init
"""

from . import utils
from . import errors
from .graph import LabeledReebGraph
from .graph import ValidationReport
from .graph import VertexClass
from .ops import Birth
from .ops import Death
from .ops import Relabel
from .ops import K1
from .ops import K2
from .ops import K3
from .diagram import BottleneckValue
from .diagram import PersistenceDiagram
from . import corpus

__all__ = [
    'Birth', 'BottleneckValue', 'corpus', 'Death', 'errors', 'K1', 'K2', 'K3', 'LabeledReebGraph',
    'PersistenceDiagram', 'Relabel', 'utils', 'ValidationReport', 'VertexClass'
]
