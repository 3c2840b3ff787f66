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
"""edit"""

from .deform import apply
from .deform import cost
from .deform import enumerate_applicable
from .deform import enumerate_moves
from .deform import inverse
from .deform import replay
from .deform import total_cost
from .deform import DeformationSequence
from .canonical import canonicalize
from .canonical import connect
from .canonical import minimalize
from .canonical import reduce_cycle
from .canonical import reduce_path
from .canonical import CanonicalizationResult
from .persistence import bottleneck
from .persistence import bottleneck_oracle
from .persistence import extended_diagram
from .persistence import reduction_diagram
from .distance import beam_search_upper
from .distance import distance_report
from .distance import rewrite_deletions
from .distance import upper_bound_canonical
from .distance import DistanceReport
from .distance import SearchParams
from .sampler import random_graph
from .experiment import stability_experiment
from .config import ArgConfig
from .config import Environment

__all__ = [
    'apply', 'beam_search_upper', 'bottleneck', 'bottleneck_oracle', 'canonicalize', 'connect', 'cost',
    'distance_report', 'enumerate_applicable', 'enumerate_moves', 'extended_diagram', 'inverse', 'minimalize',
    'random_graph', 'reduce_cycle', 'reduce_path', 'reduction_diagram', 'replay', 'rewrite_deletions',
    'stability_experiment', 'total_cost', 'upper_bound_canonical', 'ArgConfig', 'CanonicalizationResult',
    'DeformationSequence', 'DistanceReport', 'Environment', 'SearchParams'
]
