# Copyright 2026 The Clustval Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
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
"""Graph clustering validity by ensemble consensus."""

from clustval._clustval import (
    Graph,
    align_labels,
    cluster,
    derive_seed,
    dunn_index,
    ensemble,
    error_rate,
    min_cut,
    modularity,
    pair_agreement,
    planted_partition,
    run_phased,
    select,
    select_most_similar,
    similarity_matrix,
    wgc_cluster,
)

__all__ = [
    "Graph",
    "align_labels",
    "cluster",
    "derive_seed",
    "dunn_index",
    "ensemble",
    "error_rate",
    "min_cut",
    "modularity",
    "pair_agreement",
    "planted_partition",
    "run_phased",
    "select",
    "select_most_similar",
    "similarity_matrix",
    "wgc_cluster",
]
