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
"""Smoke tests for the Python module."""

import itertools
import math

import pytest

import clustval

TRIANGLES = [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0),
             (3, 4, 1.0), (4, 5, 1.0), (3, 5, 1.0)]


def test_graph_round_trip():
    g = clustval.Graph(6, TRIANGLES)
    assert g.vertex_count == 6
    assert g.edge_count == 6
    assert g.total_weight == 6.0
    assert clustval.Graph.parse(g.to_edge_list()) == g


def test_invalid_input_raises_value_error():
    with pytest.raises(ValueError, match="self-loop"):
        clustval.Graph(2, [(1, 1, 1.0)])
    with pytest.raises(ValueError):
        clustval.cluster(clustval.Graph(2, []), algorithm="kmeans")
    with pytest.raises(ValueError):
        clustval.modularity(clustval.Graph(3, []), [0, 0, 1])


def test_measures_on_triangles():
    g = clustval.Graph(6, TRIANGLES)
    split = [0, 0, 0, 1, 1, 1]
    assert clustval.modularity(g, split) == pytest.approx(0.5, abs=1e-12)
    assert clustval.modularity(g, [0] * 6) == pytest.approx(0.0, abs=1e-12)
    assert clustval.dunn_index(g, split) == 6.0


def test_pair_agreement_matches_pair_loop():
    a = [0, 0, 1, 1, 2, 2, 0]
    b = [1, 1, 1, 0, 0, 2, 2]
    expected = sum((a[i] == a[j]) == (b[i] == b[j])
                   for i, j in itertools.combinations(range(len(a)), 2))
    assert clustval.pair_agreement(a, b) == expected
    assert clustval.pair_agreement(a, a) == math.comb(len(a), 2)


def test_alignment():
    aligned, mapping = clustval.align_labels([1, 1, 0, 0, 0, 0],
                                             [0, 0, 0, 1, 1, 1])
    assert aligned == [0, 0, 1, 1, 1, 1]
    assert mapping == {0: 1, 1: 0}
    count, fraction = clustval.error_rate([1, 1, 0, 0, 0, 0],
                                          [0, 0, 0, 1, 1, 1])
    assert count == 1
    assert fraction == pytest.approx(1 / 6)


def test_clusterers_recover_planted_blocks():
    g, truth = clustval.planted_partition(90, 3, 0.4, 0.02, seed=3)
    labels = clustval.cluster(g, algorithm="em", k=3, seed=1, restarts=3)
    assert clustval.error_rate(labels, truth)[0] == 0
    runs = clustval.ensemble(g, 4, seed=9, algorithm="lp", threads=2)
    assert runs == clustval.ensemble(g, 4, seed=9, algorithm="lp")
    assert len(runs) == 4 and all(len(r) == 90 for r in runs)


def test_min_cut_and_wgc():
    w = [[0, 5, 5, 0], [5, 0, 5, 1], [5, 5, 0, 0], [0, 1, 0, 0]]
    assert clustval.min_cut(w) == (1.0, [3])
    assert clustval.wgc_cluster(w, target_groups=2) == [[0, 1, 2], [3]]
    with pytest.raises(ValueError):
        clustval.wgc_cluster(w)


def test_select_most_similar():
    sim = [[0, 10, 0], [10, 0, 0], [0, 0, 0]]
    assert clustval.select_most_similar(sim, [[0, 1], [2]]) == 0


def test_select_pipeline():
    g, truth = clustval.planted_partition(60, 2, 0.4, 0.02, seed=5)
    runs = [truth, truth, [0] * 60]
    report = clustval.select(runs, target_groups=2, graph=g, truth=truth)
    assert report["selected"] == 0
    assert report["groups"] == [[0, 1], [2]]
    assert report["runs"][0]["error_fraction"] == 0.0
    assert report["similarity"][0][1] == math.comb(60, 2)


def test_run_phased_is_prefix_consistent():
    g, truth = clustval.planted_partition(80, 2, 0.4, 0.02, seed=6)
    phases = clustval.run_phased(g, [0.5, 1.0], seed=2, truth=truth, k=2,
                                 restarts=3)
    assert [len(p["vertices"]) for p in phases] == [40, 80]
    final = dict(zip(phases[1]["vertices"], phases[1]["labels"]))
    assert all(final[v] == l
               for v, l in zip(phases[0]["vertices"], phases[0]["labels"]))
    assert phases[1]["error_fraction"] is not None
