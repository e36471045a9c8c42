# Copyright 2026 The causemap Authors.
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

"""Causation frames and belief graphs from comment corpora."""

from ._causemap import (
    ArgumentError,
    DataError,
    Snapshot,
    __version__,
    analyze,
    build_graph,
    content_lemmas,
    export_gexf,
    extract,
    lemmatize,
    relations_json,
    shared_lemma_weight,
    split_sentences,
    tokenize,
)

__all__ = [
    "ArgumentError",
    "DataError",
    "Snapshot",
    "__version__",
    "analyze",
    "build_graph",
    "content_lemmas",
    "export_gexf",
    "extract",
    "lemmatize",
    "relations_json",
    "shared_lemma_weight",
    "split_sentences",
    "tokenize",
]
