# Copyright 2026 The semtree Authors.
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

"""Sub-vector decomposition of word embeddings: semantic trees, networks and benchmarks."""

from ._semtree import (
    EmbeddingSpace,
    SemanticTree,
    SemtreeError,
    build_tree,
    children,
    complete_category,
    cosine_neighbors,
    eval_analogy,
    eval_category,
    f1,
    is_subvector,
    load_glove,
    load_word2vec,
    residual,
    root,
    set_num_threads,
    ssn_branch,
    ssn_filter,
    ssn_report,
    vec_of_add,
    vec_of_avr,
    vec_of_mul,
    write_glove,
    write_word2vec,
)

__all__ = [
    "EmbeddingSpace",
    "SemanticTree",
    "SemtreeError",
    "build_tree",
    "children",
    "complete_category",
    "cosine_neighbors",
    "eval_analogy",
    "eval_category",
    "f1",
    "is_subvector",
    "load_glove",
    "load_word2vec",
    "residual",
    "root",
    "set_num_threads",
    "ssn_branch",
    "ssn_filter",
    "ssn_report",
    "vec_of_add",
    "vec_of_avr",
    "vec_of_mul",
    "write_glove",
    "write_word2vec",
]
