# Copyright 2026 The Authors.
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
"""Rating-aware video summarization with learned set-function mixtures."""

from vsumm._vsumm import (
    MeasureParams,
    Model,
    Segment,
    Video,
    VsummError,
    budget_in_snippets,
    decompose_score,
    generate_synthetic,
    ground_truth,
    load_manifest,
    load_model,
    random_summary,
    save_manifest,
    save_model,
    score_bounds,
    score_report,
    score_summary,
    summarize,
    train,
    verify_bounds,
)

__all__ = [
    "MeasureParams",
    "Model",
    "Segment",
    "Video",
    "VsummError",
    "budget_in_snippets",
    "decompose_score",
    "generate_synthetic",
    "ground_truth",
    "load_manifest",
    "load_model",
    "random_summary",
    "save_manifest",
    "save_model",
    "score_bounds",
    "score_report",
    "score_summary",
    "summarize",
    "train",
    "verify_bounds",
]
