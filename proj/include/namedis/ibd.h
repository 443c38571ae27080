// Copyright 2026 The namedis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Initial-based disambiguation baselines. All three compare the normalized
// joined surname exactly and read given names from the recorded (possibly
// initialized) form. Mentions without given-name tokens stay singletons.

#ifndef NAMEDIS_IBD_H_
#define NAMEDIS_IBD_H_

#include "namedis/corpus.h"

namespace namedis {

// Same surname and same first initial.
Clustering fd_partition(const Corpus& corpus);

// Same surname and identical initial signature.
Clustering ad_partition(const Corpus& corpus);

// Within each first-initial block, identical signatures merge, and a
// signature merges with the signatures that strictly extend it when exactly
// one distinct extension exists in the block.
Clustering hd_partition(const Corpus& corpus);

}  // namespace namedis

#endif  // NAMEDIS_IBD_H_
