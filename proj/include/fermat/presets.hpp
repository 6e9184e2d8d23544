/*
   Copyright 2026 The fermat-hodge authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FERMAT_PRESETS_HPP
#define FERMAT_PRESETS_HPP

#include <string>
#include <vector>

#include "fermat/fake_cycles.hpp"

namespace fermat {

/// Named c-vector presets for the three desk cases (d, n) = (3,6), (4,4), (6,2):
/// a fake variant and a true-linear variant each, plus the all-ones cubic.
std::vector<std::string> preset_names();
FakeCycleSpec preset_spec(const std::string& name);

/// Deterministic list of `count` distinct valid non-true-linear c-vectors for
/// the given case, built from twisted unit-circle elements u/conj(u).
std::vector<FakeCycleSpec> sample_specs(int d, int n, int count);

}  // namespace fermat

#endif
