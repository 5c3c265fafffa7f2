// Copyright 2026 The OST Authors
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

#ifndef OST_OST_HPP_
#define OST_OST_HPP_

#include "ost/baselines.hpp"
#include "ost/bench.hpp"
#include "ost/flow_solution.hpp"
#include "ost/generator.hpp"
#include "ost/graph.hpp"
#include "ost/io.hpp"
#include "ost/oracle.hpp"
#include "ost/ost_dp.hpp"
#include "ost/rng.hpp"
#include "ost/solvers.hpp"
#include "ost/validate.hpp"

#endif  // OST_OST_HPP_
