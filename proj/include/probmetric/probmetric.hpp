// Copyright 2026 The probmetric Authors
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

// Umbrella header.

#ifndef PROBMETRIC_PROBMETRIC_HPP_
#define PROBMETRIC_PROBMETRIC_HPP_

#include "probmetric/descriptor.hpp"
#include "probmetric/gauges.hpp"
#include "probmetric/generate.hpp"
#include "probmetric/gluing.hpp"
#include "probmetric/instance_io.hpp"
#include "probmetric/law.hpp"
#include "probmetric/metric_value.hpp"
#include "probmetric/metrics.hpp"
#include "probmetric/minimal.hpp"
#include "probmetric/oracles.hpp"
#include "probmetric/random_variable.hpp"
#include "probmetric/rational.hpp"
#include "probmetric/space.hpp"
#include "probmetric/suites.hpp"
#include "probmetric/transport.hpp"

#endif  // PROBMETRIC_PROBMETRIC_HPP_
