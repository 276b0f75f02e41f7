// Copyright 2026 The qcontrol Authors
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

#pragma once

#include "qcontrol/channel_maps.hpp"
#include "qcontrol/complex_matrix.hpp"
#include "qcontrol/decay.hpp"
#include "qcontrol/density_matrix.hpp"
#include "qcontrol/dynamics.hpp"
#include "qcontrol/eigen.hpp"
#include "qcontrol/entanglement.hpp"
#include "qcontrol/errors.hpp"
#include "qcontrol/invariants.hpp"
#include "qcontrol/pauli.hpp"
#include "qcontrol/random_states.hpp"
