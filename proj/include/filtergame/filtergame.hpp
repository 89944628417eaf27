// Copyright 2026 The filtergame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header.

#ifndef FILTERGAME_FILTERGAME_HPP_
#define FILTERGAME_FILTERGAME_HPP_

#include "filtergame/attacker.hpp"
#include "filtergame/beliefs.hpp"
#include "filtergame/config.hpp"
#include "filtergame/consumer.hpp"
#include "filtergame/equilibrium.hpp"
#include "filtergame/format.hpp"
#include "filtergame/numeric.hpp"
#include "filtergame/oracle.hpp"
#include "filtergame/parallel.hpp"
#include "filtergame/params.hpp"
#include "filtergame/payoffs.hpp"
#include "filtergame/report.hpp"
#include "filtergame/sweep.hpp"
#include "filtergame/validation.hpp"
#include "filtergame/vot.hpp"

#endif  // FILTERGAME_FILTERGAME_HPP_
