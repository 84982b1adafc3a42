// Copyright 2026 The draftgame Authors
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

// Library umbrella: everything except the HTTP service and the CLI, which
// pull in the vendored server and argument parser.

#ifndef DRAFTGAME_HPP_
#define DRAFTGAME_HPP_

#include "draftgame/core.hpp"
#include "draftgame/engine.hpp"
#include "draftgame/io.hpp"
#include "draftgame/matching.hpp"
#include "draftgame/oracle.hpp"
#include "draftgame/otp.hpp"
#include "draftgame/reduction.hpp"
#include "draftgame/solver.hpp"

#endif  // DRAFTGAME_HPP_
