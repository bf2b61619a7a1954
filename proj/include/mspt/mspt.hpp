// Copyright 2026 The mspt Authors
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
#pragma once

#include "mspt/errors.hpp"
#include "mspt/expansion.hpp"
#include "mspt/freq_series.hpp"
#include "mspt/jc.hpp"
#include "mspt/metrics.hpp"
#include "mspt/oracle.hpp"
#include "mspt/runner.hpp"
#include "mspt/scenario.hpp"
#include "mspt/serialize.hpp"
#include "mspt/signal.hpp"
#include "mspt/spectral.hpp"
#include "mspt/superop.hpp"
#include "mspt/svg.hpp"
#include "mspt/text.hpp"
#include "mspt/types.hpp"
