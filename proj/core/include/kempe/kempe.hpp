// Copyright 2026 The kempe Authors
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

#include "kempe/color_set.hpp"
#include "kempe/coloring.hpp"
#include "kempe/error.hpp"
#include "kempe/exact.hpp"
#include "kempe/generators.hpp"
#include "kempe/io.hpp"
#include "kempe/multigraph.hpp"
#include "kempe/report.hpp"
#include "kempe/structure.hpp"
#include "kempe/verify.hpp"
