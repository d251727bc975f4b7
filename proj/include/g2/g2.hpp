// Copyright 2026 The g2pair Authors
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

// Umbrella header for the g2pair library.

#include "g2/appendix_tables.hpp"
#include "g2/binary_form.hpp"
#include "g2/error.hpp"
#include "g2/field.hpp"
#include "g2/invariants.hpp"
#include "g2/mestre.hpp"
#include "g2/quad_ext.hpp"
#include "g2/quadrics.hpp"
#include "g2/rational.hpp"
#include "g2/siegel.hpp"
#include "g2/squarefree.hpp"
#include "g2/transvectant.hpp"
#include "g2/universal.hpp"
