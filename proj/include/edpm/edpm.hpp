// Copyright 2026 The edpm Authors
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

#include "edpm/booth.hpp"
#include "edpm/contracts.hpp"
#include "edpm/curves.hpp"
#include "edpm/field.hpp"
#include "edpm/group_op.hpp"
#include "edpm/ledger.hpp"
#include "edpm/oracle.hpp"
#include "edpm/point.hpp"
#include "edpm/scalar_mul.hpp"
#include "edpm/vectors.hpp"
#include "edpm/wide.hpp"
