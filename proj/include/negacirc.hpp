/*
 * Copyright 2026 The negacirc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "negacirc/support.hpp"
#include "negacirc/integers.hpp"
#include "negacirc/fields.hpp"
#include "negacirc/polynomials.hpp"
#include "negacirc/classifier.hpp"
#include "negacirc/nega_codes.hpp"
#include "negacirc/census.hpp"
#include "negacirc/bounds.hpp"
#include "negacirc/survey.hpp"
#include "negacirc/serialize.hpp"
