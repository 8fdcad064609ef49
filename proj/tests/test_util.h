// Copyright 2025 The ldlsim Authors
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

#ifndef LDLSIM_TESTS_TEST_UTIL_H
#define LDLSIM_TESTS_TEST_UTIL_H

#include "ldlsim/generators.h"

namespace ldlsim::testing {

using ldlsim::planted_width_graph;
using ldlsim::random_circuit;
using ldlsim::random_graph;
using ldlsim::random_matrix;
using ldlsim::random_phased;
using ldlsim::random_symmetric;
using ldlsim::random_vector;

}  // namespace ldlsim::testing

#endif
