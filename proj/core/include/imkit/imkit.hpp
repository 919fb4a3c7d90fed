// Copyright 2026 The imkit Authors
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

#ifndef IMKIT_IMKIT_HPP
#define IMKIT_IMKIT_HPP

#include "imkit/conic.hpp"
#include "imkit/decompositions.hpp"
#include "imkit/errors.hpp"
#include "imkit/linalg.hpp"
#include "imkit/measures.hpp"
#include "imkit/sdp.hpp"
#include "imkit/transforms.hpp"
#include "imkit/version.hpp"

#endif // IMKIT_IMKIT_HPP
