/*
 * Copyright 2026 The planar-frames Authors
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

#include "planar_frames/analysis.hpp"
#include "planar_frames/closed_form.hpp"
#include "planar_frames/core.hpp"
#include "planar_frames/directions.hpp"
#include "planar_frames/oracle.hpp"
#include "planar_frames/parseval.hpp"
#include "planar_frames/restricted.hpp"
#include "planar_frames/scalability.hpp"
#include "planar_frames/two_vector.hpp"
