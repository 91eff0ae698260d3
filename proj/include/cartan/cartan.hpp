/*
   Copyright 2026 The cartan-algebra authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CARTAN_CARTAN_HPP
#define CARTAN_CARTAN_HPP

#include "algebra.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "field.hpp"
#include "group.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "oracle.hpp"
#include "polynomial.hpp"
#include "presets.hpp"
#include "radical.hpp"
#include "torus.hpp"
#include "units.hpp"

#endif
