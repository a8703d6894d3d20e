/*
   Copyright 2026 The scatlin Authors

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

#ifndef SCATLIN_SCATLIN_HPP
#define SCATLIN_SCATLIN_HPP

#include "equiv.hpp"
#include "error.hpp"
#include "family.hpp"
#include "field.hpp"
#include "geom.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "mrd.hpp"
#include "numtheory.hpp"
#include "parallel.hpp"
#include "qpoly.hpp"
#include "scatter.hpp"

#endif  // SCATLIN_SCATLIN_HPP
