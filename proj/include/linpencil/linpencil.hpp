// Copyright 2026 The linpencil Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "algebraic.hpp"
#include "basis.hpp"
#include "eigen.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "matpoly.hpp"
#include "numeric.hpp"
#include "pencil.hpp"
#include "triple.hpp"
