// Copyright 2026 The cpmx Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "cpmx/engine.hpp"
#include "cpmx/error.hpp"
#include "cpmx/index_io.hpp"
#include "cpmx/intersector.hpp"
#include "cpmx/suffix_index.hpp"
#include "cpmx/text.hpp"
