#pragma once

#include "usets/decision.hpp"
#include "usets/errors.hpp"
#include "usets/fuzzy_set.hpp"
#include "usets/graded_sets.hpp"
#include "usets/interval.hpp"
#include "usets/soft_set.hpp"
#include "usets/topology.hpp"
