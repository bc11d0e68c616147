// Umbrella header.
#pragma once

#include "symprod/assignment.hpp"
#include "symprod/core.hpp"
#include "symprod/diagonal.hpp"
#include "symprod/field_io.hpp"
#include "symprod/lemmas.hpp"
#include "symprod/metric.hpp"
#include "symprod/monodromy.hpp"
#include "symprod/random.hpp"
#include "symprod/selection.hpp"
