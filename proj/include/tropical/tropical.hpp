#pragma once

// Umbrella header for the library part (the interpreter lives under mathpar/).
#include "tropical/error.hpp"
#include "tropical/graph.hpp"
#include "tropical/lp.hpp"
#include "tropical/matrix.hpp"
#include "tropical/scalar.hpp"
#include "tropical/semiring.hpp"
#include "tropical/solvers.hpp"
