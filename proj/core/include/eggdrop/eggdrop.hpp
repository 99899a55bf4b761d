#pragma once

#include "eggdrop/analytic_solver.hpp"
#include "eggdrop/baselines.hpp"
#include "eggdrop/capacity.hpp"
#include "eggdrop/errors.hpp"
#include "eggdrop/policy.hpp"
#include "eggdrop/verifier.hpp"
