#pragma once

#include "abm.hpp"
#include "convergence.hpp"
#include "errors.hpp"
#include "fractional_order.hpp"
#include "gdm.hpp"
#include "grid.hpp"
#include "rl_integral.hpp"
#include "system.hpp"
#include "weights.hpp"
