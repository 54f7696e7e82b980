#pragma once

#include "coherent/analytic_state.hpp"
#include "coherent/compensated_sum.hpp"
#include "coherent/error.hpp"
#include "coherent/explorer.hpp"
#include "coherent/functionals.hpp"
#include "coherent/gauss_rules.hpp"
#include "coherent/phase_space.hpp"
#include "coherent/quadrature.hpp"
#include "coherent/serialize.hpp"
#include "coherent/version.hpp"
#include "coherent/weyl.hpp"
