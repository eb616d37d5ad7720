#pragma once

#include "trigspline/analog.hpp"
#include "trigspline/basis.hpp"
#include "trigspline/cyclic_tridiagonal.hpp"
#include "trigspline/error.hpp"
#include "trigspline/factors.hpp"
#include "trigspline/grid.hpp"
#include "trigspline/harmonics.hpp"
#include "trigspline/interp_factors.hpp"
#include "trigspline/signs.hpp"
#include "trigspline/spline.hpp"
