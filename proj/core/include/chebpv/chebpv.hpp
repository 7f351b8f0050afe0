#pragma once

#include "chebpv/chebyshev.hpp"
#include "chebpv/errors.hpp"
#include "chebpv/expansion.hpp"
#include "chebpv/expr.hpp"
#include "chebpv/oracle.hpp"
#include "chebpv/pv.hpp"
