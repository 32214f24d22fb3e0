#pragma once

#include "gaussq/barycentric.hpp"
#include "gaussq/errors.hpp"
#include "gaussq/fixed_point.hpp"
#include "gaussq/hermite.hpp"
#include "gaussq/laguerre.hpp"
#include "gaussq/oracle.hpp"
#include "gaussq/rule.hpp"
#include "gaussq/scalar.hpp"
#include "gaussq/taylor.hpp"
