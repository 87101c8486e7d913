#pragma once

#include "jtheta/applications.hpp"
#include "jtheta/approx.hpp"
#include "jtheta/distribution.hpp"
#include "jtheta/errors.hpp"
#include "jtheta/estimation.hpp"
#include "jtheta/goodness_of_fit.hpp"
#include "jtheta/sampling.hpp"
#include "jtheta/specfun.hpp"
