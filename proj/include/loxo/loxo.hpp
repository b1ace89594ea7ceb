#pragma once

#include "loxo/autoparallel.hpp"
#include "loxo/chart.hpp"
#include "loxo/conformal.hpp"
#include "loxo/connection.hpp"
#include "loxo/curvature.hpp"
#include "loxo/curve.hpp"
#include "loxo/embed.hpp"
#include "loxo/errors.hpp"
#include "loxo/frame.hpp"
#include "loxo/gaussfam.hpp"
#include "loxo/mercator.hpp"
#include "loxo/quadrature.hpp"
#include "loxo/specialfun.hpp"
