#pragma once

#include "metriclie/classify.hpp"
#include "metriclie/connection.hpp"
#include "metriclie/errors.hpp"
#include "metriclie/families.hpp"
#include "metriclie/geodesics.hpp"
#include "metriclie/lie_algebra.hpp"
#include "metriclie/matrix.hpp"
#include "metriclie/quadratic_space.hpp"
#include "metriclie/rational.hpp"
#include "metriclie/structure.hpp"
