#pragma once

#include "rkstab/butcher.hpp"
#include "rkstab/classify.hpp"
#include "rkstab/linalg.hpp"
#include "rkstab/nodes.hpp"
#include "rkstab/numeric.hpp"
#include "rkstab/poly_matrix.hpp"
#include "rkstab/polynomial.hpp"
#include "rkstab/quadratic_ext.hpp"
#include "rkstab/rational.hpp"
#include "rkstab/report.hpp"
#include "rkstab/routh.hpp"
#include "rkstab/stability.hpp"
#include "rkstab/stability_function.hpp"
#include "rkstab/sturm.hpp"
#include "rkstab/validation.hpp"
