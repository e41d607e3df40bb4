#pragma once

#include "critorbit/cycles.hpp"
#include "critorbit/errors.hpp"
#include "critorbit/field.hpp"
#include "critorbit/map.hpp"
#include "critorbit/measure.hpp"
#include "critorbit/obstruction.hpp"
#include "critorbit/orbit.hpp"
#include "critorbit/polynomial.hpp"
#include "critorbit/roots.hpp"
#include "critorbit/scan.hpp"
#include "critorbit/xcomplex.hpp"
