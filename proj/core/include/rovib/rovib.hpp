#pragma once

#include "rovib/errors.hpp"
#include "rovib/nu_engine.hpp"
#include "rovib/oracle.hpp"
#include "rovib/potential.hpp"
#include "rovib/quadrature.hpp"
#include "rovib/registry.hpp"
#include "rovib/specfun.hpp"
#include "rovib/spectrum.hpp"
#include "rovib/units.hpp"
#include "rovib/wavefn.hpp"
