#pragma once

// Umbrella header: the whole library in one include.

#include "flagberg/rational.hpp"
#include "flagberg/linalg.hpp"
#include "flagberg/poly.hpp"
#include "flagberg/jets.hpp"
#include "flagberg/polymatrix.hpp"
#include "flagberg/rootsystems.hpp"
#include "flagberg/flagstruct.hpp"
#include "flagberg/potential.hpp"
#include "flagberg/kahlergeom.hpp"
#include "flagberg/bergman.hpp"
#include "flagberg/kempf_numeric.hpp"
#include "flagberg/config.hpp"
#include "flagberg/report.hpp"
#include "flagberg/runner.hpp"
