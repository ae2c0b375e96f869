#pragma once

#include "recolour/colouring.hpp"
#include "recolour/errors.hpp"
#include "recolour/exact.hpp"
#include "recolour/generators.hpp"
#include "recolour/gn_family.hpp"
#include "recolour/graph.hpp"
#include "recolour/matching.hpp"
#include "recolour/mixing_3k1.hpp"
#include "recolour/recolouring.hpp"
#include "recolour/structure.hpp"
