#pragma once

#include "updraw/errors.hpp"
#include "updraw/graph.hpp"
#include "updraw/report.hpp"
#include "updraw/geometry.hpp"
#include "updraw/layouts.hpp"
#include "updraw/colourings.hpp"
#include "updraw/constructions.hpp"
#include "updraw/subdivisions.hpp"
#include "updraw/oracle.hpp"
#include "updraw/io.hpp"
