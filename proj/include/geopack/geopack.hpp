#pragma once
#ifndef GEOPACK_GEOPACK_HPP
#define GEOPACK_GEOPACK_HPP

#include "geopack/geometry.hpp"
#include "geopack/polygon.hpp"
#include "geopack/triangulation.hpp"
#include "geopack/geodesic.hpp"
#include "geopack/chord.hpp"
#include "geopack/one_center.hpp"
#include "geopack/hull.hpp"
#include "geopack/oracles.hpp"
#include "geopack/cover_core.hpp"
#include "geopack/random.hpp"
#include "geopack/io.hpp"
#include "geopack/svg.hpp"

#endif  // GEOPACK_GEOPACK_HPP
