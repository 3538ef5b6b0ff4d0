#pragma once

#include "hypgeom/asymptotics.hpp"
#include "hypgeom/class_t.hpp"
#include "hypgeom/errors.hpp"
#include "hypgeom/figure.hpp"
#include "hypgeom/gamma.hpp"
#include "hypgeom/geometry.hpp"
#include "hypgeom/hyp2f1.hpp"
#include "hypgeom/json_io.hpp"
#include "hypgeom/params.hpp"
#include "hypgeom/rational.hpp"
#include "hypgeom/series.hpp"
