#pragma once

#include <sdcm/numeric.hpp>
#include <sdcm/error.hpp>
#include <sdcm/polynomial.hpp>
#include <sdcm/laurent_series.hpp>
#include <sdcm/curvature.hpp>
#include <sdcm/series_parse.hpp>
#include <sdcm/model.hpp>
#include <sdcm/report.hpp>
#include <sdcm/validate.hpp>
#include <sdcm/homomorphism.hpp>
#include <sdcm/model_io.hpp>
#include <sdcm/metric_graph.hpp>
#include <sdcm/metric_checks.hpp>
#include <sdcm/duality.hpp>
#include <sdcm/change_of_rings.hpp>
#include <sdcm/examples.hpp>
