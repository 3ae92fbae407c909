#pragma once

#include "astk/clique.hpp"
#include "astk/datasets.hpp"
#include "astk/errors.hpp"
#include "astk/generators.hpp"
#include "astk/graph.hpp"
#include "astk/metrics.hpp"
#include "astk/report.hpp"
#include "astk/rng.hpp"
#include "astk/spectrum.hpp"
