#pragma once

#include "dgfrft/core.hpp"
#include "dgfrft/digraph.hpp"
#include "dgfrft/experiments.hpp"
#include "dgfrft/filters.hpp"
#include "dgfrft/hermitian_eigen.hpp"
#include "dgfrft/io.hpp"
#include "dgfrft/laplacian.hpp"
#include "dgfrft/metrics.hpp"
#include "dgfrft/rng.hpp"
#include "dgfrft/transform.hpp"
