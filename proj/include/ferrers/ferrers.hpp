#pragma once

#include "ferrers/audit.hpp"
#include "ferrers/counting.hpp"
#include "ferrers/diagonal.hpp"
#include "ferrers/errors.hpp"
#include "ferrers/exact_cover.hpp"
#include "ferrers/geometry.hpp"
#include "ferrers/max_packing.hpp"
#include "ferrers/packing_io.hpp"
#include "ferrers/partition.hpp"
#include "ferrers/properties.hpp"
#include "ferrers/random.hpp"
#include "ferrers/render.hpp"
#include "ferrers/reports.hpp"
#include "ferrers/sampling.hpp"
#include "ferrers/tiling.hpp"
