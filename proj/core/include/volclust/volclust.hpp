#pragma once

#include "volclust/acf.hpp"
#include "volclust/asym.hpp"
#include "volclust/cluster.hpp"
#include "volclust/csv.hpp"
#include "volclust/date.hpp"
#include "volclust/errors.hpp"
#include "volclust/histogram.hpp"
#include "volclust/output.hpp"
#include "volclust/pipeline.hpp"
#include "volclust/returns.hpp"
#include "volclust/rng.hpp"
#include "volclust/series.hpp"
#include "volclust/surrogate.hpp"
