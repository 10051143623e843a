#pragma once

#include "hilbertkit/chern.hpp"
#include "hilbertkit/grobner.hpp"
#include "hilbertkit/matrix.hpp"
#include "hilbertkit/multipoly.hpp"
#include "hilbertkit/partition.hpp"
#include "hilbertkit/poly_io.hpp"
#include "hilbertkit/rational.hpp"
#include "hilbertkit/reductions.hpp"
#include "hilbertkit/series.hpp"
#include "hilbertkit/symfun.hpp"
#include "hilbertkit/transversality.hpp"
#include "hilbertkit/unipoly.hpp"
