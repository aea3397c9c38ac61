#pragma once

#include "polyhs/apgraphs.hpp"
#include "polyhs/bits.hpp"
#include "polyhs/constructions.hpp"
#include "polyhs/core.hpp"
#include "polyhs/embeddings.hpp"
#include "polyhs/geometry.hpp"
#include "polyhs/rational.hpp"
#include "polyhs/solvers.hpp"
