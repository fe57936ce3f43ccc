#pragma once

#include "bdg/birational.hpp"
#include "bdg/boundary.hpp"
#include "bdg/construct.hpp"
#include "bdg/corpus.hpp"
#include "bdg/cycle.hpp"
#include "bdg/errors.hpp"
#include "bdg/graph.hpp"
#include "bdg/matrix.hpp"
#include "bdg/numeric.hpp"
#include "bdg/singularity.hpp"
#include "bdg/textio.hpp"
