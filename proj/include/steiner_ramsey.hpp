#pragma once

#include "steiner_ramsey/combinatorics.hpp"
#include "steiner_ramsey/core.hpp"
#include "steiner_ramsey/errors.hpp"
#include "steiner_ramsey/fixtures.hpp"
#include "steiner_ramsey/halesjewett.hpp"
#include "steiner_ramsey/hypergraph.hpp"
#include "steiner_ramsey/negative.hpp"
#include "steiner_ramsey/oracle.hpp"
#include "steiner_ramsey/partite.hpp"
#include "steiner_ramsey/pictures.hpp"
#include "steiner_ramsey/pipelines.hpp"
#include "steiner_ramsey/prelim.hpp"
#include "steiner_ramsey/serialize.hpp"
