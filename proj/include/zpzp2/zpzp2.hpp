#pragma once

#include "combinatorics.hpp"
#include "ring.hpp"
#include "gray.hpp"
#include "gfp_matrix.hpp"
#include "code.hpp"
#include "span_kernel.hpp"
#include "construct.hpp"
#include "serialize.hpp"
#include <zpzp2/campaign.hpp>
