#pragma once

#include "thompson/action.hpp"
#include "thompson/binary_seq.hpp"
#include "thompson/boundary.hpp"
#include "thompson/cayley.hpp"
#include "thompson/config.hpp"
#include "thompson/diagram.hpp"
#include "thompson/errors.hpp"
#include "thompson/folner.hpp"
#include "thompson/marginal.hpp"
#include "thompson/pipeline.hpp"
#include "thompson/tree.hpp"
