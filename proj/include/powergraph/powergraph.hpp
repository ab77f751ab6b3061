#pragma once

#include "powergraph/bitset.hpp"
#include "powergraph/classify.hpp"
#include "powergraph/errors.hpp"
#include "powergraph/expr.hpp"
#include "powergraph/files.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/group.hpp"
#include "powergraph/subgroups.hpp"
#include "powergraph/verify.hpp"
