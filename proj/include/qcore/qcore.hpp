#pragma once

/// @file qcore.hpp
/// @brief Umbrella header.

#include "bfile.hpp"
#include "dissection.hpp"
#include "expr.hpp"
#include "format.hpp"
#include "harness.hpp"
#include "lexer.hpp"
#include "partitions.hpp"
#include "registry.hpp"
#include "relation.hpp"
#include "report.hpp"
#include "series.hpp"
#include "theta.hpp"
