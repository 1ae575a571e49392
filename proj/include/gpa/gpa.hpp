#pragma once

#include "gpa/analysis.hpp"
#include "gpa/error.hpp"
#include "gpa/generator.hpp"
#include "gpa/graph.hpp"
#include "gpa/io.hpp"
#include "gpa/parallel.hpp"
#include "gpa/params.hpp"
#include "gpa/rng.hpp"
#include "gpa/stats.hpp"
#include "gpa/sweep.hpp"
#include "gpa/theory.hpp"
#include "gpa/validation.hpp"
#include "gpa/version.hpp"
